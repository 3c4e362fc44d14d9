"""AC moves, traces and factor counts"""
from acbench.moves.factor_counts import (
    Factor,
    FactorCount,
    FormalExpansion,
    expand_factor_counts,
    fibonacci_bound,
    formal_expansion,
)
from acbench.moves.moves import (
    AddEmpty,
    Conjugate,
    Dihedral,
    Invert,
    Move,
    MultiplyRight,
    RemoveEmpty,
    Stabilize,
    apply_move,
    move_from_dict,
)
from acbench.moves.trace import (
    MoveTrace,
    Verification,
    count_moves,
    is_trivial_form,
    iter_states,
    replay,
    verify_trivialization,
)

__all__ = [
    "AddEmpty",
    "Conjugate",
    "Dihedral",
    "Factor",
    "FactorCount",
    "FormalExpansion",
    "Invert",
    "Move",
    "MoveTrace",
    "MultiplyRight",
    "RemoveEmpty",
    "Stabilize",
    "Verification",
    "apply_move",
    "count_moves",
    "expand_factor_counts",
    "fibonacci_bound",
    "formal_expansion",
    "is_trivial_form",
    "iter_states",
    "move_from_dict",
    "replay",
    "verify_trivialization",
]
