"""Move traces: replay and verification against the trivial presentation"""
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import Any, Optional

from acbench.errors import MoveError, ReplayError
from acbench.moves.moves import Move, Stabilize, move_from_dict
from acbench.presentations.presentation import Presentation, measures
from acbench.utils import get_logger
from acbench.words import Word

log = get_logger(__name__)


@dataclass(frozen=True)
class MoveTrace:
    """An initial presentation and the moves applied to it, in order.

    Stabilize moves may only appear as a leading prefix.
    """

    initial: Presentation
    moves: tuple[Move, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))
        prefix = True
        for n, move in enumerate(self.moves, start=1):
            if isinstance(move, Stabilize):
                if not prefix:
                    raise MoveError(
                        f"Stabilize at move {n} follows a non-stabilizing move; "
                        "stabilization must lead the trace"
                    )
            else:
                prefix = False

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def stabilizing_prefix(self) -> tuple[Stabilize, ...]:
        prefix = []
        for move in self.moves:
            if not isinstance(move, Stabilize):
                break
            prefix.append(move)
        return tuple(prefix)

    def extend(self, moves: Sequence[Move]) -> "MoveTrace":
        return MoveTrace(self.initial, self.moves + tuple(moves))

    def to_dict(self) -> dict[str, Any]:
        return {"initial": self.initial.to_dict(), "moves": [m.to_dict() for m in self.moves]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "MoveTrace":
        initial = Presentation.from_dict(data["initial"])
        alphabet = initial.generators
        moves: list[Move] = []
        for item in data.get("moves", []):
            move = move_from_dict(item, alphabet)
            if isinstance(move, Stabilize):
                alphabet = alphabet.extend(move.new_generators(alphabet))
            moves.append(move)
        return cls(initial, tuple(moves))


def iter_states(trace: MoveTrace) -> Iterator[Presentation]:
    """Yield the initial presentation and the state after every move"""
    state = trace.initial
    yield state
    for n, move in enumerate(trace.moves, start=1):
        try:
            state = move.apply(state)
        except ValueError as e:
            raise ReplayError(f"Move {n} ({move.op}) failed: {e}", n) from e
        yield state


def replay(trace: MoveTrace) -> Presentation:
    """Fold the moves over the initial presentation"""
    state = trace.initial
    for state in iter_states(trace):
        pass
    return state


def is_trivial_form(presentation: Presentation, exact_order: bool = False) -> bool:
    """Whether the relators are the generators, up to order and inversion unless
    `exact_order` is set"""
    alphabet = presentation.generators
    if len(presentation.relators) != len(alphabet):
        return False
    targets = [Word.generator(alphabet, g) for g in alphabet]
    if exact_order:
        return list(presentation.relators) == targets
    found = set()
    for r in presentation.relators:
        if len(r) != 1:
            return False
        found.add(abs(r.codes[0]))
    return len(found) == len(alphabet)


@dataclass(frozen=True)
class Verification:
    accepted: bool
    dihedral_count: int
    stable_moves: int
    weighted_count: int
    final: Presentation
    reason: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "accepted": self.accepted,
            "dihedral_count": self.dihedral_count,
            "stable_moves": self.stable_moves,
            "weighted_count": self.weighted_count,
            "final": self.final.to_dict(),
        }
        if self.reason is not None:
            data["reason"] = self.reason
        return data


def count_moves(moves: Sequence[Move]) -> tuple[int, int, int]:
    """(dihedral count, stabilizing and Tietze count, length-weighted count)"""
    dihedral = sum(1 for m in moves if m.dihedral)
    weighted = sum(m.weight() for m in moves if m.dihedral)
    return dihedral, len(moves) - dihedral, weighted


def verify_trivialization(trace: MoveTrace, exact_order: bool = False) -> Verification:
    """Replay the trace and check that it ends at the trivial presentation.

    Args:
        trace: The trace to check
        exact_order: Require r_i = a_i in generator order instead of accepting any
            permutation and inversion of the generators
    """
    dihedral, stable, weighted = count_moves(trace.moves)
    reason = None
    stabilized = trace.initial
    for move in trace.stabilizing_prefix:
        stabilized = move.apply(stabilized)
    if not measures(stabilized).balanced:
        reason = f"initial presentation is not balanced: {measures(stabilized)}"
        log.warning(f"Trace rejected, {reason}")
    final = replay(trace)
    accepted = reason is None and is_trivial_form(final, exact_order=exact_order)
    if reason is None and not accepted:
        reason = "final relators are not the generators"
    log.info(f"Verified trace of {len(trace)} moves: accepted={accepted}, count={dihedral}")
    return Verification(
        accepted=accepted,
        dihedral_count=dihedral,
        stable_moves=stable,
        weighted_count=weighted,
        final=final,
        reason=reason,
    )
