"""Formal replay of a trace without free reduction

Each relator is tracked as a product of conjugates u r^e u^-1 of relators of the base
presentation (the initial presentation after the stabilizing prefix). Combining moves add
the factor count of the source relator to the target, which is what bounds the counts by
Fibonacci numbers.
"""
from dataclasses import dataclass
from typing import Any, NamedTuple

import sympy

from acbench.errors import MoveError, ReplayError
from acbench.moves.moves import (
    AddEmpty,
    Conjugate,
    Dihedral,
    Invert,
    Move,
    MultiplyRight,
    RemoveEmpty,
    Stabilize,
)
from acbench.moves.trace import MoveTrace, replay
from acbench.presentations.presentation import Presentation
from acbench.words import Word


@dataclass(frozen=True)
class FactorCount:
    """Number of conjugate factors in each final relator"""

    counts: tuple[int, ...]

    @property
    def max(self) -> int:
        return max(self.counts, default=0)

    def to_dict(self) -> dict[str, Any]:
        return {"counts": list(self.counts), "max": self.max}


class Factor(NamedTuple):
    """u r_index^sign u^-1, index 1-based into the base presentation"""

    conjugator: Word
    index: int
    sign: int


@dataclass(frozen=True)
class FormalExpansion:
    base: Presentation
    factors: tuple[tuple[Factor, ...], ...]

    def counts(self) -> FactorCount:
        return FactorCount(tuple(len(f) for f in self.factors))

    def evaluate(self) -> tuple[Word, ...]:
        """Multiply every factor list out; the result freely equals the replayed relators"""
        words = []
        for factors in self.factors:
            word = Word.empty(self.base.generators)
            for f in factors:
                r = self.base.relators[f.index - 1]
                word = word * (r if f.sign == 1 else r.inverse()).conjugate(f.conjugator)
            words.append(word)
        return tuple(words)


def _stabilized_base(trace: MoveTrace) -> tuple[Presentation, tuple[Move, ...]]:
    base = trace.initial
    prefix = trace.stabilizing_prefix
    for move in prefix:
        base = move.apply(base)
    return base, trace.moves[len(prefix) :]


def _check_indices(move: Move, size: int, offset: int) -> None:
    indices = [getattr(move, name) for name in ("i", "j") if hasattr(move, name)]
    for index in indices:
        if not 1 <= index <= size:
            raise ReplayError(
                f"Move {offset} ({move.op}) index {index} out of range 1..{size}", offset
            )
    if len(indices) == 2 and indices[0] == indices[1]:
        raise ReplayError(f"Move {offset} ({move.op}) needs distinct relators", offset)


def expand_factor_counts(trace: MoveTrace, check: bool = True) -> FactorCount:
    """Per-relator factor counts of the formal replay.

    Args:
        trace: The trace to expand
        check: Also replay the trace with free reduction, so moves that are only
            invalid on reduced words (RemoveEmpty on a non-empty relator) raise
    """
    if check:
        replay(trace)
    base, moves = _stabilized_base(trace)
    counts = [1] * len(base.relators)
    start = len(trace.moves) - len(moves) + 1
    for n, move in enumerate(moves, start=start):
        _check_indices(move, len(counts), n)
        if isinstance(move, MultiplyRight):
            counts[move.i - 1] += counts[move.j - 1]
        elif isinstance(move, Dihedral):
            counts[move.j - 1] += counts[move.i - 1]
        elif isinstance(move, AddEmpty):
            counts.append(0)
        elif isinstance(move, RemoveEmpty):
            del counts[move.i - 1]
    return FactorCount(tuple(counts))


def _conjugated(factors: tuple[Factor, ...], u: Word) -> tuple[Factor, ...]:
    return tuple(Factor(u * f.conjugator, f.index, f.sign) for f in factors)


def _inverted(factors: tuple[Factor, ...]) -> tuple[Factor, ...]:
    return tuple(Factor(f.conjugator, f.index, -f.sign) for f in reversed(factors))


def formal_expansion(trace: MoveTrace) -> FormalExpansion:
    """Replay the trace keeping every relator as an explicit list of conjugate factors"""
    base, moves = _stabilized_base(trace)
    alphabet = base.generators
    empty = Word.empty(alphabet)
    factors = [(Factor(empty, i, 1),) for i in range(1, len(base.relators) + 1)]
    start = len(trace.moves) - len(moves) + 1
    for n, move in enumerate(moves, start=start):
        _check_indices(move, len(factors), n)
        if isinstance(move, Invert):
            factors[move.i - 1] = _inverted(factors[move.i - 1])
        elif isinstance(move, MultiplyRight):
            factors[move.i - 1] = factors[move.i - 1] + factors[move.j - 1]
        elif isinstance(move, Conjugate):
            factors[move.i - 1] = _conjugated(factors[move.i - 1], move.u.over(alphabet))
        elif isinstance(move, Dihedral):
            source = factors[move.i - 1]
            if move.sign == -1:
                source = _inverted(source)
            elif move.sign != 1:
                raise ReplayError(f"Move {n} has sign {move.sign}", n)
            factors[move.j - 1] = factors[move.j - 1] + _conjugated(source, move.u.over(alphabet))
        elif isinstance(move, AddEmpty):
            factors.append(())
        elif isinstance(move, RemoveEmpty):
            del factors[move.i - 1]
        else:
            raise MoveError(f"Move {n} ({move.op}) cannot follow a non-stabilizing move")
    return FormalExpansion(base, tuple(factors))


def fibonacci_bound(m: int) -> int:
    """F_m with F_0 = 1, F_1 = 2, F_m = F_(m-1) + F_(m-2)"""
    if m < 0:
        raise ValueError(f"fibonacci_bound needs m >= 0, got {m}")
    return int(sympy.fibonacci(m + 2))
