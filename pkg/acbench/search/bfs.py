"""Breadth-first search for AC-trivializations

States are ordered tuples of relators kept in cyclic normal form and deduplicated by
their canonical key. An edge is r_j <- r_j (u r_i^(+-1) u^-1) with |u| bounded, followed by
the Invert/Conjugate moves that bring r_j back to normal form. Trace lengths found this
way are upper bounds on acc, not minima.
"""
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, NamedTuple, Optional

from acbench.moves.moves import Dihedral, Move
from acbench.moves.trace import MoveTrace, verify_trivialization
from acbench.presentations.presentation import Presentation
from acbench.search.canonical import CanonicalKey, key_of, normalizing_moves, trivial_key
from acbench.utils import get_logger
from acbench.words import Codes, Word, cyclic_normal_codes, invert_codes, join_codes

log = get_logger(__name__)

FOUND = "found"
UNKNOWN = "unknown"

State = tuple[Codes, ...]


@dataclass
class SearchCaps:
    """Caps for the trivialization search.

    Args:
        max_relator_len: Longest relator kept in a state
        max_conjugator_len: Longest u in r_j <- r_j u r_i^(+-1) u^-1
        max_states: Largest number of canonical keys visited
        max_depth: Deepest level expanded, unbounded when None
        num_workers: Threads used to expand a level
    """

    max_relator_len: int = 12
    max_conjugator_len: int = 1
    max_states: int = 200_000
    max_depth: Optional[int] = None
    num_workers: int = 1

    def __post_init__(self) -> None:
        for name in ("max_relator_len", "max_states", "num_workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"SearchCaps.{name} must be positive, got {getattr(self, name)}")
        if self.max_conjugator_len < 0:
            raise ValueError(
                f"SearchCaps.max_conjugator_len must be >= 0, got {self.max_conjugator_len}"
            )
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError(f"SearchCaps.max_depth must be >= 0, got {self.max_depth}")


@lru_cache(maxsize=None)
def conjugators(rank: int, max_len: int) -> tuple[Codes, ...]:
    """Every freely reduced word of length <= max_len over `rank` generators, shortest first"""
    words: list[Codes] = [()]
    level: list[Codes] = [()]
    letters = [c for g in range(1, rank + 1) for c in (g, -g)]
    for _ in range(max_len):
        level = [w + (c,) for w in level for c in letters if not w or w[-1] != -c]
        words += level
    return tuple(words)


class Step(NamedTuple):
    """r_j <- r_j (u r_i^sign u^-1), indices 1-based"""

    j: int
    i: int
    sign: int
    u: Codes


def successors(
    state: State, rank: int, caps: SearchCaps
) -> Iterator[tuple[State, Step]]:
    """States one capped move away, in a fixed order"""
    for j in range(len(state)):
        for i in range(len(state)):
            if i == j:
                continue
            for sign in (1, -1):
                factor = state[i] if sign == 1 else invert_codes(state[i])
                for u in conjugators(rank, caps.max_conjugator_len):
                    conjugate = join_codes(join_codes(u, factor), invert_codes(u))
                    relator = cyclic_normal_codes(join_codes(state[j], conjugate))
                    if not relator or len(relator) > caps.max_relator_len:
                        continue
                    new = state[:j] + (relator,) + state[j + 1 :]
                    yield new, Step(j + 1, i + 1, sign, u)


@dataclass
class SearchResult:
    status: str
    trace: Optional[MoveTrace]
    states_expanded: int
    depth: int
    visited: int
    frontier: int
    parents: dict[CanonicalKey, Optional[tuple[CanonicalKey, Step]]] = field(
        default_factory=dict, repr=False, compare=False
    )

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "status": self.status,
            "states_expanded": self.states_expanded,
            "depth": self.depth,
            "visited": self.visited,
            "frontier": self.frontier,
            "trace": self.trace.to_dict() if self.trace is not None else None,
        }
        if self.trace is not None:
            verification = verify_trivialization(self.trace)
            out["dihedral_count"] = verification.dihedral_count
            out["acc_upper_bound"] = verification.dihedral_count
        return out


def normalize(presentation: Presentation) -> tuple[Presentation, list[Move]]:
    """Bring every relator to cyclic normal form with Invert and Conjugate moves"""
    moves: list[Move] = []
    state = presentation
    for index, relator in enumerate(presentation.relators, start=1):
        for move in normalizing_moves(relator, index):
            moves.append(move)
            state = move.apply(state)
    return state, moves


def _expand(
    frontier: Sequence[State], rank: int, caps: SearchCaps
) -> list[list[tuple[State, Step]]]:
    return [list(successors(state, rank, caps)) for state in frontier]


def _chunks(items: Sequence[State], n: int) -> list[Sequence[State]]:
    size = max(1, -(-len(items) // n))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _reconstruct(
    presentation: Presentation,
    normalized: Presentation,
    prefix: list[Move],
    parents: dict[CanonicalKey, Optional[tuple[CanonicalKey, Step]]],
    goal: CanonicalKey,
) -> MoveTrace:
    steps: list[Step] = []
    node = goal
    while True:
        parent = parents[node]
        if parent is None:
            break
        node, step = parent
        steps.append(step)
    alphabet = presentation.generators
    moves = list(prefix)
    state = normalized
    for step in reversed(steps):
        move = Dihedral(step.j, step.i, step.sign, Word(alphabet, step.u))
        state = move.apply(state)
        moves.append(move)
        for fix in normalizing_moves(state.relators[step.j - 1], step.j):
            state = fix.apply(state)
            moves.append(fix)
    return MoveTrace(presentation, tuple(moves))


def search(presentation: Presentation, caps: Optional[SearchCaps] = None) -> SearchResult:
    """Level-synchronous search from `presentation` towards the trivial presentation.

    Successors are merged in frontier order, so the result does not depend on the
    number of workers.
    """
    if presentation.rank != len(presentation.relators):
        raise ValueError(f"Search needs a balanced presentation, got {presentation}")
    caps = caps or SearchCaps()
    rank = presentation.rank
    normalized, prefix = normalize(presentation)
    start: State = tuple(r.codes for r in normalized.relators)
    goal = trivial_key(rank)
    start_key = key_of(start)

    parents: dict[CanonicalKey, Optional[tuple[CanonicalKey, Step]]] = {start_key: None}
    frontier: list[State] = [start]
    depth, expanded = 0, 0
    found = start_key == goal

    executor = ThreadPoolExecutor(caps.num_workers) if caps.num_workers > 1 else None
    try:
        while frontier and not found:
            if caps.max_depth is not None and depth >= caps.max_depth:
                break
            if executor is None:
                batches = _expand(frontier, rank, caps)
            else:
                chunks = _chunks(frontier, caps.num_workers)
                batches = [
                    edges
                    for batch in executor.map(lambda c: _expand(c, rank, caps), chunks)
                    for edges in batch
                ]
            next_frontier: list[State] = []
            over_cap = False
            for state, edges in zip(frontier, batches):
                expanded += 1
                parent_key = key_of(state)
                for new, step in edges:
                    new_key = key_of(new)
                    if new_key in parents:
                        continue
                    parents[new_key] = (parent_key, step)
                    next_frontier.append(new)
                    if new_key == goal:
                        found = True
                        break
                    if len(parents) > caps.max_states:
                        over_cap = True
                        break
                if found or over_cap:
                    break
            depth += 1
            log.info(
                f"Search level {depth}: frontier {len(next_frontier)}, visited {len(parents)}"
            )
            frontier = next_frontier
            if over_cap and not found:
                log.warning(f"Search hit max_states={caps.max_states} at level {depth}")
                break
    finally:
        if executor is not None:
            executor.shutdown()

    if not found:
        return SearchResult(UNKNOWN, None, expanded, depth, len(parents), len(frontier), parents)
    trace = _reconstruct(presentation, normalized, prefix, parents, goal)
    verification = verify_trivialization(trace)
    assert verification.accepted, verification.reason
    log.info(f"Trivialized {presentation} in {verification.dihedral_count} moves")
    return SearchResult(FOUND, trace, expanded, depth, len(parents), len(frontier), parents)


def bfs_trivialize(
    presentation: Presentation, caps: Optional[SearchCaps] = None
) -> Optional[MoveTrace]:
    """A verified trivializing trace, or None when the caps were hit first"""
    return search(presentation, caps).trace
