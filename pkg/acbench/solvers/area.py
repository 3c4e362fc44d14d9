"""Breadth-first area oracle

One relator application replaces a letter w_i by the inverse of the rest of a cyclic
rotation c of some r^(+-1) starting with w_i, then freely reduces. Levels are expanded in
order so the first level containing the empty word is the area. Words longer than
`max_len` are pruned, so results are exact relative to that window.
"""
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, NamedTuple, Optional

from tqdm import tqdm

from acbench.presentations.presentation import Presentation
from acbench.solvers.certificate import AreaCertificate, CertificateStep
from acbench.utils import get_logger
from acbench.words import Codes, Word, cyclic_normal_codes, invert_codes, join_codes, reduce_codes

log = get_logger(__name__)

EXACT = "exact"
UNKNOWN = "unknown"


@dataclass
class AreaCaps:
    """Caps for the area oracle.

    Args:
        max_len: Longest intermediate word, defaults to |w| + max_len_slack
        max_len_slack: Extra length allowed when max_len is not given
        max_states: Largest number of distinct words visited
        max_depth: Deepest level expanded, unbounded when None
        num_workers: Threads used to expand a level
        cyclic_keys: Deduplicate words up to cyclic normal form. Faster but the result is
            no longer guaranteed minimal
    """

    max_len: Optional[int] = None
    max_len_slack: int = 4
    max_states: int = 500_000
    max_depth: Optional[int] = None
    num_workers: int = 1
    cyclic_keys: bool = False

    def window(self, word: Word) -> int:
        return self.max_len if self.max_len is not None else len(word) + self.max_len_slack


class Piece(NamedTuple):
    """Rotation of r_relator^sign at `offset`: its first letter and the replacement codes"""

    first: int
    replacement: Codes
    relator: int
    sign: int
    offset: int


def relator_pieces(presentation: Presentation) -> dict[int, tuple[Piece, ...]]:
    """Every distinct (first letter, replacement) pair, keyed by the first letter"""
    table: dict[int, list[Piece]] = {}
    seen: set[tuple[int, Codes]] = set()
    for j, r in enumerate(presentation.relators, start=1):
        for sign in (1, -1):
            codes = r.codes if sign == 1 else invert_codes(r.codes)
            for offset in range(len(codes)):
                rotation = codes[offset:] + codes[:offset]
                replacement = reduce_codes(invert_codes(rotation[1:]))
                if (rotation[0], replacement) in seen:
                    continue
                seen.add((rotation[0], replacement))
                table.setdefault(rotation[0], []).append(
                    Piece(rotation[0], replacement, j, sign, offset)
                )
    return {first: tuple(pieces) for first, pieces in table.items()}


Edge = tuple[Codes, int, Piece]


def neighbours(
    codes: Codes, pieces: dict[int, tuple[Piece, ...]], max_len: int
) -> Iterator[Edge]:
    """Words one relator application away, as (word, position, piece)"""
    for i, letter in enumerate(codes):
        head, tail = codes[:i], codes[i + 1 :]
        for piece in pieces.get(letter, ()):
            new = join_codes(join_codes(head, piece.replacement), tail)
            if len(new) <= max_len:
                yield new, i, piece


@dataclass
class AreaResult:
    status: str
    area: Optional[int]
    lower: int
    states_expanded: int
    levels_complete: int
    length_capped: bool
    max_len: int
    parents: dict[Codes, Optional[tuple[Codes, int, Piece]]] = field(
        default_factory=dict, repr=False, compare=False
    )

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status,
            "area": self.area,
            "lower": self.lower,
            "states_expanded": self.states_expanded,
            "levels_complete": self.levels_complete,
            "length_capped": self.length_capped,
            "max_len": self.max_len,
        }


def _expand(
    frontier: Sequence[Codes], pieces: dict[int, tuple[Piece, ...]], max_len: int
) -> list[list[Edge]]:
    return [list(neighbours(codes, pieces, max_len)) for codes in frontier]


def _chunks(items: Sequence[Codes], n: int) -> list[Sequence[Codes]]:
    size = max(1, -(-len(items) // n))
    return [items[i : i + size] for i in range(0, len(items), size)]


def area_bfs(
    presentation: Presentation, word: Word, caps: Optional[AreaCaps] = None
) -> AreaResult:
    """Least number of relator applications reducing `word` to the empty word.

    Returns an exact result or an unknown one with the lower bound the exhausted levels
    establish. Caps never raise.
    """
    caps = caps or AreaCaps()
    word = word.over(presentation.generators)
    max_len = caps.window(word)
    pieces = relator_pieces(presentation)
    key = cyclic_normal_codes if caps.cyclic_keys else (lambda c: c)
    if caps.cyclic_keys:
        log.warning("Area search with cyclic keys: the result may not be minimal")

    start = word.codes
    parents: dict[Codes, Optional[tuple[Codes, int, Piece]]] = {start: None}
    visited = {key(start)}
    frontier: list[Codes] = [start]
    depth, expanded, length_capped = 0, 0, False
    found = not start

    executor = ThreadPoolExecutor(caps.num_workers) if caps.num_workers > 1 else None
    try:
        while frontier and not found:
            if caps.max_depth is not None and depth >= caps.max_depth:
                break
            if executor is None:
                batches = _expand(frontier, pieces, max_len)
            else:
                chunks = _chunks(frontier, caps.num_workers)
                batches = [
                    edges
                    for batch in executor.map(lambda c: _expand(c, pieces, max_len), chunks)
                    for edges in batch
                ]
            next_frontier: list[Codes] = []
            over_cap = False
            for codes, edges in zip(frontier, batches):
                expanded += 1
                if len(edges) < sum(len(pieces.get(c, ())) for c in codes):
                    length_capped = True
                for new, i, piece in edges:
                    state_key = key(new)
                    if state_key in visited:
                        continue
                    visited.add(state_key)
                    parents[new] = (codes, i, piece)
                    next_frontier.append(new)
                    if not new:
                        found = True
                        break
                    if len(visited) > caps.max_states:
                        over_cap = True
                        break
                if found or over_cap:
                    break
            depth += 1
            log.info(
                f"Area level {depth}: frontier {len(next_frontier)}, visited {len(visited)}"
            )
            if over_cap and not found:
                log.warning(f"Area search hit max_states={caps.max_states} at level {depth}")
                depth -= 1
                break
            frontier = next_frontier
    finally:
        if executor is not None:
            executor.shutdown()

    if found:
        return AreaResult(EXACT, depth, depth, expanded, depth, length_capped, max_len, parents)
    return AreaResult(UNKNOWN, None, depth + 1, expanded, depth, length_capped, max_len, parents)


def certificate_from_path(
    presentation: Presentation, word: Word, result: AreaResult
) -> AreaCertificate:
    """Turn the BFS back-pointers of an exact result into a certificate"""
    if not result.exact:
        raise ValueError("Only exact area results carry a filling")
    alphabet = presentation.generators
    path: list[tuple[Codes, int, Piece]] = []
    node: Codes = ()
    while True:
        parent = result.parents[node]
        if parent is None:
            break
        path.append(parent)
        node = parent[0]
    steps = []
    for codes, i, piece in reversed(path):
        r = presentation.relators[piece.relator - 1].codes
        r = r if piece.sign == 1 else invert_codes(r)
        # w = (a c a^-1) w' with a = w[:i] and c the rotation r[o:] r[:o]
        conjugator = Word(alphabet, codes[:i] + r[piece.offset :])
        steps.append(CertificateStep(conjugator, piece.relator, piece.sign))
    return AreaCertificate(word.over(alphabet), tuple(steps), presentation.relators)


def prove(
    presentation: Presentation, word: Word, caps: Optional[AreaCaps] = None
) -> Optional[AreaCertificate]:
    """A minimal-size certificate for `word`, or None when the caps were hit first"""
    caps = caps or AreaCaps()
    if caps.cyclic_keys:
        raise ValueError("prove needs literal word keys, disable cyclic_keys")
    result = area_bfs(presentation, word, caps)
    if not result.exact:
        return None
    return certificate_from_path(presentation, word, result)


@dataclass
class AreaStarResult:
    """Bounded information on min_n area(w^n) over 1 <= |n| <= n_max.

    area(w^-n) = area(w^n), so only positive powers are searched.
    """

    upper: Optional[int]
    exhausted_lower: int
    powers: dict[int, AreaResult]

    def to_dict(self) -> dict[str, Any]:
        return {
            "upper": self.upper,
            "exhausted_lower": self.exhausted_lower,
            "powers": {str(n): r.to_dict() for n, r in self.powers.items()},
        }


def area_star_bounded(
    presentation: Presentation,
    word: Word,
    n_max: int,
    caps: Optional[AreaCaps] = None,
    progress: bool = False,
) -> AreaStarResult:
    """Search the powers w^1..w^n_max.

    `upper` is the least area found; `exhausted_lower` is the largest L such that no
    searched power fills with fewer than L applications within the caps.
    """
    if not word:
        raise ValueError("area_star_bounded needs a non-empty word")
    if n_max < 1:
        raise ValueError(f"area_star_bounded needs n_max >= 1, got {n_max}")
    caps = caps or AreaCaps()
    powers: dict[int, AreaResult] = {}
    for n in tqdm(range(1, n_max + 1), desc="powers", disable=not progress):
        powers[n] = area_bfs(presentation, word**n, caps)
        powers[n].parents = {}
    exact = [r.area for r in powers.values() if r.area is not None]
    return AreaStarResult(
        upper=min(exact) if exact else None,
        exhausted_lower=min(r.lower for r in powers.values()),
        powers=powers,
    )
