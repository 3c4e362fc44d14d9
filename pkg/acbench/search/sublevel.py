"""Sublevel sets of the total relator length on balanced presentations

Enumerates every balanced presentation on k generators with total relator length <= m up
to canonical key, and splits them into components under the capped moves of the search.
Components are capped: moves through longer relators or longer conjugators may merge them.
"""
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Any, Optional

import networkx as nx
import pandas as pd
from tqdm import tqdm

from acbench.presentations.presentation import Presentation, is_homologically_trivial
from acbench.search.bfs import SearchCaps, conjugators, successors
from acbench.search.canonical import CanonicalKey, key_of, trivial_key
from acbench.utils import get_logger
from acbench.words import Alphabet, Codes, Word, cyclic_normal_codes

log = get_logger(__name__)

COMPONENT_COLUMNS = ["index", "size", "contains_trivial", "homologically_trivial", "representative"]


def default_alphabet(k: int) -> Alphabet:
    if k <= 3:
        return Alphabet(["a", "b", "c"][:k])
    return Alphabet(f"x_{i}" for i in range(1, k + 1))


def normal_words(rank: int, max_len: int) -> list[Codes]:
    """Non-empty words of length <= max_len equal to their own cyclic normal form"""
    return sorted(
        w for w in conjugators(rank, max_len) if w and cyclic_normal_codes(w) == w
    )


def relator_multisets(
    words: Sequence[Codes], k: int, max_total: int
) -> Iterator[CanonicalKey]:
    """Sorted k-tuples of `words` with total length <= max_total"""

    def extend(start: int, chosen: tuple[Codes, ...], budget: int) -> Iterator[CanonicalKey]:
        if len(chosen) == k:
            yield chosen
            return
        slots = k - len(chosen) - 1
        for index in range(start, len(words)):
            word = words[index]
            if len(word) + slots <= budget:
                yield from extend(index, chosen + (word,), budget - len(word))

    yield from extend(0, (), max_total)


@dataclass(frozen=True)
class SublevelEntry:
    key: CanonicalKey
    presentation: Presentation
    component: int
    homologically_trivial: bool

    @property
    def lam(self) -> int:
        return sum(len(r) for r in self.key)


@dataclass(frozen=True)
class Component:
    index: int
    size: int
    contains_trivial: bool
    homologically_trivial: int
    representative: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "size": self.size,
            "contains_trivial": self.contains_trivial,
            "homologically_trivial": self.homologically_trivial,
            "representative": self.representative,
        }


@dataclass
class SublevelReport:
    k: int
    m: int
    caps: SearchCaps
    entries: list[SublevelEntry]
    components: list[Component]
    edges: int
    partial: bool
    enumeration_limit: Optional[int]

    capped: bool = True

    def component_of(self, presentation: Presentation) -> Optional[int]:
        key = key_of(tuple(cyclic_normal_codes(r.codes) for r in presentation.relators))
        for entry in self.entries:
            if entry.key == key:
                return entry.component
        return None

    def to_dataframe(self) -> pd.DataFrame:
        """One row per component"""
        return pd.DataFrame([c.to_dict() for c in self.components], columns=COMPONENT_COLUMNS)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "m": self.m,
            "presentations": len(self.entries),
            "edges": self.edges,
            "component_count": len(self.components),
            "components": [c.to_dict() for c in self.components],
            "capped": self.capped,
            "max_conjugator_len": self.caps.max_conjugator_len,
            "partial": self.partial,
            "enumeration_limit": self.enumeration_limit,
        }


def _edges(
    nodes: Sequence[CanonicalKey], known: set[CanonicalKey], rank: int, caps: SearchCaps
) -> list[tuple[CanonicalKey, CanonicalKey]]:
    edges = []
    for node in nodes:
        for new, _ in successors(node, rank, caps):
            target = key_of(new)
            if target != node and target in known:
                edges.append((node, target))
    return edges


def explore_sublevel(
    k: int, m: int, caps: Optional[SearchCaps] = None, progress: bool = False
) -> SublevelReport:
    """Enumerate the sublevel set and its capped components.

    Args:
        k: Number of generators
        m: Largest total relator length
        caps: `max_conjugator_len` bounds the moves, `max_states` the enumeration and
            `num_workers` the threads computing edges
        progress: Show a progress bar over the enumerated presentations
    """
    if k < 1 or m < k:
        raise ValueError(f"explore_sublevel needs k >= 1 and m >= k, got k={k}, m={m}")
    caps = replace(caps or SearchCaps(), max_relator_len=m - k + 1)
    alphabet = default_alphabet(k)

    words = normal_words(k, m - k + 1)
    keys: list[CanonicalKey] = []
    partial = False
    for key in relator_multisets(words, k, m):
        if len(keys) >= caps.max_states:
            partial = True
            log.warning(f"Sublevel enumeration stopped at max_states={caps.max_states}")
            break
        keys.append(key)
    log.info(f"Enumerated {len(keys)} presentations with k={k}, lambda <= {m}")

    graph = nx.Graph()
    graph.add_nodes_from(keys)
    known = set(keys)
    size = max(1, -(-len(keys) // caps.num_workers))
    chunks = [keys[i : i + size] for i in range(0, len(keys), size)]
    with ThreadPoolExecutor(caps.num_workers) as executor:
        batches = executor.map(lambda c: _edges(c, known, k, caps), chunks)
        for batch in tqdm(batches, total=len(chunks), desc="edges", disable=not progress):
            graph.add_edges_from(batch)

    goal = trivial_key(k)
    ordered = sorted(
        (sorted(c) for c in nx.connected_components(graph)), key=lambda c: (-len(c), c[0])
    )
    entries: list[SublevelEntry] = []
    components: list[Component] = []
    for index, members in enumerate(ordered):
        flags = []
        for key in members:
            presentation = Presentation(alphabet, tuple(Word(alphabet, r) for r in key))
            trivial = is_homologically_trivial(presentation)
            flags.append(trivial)
            entries.append(SublevelEntry(key, presentation, index, trivial))
        representative = entries[-len(members)].presentation
        components.append(
            Component(index, len(members), goal in members, sum(flags), str(representative))
        )
    entries.sort(key=lambda e: e.key)
    log.info(
        f"Sublevel k={k}, m={m}: {len(components)} capped components, "
        f"{graph.number_of_edges()} edges"
    )
    return SublevelReport(
        k=k,
        m=m,
        caps=caps,
        entries=entries,
        components=components,
        edges=graph.number_of_edges(),
        partial=partial,
        enumeration_limit=caps.max_states if partial else None,
    )
