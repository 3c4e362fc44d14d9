"""Trivialization search over canonical keys and sublevel exploration"""
from acbench.search.bfs import SearchCaps, SearchResult, bfs_trivialize, normalize, search
from acbench.search.canonical import CanonicalKey, canonical_key, normalizing_moves
from acbench.search.sublevel import SublevelReport, explore_sublevel

__all__ = [
    "CanonicalKey",
    "SearchCaps",
    "SearchResult",
    "SublevelReport",
    "bfs_trivialize",
    "canonical_key",
    "explore_sublevel",
    "normalize",
    "normalizing_moves",
    "search",
]
