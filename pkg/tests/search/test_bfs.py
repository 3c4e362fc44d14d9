import pytest

from acbench.moves.moves import Dihedral, Invert
from acbench.moves.trace import verify_trivialization
from acbench.presentations.presentation import Presentation
from acbench.search.bfs import (
    FOUND,
    UNKNOWN,
    SearchCaps,
    bfs_trivialize,
    conjugators,
    normalize,
    search,
)
from acbench.search.canonical import canonical_key


def test_caps_validation():
    with pytest.raises(ValueError):
        SearchCaps(max_states=0)
    with pytest.raises(ValueError):
        SearchCaps(max_conjugator_len=-1)
    with pytest.raises(ValueError):
        SearchCaps(max_depth=-1)


def test_conjugators():
    assert conjugators(2, 1) == ((), (1,), (-1,), (2,), (-2,))
    assert len(conjugators(2, 2)) == 1 + 4 + 12
    assert conjugators(1, 0) == ((),)


def test_normalize():
    p = Presentation.parse("< a, b | b a, a^-1 >")
    normalized, moves = normalize(p)
    assert [str(r) for r in normalized.relators] == ["a b", "a"], normalized
    assert canonical_key(normalized) == canonical_key(p)
    assert Invert(2) in moves


def test_inverted_generator_needs_one_move():
    trace = bfs_trivialize(Presentation.parse("< x | x^-1 >"))
    assert trace.moves == (Invert(1),), trace.moves


def test_one_dihedral_move():
    p = Presentation.parse("< a, b | a b, b >")
    result = search(p)
    assert result.status == FOUND
    assert result.depth == 1
    assert result.trace.moves == (Dihedral(1, 2, -1, p.word("1")),), result.trace.moves


def test_two_levels(small_search_caps):
    p = Presentation.parse("< a, b | a^2 b, a b >")
    result = search(p, small_search_caps)
    assert result.found
    assert result.depth == 2, result.depth
    v = verify_trivialization(result.trace)
    assert v.accepted
    assert v.dihedral_count >= 2
    assert result.to_dict()["acc_upper_bound"] == v.dihedral_count


def test_threads_do_not_change_the_trace(small_search_caps):
    p = Presentation.parse("< a, b | a^2 b, a b >")
    single = search(p, small_search_caps)
    threaded = search(p, SearchCaps(max_relator_len=8, max_states=50_000, num_workers=3))
    assert single.trace == threaded.trace


def test_one_relator_without_moves_is_unknown():
    result = search(Presentation.parse("< x | x^-2 >"))
    assert result.status == UNKNOWN
    assert result.trace is None
    assert result.frontier == 0
    assert bfs_trivialize(Presentation.parse("< x | x^2 >")) is None


def test_caps_stop_the_search():
    p = Presentation.parse("< a, b | a^2 b, a b >")
    assert search(p, SearchCaps(max_depth=1)).status == UNKNOWN
    assert search(p, SearchCaps(max_states=5)).status == UNKNOWN
    assert search(p, SearchCaps(max_depth=0)).depth == 0


def test_unbalanced_is_rejected(s2):
    with pytest.raises(ValueError):
        search(s2)


def test_empty_relator_needs_no_normalizing():
    p = Presentation.parse("< a, b | 1, b >")
    normalized, moves = normalize(p)
    assert moves == [], moves
    assert normalized == p


def test_empty_relator_is_searched_without_error():
    # < a, b | 1, b > is infinite cyclic, so no trace exists
    p = Presentation.parse("< a, b | 1, b >")
    assert bfs_trivialize(p, SearchCaps(max_relator_len=4, max_states=2_000)) is None
    result = search(Presentation.parse("< x | 1 >"))
    assert result.status == UNKNOWN
    assert result.frontier == 0
