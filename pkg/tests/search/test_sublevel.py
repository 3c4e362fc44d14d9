import pytest

from acbench.moves.trace import verify_trivialization
from acbench.presentations.fixtures import trivial
from acbench.presentations.presentation import Presentation
from acbench.search.bfs import SearchCaps, bfs_trivialize
from acbench.search.sublevel import (
    COMPONENT_COLUMNS,
    default_alphabet,
    explore_sublevel,
    normal_words,
    relator_multisets,
)


def test_default_alphabet():
    assert default_alphabet(2).names == ("a", "b")
    assert default_alphabet(4).names == ("x_1", "x_2", "x_3", "x_4")


def test_normal_words():
    assert normal_words(1, 3) == [(1,), (1, 1), (1, 1, 1)]
    assert normal_words(2, 1) == [(1,), (2,)]


def test_relator_multisets():
    words = [(1,), (2,), (1, 2)]
    multisets = list(relator_multisets(words, 2, 3))
    assert multisets == [((1,), (1,)), ((1,), (2,)), ((1,), (1, 2)), ((2,), (2,)), ((2,), (1, 2))]


def test_single_generator():
    report = explore_sublevel(1, 1)
    assert len(report.entries) == 1
    assert report.components[0].contains_trivial
    assert report.component_of(Presentation.parse("< x | x^-1 >")) == 0


def test_rank_two_length_two():
    report = explore_sublevel(2, 2)
    assert len(report.entries) == 3
    assert report.edges == 0
    assert [c.size for c in report.components] == [1, 1, 1]
    assert report.component_of(trivial(2)) == 1
    assert [c.homologically_trivial for c in report.components] == [0, 1, 0]


def test_homologically_trivial_presentations_connect_at_length_four():
    report = explore_sublevel(2, 4)
    goal = report.component_of(trivial(2))
    assert report.components[goal].contains_trivial
    for entry in report.entries:
        if entry.homologically_trivial:
            assert entry.component == goal, entry.presentation
        assert entry.lam <= 4


def test_homologically_trivial_presentations_have_verified_traces():
    report = explore_sublevel(2, 4)
    checked = 0
    for entry in report.entries:
        if not entry.homologically_trivial:
            continue
        trace = bfs_trivialize(entry.presentation)
        assert trace is not None, entry.presentation
        assert verify_trivialization(trace).accepted, entry.presentation
        checked += 1
    assert checked > 1


def test_threads_give_the_same_components():
    single = explore_sublevel(2, 4)
    threaded = explore_sublevel(2, 4, SearchCaps(num_workers=3))
    assert single.to_dict() == threaded.to_dict()


def test_enumeration_limit():
    report = explore_sublevel(2, 4, SearchCaps(max_states=3))
    assert report.partial
    assert len(report.entries) == 3
    assert report.to_dict()["enumeration_limit"] == 3


def test_to_dataframe():
    df = explore_sublevel(2, 2).to_dataframe()
    assert list(df.columns) == COMPONENT_COLUMNS
    assert len(df) == 3
    assert df["contains_trivial"].sum() == 1


def test_component_of_unknown_presentation():
    report = explore_sublevel(2, 2)
    assert report.component_of(Presentation.parse("< a, b | a b, b >")) is None


def test_bad_arguments():
    with pytest.raises(ValueError):
        explore_sublevel(2, 1)
    with pytest.raises(ValueError):
        explore_sublevel(0, 2)
