import os
import random

import pytest
import yaml

from acbench.constructions.families import gen_w
from acbench.constructions.indexed import dagger_lift
from acbench.io import resolve_presentation
from acbench.presentations.fixtures import (
    commutator_power_word,
    iterated_hnn,
    staircase_word,
)
from acbench.solvers.area import (
    EXACT,
    UNKNOWN,
    AreaCaps,
    area_bfs,
    area_star_bounded,
    certificate_from_path,
    prove,
    relator_pieces,
)
from acbench.words import Word, parse_expression


def load_goldens():
    path = f"{os.path.dirname(os.path.abspath(__file__))}/../test_data/area_goldens.yaml"
    with open(path) as f:
        return yaml.safe_load(f)["goldens"]


GOLDENS = load_goldens()


@pytest.mark.parametrize("golden", GOLDENS)
def test_area_goldens(golden):
    presentation = resolve_presentation(golden["presentation"])
    word = parse_expression(golden["word"], presentation.generators)
    caps = AreaCaps(max_len=golden["max_len"], max_states=500_000)
    result = area_bfs(presentation, word, caps)
    assert result.status == EXACT, result
    assert result.area == golden["area"], result.area


def test_relator_pieces_of_q1(q1):
    pieces = relator_pieces(q1)
    assert sorted(pieces) == [-2, -1, 1, 2], sorted(pieces)
    assert all(len(p) == 2 for p in pieces.values()), pieces


def test_empty_word_has_area_zero(q1):
    result = area_bfs(q1, Word.empty(q1.generators))
    assert result.exact
    assert result.area == 0


def test_relator_has_area_one(s2):
    assert area_bfs(s2, s2.relators[0]).area == 1
    assert area_bfs(s2, s2.relators[0].inverse()).area == 1


@pytest.mark.parametrize("n, m", [(1, 1), (1, 2), (2, 2)])
def test_commutator_area(q1, n, m):
    w = commutator_power_word(n, m)
    result = area_bfs(q1, w, AreaCaps(max_len=len(w), max_states=200_000))
    assert result.area == n * m, result


@pytest.mark.parametrize("n", [1, 2])
def test_staircase_area(q2, n):
    w = staircase_word(n)
    result = area_bfs(q2, w, AreaCaps(max_len=len(w) + 1, max_states=200_000))
    assert result.area == 2**n - 1, result


def test_non_trivial_word_stays_unknown(q1):
    x = Word.generator(q1.generators, "x")
    result = area_bfs(q1, x, AreaCaps(max_depth=3))
    assert result.status == UNKNOWN
    assert result.area is None
    assert result.levels_complete == 3
    assert result.lower == 4, result.lower


def test_max_states_stops_the_search(q1):
    x = Word.generator(q1.generators, "x")
    result = area_bfs(q1, x, AreaCaps(max_states=100))
    assert result.status == UNKNOWN
    assert result.states_expanded > 0


def test_threads_give_the_same_area(s2):
    w = gen_w(2)
    single = area_bfs(s2, w, AreaCaps(max_len=16))
    threaded = area_bfs(s2, w, AreaCaps(max_len=16, num_workers=3))
    assert single.area == threaded.area == 2


def test_prove_w2(s2):
    certificate = prove(s2, gen_w(2), AreaCaps(max_len=16))
    assert certificate is not None
    assert len(certificate) == 2
    assert certificate.target == gen_w(2)


def test_prove_returns_none_on_caps(q1):
    x = Word.generator(q1.generators, "x")
    assert prove(q1, x, AreaCaps(max_depth=2)) is None


def test_prove_needs_literal_keys(s2):
    with pytest.raises(ValueError):
        prove(s2, gen_w(2), AreaCaps(cyclic_keys=True))


def test_certificate_from_path_needs_exact_result(q1):
    x = Word.generator(q1.generators, "x")
    result = area_bfs(q1, x, AreaCaps(max_depth=1))
    with pytest.raises(ValueError):
        certificate_from_path(q1, x, result)


def test_area_star_bounded(q1):
    w = commutator_power_word(1, 1)
    result = area_star_bounded(q1, w, 2)
    assert result.upper == 1, result
    assert result.exhausted_lower == 1
    assert result.powers[2].area == 2
    assert set(result.to_dict()["powers"]) == {"1", "2"}


def test_area_star_bounded_arguments(q1):
    with pytest.raises(ValueError):
        area_star_bounded(q1, Word.empty(q1.generators), 2)
    with pytest.raises(ValueError):
        area_star_bounded(q1, commutator_power_word(1, 1), 0)


@pytest.mark.slow
def test_staircase_area_three(q2):
    w = staircase_word(3)
    result = area_bfs(q2, w, AreaCaps(max_len=len(w), max_states=1_000_000))
    assert result.area == 7, result


@pytest.mark.parametrize("n", [1, 2, 3])
def test_area_of_commutator_powers(q1, n):
    w = commutator_power_word(1, 1) ** n
    result = area_bfs(q1, w, AreaCaps(max_len=len(w), max_states=200_000))
    assert result.area == n, result


def test_area_star_bounded_of_w2(s2):
    result = area_star_bounded(s2, gen_w(2), 2, AreaCaps(max_len=32, max_states=500_000))
    assert result.powers[1].area == 2, result.powers[1]
    assert (result.exhausted_lower, result.upper) == (2, 2), result.to_dict()


def random_relator_product(rng, presentation, factors):
    alphabet = presentation.generators
    relator = presentation.relators[0]
    w = Word.empty(alphabet)
    for _ in range(factors):
        r = relator if rng.random() < 0.5 else relator.inverse()
        u = Word(alphabet, [rng.choice([1, -1, 2, -2])] if rng.random() < 0.7 else [])
        w = w * r.conjugate(u)
    return w


def test_area_of_the_inverse_word(q1):
    rng = random.Random(7)
    for _ in range(40):
        w = random_relator_product(rng, q1, rng.randint(1, 2))
        caps = AreaCaps(max_len=len(w) + 2, max_states=200_000)
        forward, mirrored = area_bfs(q1, w, caps), area_bfs(q1, w.inverse(), caps)
        assert forward.exact and mirrored.exact, w
        assert forward.area == mirrored.area, w


@pytest.mark.parametrize("text", ["relator", "inverse", "w2"])
def test_dagger_lift_keeps_the_area(s2, text):
    w = {
        "relator": s2.relators[0],
        "inverse": s2.relators[0].inverse(),
        "w2": gen_w(2),
    }[text]
    b1 = iterated_hnn(1, 2)
    lifted = dagger_lift(w).to_word(b1.generators)
    seed_area = area_bfs(s2, w, AreaCaps(max_len=len(w), max_states=200_000))
    lifted_area = area_bfs(b1, lifted, AreaCaps(max_len=len(lifted), max_states=200_000))
    assert seed_area.exact and lifted_area.exact
    assert seed_area.area == lifted_area.area, (seed_area.area, lifted_area.area)
