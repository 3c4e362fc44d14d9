import random

import pytest

from acbench.constructions.families import delta_k, gen_V, gen_w
from acbench.constructions.indexed import IndexedWord, dagger_lift
from acbench.errors import AlphabetError, TowerOverflowError
from acbench.presentations.fixtures import seed_s
from acbench.solvers.area import AreaCaps, area_bfs
from acbench.solvers.britton import britton_solve, solve_Bm
from acbench.words import Alphabet, Word, parse_word


@pytest.mark.parametrize("k", [2, 3])
def test_seed_relator_is_trivial(k):
    assert britton_solve(seed_s(k).relators[0], k).trivial


@pytest.mark.parametrize("n", range(1, 17))
def test_wn_is_trivial(n):
    assert britton_solve(gen_w(n), 2).trivial


@pytest.mark.parametrize("n", range(2, 16))
def test_wn_is_trivial_in_s3(n):
    assert britton_solve(gen_w(n), 3).trivial


def test_w16_overflows_in_s3():
    # V_4 = x^(3^(3^27)) in S_3
    with pytest.raises(TowerOverflowError):
        britton_solve(gen_w(16), 3)


def test_w32_is_trivial_within_default_budget():
    assert britton_solve(gen_w(32), 2).trivial


def test_w64_overflows():
    with pytest.raises(TowerOverflowError):
        britton_solve(gen_w(64), 2)


def test_vm_is_a_power_of_x(s2):
    # V_2 = x^4 in S_2
    v2x = gen_V(2) * Word.generator(s2.generators, "x", -4)
    assert britton_solve(v2x, 2).trivial
    assert not britton_solve(gen_V(2), 2).trivial


def test_nontrivial_words(s2):
    result = britton_solve(parse_word("t x t^-1 x^-1", s2.generators), 2)
    assert not result.trivial
    assert result.reduced.t_length == 0
    assert str(result.reduced) == "(-2, 1)", result.reduced

    result = britton_solve(parse_word("t x", s2.generators), 2)
    assert not result.trivial
    assert result.reduced.t_length == 1


def test_unpinchable_t_survives(s2):
    # t x t^-1 = y, but t y t^-1 is not in the base group
    word = parse_word("t^2 x t^-2", s2.generators)
    assert britton_solve(word, 2).reduced.t_length == 2


def test_other_letters_are_rejected():
    alphabet = Alphabet(["x", "t", "z"])
    with pytest.raises(AlphabetError):
        britton_solve(parse_word("x z", alphabet), 2)


def test_bad_k(s2):
    with pytest.raises(ValueError):
        britton_solve(s2.relators[0], 1)


def test_solve_bm():
    assert solve_Bm(IndexedWord.parse("x_1 x_0 x_1^-1 x_0^-2"), 2, m=1)
    assert not solve_Bm(IndexedWord.parse("x_1 x_0 x_1^-1 x_0^-1"), 2, m=1)
    assert solve_Bm(IndexedWord(), 2)


def test_solve_bm_dagger_of_w():
    assert solve_Bm(dagger_lift(gen_w(8)), 2, m=3)


def test_solve_bm_index_checks():
    with pytest.raises(ValueError):
        solve_Bm(IndexedWord.parse("x_-1"), 2)
    with pytest.raises(ValueError):
        solve_Bm(IndexedWord.parse("x_3"), 2, m=2)


@pytest.mark.parametrize("m", range(1, 5))
def test_vm_is_the_tower_power_of_x(s2, m):
    exponent = delta_k(2, m - 1)
    word = gen_V(m) * Word.generator(s2.generators, "x", -exponent)
    assert britton_solve(word, 2).trivial
    assert not britton_solve(gen_V(m), 2).trivial


@pytest.mark.parametrize("letter", ["x", "t", "x^-1", "t^3"])
def test_generators_are_not_trivial(s2, letter):
    assert not britton_solve(parse_word(letter, s2.generators), 2).trivial


def test_generators_are_not_trivial_in_s3():
    alphabet = seed_s(3).generators
    assert not britton_solve(parse_word("x", alphabet), 3).trivial
    assert not britton_solve(parse_word("t", alphabet), 3).trivial


def rotations(word):
    codes = word.codes
    return [Word(word.alphabet, codes[i:] + codes[:i]) for i in range(len(codes))]


def test_relator_rotations_have_area_one(s2):
    relator = s2.relators[0]
    words = rotations(relator) + rotations(relator.inverse())
    assert len(words) == 18
    for w in words:
        assert britton_solve(w, 2).trivial, w
        assert area_bfs(s2, w, AreaCaps(max_len=len(w))).area == 1, w


def test_words_filled_by_the_area_search_are_trivial(s2):
    rng = random.Random(11)
    letters = [1, -1, 2, -2]
    filled = 0
    for _ in range(100):
        w = Word(s2.generators, [rng.choice(letters) for _ in range(rng.randint(0, 10))])
        result = area_bfs(s2, w, AreaCaps(max_len=len(w) + 2, max_states=2_000))
        if result.exact:
            filled += 1
            assert britton_solve(w, 2).trivial, w
    assert filled > 0


def test_conjugated_relators_are_trivial(s2):
    rng = random.Random(5)
    letters = [1, -1, 2, -2]
    relator = s2.relators[0]
    for _ in range(100):
        u = Word(s2.generators, [rng.choice(letters) for _ in range(rng.randint(0, 4))])
        r = relator if rng.random() < 0.5 else relator.inverse()
        w = r.conjugate(u) * relator.conjugate(Word(s2.generators, [rng.choice(letters)]))
        assert britton_solve(w, 2).trivial, w
