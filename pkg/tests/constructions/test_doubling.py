import pytest

from acbench.constructions.doubling import (
    DoublingSpec,
    build_Pw,
    build_tilde_Pw,
    hat,
    hat_name,
    retract_tilde,
)
from acbench.constructions.families import gen_w
from acbench.errors import AlphabetError
from acbench.presentations.fixtures import fixture
from acbench.presentations.presentation import measures
from acbench.search.canonical import canonical_key
from acbench.words import format_word, parse_expression


@pytest.fixture()
def spec_w2(s2):
    return DoublingSpec(s2, "t", "x", gen_w(2, s2.generators))


def test_hat_name_is_an_involution():
    assert hat_name("x") == "x_hat"
    assert hat_name(hat_name("x")) == "x"


def test_hat_word_moves_to_hatted_alphabet(s2):
    w = hat(s2.relators[0])
    assert w.alphabet.names == ("x_hat", "t_hat"), w.alphabet
    assert format_word(w) == "t_hat x_hat t_hat^-1 x_hat t_hat x_hat^-1 t_hat^-1 x_hat^-2"


def test_hat_presentation(s2):
    assert hat(hat(s2)) == s2


def test_hat_unsupported_type():
    with pytest.raises(TypeError):
        hat("x")


def test_build_pw_shape(spec_w2):
    p = build_Pw(spec_w2)
    assert p.generators.names == ("x", "t", "x_hat", "t_hat"), p.generators
    assert measures(p).balanced
    assert len(p) == 4
    assert p.relators[1] == hat(p.relators[0])
    assert format_word(p.relators[2]).startswith("x_hat t x_hat^-1 t x "), p.relators[2]


def test_build_pw_length_bound(s2):
    for n in (2, 4, 8):
        p = build_Pw(DoublingSpec(s2, "t", "x", gen_w(n, s2.generators)))
        assert measures(p).lam <= 24 * (n + 1), measures(p)
        assert measures(p).lam == 2 * 9 + 2 * (3 + len(gen_w(n))), measures(p)


def test_mixing_relators_are_swapped_by_hat(spec_w2):
    p = build_Pw(spec_w2)
    assert hat(p.relators[2]) == p.relators[3]
    assert hat(p).relators == (p.relators[1], p.relators[0], p.relators[3], p.relators[2])


def test_build_pw_matches_rank4_example():
    seed = fixture("S", k=2).rename({"x": "a"})
    w = parse_expression("[a, [t [t [t a^20 t^-1, a] t^-1, a] t^-1, a]]", seed.generators)
    p = build_Pw(DoublingSpec(seed, "t", "a", w))
    example = fixture("rank4_example").rename({"alpha": "a_hat", "tau": "t_hat"})
    assert canonical_key(p) == canonical_key(example)


def test_spec_validation(s2):
    w = gen_w(2, s2.generators)
    with pytest.raises(AlphabetError):
        DoublingSpec(s2, "t", "y", w)
    with pytest.raises(AlphabetError):
        DoublingSpec(s2, "t", "t", w)


def test_tilde_presentation(spec_w2):
    p = build_tilde_Pw(spec_w2)
    assert p.generators.names == ("x", "t", "x_hat", "t_hat", "s1", "s1_hat"), p.generators
    assert measures(p).balanced
    assert [format_word(r) for r in p.relators[-2:]] == ["s1 x_hat^-1", "s1_hat x^-1"]


def test_retraction_maps_tilde_onto_pw(spec_w2):
    tilde = build_tilde_Pw(spec_w2)
    pw = build_Pw(spec_w2)
    retracted = [retract_tilde(spec_w2, r) for r in tilde.relators]
    assert all(r.alphabet == pw.generators for r in retracted)
    assert retracted[:4] == list(pw.relators), retracted
    assert not retracted[4] and not retracted[5], retracted
