import pytest
import sympy

from acbench.errors import TowerOverflowError
from acbench.solvers.affine import AffinePair, affine_evaluate
from acbench.words import parse_word


def test_generators_and_products():
    x, y = AffinePair.x(2), AffinePair.y(2)
    assert x * y == AffinePair(2, p=1, b=1)
    assert y * x == AffinePair(2, p=2, b=1)


def test_defining_relation():
    for k in (2, 3, 5):
        x, y = AffinePair.x(k), AffinePair.y(k)
        assert y * x * y.inverse() == x**k


def test_fractional_translation():
    x, y = AffinePair.x(2), AffinePair.y(2)
    g = y.inverse() * x * y
    assert g.a == sympy.Rational(1, 2), g
    assert str(g) == "(1/2^1, 0)"
    assert not g.in_x and not g.in_y


def test_normalization():
    assert AffinePair(2, p=12, e=2) == AffinePair(2, p=3)
    assert AffinePair(3, p=0, e=4).e == 0


def test_inverse_and_powers():
    g = AffinePair(3, p=5, e=1, b=2)
    assert (g * g.inverse()).is_identity
    assert g**3 == g * g * g
    assert g**-2 == (g * g).inverse()
    assert g**0 == AffinePair.identity(3)


def test_bad_arguments():
    with pytest.raises(ValueError):
        AffinePair(1)
    with pytest.raises(ValueError):
        AffinePair(2, p=1, e=-1)
    with pytest.raises(ValueError):
        AffinePair.x(2) * AffinePair.x(3)


def test_overflow():
    y = AffinePair.y(2, 100, bit_budget=64)
    with pytest.raises(TowerOverflowError) as e:
        y * AffinePair.x(2, bit_budget=64)
    assert e.value.budget == 64


def test_affine_evaluate_metabelian_relator(q2):
    images = {"a": AffinePair.x(2), "s": AffinePair.y(2).inverse()}
    assert affine_evaluate(q2.relators[0], 2, images).is_identity


def test_affine_evaluate_groups_powers(ab):
    images = {"a": AffinePair.x(2), "b": AffinePair.y(2)}
    value = affine_evaluate(parse_word("a b^10 a", ab), 2, images)
    assert value == AffinePair(2, p=1 + 2**10, b=10), value


def test_overflow_estimate_is_tight_for_odd_k():
    pair = AffinePair.y(3, 27, bit_budget=43) * AffinePair.x(3, bit_budget=43)
    assert pair.p == 3**27, pair
    with pytest.raises(TowerOverflowError):
        AffinePair.y(3, 27, bit_budget=42) * AffinePair.x(3, bit_budget=42)
