"""Named presentations and word families used throughout the workbench"""
from collections.abc import Callable
from typing import Any

from acbench.errors import FixtureError
from acbench.presentations.presentation import Presentation
from acbench.utils import load_package_data
from acbench.words import Alphabet, Word, parse_expression

Builder = Callable[..., Presentation]

FIXTURES: dict[str, Builder] = {}


def register_fixture(name: str) -> Callable[[Builder], Builder]:
    def wrapper(builder: Builder) -> Builder:
        FIXTURES[name] = builder
        return builder

    return wrapper


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise FixtureError(message)


def _power(alphabet: Alphabet, name: str, n: int) -> Word:
    return Word.generator(alphabet, name, n)


@register_fixture("trivial")
def trivial(k: int = 1) -> Presentation:
    """The trivial presentation < a1..ak | a1..ak >"""
    _check(k >= 0, f"trivial presentation needs k >= 0, got {k}")
    alphabet = Alphabet(f"a{i}" for i in range(1, k + 1))
    return Presentation(alphabet, tuple(Word.generator(alphabet, g) for g in alphabet))


@register_fixture("S")
def seed_s(k: int = 2) -> Presentation:
    """< x, t | (t x t^-1) x (t x t^-1)^-1 x^-k >, an HNN extension of BS(1,k)"""
    _check(k >= 2, f"S_k needs k >= 2, got {k}")
    alphabet = Alphabet(("x", "t"))
    y = Word.generator(alphabet, "x").conjugate(Word.generator(alphabet, "t"))
    x = Word.generator(alphabet, "x")
    return Presentation(alphabet, (x.conjugate(y) * _power(alphabet, "x", -k),))


@register_fixture("Q1")
def free_abelian() -> Presentation:
    """< x, y | x y x^-1 y^-1 >"""
    return Presentation.from_strings(["x", "y"], ["x y x^-1 y^-1"])


@register_fixture("Q2")
def metabelian() -> Presentation:
    """< a, s | s^-1 a s a^-2 >, the group BS(1,2)"""
    return Presentation.from_strings(["a", "s"], ["s^-1 a s a^-2"])


@register_fixture("Q")
def iterated_bs(m: int = 1, k: int = 2) -> Presentation:
    """< a, s1..sm | s1^-1 a s1 a^-k, s(i+1)^-1 si s(i+1) si^-k >"""
    _check(m >= 1, f"Q_(m,k) needs m >= 1, got {m}")
    _check(k >= 2, f"Q_(m,k) needs k >= 2, got {k}")
    names = ["a"] + [f"s{i}" for i in range(1, m + 1)]
    alphabet = Alphabet(names)
    relators = []
    for lower, upper in zip(names[:-1], names[1:]):
        base = Word.generator(alphabet, lower)
        stable = Word.generator(alphabet, upper)
        relators.append(base.conjugate(stable.inverse()) * _power(alphabet, lower, -k))
    return Presentation(alphabet, tuple(relators))


@register_fixture("B")
def iterated_hnn(m: int = 1, k: int = 2) -> Presentation:
    """< x_0..x_m | x_(i+1) x_i x_(i+1)^-1 x_i^-k >"""
    _check(m >= 0, f"B_m needs m >= 0, got {m}")
    _check(k >= 2, f"B_m needs k >= 2, got {k}")
    alphabet = Alphabet(f"x_{i}" for i in range(m + 1))
    relators = []
    for i in range(m):
        base = Word.generator(alphabet, f"x_{i}")
        stable = Word.generator(alphabet, f"x_{i + 1}")
        relators.append(base.conjugate(stable) * _power(alphabet, f"x_{i}", -k))
    return Presentation(alphabet, tuple(relators))


@register_fixture("rank4_example")
def rank4_example() -> Presentation:
    data = load_package_data("presentations/data/rank4_example.yaml")
    alphabet = Alphabet(data["generators"])
    return Presentation(alphabet, tuple(parse_expression(r, alphabet) for r in data["relators"]))


def fixture(name: str, **params: Any) -> Presentation:
    """Build a named presentation.

    Args:
        name: One of the registered names, see `FIXTURES`
        **params: Family parameters, e.g. k for "S", m and k for "B"
    """
    try:
        builder = FIXTURES[name]
    except KeyError:
        raise FixtureError(f"Unknown fixture: {name!r}, choose from {sorted(FIXTURES)}") from None
    try:
        return builder(**params)
    except TypeError as e:
        raise FixtureError(f"Bad parameters for fixture {name!r}: {e}") from None


def parse_fixture_spec(spec: str) -> Presentation:
    """Shorthands used on the command line: "s2", "q1", "q2", "b3" (k=2), "trivial3",
    or "NAME:key=value,key=value" """
    name, _, rest = spec.partition(":")
    params: dict[str, int] = {}
    for item in filter(None, rest.split(",")):
        key, _, value = item.partition("=")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise FixtureError(f"Bad fixture parameter {item!r} in {spec!r}") from None
    lowered = name.lower()
    if not rest:
        if lowered in ("q1", "q2"):
            return fixture(lowered.upper())
        for prefix, key, family in (("trivial", "k", "trivial"), ("s", "k", "S"), ("b", "m", "B")):
            if lowered.startswith(prefix) and lowered[len(prefix) :].isdigit():
                return fixture(family, **{key: int(lowered[len(prefix) :])})
    return fixture(name, **params)


# word families over the fixtures


def commutator_power_word(n: int, m: int) -> Word:
    """x^n y^m x^-n y^-m over Q1"""
    alphabet = free_abelian().generators
    x, y = _power(alphabet, "x", n), _power(alphabet, "y", m)
    return x * y * x.inverse() * y.inverse()


def staircase_word(n: int) -> Word:
    """a^(2^n) s^-n a^-1 s^n over Q2"""
    alphabet = metabelian().generators
    s = _power(alphabet, "s", n)
    tail = Word.generator(alphabet, "a").conjugate(s.inverse()).inverse()
    return _power(alphabet, "a", 2**n) * tail


def staircase_commutator_word(n: int) -> Word:
    """a s^-n a^-1 s^n a^-1 s^-n a s^n over Q2"""
    alphabet = metabelian().generators
    a = Word.generator(alphabet, "a")
    inner = a.conjugate(_power(alphabet, "s", -n)).inverse()
    return a * inner * a.inverse() * inner.inverse()
