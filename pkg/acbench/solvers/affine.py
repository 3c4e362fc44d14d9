"""Exact affine model of BS(1,k) = < x, y | y x y^-1 = x^k >

An element (a, b) acts on the rationals as z -> k^b z + a, with a = p / k^e. x is (1, 0)
and y is (0, 1). Products follow (a, b)(a', b') = (a + k^b a', b + b').
"""
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

import sympy

from acbench.constructions.families import DEFAULT_BIT_BUDGET, power_bits
from acbench.errors import TowerOverflowError
from acbench.words import Word


def _normalize(k: int, p: int, e: int) -> tuple[int, int]:
    if p == 0:
        return 0, 0
    if e == 0:
        return p, 0
    drop = min(e, int(sympy.multiplicity(k, abs(p))))
    return p // k**drop, e - drop


@dataclass(frozen=True)
class AffinePair:
    k: int
    p: int = 0
    e: int = 0
    b: int = 0
    bit_budget: int = field(default=DEFAULT_BIT_BUDGET, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"AffinePair needs k >= 2, got {self.k}")
        if self.e < 0:
            raise ValueError(f"AffinePair needs e >= 0, got {self.e}")
        p, e = _normalize(self.k, self.p, self.e)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", e)

    @classmethod
    def identity(cls, k: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> "AffinePair":
        return cls(k, bit_budget=bit_budget)

    @classmethod
    def x(cls, k: int, n: int = 1, bit_budget: int = DEFAULT_BIT_BUDGET) -> "AffinePair":
        return cls(k, p=n, bit_budget=bit_budget)

    @classmethod
    def y(cls, k: int, n: int = 1, bit_budget: int = DEFAULT_BIT_BUDGET) -> "AffinePair":
        return cls(k, b=n, bit_budget=bit_budget)

    @property
    def a(self) -> sympy.Rational:
        return sympy.Rational(self.p, self.k**self.e)

    @property
    def is_identity(self) -> bool:
        return self.p == 0 and self.b == 0

    @property
    def in_x(self) -> bool:
        """Whether this is a power of x"""
        return self.e == 0 and self.b == 0

    @property
    def in_y(self) -> bool:
        """Whether this is a power of y"""
        return self.p == 0

    def __mul__(self, other: "AffinePair") -> "AffinePair":
        if self.k != other.k:
            raise ValueError(f"Cannot multiply pairs over k={self.k} and k={other.k}")
        k, budget = self.k, min(self.bit_budget, other.bit_budget)
        if other.p == 0:
            return AffinePair(k, self.p, self.e, self.b + other.b, bit_budget=budget)
        # k^b a' = p' k^up / k^down
        up, down = max(self.b, 0), other.e + max(-self.b, 0)
        scale = max(self.e, down) if self.p else down
        left, right = scale - self.e, up + scale - down
        bits = other.p.bit_length() + power_bits(k, right) - 1
        if self.p:
            bits = max(bits, self.p.bit_length() + power_bits(k, left) - 1)
        if bits > budget:
            raise TowerOverflowError(bits, budget)
        p = other.p * k**right + (self.p * k**left if self.p else 0)
        return AffinePair(k, p, scale, self.b + other.b, bit_budget=budget)

    def inverse(self) -> "AffinePair":
        # (a, b)^-1 = (-k^-b a, -b)
        return AffinePair(self.k, b=-self.b, bit_budget=self.bit_budget) * AffinePair(
            self.k, -self.p, self.e, bit_budget=self.bit_budget
        )

    def __pow__(self, n: int) -> "AffinePair":
        if self.in_x:
            return AffinePair.x(self.k, self.p * n, self.bit_budget)
        if self.in_y:
            return AffinePair.y(self.k, self.b * n, self.bit_budget)
        base = self if n >= 0 else self.inverse()
        result, n = AffinePair.identity(self.k, self.bit_budget), abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "p": str(self.p), "e": str(self.e), "b": str(self.b)}

    def __str__(self) -> str:
        a = str(self.p) if self.e == 0 else f"{self.p}/{self.k}^{self.e}"
        return f"({a}, {self.b})"


def affine_evaluate(word: Word, k: int, images: Mapping[str, AffinePair]) -> AffinePair:
    """Evaluate a word under a homomorphism into BS(1,k) given by generator images"""
    budget = min((g.bit_budget for g in images.values()), default=DEFAULT_BIT_BUDGET)
    result = AffinePair.identity(k, budget)
    codes = word.codes
    i = 0
    while i < len(codes):
        j = i
        while j < len(codes) and codes[j] == codes[i]:
            j += 1
        image = images[word.alphabet.name(codes[i])]
        result = result * image ** ((j - i) * (1 if codes[i] > 0 else -1))
        i = j
    return result
