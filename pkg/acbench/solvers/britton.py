"""Word problem in S_k by Britton reduction over the affine model of BS(1,k)

S_k is an HNN extension of BS(1,k) = < x, y | y x y^-1 = x^k > with stable letter t and
t x t^-1 = y. A pinch t x^n t^-1 becomes y^n and t^-1 y^n t becomes x^n; a word is
trivial iff no t survives the reduction and the remaining affine pair is the identity.
"""
from dataclasses import dataclass
from typing import Any, Optional

from acbench.constructions.families import DEFAULT_BIT_BUDGET
from acbench.constructions.indexed import IndexedWord, phi
from acbench.errors import AlphabetError
from acbench.solvers.affine import AffinePair
from acbench.utils import get_logger
from acbench.words import Word

log = get_logger(__name__)


@dataclass(frozen=True)
class BrittonState:
    """g_0 t^e_1 g_1 ... t^e_r g_r, with len(syllables) == len(signs) + 1"""

    syllables: tuple[AffinePair, ...]
    signs: tuple[int, ...]

    @property
    def t_length(self) -> int:
        return len(self.signs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "syllables": [g.to_dict() for g in self.syllables],
            "signs": list(self.signs),
        }

    def __str__(self) -> str:
        parts = [str(self.syllables[0])]
        for sign, g in zip(self.signs, self.syllables[1:]):
            parts += ["t" if sign == 1 else "t^-1", str(g)]
        return " ".join(parts)


@dataclass(frozen=True)
class BrittonResult:
    trivial: bool
    reduced: BrittonState

    def to_dict(self) -> dict[str, Any]:
        return {"trivial": self.trivial, "reduced": self.reduced.to_dict()}


def britton_solve(
    word: Word,
    k: int,
    x: str = "x",
    t: str = "t",
    bit_budget: int = DEFAULT_BIT_BUDGET,
) -> BrittonResult:
    """Decide whether a word over {x, t} is trivial in S_k.

    Args:
        word: Word over an alphabet containing x and t and nothing else used
        k: The seed parameter, k >= 2
        x: Name of the base generator
        t: Name of the stable letter
        bit_budget: Largest intermediate integer size allowed

    Raises:
        TowerOverflowError: An intermediate exponent exceeds the bit budget
    """
    if k < 2:
        raise ValueError(f"britton_solve needs k >= 2, got {k}")
    x_code, t_code = word.alphabet.code(x), word.alphabet.code(t)
    stack: list[tuple[AffinePair, int]] = []
    current = AffinePair.identity(k, bit_budget)
    codes = word.codes
    i = 0
    while i < len(codes):
        c = codes[i]
        if abs(c) == x_code:
            j = i
            while j < len(codes) and codes[j] == c:
                j += 1
            current = current * AffinePair.x(k, (j - i) * (1 if c > 0 else -1), bit_budget)
            i = j
            continue
        if abs(c) != t_code:
            name = word.alphabet.name(c)
            raise AlphabetError(f"britton_solve only handles {x} and {t}, got {name}")
        sign = 1 if c > 0 else -1
        if stack and stack[-1][1] == -sign:
            previous, previous_sign = stack[-1]
            if previous_sign == 1 and current.in_x:
                stack.pop()
                current = previous * AffinePair.y(k, current.p, bit_budget)
                i += 1
                continue
            if previous_sign == -1 and current.in_y:
                stack.pop()
                current = previous * AffinePair.x(k, current.b, bit_budget)
                i += 1
                continue
        stack.append((current, sign))
        current = AffinePair.identity(k, bit_budget)
        i += 1
    state = BrittonState(
        syllables=tuple(g for g, _ in stack) + (current,),
        signs=tuple(s for _, s in stack),
    )
    trivial = not stack and current.is_identity
    log.debug(f"Britton reduction of a {len(word)}-letter word left {state.t_length} t-letters")
    return BrittonResult(trivial=trivial, reduced=state)


def solve_Bm(
    v: IndexedWord,
    k: int,
    m: Optional[int] = None,
    bit_budget: int = DEFAULT_BIT_BUDGET,
) -> bool:
    """Decide v = 1 in B_m by mapping x_i -> t^i x t^-i into S_k, which is injective.

    Args:
        v: Word in x_0..x_m
        k: The seed parameter
        m: Largest allowed index, unchecked when None
    """
    bounds = v.index_range
    if bounds is not None:
        low, high = bounds
        if low < 0 or (m is not None and high > m):
            raise ValueError(f"Indices {low}..{high} are outside 0..{m if m is not None else 'm'}")
    return britton_solve(phi(v), k, bit_budget=bit_budget).trivial
