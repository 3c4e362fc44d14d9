"""The words V_m and w_n over the seed alphabet {x, t}, and the tower function"""
import math
from functools import lru_cache
from typing import Optional

from acbench.errors import TowerOverflowError
from acbench.presentations.fixtures import seed_s
from acbench.words import Alphabet, Word

DEFAULT_BIT_BUDGET = 2**20

SEED_ALPHABET: Alphabet = seed_s(2).generators


def _letters(alphabet: Optional[Alphabet]) -> tuple[Word, Word]:
    alphabet = alphabet or SEED_ALPHABET
    return Word.generator(alphabet, "x"), Word.generator(alphabet, "t")


@lru_cache(maxsize=32)
def _gen_v(m: int, alphabet: Alphabet) -> Word:
    x, t = _letters(alphabet)
    if m == 0:
        return x
    previous = _gen_v(m - 1, alphabet).conjugate(t)
    return previous * x * previous.inverse()


def gen_V(m: int, alphabet: Optional[Alphabet] = None) -> Word:
    """V_0 = x, V_m = t V_(m-1) t^-1 x t V_(m-1)^-1 t^-1

    Args:
        m: Recursion depth, m >= 0
        alphabet: Alphabet containing x and t, defaults to the seed alphabet
    """
    if m < 0:
        raise ValueError(f"gen_V needs m >= 0, got {m}")
    return _gen_v(m, alphabet or SEED_ALPHABET)


def gen_w(n: int, alphabet: Optional[Alphabet] = None) -> Word:
    """w_n = x V_m x^-1 V_m^-1 with m = floor(log2 n); w_1 is freely trivial"""
    if n < 1:
        raise ValueError(f"gen_w needs n >= 1, got {n}")
    x, _ = _letters(alphabet)
    v = gen_V(n.bit_length() - 1, alphabet)
    return x * v * x.inverse() * v.inverse()


def power_bits(k: int, e: int) -> int:
    """Bit length of k**e without computing it, e >= 0.

    Exact when k is a power of two. Otherwise floor(e log2 k) + 1 in floating point, and a
    lower bound once e no longer fits a float.
    """
    if e == 0:
        return 1
    if k & (k - 1) == 0 or e.bit_length() > 1000:
        return e * (k.bit_length() - 1) + 1
    return math.floor(e * math.log2(k)) + 1


def delta_k(k: int, m: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> int:
    """Delta_k(0) = k, Delta_k(m + 1) = k^Delta_k(m), refusing results above the bit budget.

    Raises:
        TowerOverflowError: The next power would need more than `bit_budget` bits
    """
    if k < 2:
        raise ValueError(f"delta_k needs k >= 2, got {k}")
    if m < 0:
        raise ValueError(f"delta_k needs m >= 0, got {m}")
    value = k
    for _ in range(m):
        bits = power_bits(k, value)
        if bits > bit_budget:
            raise TowerOverflowError(bits, bit_budget)
        value = k**value
    return value


def tower_fits(k: int, m: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> bool:
    try:
        delta_k(k, m, bit_budget)
    except TowerOverflowError:
        return False
    return True
