"""Words in the indexed generators x_i, i an integer, and the maps relating them to {x, t}"""
import re
from collections.abc import Iterable, Iterator
from typing import Optional

from acbench.constructions.families import SEED_ALPHABET
from acbench.errors import AlphabetError, ParseError
from acbench.words import Alphabet, Word, format_codes, reduce_codes

_INDEXED = re.compile(r"(?P<stem>[A-Za-z]+)_(?P<index>-?\d+)(?:\^(?P<power>-?\d+))?\Z")

IndexedLetter = tuple[int, int]


def _encode(index: int, sign: int) -> int:
    # zigzag so that letter codes are nonzero and sign-symmetric
    return sign * (2 * index + 1 if index >= 0 else -2 * index)


def _decode(code: int) -> IndexedLetter:
    sign = 1 if code > 0 else -1
    n = abs(code)
    return ((n - 1) // 2 if n % 2 else -(n // 2)), sign


class IndexedWord:
    """Freely reduced word in x_i^(+-1), i in Z"""

    __slots__ = ("letters",)

    letters: tuple[IndexedLetter, ...]

    def __init__(self, letters: Iterable[IndexedLetter] = ()):
        codes = reduce_codes(_encode(i, s) for i, s in letters)
        object.__setattr__(self, "letters", tuple(_decode(c) for c in codes))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IndexedWord is immutable")

    @classmethod
    def generator(cls, index: int, power: int = 1) -> "IndexedWord":
        return cls([(index, 1 if power > 0 else -1)] * abs(power))

    @classmethod
    def parse(cls, text: str, stem: str = "x") -> "IndexedWord":
        """Parse `x_1 x_0^2 x_1^-1`; `1` is the empty word"""
        tokens = text.split()
        if tokens in ([], ["1"]):
            return cls()
        letters: list[IndexedLetter] = []
        for token in tokens:
            match = _INDEXED.match(token)
            if match is None or match["stem"] != stem:
                raise ParseError(f"Bad indexed letter: {token!r}")
            power = int(match["power"] or 1)
            if power == 0:
                raise ParseError(f"Zero exponent in token: {token!r}")
            letters.extend([(int(match["index"]), 1 if power > 0 else -1)] * abs(power))
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[IndexedLetter]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IndexedWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "IndexedWord") -> "IndexedWord":
        return IndexedWord(self.letters + other.letters)

    def inverse(self) -> "IndexedWord":
        return IndexedWord((i, -s) for i, s in reversed(self.letters))

    __invert__ = inverse

    def format(self, stem: str = "x") -> str:
        codes = [_encode(i, s) for i, s in self.letters]
        return format_codes(codes, lambda c: f"{stem}_{_decode(c)[0]}")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"IndexedWord({self.format()!r})"

    @property
    def index_range(self) -> Optional[tuple[int, int]]:
        if not self.letters:
            return None
        indices = [i for i, _ in self.letters]
        return min(indices), max(indices)

    def to_word(self, alphabet: Alphabet, stem: str = "x") -> Word:
        """The same word over an alphabet of named generators `x_0, x_1, ...`"""
        return Word(alphabet, (alphabet.code(f"{stem}_{i}", s) for i, s in self.letters))

    @classmethod
    def from_word(cls, word: Word, stem: str = "x") -> "IndexedWord":
        letters = []
        for name, sign in word.letters:
            match = _INDEXED.match(name)
            if match is None or match["stem"] != stem or match["power"]:
                raise AlphabetError(f"Generator {name!r} is not of the form {stem}_i")
            letters.append((int(match["index"]), sign))
        return cls(letters)


def dagger_lift(word: Word, x: str = "x", t: str = "t") -> IndexedWord:
    """Lift a word with zero t-exponent sum: each x^(+-1) preceded by a prefix of t-exponent
    m becomes x_m^(+-1)"""
    if word.exponent_sum(t) != 0:
        raise ValueError(f"dagger_lift needs zero t-exponent sum, got {word.exponent_sum(t)}")
    x_code, t_code = word.alphabet.code(x), word.alphabet.code(t)
    height = 0
    letters: list[IndexedLetter] = []
    for c in word.codes:
        if abs(c) == t_code:
            height += 1 if c > 0 else -1
        elif abs(c) == x_code:
            letters.append((height, 1 if c > 0 else -1))
        else:
            name = word.alphabet.name(c)
            raise AlphabetError(f"dagger_lift only handles {x} and {t}, got {name}")
    return IndexedWord(letters)


def phi(v: IndexedWord, alphabet: Optional[Alphabet] = None, x: str = "x", t: str = "t") -> Word:
    """x_m -> t^m x t^-m, freely reduced"""
    alphabet = alphabet or SEED_ALPHABET
    x_code, t_code = alphabet.code(x), alphabet.code(t)
    codes: list[int] = []
    for index, sign in v.letters:
        lift = (t_code if index > 0 else -t_code,) * abs(index)
        codes.extend(lift)
        codes.append(sign * x_code)
        codes.extend(-c for c in reversed(lift))
    return Word(alphabet, codes)


def shift_sigma(v: IndexedWord, d: int = 1) -> IndexedWord:
    """x_i -> x_(i+d)"""
    return IndexedWord((i + d, s) for i, s in v.letters)
