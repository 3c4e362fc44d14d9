"""Free group words over declared finite alphabets

Letters are stored as signed integer codes: generator number ``i`` of the alphabet (0-based)
is ``i + 1`` and its inverse ``-(i + 1)``. Words are immutable and freely reduced at
construction, so equality is structural.
"""
import re
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from typing import NamedTuple, Optional, Union

from acbench.errors import AlphabetError, ParseError

_NAME = re.compile(r"[A-Za-z_][\w'\-]*\Z")
_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][\w'\-]*)|(?P<int>-?\d+)|(?P<sym>[()\[\],^]))")

Codes = tuple[int, ...]


class Alphabet:
    """Ordered finite set of generator names"""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not _NAME.match(name):
                raise AlphabetError(f"Invalid generator name: {name!r}")
        if len(set(names)) != len(names):
            raise AlphabetError(f"Duplicate generator names: {names}")
        self.names: tuple[str, ...] = names
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetError(f"Unknown generator: {name!r} not in {list(self.names)}") from None

    def code(self, name: str, sign: int = 1) -> int:
        if sign not in (1, -1):
            raise ValueError(f"Letter sign must be +1 or -1, got {sign}")
        return sign * (self.index(name) + 1)

    def name(self, code: int) -> str:
        return self.names[abs(code) - 1]

    def extend(self, names: Iterable[str]) -> "Alphabet":
        return Alphabet(self.names + tuple(names))

    def without(self, name: str) -> "Alphabet":
        self.index(name)
        return Alphabet(n for n in self.names if n != name)

    def fresh(self, stem: str, count: int = 1, start: int = 1) -> tuple[str, ...]:
        """The first `count` names `stem<i>`, i >= start, that are not already taken"""
        fresh: list[str] = []
        i = start
        while len(fresh) < count:
            candidate = f"{stem}{i}"
            if candidate not in self:
                fresh.append(candidate)
            i += 1
        return tuple(fresh)


class Letter(NamedTuple):
    """A generator name with sign +1 or -1"""

    generator: str
    sign: int


def reduce_codes(codes: Iterable[int]) -> Codes:
    """Freely reduce a sequence of letter codes"""
    stack: list[int] = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


def join_codes(left: Codes, right: Codes) -> Codes:
    """Concatenate two reduced code tuples, cancelling only across the seam"""
    n = 0
    limit = min(len(left), len(right))
    while n < limit and left[-1 - n] == -right[n]:
        n += 1
    return left[: len(left) - n] + right[n:]


def invert_codes(codes: Codes) -> Codes:
    return tuple(-c for c in reversed(codes))


def letter_order(code: int) -> int:
    """Generator declaration order, positive before negative"""
    return 2 * (abs(code) - 1) + (code < 0)


def cyclic_core(codes: Codes) -> tuple[Codes, Codes]:
    """Split a reduced word as conjugator, cyclically reduced core"""
    n = 0
    while 2 * n + 1 < len(codes) and codes[n] == -codes[-1 - n]:
        n += 1
    return codes[:n], codes[n : len(codes) - n]


def cyclic_normal_codes(codes: Codes) -> Codes:
    """Least rotation, of the cyclic reduction or of its inverse, in letter order"""
    _, core = cyclic_core(codes)
    if not core:
        return core
    best: Optional[tuple[int, ...]] = None
    best_codes = core
    for candidate in (core, invert_codes(core)):
        for r in range(len(candidate)):
            rotated = candidate[r:] + candidate[:r]
            key = tuple(letter_order(c) for c in rotated)
            if best is None or key < best:
                best = key
                best_codes = rotated
    return best_codes


class Word:
    """Freely reduced word over an alphabet"""

    __slots__ = ("alphabet", "codes")

    alphabet: Alphabet
    codes: Codes

    def __init__(self, alphabet: Alphabet, codes: Iterable[int] = ()):
        """Freely reduced word over an alphabet

        Args:
            alphabet: The generators the word is written over
            codes: Signed 1-based generator numbers; reduced on construction
        """
        codes = tuple(codes)
        size = len(alphabet)
        for c in codes:
            if not isinstance(c, int) or c == 0 or abs(c) > size:
                raise AlphabetError(f"Letter code {c!r} is outside {alphabet}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "codes", reduce_codes(codes))

    @classmethod
    def _reduced(cls, alphabet: Alphabet, codes: Codes) -> "Word":
        word = object.__new__(cls)
        object.__setattr__(word, "alphabet", alphabet)
        object.__setattr__(word, "codes", codes)
        return word

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Word is immutable")

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Word":
        return cls._reduced(alphabet, ())

    @classmethod
    def generator(cls, alphabet: Alphabet, name: str, power: int = 1) -> "Word":
        code = alphabet.code(name, 1 if power >= 0 else -1)
        return cls._reduced(alphabet, (code,) * abs(power))

    @classmethod
    def from_letters(cls, alphabet: Alphabet, letters: Iterable[Union[Letter, tuple[str, int]]]):
        return cls(alphabet, (alphabet.code(g, s) for g, s in letters))

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> "Word":
        return parse_word(text, alphabet)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(self.alphabet.name(c), 1 if c > 0 else -1) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.codes == other.codes and self.alphabet == other.alphabet

    def __hash__(self) -> int:
        return hash((self.alphabet, self.codes))

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def _check(self, other: "Word") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetError(f"Alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def __mul__(self, other: "Word") -> "Word":
        self._check(other)
        return Word._reduced(self.alphabet, join_codes(self.codes, other.codes))

    def inverse(self) -> "Word":
        return Word._reduced(self.alphabet, invert_codes(self.codes))

    __invert__ = inverse

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(self.alphabet, base.codes * abs(n))

    def conjugate(self, u: "Word") -> "Word":
        """u w u^-1"""
        return u * self * u.inverse()

    def exponent_sum(self, generator: str) -> int:
        code = self.alphabet.code(generator)
        return sum(1 if c == code else -1 for c in self.codes if abs(c) == code)

    def count(self, generator: str) -> int:
        """Occurrences of generator^{+1} or generator^{-1}"""
        code = self.alphabet.code(generator)
        return sum(1 for c in self.codes if abs(c) == code)

    def cyclically_reduce(self) -> tuple["Word", "Word"]:
        """Returns (u, c) with c cyclically reduced and self = u c u^-1"""
        conjugator, core = cyclic_core(self.codes)
        return Word._reduced(self.alphabet, conjugator), Word._reduced(self.alphabet, core)

    def cyclic_normal_form(self) -> "Word":
        return Word._reduced(self.alphabet, cyclic_normal_codes(self.codes))

    def over(self, alphabet: Alphabet) -> "Word":
        """The same word re-embedded in another alphabet containing all of its generators"""
        if alphabet == self.alphabet:
            return self
        table = {i + 1: alphabet.code(name) for i, name in enumerate(self.alphabet.names)}
        codes = tuple(table[c] if c > 0 else -table[-c] for c in self.codes)
        return Word._reduced(alphabet, codes)

    def substitute(
        self, images: Mapping[str, "Word"], alphabet: Optional[Alphabet] = None
    ) -> "Word":
        """Apply the free group homomorphism sending each generator to its image

        Args:
            images: Image word per generator name; missing generators map to themselves
            alphabet: Target alphabet, defaults to this word's alphabet
        """
        target = alphabet or self.alphabet
        forward: dict[int, Codes] = {}
        for i, name in enumerate(self.alphabet.names):
            image = images[name].over(target) if name in images else Word.generator(target, name)
            forward[i + 1] = image.codes
            forward[-(i + 1)] = invert_codes(image.codes)
        return Word(target, (c for code in self.codes for c in forward[code]))

    def delete(self, generator: str) -> tuple["Word", int]:
        """Delete every generator^{+-1}, returning the reduced word over the remaining
        generators and the number of deleted letters"""
        code = self.alphabet.code(generator)
        remaining = self.alphabet.without(generator)
        kept = [c for c in self.codes if abs(c) != code]
        deleted = len(self.codes) - len(kept)
        shifted = (c if abs(c) < code else (c - 1 if c > 0 else c + 1) for c in kept)
        return Word(remaining, shifted), deleted


def free_reduce(letters: Iterable[Union[Letter, tuple[str, int]]], alphabet: Alphabet) -> Word:
    return Word.from_letters(alphabet, letters)


def concat(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return w.inverse()


def conjugate(w: Word, u: Word) -> Word:
    """u w u^-1"""
    return w.conjugate(u)


def exponent_sum(w: Word, generator: str) -> int:
    return w.exponent_sum(generator)


def cyclic_normal_form(w: Word) -> Word:
    return w.cyclic_normal_form()


def format_codes(codes: Sequence[int], name: Callable[[int], str]) -> str:
    if not codes:
        return "1"
    tokens = []
    i = 0
    while i < len(codes):
        j = i
        while j < len(codes) and codes[j] == codes[i]:
            j += 1
        power = (j - i) * (1 if codes[i] > 0 else -1)
        token = name(codes[i])
        tokens.append(token if power == 1 else f"{token}^{power}")
        i = j
    return " ".join(tokens)


def format_word(w: Word) -> str:
    """Whitespace separated `g`, `g^-1`, `g^n` tokens; the empty word is `1`"""
    return format_codes(w.codes, w.alphabet.name)


def parse_token(token: str) -> tuple[str, int]:
    name, caret, power = token.partition("^")
    if not _NAME.match(name):
        raise ParseError(f"Bad generator token: {token!r}")
    if not caret:
        return name, 1
    try:
        exponent = int(power)
    except ValueError:
        raise ParseError(f"Bad exponent in token: {token!r}") from None
    if exponent == 0:
        raise ParseError(f"Zero exponent in token: {token!r}")
    return name, exponent


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Inverse of format_word"""
    tokens = text.split()
    if tokens == ["1"] or not tokens:
        return Word.empty(alphabet)
    codes: list[int] = []
    for token in tokens:
        name, power = parse_token(token)
        codes.extend([alphabet.code(name, 1 if power > 0 else -1)] * abs(power))
    return Word(alphabet, codes)


class _ExpressionParser:
    """Products of generators, `1`, parenthesised groups, `^n` powers and commutators
    `[u, v] = u v u^-1 v^-1`"""

    def __init__(self, text: str, alphabet: Alphabet):
        self.alphabet = alphabet
        self.tokens: list[tuple[str, str]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if match is None or match.end() == pos:
                raise ParseError(f"Unexpected character at {pos} in {text!r}")
            kind = match.lastgroup
            assert kind is not None
            self.tokens.append((kind, match.group(kind)))
            pos = match.end()
        self.pos = 0

    def peek(self) -> Optional[tuple[str, str]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, value: Optional[str] = None) -> tuple[str, str]:
        token = self.peek()
        if token is None or (value is not None and token[1] != value):
            raise ParseError(f"Expected {value or 'a token'} at token {self.pos}, got {token}")
        self.pos += 1
        return token

    def parse(self) -> Word:
        word = self.product()
        if self.peek() is not None:
            raise ParseError(f"Trailing input at token {self.pos}: {self.peek()}")
        return word

    def product(self) -> Word:
        word = Word.empty(self.alphabet)
        while True:
            token = self.peek()
            if token is None or token[1] in (")", "]", ","):
                return word
            word = word * self.power()

    def power(self) -> Word:
        base = self.atom()
        token = self.peek()
        if token is not None and token[1] == "^":
            self.take("^")
            kind, value = self.take()
            if kind != "int":
                raise ParseError(f"Expected an integer exponent, got {value!r}")
            return base ** int(value)
        return base

    def atom(self) -> Word:
        kind, value = self.take()
        if kind == "name":
            return Word.generator(self.alphabet, value)
        if kind == "int" and value == "1":
            return Word.empty(self.alphabet)
        if value == "(":
            inner = self.product()
            self.take(")")
            return inner
        if value == "[":
            left = self.product()
            self.take(",")
            right = self.product()
            self.take("]")
            return left * right * left.inverse() * right.inverse()
        raise ParseError(f"Unexpected token {value!r}")


def parse_expression(text: str, alphabet: Alphabet) -> Word:
    """Parse group-theoretic notation, e.g. `[t a^20 t^-1, a] a^-1`"""
    return _ExpressionParser(text, alphabet).parse()
