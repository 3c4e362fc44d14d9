"""Finite presentations and their measures"""
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import singledispatch
from typing import Any

import sympy

from acbench.errors import AlphabetError, ParseError
from acbench.words import Alphabet, Word, format_word, parse_word


@dataclass(frozen=True)
class Presentation:
    """Generators and an ordered tuple of freely reduced relators"""

    generators: Alphabet
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "relators", tuple(self.relators))
        for i, r in enumerate(self.relators, start=1):
            if r.alphabet != self.generators:
                raise AlphabetError(
                    f"Relator {i} is over {r.alphabet}, presentation is over {self.generators}"
                )

    @classmethod
    def from_strings(cls, generators: Sequence[str], relators: Sequence[str]) -> "Presentation":
        alphabet = Alphabet(generators)
        return cls(alphabet, tuple(parse_word(r, alphabet) for r in relators))

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """Parse `< g1, g2 | w1, w2 >`"""
        body = text.strip()
        if not (body.startswith("<") and body.endswith(">")):
            raise ParseError(f"Presentation must be enclosed in < >: {text!r}")
        head, bar, tail = body[1:-1].partition("|")
        if not bar:
            raise ParseError(f"Presentation is missing '|': {text!r}")
        generators = [g.strip() for g in head.split(",") if g.strip()]
        relators = [r.strip() for r in tail.split(",")] if tail.strip() else []
        return cls.from_strings(generators, relators)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Presentation":
        return cls.from_strings(list(data["generators"]), list(data["relators"]))

    def to_dict(self) -> dict[str, Any]:
        return {
            "generators": list(self.generators.names),
            "relators": [format_word(r) for r in self.relators],
        }

    def __str__(self) -> str:
        relators = ", ".join(format_word(r) for r in self.relators)
        return f"< {', '.join(self.generators.names)} | {relators} >"

    def __len__(self) -> int:
        return len(self.relators)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def with_relators(self, relators: Iterable[Word]) -> "Presentation":
        return Presentation(self.generators, tuple(relators))

    def replace(self, index: int, relator: Word) -> "Presentation":
        """Replace the relator at 0-based `index`"""
        relators = list(self.relators)
        relators[index] = relator
        return Presentation(self.generators, tuple(relators))

    def over(self, alphabet: Alphabet) -> "Presentation":
        """Re-embed the relators in a larger alphabet"""
        return Presentation(alphabet, tuple(r.over(alphabet) for r in self.relators))

    def rename(self, mapping: Mapping[str, str]) -> "Presentation":
        """Rename generators, keeping their order"""
        alphabet = Alphabet(mapping.get(g, g) for g in self.generators)
        return Presentation(
            alphabet, tuple(Word._reduced(alphabet, r.codes) for r in self.relators)
        )


@dataclass(frozen=True)
class PresentationMeasures:
    deficiency: int
    lam: int
    balanced: bool

    def to_dict(self) -> dict[str, Any]:
        return {"deficiency": self.deficiency, "lambda": self.lam, "balanced": self.balanced}


def measures(presentation: Presentation) -> PresentationMeasures:
    """Deficiency, total relator length and the balanced flag"""
    deficiency = presentation.rank - len(presentation.relators)
    return PresentationMeasures(
        deficiency=deficiency,
        lam=sum(len(r) for r in presentation.relators),
        balanced=deficiency == 0,
    )


@singledispatch
def delete_letter(obj: Any, generator: str) -> Any:
    """Delete every occurrence of a generator, then freely reduce.

    For a Word returns (word, count); for a Presentation returns the presentation on the
    remaining generators with the per-relator counts of deleted letters.
    """
    raise TypeError(f"Cannot delete letters from {type(obj).__name__}")


@delete_letter.register
def _(word: Word, generator: str) -> tuple[Word, int]:
    return word.delete(generator)


@delete_letter.register
def _(presentation: Presentation, generator: str) -> tuple[Presentation, tuple[int, ...]]:
    remaining = presentation.generators.without(generator)
    relators, counts = [], []
    for r in presentation.relators:
        reduced, count = r.delete(generator)
        relators.append(reduced)
        counts.append(count)
    return Presentation(remaining, tuple(relators)), tuple(counts)


def exponent_matrix(presentation: Presentation) -> sympy.Matrix:
    """Rows are relators, columns are generator exponent sums"""
    return sympy.Matrix(
        [[r.exponent_sum(g) for g in presentation.generators] for r in presentation.relators]
    )


def is_homologically_trivial(presentation: Presentation) -> bool:
    """Balanced with a unimodular exponent-sum matrix, a necessary condition for the
    presentation to define the trivial group"""
    if not measures(presentation).balanced:
        return False
    if presentation.rank == 0:
        return True
    return abs(exponent_matrix(presentation).det()) == 1


