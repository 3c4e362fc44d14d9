"""AC moves and Tietze insert/delete of empty relators

Relator indices are 1-based to match r_1..r_k. Conjugation is u r u^-1 throughout.
"""
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any, ClassVar, Union

from acbench.errors import MoveError
from acbench.presentations.presentation import Presentation
from acbench.words import Alphabet, Word, format_word, parse_word

STABILIZER_STEM = "a"


def _relator_index(presentation: Presentation, index: int, role: str = "i") -> int:
    if not 1 <= index <= len(presentation.relators):
        raise MoveError(
            f"Relator index {role}={index} out of range 1..{len(presentation.relators)}"
        )
    return index - 1


def _sign(sign: int) -> int:
    if sign not in (1, -1):
        raise MoveError(f"Sign must be +1 or -1, got {sign}")
    return sign


@dataclass(frozen=True)
class Invert:
    """r_i <- r_i^-1"""

    i: int

    op: ClassVar[str] = "invert"
    dihedral: ClassVar[bool] = True

    def apply(self, presentation: Presentation) -> Presentation:
        i = _relator_index(presentation, self.i)
        return presentation.replace(i, presentation.relators[i].inverse())

    def to_dict(self) -> dict[str, Any]:
        return {"op": self.op, "i": self.i}

    def weight(self) -> int:
        return 1


@dataclass(frozen=True)
class MultiplyRight:
    """r_i <- r_i r_j"""

    i: int
    j: int

    op: ClassVar[str] = "multiply"
    dihedral: ClassVar[bool] = True

    def apply(self, presentation: Presentation) -> Presentation:
        i = _relator_index(presentation, self.i, "i")
        j = _relator_index(presentation, self.j, "j")
        if i == j:
            raise MoveError(f"MultiplyRight needs i != j, got i = j = {self.i}")
        return presentation.replace(i, presentation.relators[i] * presentation.relators[j])

    def to_dict(self) -> dict[str, Any]:
        return {"op": self.op, "i": self.i, "j": self.j}

    def weight(self) -> int:
        return 1


@dataclass(frozen=True)
class Conjugate:
    """r_i <- u r_i u^-1"""

    i: int
    u: Word

    op: ClassVar[str] = "conjugate"
    dihedral: ClassVar[bool] = True

    def apply(self, presentation: Presentation) -> Presentation:
        i = _relator_index(presentation, self.i)
        u = self.u.over(presentation.generators)
        return presentation.replace(i, presentation.relators[i].conjugate(u))

    def to_dict(self) -> dict[str, Any]:
        return {"op": self.op, "i": self.i, "u": format_word(self.u)}

    def weight(self) -> int:
        return 1 + len(self.u)


@dataclass(frozen=True)
class Dihedral:
    """r_j <- r_j (u r_i^sign u^-1), a single move"""

    j: int
    i: int
    sign: int
    u: Word

    op: ClassVar[str] = "dihedral"
    dihedral: ClassVar[bool] = True

    def apply(self, presentation: Presentation) -> Presentation:
        j = _relator_index(presentation, self.j, "j")
        i = _relator_index(presentation, self.i, "i")
        if i == j:
            raise MoveError(f"Dihedral move needs i != j, got i = j = {self.i}")
        factor = presentation.relators[i]
        if _sign(self.sign) == -1:
            factor = factor.inverse()
        u = self.u.over(presentation.generators)
        return presentation.replace(j, presentation.relators[j] * factor.conjugate(u))

    def to_dict(self) -> dict[str, Any]:
        return {
            "op": self.op, "j": self.j, "i": self.i, "sign": self.sign, "u": format_word(self.u)
        }

    def weight(self) -> int:
        return 1 + len(self.u)


@dataclass(frozen=True)
class Stabilize:
    """Add `count` new generators together with themselves as relators"""

    count: int
    stem: str = field(default=STABILIZER_STEM)

    op: ClassVar[str] = "stabilize"
    dihedral: ClassVar[bool] = False

    def new_generators(self, alphabet: Alphabet) -> tuple[str, ...]:
        return alphabet.fresh(self.stem, self.count)

    def apply(self, presentation: Presentation) -> Presentation:
        if self.count < 1:
            raise MoveError(f"Stabilize needs a positive count, got {self.count}")
        new = self.new_generators(presentation.generators)
        alphabet = presentation.generators.extend(new)
        relators = tuple(r.over(alphabet) for r in presentation.relators)
        return Presentation(alphabet, relators + tuple(Word.generator(alphabet, g) for g in new))

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"op": self.op, "count": self.count}
        if self.stem != STABILIZER_STEM:
            data["stem"] = self.stem
        return data

    def weight(self) -> int:
        return 0


@dataclass(frozen=True)
class AddEmpty:
    """Append an empty relator"""

    op: ClassVar[str] = "add_empty"
    dihedral: ClassVar[bool] = False

    def apply(self, presentation: Presentation) -> Presentation:
        return presentation.with_relators(
            presentation.relators + (Word.empty(presentation.generators),)
        )

    def to_dict(self) -> dict[str, Any]:
        return {"op": self.op}

    def weight(self) -> int:
        return 0


@dataclass(frozen=True)
class RemoveEmpty:
    """Delete relator i, which must be empty"""

    i: int

    op: ClassVar[str] = "remove_empty"
    dihedral: ClassVar[bool] = False

    def apply(self, presentation: Presentation) -> Presentation:
        i = _relator_index(presentation, self.i)
        if presentation.relators[i]:
            raise MoveError(
                f"RemoveEmpty on non-empty relator {self.i}: {presentation.relators[i]}"
            )
        return presentation.with_relators(
            presentation.relators[:i] + presentation.relators[i + 1 :]
        )

    def to_dict(self) -> dict[str, Any]:
        return {"op": self.op, "i": self.i}

    def weight(self) -> int:
        return 0


Move = Union[Invert, MultiplyRight, Conjugate, Dihedral, Stabilize, AddEmpty, RemoveEmpty]


def apply_move(presentation: Presentation, move: Move) -> Presentation:
    """Apply a single move, returning the new presentation"""
    return move.apply(presentation)


def move_from_dict(data: Mapping[str, Any], alphabet: Alphabet) -> Move:
    """Inverse of `Move.to_dict`; conjugators are parsed over `alphabet`"""
    try:
        op = data["op"]
        if op == "invert":
            return Invert(int(data["i"]))
        if op == "multiply":
            return MultiplyRight(int(data["i"]), int(data["j"]))
        if op == "conjugate":
            return Conjugate(int(data["i"]), parse_word(data["u"], alphabet))
        if op == "dihedral":
            return Dihedral(
                int(data["j"]), int(data["i"]), int(data["sign"]), parse_word(data["u"], alphabet)
            )
        if op == "stabilize":
            return Stabilize(int(data["count"]), data.get("stem", STABILIZER_STEM))
        if op == "add_empty":
            return AddEmpty()
        if op == "remove_empty":
            return RemoveEmpty(int(data["i"]))
    except KeyError as e:
        raise MoveError(f"Move {dict(data)} is missing field {e}") from None
    raise MoveError(f"Unknown move op: {data.get('op')!r}")
