"""The doubled presentations P_w and their redundant-generator form

From a deficiency-one seed < a_0, .., a_n | r_1, .., r_n > and a word w, P_w has the seed
relators, a hatted copy of them, and the two mixing relators
    a1_hat a0 a1_hat^-1 w^-1,    a1 a0_hat a1^-1 w_hat^-1
in that order. Hatted generator names toggle a `_hat` suffix, so hatting is an involution.
"""
from dataclasses import dataclass
from functools import singledispatch
from typing import Any

from acbench.errors import AlphabetError
from acbench.presentations.presentation import Presentation, measures
from acbench.utils import get_logger
from acbench.words import Alphabet, Word

log = get_logger(__name__)

HAT_SUFFIX = "_hat"
STABLE_STEM = "s"


def hat_name(name: str) -> str:
    if name.endswith(HAT_SUFFIX):
        return name[: -len(HAT_SUFFIX)]
    return name + HAT_SUFFIX


def hat_alphabet(alphabet: Alphabet) -> Alphabet:
    return Alphabet(hat_name(g) for g in alphabet)


@singledispatch
def hat(obj: Any) -> Any:
    """Swap every generator with its hatted copy.

    A word over an alphabet that is closed under hatting (such as the alphabet of P_w) stays
    over that alphabet; otherwise it moves to the hatted alphabet.
    """
    raise TypeError(f"Cannot hat {type(obj).__name__}")


@hat.register
def _(word: Word) -> Word:
    alphabet = word.alphabet
    hatted = hat_alphabet(alphabet)
    if set(hatted.names) != set(alphabet.names):
        return Word._reduced(hatted, word.codes)
    table = {i + 1: alphabet.code(hat_name(g)) for i, g in enumerate(alphabet)}
    return Word._reduced(alphabet, tuple(table[c] if c > 0 else -table[-c] for c in word.codes))


@hat.register
def hat_presentation(presentation: Presentation) -> Presentation:
    alphabet = presentation.generators
    hatted = hat_alphabet(alphabet)
    target = alphabet if set(hatted.names) == set(alphabet.names) else hatted
    return Presentation(target, tuple(hat(r).over(target) for r in presentation.relators))


@dataclass(frozen=True)
class DoublingSpec:
    """Seed presentation with distinguished generators a_0, a_1 and a target word w"""

    seed: Presentation
    a0: str
    a1: str
    w: Word

    def __post_init__(self) -> None:
        generators = self.seed.generators
        for role, name in (("a0", self.a0), ("a1", self.a1)):
            if name not in generators:
                raise AlphabetError(f"{role}={name!r} is not a generator of the seed {generators}")
        if self.a0 == self.a1:
            raise AlphabetError(f"a0 and a1 must be distinct generators, got {self.a0!r} twice")
        if self.w.alphabet != generators:
            raise AlphabetError(f"w is over {self.w.alphabet}, seed is over {generators}")
        clash = set(generators.names) & set(hat_alphabet(generators).names)
        if clash:
            raise AlphabetError(f"Seed generators clash with their hatted copies: {sorted(clash)}")
        deficiency = measures(self.seed).deficiency
        if deficiency != 1:
            log.warning(f"Seed has deficiency {deficiency}, the doubled presentation is unbalanced")

    @property
    def n(self) -> int:
        return len(self.seed.relators)

    @property
    def alphabet(self) -> Alphabet:
        """Generators of P_w: the seed generators followed by their hatted copies"""
        generators = self.seed.generators
        return generators.extend(hat_alphabet(generators))

    def stable_letters(self) -> tuple[str, str]:
        """Fresh names for t and t_hat"""
        alphabet = self.alphabet
        i = 1
        while True:
            (t,) = alphabet.fresh(STABLE_STEM, 1, start=i)
            if hat_name(t) not in alphabet:
                return t, hat_name(t)
            i = int(t[len(STABLE_STEM) :]) + 1

    def tilde_alphabet(self) -> Alphabet:
        return self.alphabet.extend(self.stable_letters())


def _halves(spec: DoublingSpec, alphabet: Alphabet) -> tuple[tuple[Word, ...], tuple[Word, ...]]:
    relators = tuple(r.over(alphabet) for r in spec.seed.relators)
    return relators, tuple(hat(r).over(alphabet) for r in spec.seed.relators)


def build_Pw(spec: DoublingSpec) -> Presentation:
    """< A, A_hat | R, R_hat, a1_hat a0 a1_hat^-1 w^-1, a1 a0_hat a1^-1 w_hat^-1 >"""
    alphabet = spec.alphabet
    relators, hatted = _halves(spec, alphabet)
    a0, a1 = Word.generator(alphabet, spec.a0), Word.generator(alphabet, spec.a1)
    w = spec.w.over(alphabet)
    rho = a0.conjugate(hat(a1)) * w.inverse()
    rho_hat = hat(a0).conjugate(a1) * hat(w).inverse()
    return Presentation(alphabet, relators + hatted + (rho, rho_hat))


def build_tilde_Pw(spec: DoublingSpec) -> Presentation:
    """< A, A_hat, t, t_hat | R, R_hat, t a0 t^-1 w^-1, t_hat a0_hat t_hat^-1 w_hat^-1,
    t a1_hat^-1, t_hat a1^-1 >"""
    alphabet = spec.tilde_alphabet()
    t_name, t_hat_name = spec.stable_letters()
    relators, hatted = _halves(spec, alphabet)
    t, t_hat = Word.generator(alphabet, t_name), Word.generator(alphabet, t_hat_name)
    a0, a1 = Word.generator(alphabet, spec.a0), Word.generator(alphabet, spec.a1)
    a0_hat = Word.generator(alphabet, hat_name(spec.a0))
    a1_hat = Word.generator(alphabet, hat_name(spec.a1))
    w = spec.w.over(alphabet)
    w_hat = hat(spec.w).over(alphabet)
    mixing = (
        a0.conjugate(t) * w.inverse(),
        a0_hat.conjugate(t_hat) * w_hat.inverse(),
        t * a1_hat.inverse(),
        t_hat * a1.inverse(),
    )
    return Presentation(alphabet, relators + hatted + mixing)


def retract_tilde(spec: DoublingSpec, word: Word) -> Word:
    """Retract a word over the generators of the tilde presentation onto those of P_w by
    t -> a1_hat, t_hat -> a1"""
    alphabet = spec.alphabet
    t_name, t_hat_name = spec.stable_letters()
    images = {
        t_name: Word.generator(alphabet, hat_name(spec.a1)),
        t_hat_name: Word.generator(alphabet, spec.a1),
    }
    return word.substitute(images, alphabet)
