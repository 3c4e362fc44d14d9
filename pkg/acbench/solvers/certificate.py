"""Area certificates: w as a free product of conjugates of relators

A certificate lists steps (u, j, e) with w freely equal to the product of u r_j^e u^-1 in
order. The product is checked whenever a certificate is built.
"""
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Any, NamedTuple

from acbench.constructions.doubling import hat
from acbench.constructions.families import gen_w
from acbench.errors import CertificateError
from acbench.presentations.fixtures import seed_s
from acbench.utils import get_logger
from acbench.words import Alphabet, Word, format_word, parse_word

log = get_logger(__name__)


class CertificateStep(NamedTuple):
    conjugator: Word
    relator: int
    sign: int


Steps = tuple[CertificateStep, ...]


def multiply_out(
    steps: Iterable[CertificateStep], relators: Sequence[Word], alphabet: Alphabet
) -> Word:
    word = Word.empty(alphabet)
    for n, step in enumerate(steps, start=1):
        if not 1 <= step.relator <= len(relators):
            raise CertificateError(f"Step {n} uses relator {step.relator} of {len(relators)}")
        if step.sign not in (1, -1):
            raise CertificateError(f"Step {n} has sign {step.sign}")
        r = relators[step.relator - 1]
        word = word * (r if step.sign == 1 else r.inverse()).conjugate(step.conjugator)
    return word


@dataclass(frozen=True)
class AreaCertificate:
    target: Word
    steps: Steps
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(CertificateStep(*s) for s in self.steps))
        object.__setattr__(self, "relators", tuple(self.relators))
        product = multiply_out(self.steps, self.relators, self.target.alphabet)
        if product != self.target:
            raise CertificateError(
                f"Certificate product {format_word(product)} does not equal the target "
                f"{format_word(self.target)}"
            )

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def alphabet(self) -> Alphabet:
        return self.target.alphabet

    def to_dict(self) -> dict[str, Any]:
        return {
            "generators": list(self.alphabet.names),
            "relators": [format_word(r) for r in self.relators],
            "target": format_word(self.target),
            "steps": [
                {"u": format_word(s.conjugator), "relator": s.relator, "sign": s.sign}
                for s in self.steps
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "AreaCertificate":
        alphabet = Alphabet(data["generators"])
        steps = tuple(
            CertificateStep(parse_word(s["u"], alphabet), int(s["relator"]), int(s["sign"]))
            for s in data["steps"]
        )
        return cls(
            target=parse_word(data["target"], alphabet),
            steps=steps,
            relators=tuple(parse_word(r, alphabet) for r in data["relators"]),
        )

    def over(self, alphabet: Alphabet, offset: int = 0) -> Steps:
        """Steps re-embedded in a larger alphabet with relator indices shifted by `offset`"""
        return tuple(
            CertificateStep(s.conjugator.over(alphabet), s.relator + offset, s.sign)
            for s in self.steps
        )


def hat_certificate(certificate: AreaCertificate) -> AreaCertificate:
    """The same certificate for the hatted target over the hatted relators"""
    return AreaCertificate(
        target=hat(certificate.target),
        steps=tuple(
            CertificateStep(hat(s.conjugator), s.relator, s.sign) for s in certificate.steps
        ),
        relators=tuple(hat(r) for r in certificate.relators),
    )


# constructive certificates for w_n over S_k


def _conjugated(steps: Steps, u: Word) -> Steps:
    return tuple(CertificateStep(u * s.conjugator, s.relator, s.sign) for s in steps)


def _inverted(steps: Steps) -> Steps:
    return tuple(CertificateStep(s.conjugator, s.relator, -s.sign) for s in reversed(steps))


def certify_wn(n: int, k: int = 2) -> AreaCertificate:
    """Certificate for w_n over S_k built from the proof that V_m = x^E_m, E_0 = 1 and
    E_m = k^E_(m-1).

    With y = t x t^-1, Q_E proves y^E x y^-E x^(-k^E) and P_m proves V_m x^-E_m:
        Q_1 = r,  Q_E = y Q_(E-1) y^-1 . prod_i x^(ik) r x^(-ik)
        P_0 = 1,  P_m = Z . Y Z^-1 Y^-1 . Q_E with Z = t P_(m-1) t^-1, Y = y^E x y^-E
    and w_n = x V_m x^-1 V_m^-1 is x P_m x^-1 . P_m^-1.
    """
    seed = seed_s(k)
    alphabet = seed.generators
    x, t = Word.generator(alphabet, "x"), Word.generator(alphabet, "t")
    y = x.conjugate(t)
    m = n.bit_length() - 1
    r = (CertificateStep(Word.empty(alphabet), 1, 1),)

    def staircase(exponent: int) -> Steps:
        steps: Steps = r
        for e in range(2, exponent + 1):
            block = tuple(CertificateStep(x ** (i * k), 1, 1) for i in range(k ** (e - 1)))
            steps = _conjugated(steps, y) + block
        return steps

    proof: Steps = ()
    exponent = 1
    for _ in range(m):
        z = _conjugated(proof, t)
        big_y = x.conjugate(y**exponent)
        proof = z + _conjugated(_inverted(z), big_y) + staircase(exponent)
        exponent = k**exponent
    log.info(f"Constructed a {2 * len(proof)}-step certificate for w_{n} over S_{k}")
    steps = _conjugated(proof, x) + _inverted(proof)
    return AreaCertificate(gen_w(n, alphabet), steps, seed.relators)
