import pytest

from acbench.constructions.doubling import hat
from acbench.constructions.families import gen_w
from acbench.errors import CertificateError
from acbench.solvers.certificate import (
    AreaCertificate,
    CertificateStep,
    certify_wn,
    hat_certificate,
    multiply_out,
)
from acbench.words import Alphabet, Word


def test_certify_w2(s2):
    c = certify_wn(2)
    assert len(c) == 2, len(c)
    assert c.target == gen_w(2)
    assert c.relators == s2.relators


@pytest.mark.parametrize("n, steps", [(1, 0), (2, 2), (3, 2), (4, 10), (8, 50)])
def test_certify_wn_sizes(n, steps):
    assert len(certify_wn(n)) == steps, len(certify_wn(n))


def test_certify_wn_other_k():
    c = certify_wn(4, k=3)
    assert c.target == gen_w(4, c.alphabet)
    assert len(c) == 30, len(c)


def test_bad_certificate_is_rejected(s2):
    x = Word.generator(s2.generators, "x")
    with pytest.raises(CertificateError):
        AreaCertificate(x, (CertificateStep(Word.empty(s2.generators), 1, 1),), s2.relators)


def test_multiply_out_checks_steps(s2):
    empty = Word.empty(s2.generators)
    with pytest.raises(CertificateError):
        multiply_out([CertificateStep(empty, 2, 1)], s2.relators, s2.generators)
    with pytest.raises(CertificateError):
        multiply_out([CertificateStep(empty, 1, 0)], s2.relators, s2.generators)


def test_certificate_dict_round_trip():
    c = certify_wn(4)
    data = c.to_dict()
    assert data["generators"] == ["x", "t"]
    assert len(data["steps"]) == 10
    assert AreaCertificate.from_dict(data) == c


def test_hat_certificate():
    c = hat_certificate(certify_wn(2))
    assert c.target == hat(gen_w(2))
    assert c.alphabet.names == ("x_hat", "t_hat"), c.alphabet


def test_certificate_over_larger_alphabet():
    c = certify_wn(2)
    bigger = Alphabet(["x", "t", "x_hat", "t_hat"])
    steps = c.over(bigger, offset=2)
    assert [s.relator for s in steps] == [3, 3]
    assert all(s.conjugator.alphabet == bigger for s in steps)
