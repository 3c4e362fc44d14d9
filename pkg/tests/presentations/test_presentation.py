import pytest

from acbench.errors import AlphabetError, ParseError
from acbench.presentations.presentation import (
    Presentation,
    delete_letter,
    exponent_matrix,
    is_homologically_trivial,
    measures,
)
from acbench.words import Alphabet, Word, format_word


def test_parse_presentation():
    p = Presentation.parse("< a, b | a b a^-1 b^-1, a^2 >")
    assert p.generators == Alphabet(["a", "b"])
    assert [format_word(r) for r in p.relators] == ["a b a^-1 b^-1", "a^2"], p


def test_parse_presentation_without_relators():
    p = Presentation.parse("<a, b | >")
    assert len(p) == 0
    assert p.rank == 2


@pytest.mark.parametrize("text", ["a, b | a", "< a, b >"])
def test_parse_presentation_rejects_bad_syntax(text):
    with pytest.raises(ParseError):
        Presentation.parse(text)


def test_str_round_trips(s2):
    assert Presentation.parse(str(s2)) == s2, str(s2)


def test_relators_are_freely_reduced(ab):
    p = Presentation.from_strings(["a", "b"], ["a b b^-1", "b"])
    assert format_word(p.relators[0]) == "a"


def test_relator_over_wrong_alphabet_is_rejected(ab):
    other = Alphabet(["a", "c"])
    with pytest.raises(AlphabetError):
        Presentation(ab, (Word.generator(other, "c"),))


def test_measures_of_s2(s2):
    m = measures(s2)
    assert m.lam == 9, m
    assert m.deficiency == 1, m
    assert not m.balanced


def test_measures_of_trivial(trivial2):
    m = measures(trivial2)
    assert m.to_dict() == {"deficiency": 0, "lambda": 2, "balanced": True}, m


def test_replace_is_zero_based(trivial2):
    p = trivial2.replace(1, trivial2.word("a1 a2"))
    assert format_word(p.relators[1]) == "a1 a2", p
    assert p.relators[0] == trivial2.relators[0]


def test_rename_keeps_order(q1):
    p = q1.rename({"x": "u"})
    assert p.generators.names == ("u", "y"), p.generators
    assert format_word(p.relators[0]) == "u y u^-1 y^-1", p


def test_delete_letter_from_word(s2):
    word, count = delete_letter(s2.relators[0], "t")
    assert count == 4, count
    assert format_word(word) == "x^-1", word


def test_delete_letter_from_presentation(s2):
    p, counts = delete_letter(s2, "x")
    assert counts == (5,), counts
    assert p.generators.names == ("t",)
    assert not p.relators[0], p


def test_delete_letter_unsupported_type():
    with pytest.raises(TypeError):
        delete_letter("x t", "t")


def test_exponent_matrix(s2):
    assert exponent_matrix(s2).tolist() == [[-1, 0]], exponent_matrix(s2)


def test_homologically_trivial():
    assert is_homologically_trivial(Presentation.parse("< a, b | a b, b >"))
    assert not is_homologically_trivial(Presentation.parse("< a, b | a b, a b^-1 >"))
    assert not is_homologically_trivial(Presentation.parse("< x | x^2 >"))


def test_dict_round_trip(q2):
    assert Presentation.from_dict(q2.to_dict()) == q2
