import random

import pytest

from acbench.moves.moves import Conjugate, Invert
from acbench.presentations.presentation import Presentation
from acbench.search.canonical import canonical_key, key_of, normalizing_moves, trivial_key
from acbench.words import Word, cyclic_normal_codes, parse_word


def test_trivial_key(trivial2):
    assert trivial_key(2) == ((1,), (2,))
    assert canonical_key(trivial2) == trivial_key(2)


def test_key_ignores_cheap_moves():
    p = Presentation.parse("< a, b | a b^2, b a^-1 >")
    q = Presentation.parse("< a, b | b^-1 a, b a b >")
    assert canonical_key(p) == canonical_key(q)


def test_key_of_sorts():
    assert key_of(((2,), (1, 2))) == ((1, 2), (2,))


@pytest.mark.parametrize(
    "text", ["a b", "b^2 a b^-1", "a^-1", "b a^-1 b^-1", "a^-1 b^-1 a b a^2 b^-1", "b^-1 a^-2"]
)
def test_normalizing_moves_reach_the_normal_form(ab, text):
    word = parse_word(text, ab)
    p = Presentation(ab, (word,))
    for move in normalizing_moves(word, 1):
        p = move.apply(p)
    assert p.relators[0].codes == cyclic_normal_codes(word.codes), p


def test_normalizing_moves_shapes(ab):
    assert normalizing_moves(parse_word("a b", ab), 1) == []
    assert normalizing_moves(parse_word("a^-1", ab), 2) == [Invert(2)]
    moves = normalizing_moves(parse_word("b a", ab), 1)
    assert moves == [Conjugate(1, Word.generator(ab, "b", -1))], moves


def test_normalizing_moves_of_the_empty_word(ab):
    assert normalizing_moves(Word.empty(ab), 1) == []


def test_key_is_invariant_under_invert_and_conjugate(ab):
    rng = random.Random(31)
    letters = [1, -1, 2, -2]
    for _ in range(300):
        relators = tuple(
            Word(ab, [rng.choice(letters) for _ in range(rng.randint(1, 8))]) for _ in range(2)
        )
        p = Presentation(ab, relators)
        q = p
        for _ in range(rng.randint(1, 6)):
            i = rng.randint(1, 2)
            if rng.random() < 0.5:
                q = Invert(i).apply(q)
            else:
                u = Word(ab, [rng.choice(letters) for _ in range(rng.randint(1, 3))])
                q = Conjugate(i, u).apply(q)
        assert canonical_key(q) == canonical_key(p), (p, q)
