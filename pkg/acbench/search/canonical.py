"""Canonical keys of presentations up to the cheap moves

The key is the sorted tuple of relator cyclic normal forms, so it does not change under
relator permutation, inversion, conjugation or cyclic rotation.
"""
from typing import Optional

from acbench.moves.moves import Conjugate, Invert, Move
from acbench.presentations.presentation import Presentation
from acbench.words import Codes, Word, cyclic_core, cyclic_normal_codes, invert_codes

CanonicalKey = tuple[Codes, ...]


def canonical_key(presentation: Presentation) -> CanonicalKey:
    return tuple(sorted(cyclic_normal_codes(r.codes) for r in presentation.relators))


def key_of(relators: tuple[Codes, ...]) -> CanonicalKey:
    """Key of relators that are already in cyclic normal form"""
    return tuple(sorted(relators))


def trivial_key(rank: int) -> CanonicalKey:
    return tuple((c,) for c in range(1, rank + 1))


def _rotation_offset(core: Codes, target: Codes) -> Optional[int]:
    if core == target:
        return 0
    for offset in range(1, len(core)):
        if core[offset:] + core[:offset] == target:
            return offset
    return None


def normalizing_moves(word: Word, index: int) -> list[Move]:
    """Moves turning relator `index` (1-based), currently `word`, into its cyclic normal
    form: an optional Invert followed by at most one Conjugate"""
    target = cyclic_normal_codes(word.codes)
    conjugator, core = cyclic_core(word.codes)
    moves: list[Move] = []
    offset = _rotation_offset(core, target)
    if offset is None:
        moves.append(Invert(index))
        conjugator, core = cyclic_core(invert_codes(word.codes))
        offset = _rotation_offset(core, target)
        assert offset is not None
    # r = g c g^-1 with c = p q; (g p)^-1 r (g p) = q p
    u = Word(word.alphabet, conjugator + core[:offset]).inverse()
    if u:
        moves.append(Conjugate(index, u))
    return moves
