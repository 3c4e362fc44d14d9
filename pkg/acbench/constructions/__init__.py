"""Doubling construction, the word families V_m and w_n, and indexed words"""
from acbench.constructions.doubling import (
    DoublingSpec,
    build_Pw,
    build_tilde_Pw,
    hat,
    hat_alphabet,
    hat_name,
    hat_presentation,
    retract_tilde,
)
from acbench.constructions.families import (
    DEFAULT_BIT_BUDGET,
    SEED_ALPHABET,
    delta_k,
    gen_V,
    gen_w,
    tower_fits,
)
from acbench.constructions.indexed import IndexedWord, dagger_lift, phi, shift_sigma

__all__ = [
    "DEFAULT_BIT_BUDGET",
    "DoublingSpec",
    "IndexedWord",
    "SEED_ALPHABET",
    "build_Pw",
    "build_tilde_Pw",
    "dagger_lift",
    "delta_k",
    "gen_V",
    "gen_w",
    "hat",
    "hat_alphabet",
    "hat_name",
    "hat_presentation",
    "phi",
    "retract_tilde",
    "shift_sigma",
    "tower_fits",
]
