"""Presentations, measures and named fixtures"""
from acbench.presentations.fixtures import FIXTURES, fixture, parse_fixture_spec
from acbench.presentations.presentation import (
    Presentation,
    PresentationMeasures,
    delete_letter,
    is_homologically_trivial,
    measures,
)

__all__ = [
    "FIXTURES",
    "Presentation",
    "PresentationMeasures",
    "delete_letter",
    "fixture",
    "is_homologically_trivial",
    "measures",
    "parse_fixture_spec",
]
