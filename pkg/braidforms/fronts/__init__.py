"""Legendrian front diagrams for braidforms.

This module provides the front event-word format, orientation and
Thurston-Bennequin bookkeeping, oriented-ruling enumeration, the
permutation-braid closure constructors and SVG rendering.
"""

from .construct import (
    closure_pos_braid,
    closure_two_perms,
    mirror,
    represented_word_pos_braid,
    represented_word_two_perms,
    single_eye,
    t_tangle_subword,
)
from .models import (
    B,
    D,
    EventKind,
    FrontDiagram,
    FrontEvent,
    FrontStats,
    Ruling,
    RulingSet,
    X,
)
from .parser import FrontParser, parse_front, parse_front_text
from .ruling import analyze, enumerate_rulings, ruling_polynomial, validate_and_orient
from .svg import render_svg, write_svg

__all__ = [
    # Main API
    "parse_front",
    "parse_front_text",
    "FrontParser",
    "validate_and_orient",
    "ruling_polynomial",
    "enumerate_rulings",
    "analyze",
    # Constructors
    "t_tangle_subword",
    "mirror",
    "closure_two_perms",
    "closure_pos_braid",
    "single_eye",
    "represented_word_two_perms",
    "represented_word_pos_braid",
    # Rendering
    "render_svg",
    "write_svg",
    # Models
    "FrontDiagram",
    "FrontEvent",
    "EventKind",
    "FrontStats",
    "Ruling",
    "RulingSet",
    "B",
    "X",
    "D",
]
