"""Skein-relation oracle for the Homfly polynomial of braid closures."""

from .diagram import Crossing, PlanarDiagram, braid_closure_pd
from .oracle import SkeinEvaluator, skein_homfly, unlink

__all__ = [
    "Crossing",
    "PlanarDiagram",
    "braid_closure_pd",
    "SkeinEvaluator",
    "skein_homfly",
    "unlink",
]
