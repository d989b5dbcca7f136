"""Parametrized Khovanov complexes over Z[s, t]."""

from .ring import LaurentPoly, OddExponent, PolyST, laurent_substitute_q_for_A, poly_mul, specialize
from .diagram import (CrossingData, IllegalSite, LinkDiagram, MoveRequest, MoveSite, ParseError,
                      SiteNotFound, ValidationError, apply_move, parse_pd, writhe)
from .state import EnhancedState, enumerate_enhanced, gradings, resolve
from .complex import build_complex, canonical_sign, check_d2, differential_of
from .homology import homology_at, smith_normal_form, total_rank
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CrossingData", "EnhancedState", "IllegalSite", "LaurentPoly", "LinkDiagram", "MoveRequest",
    "MoveSite", "OddExponent", "ParseError", "PolyST", "SiteNotFound", "ValidationError", "apply_move",
    "build_complex", "canonical_sign", "check_d2", "differential_of", "enumerate_enhanced", "gradings",
    "homology_at", "laurent_substitute_q_for_A", "parse_pd", "poly_mul", "resolve", "smith_normal_form",
    "specialize", "total_rank", "writhe",
]
