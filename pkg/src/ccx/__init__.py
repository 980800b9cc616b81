"""Generalized cluster complexes, polygon models, and combinatorial
Coxeter-diagram invariants."""

__version__ = "0.1.0"

from .diagram import CoxeterDiagram, classify, parse_diagram  # noqa: F401
from .gcc import build_complex  # noqa: F401
from .invariants import compute_all  # noqa: F401
