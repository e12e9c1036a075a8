"""Quantum divided power algebras, q-differential operators and their Hopf structures."""

from .galg import AlgebraKind, Element, generator, monomial
from .qarith import ScalarField, char_q, qbinom, qfact, qint

__version__ = "0.1.0"

__all__ = ["AlgebraKind", "Element", "ScalarField", "char_q", "generator", "monomial", "qbinom", "qfact",
           "qint", "__version__"]
