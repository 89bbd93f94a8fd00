"""Exact arithmetic in Q(q1, q3, u, ...) with factored coefficients."""

from .factored import (CoeffSum, DivisionByZero, FactoredScalar, FS_ONE, FS_ZERO, binomial_power,
                       expand_factored, refactor)
from .poly import ONE, ONE_MONO, ZERO, LaurentPoly, Monomial, mono, parse_poly, poly_arith
from .resonance import (ResonanceSingular, UnsupportedResonance, check_pair, resonance_factored,
                        resonance_map, resonance_normalize, specialize_poly, specialize_sum)
from .scalar import Scalar, as_scalar, parse_scalar, scalar_eq
from .series import (AT_INFINITY, AT_ZERO, MultiplePoleError, SeriesTrunc, SingularExpansion, ZFunction,
                     delta_residues, series_expand, zfunction_from_factored)

Q1 = LaurentPoly.var("q1")
Q3 = LaurentPoly.var("q3")
Q2 = LaurentPoly({Monomial({"q2": 1}): 1})

__all__ = [
    "AT_INFINITY", "AT_ZERO", "CoeffSum", "DivisionByZero", "FS_ONE", "FS_ZERO", "FactoredScalar",
    "LaurentPoly", "Monomial", "MultiplePoleError", "ONE", "ONE_MONO", "Q1", "Q2", "Q3",
    "ResonanceSingular", "Scalar", "SeriesTrunc", "SingularExpansion", "UnsupportedResonance",
    "ZERO", "ZFunction", "as_scalar", "binomial_power", "check_pair", "delta_residues",
    "expand_factored", "mono", "parse_poly", "parse_scalar", "poly_arith", "refactor",
    "resonance_factored", "resonance_map", "resonance_normalize", "scalar_eq", "series_expand",
    "specialize_poly", "specialize_sum", "zfunction_from_factored",
]
