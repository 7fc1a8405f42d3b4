"""Blanchfield pairings, Alexander-module presentations and signatures of
colored links, computed exactly from generalized Seifert matrices."""

from .clink import (CComplexData, Clasp, SeifertFamily, Surface, clasp_graph, h1_rank,
                    is_totally_connected, pi1_presentation, tree_cycle_basis, validate_family)
from .fracfield import LambdaSElement, RatFunc, in_lambda_s, qmod_equal
from .pairing import (PresentedPairing, bl_value, build_H, classical_knot_value, is_torsion,
                      knot_equivalence_check, knot_H)
from .polyring import LaurentPoly, divide_exact, epsilon_product_identity, gcd, parse_poly
from .spectral import SigNullity, TorusPoint, signature_nullity, sweep

__all__ = [
    "CComplexData", "Clasp", "LambdaSElement", "LaurentPoly", "PresentedPairing", "RatFunc",
    "SeifertFamily", "SigNullity", "Surface", "TorusPoint", "bl_value", "build_H",
    "clasp_graph", "classical_knot_value", "divide_exact", "epsilon_product_identity", "gcd",
    "h1_rank", "in_lambda_s", "is_torsion", "is_totally_connected", "knot_H",
    "knot_equivalence_check", "parse_poly", "pi1_presentation", "qmod_equal",
    "signature_nullity", "sweep", "tree_cycle_basis", "validate_family",
]
