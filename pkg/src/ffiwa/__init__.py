"""Exact computations for Drinfeld modules over F_q(T) along the constant Z_p-tower."""

from .errors import FfiwaError
from .field import GF, GFq, FiniteField, FieldElement, embedding
from .poly import Poly, factor, roots, resultant
from .skew import SkewPoly
from .drinfeld import DrinfeldModule, reduce, torsion_space, frobenius_data, bad_reduction_set, selmer_place_set
from .tower import Place, splitting_in_level, delta_sequence, totally_inert_level
from .zeta import LPolynomial, class_tower, l_from_point_counts, count_plane_curve, s_class_upper_bound
from .iwasawa import IwasawaElement, ElementaryModule, mu_lambda, growth, fit_invariants
from .duality import FiniteModule, CofinModule, dual, torsion_vs_quotient, finiteness_check, lambda_bound

__version__ = "0.1.0"
