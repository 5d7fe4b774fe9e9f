"""Exact Lascoux coefficients and polynomials (types C, A, D) and SDP algebraic degrees."""

__version__ = "0.1.0"

from .algebra import QuasiPolynomial2, RationalPolynomial, poly_eval, poly_from_samples
from .asymptotics import DegreeLC, degree_lc_A, degree_lc_C, degree_lc_D
from .combinatorics import IndexSet, Partition, partition_of_index_set, pascal_minor, psi_via_minors
from .errors import ConsistencyError, InputError, LascouxError, ResourceError
from .identities import IdentityInstance, check_identity, random_admissible_point
from .polynomials import LascouxMemo, LascouxPolynomial, lp_polynomial, lp_value_A, lp_value_C, lp_value_D
from .schur_oracle import (OracleBudget, SchurExpansion, alpha_oracle, d_oracle, expand_pairsum_power,
                           psi_oracle, schur_eval)
from .sdp_degree import DeltaQuery, delta_polynomial, delta_value, lc_delta_s1
