"""cyarith: exact-arithmetic verification toolkit.

Eta-product q-expansions, CM Hecke eigenvalue systems, point counts over
finite fields, tensor-product L-factors, Euler-characteristic calculus
for iterated double covers, and intersection-lattice combinatorics for
hyperplane arrangements.  Everything is exact integer or rational
arithmetic; every headline identity is runnable via the `cyarith` CLI.
"""

from .arith import IntPoly, LegendreTable, echelon, is_prime, legendre
from .arrangement import (
    Arrangement,
    Hyperplane,
    Stratum,
    classify,
    crepant_resolvable,
    good_reduction_report,
    intersection_poset,
    resolution_schedule,
)
from .cmforms import (
    EISENSTEIN,
    GAUSSIAN,
    CMField,
    CMForm,
    CMFormFamily,
    cm_euler_factor,
    invariant_tensor_dimension,
    normalize_prime_element,
    power_trace,
    quotient_frobenius_trace,
)
from .euler import KummerData, borcea_voisin_table, double_cover_euler, iterated_elliptic_euler
from .pointcount import (
    EllipticCurveModel,
    ahlgren_count_bruteforce,
    ahlgren_count_fast,
    elliptic_ap,
    verify_ahlgren,
)
from .qseries import EtaProduct, HeckeCoefficientSpec, QSeries, eta_product_expand, hecke_expand, series_match
from .tensor import LocalRep, tensor_euler_factor, tensor_trace, verify_g4xg3, verify_power_factorization

__version__ = "0.1.0"
