"""Local L-factors of tensor products of 2-dimensional Frobenius data,
and the product-side factorizations they are checked against.

Euler factors are compared as full polynomials, not just first traces:
at inert primes every odd trace vanishes, so a trace-only comparison
would be vacuous exactly where the sign conventions matter most.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arith import IntPoly
from .cmforms import CMField, CMForm, cm_euler_factor, power_trace

MAX_DEFAULT_FACTORS = 4  # degree 16; larger tensors only behind allow_large


@dataclass(frozen=True)
class LocalRep:
    """Degree-2 Frobenius datum of a weight-k CM form at a good prime p.

    tr(Frob^m) is integral in every case: s_{(k-1)m} at split p; at
    inert p it vanishes for odd m and equals 2 (+-1)^(m/2) p^(m(k-1)/2)
    for even m (sign + for odd k, - for even k, from the eigenvalue
    pairs +-p^((k-1)/2) resp. +-i p^((k-1)/2)).
    """

    p: int
    weight: int
    split: bool
    ap: int | None
    field: CMField

    def __post_init__(self):
        if self.split and self.ap is None:
            raise ValueError("split local datum needs the weight-2 trace a_p")

    @classmethod
    def from_form(cls, form: CMForm, p: int) -> "LocalRep":
        fam = form.family
        if p in fam.bad_primes or fam.field.is_ramified(p):
            raise ValueError(f"p = {p} is not a good prime for the {fam.name} family")
        split = fam.field.is_split(p)
        return cls(p, form.weight, split, fam.curve_ap(p) if split else None, fam.field)

    def trace(self, m: int) -> int:
        if m == 0:
            return 2
        if self.split:
            return power_trace(self.ap, self.p, (self.weight - 1) * m)
        if m % 2:
            return 0
        sign = 1 if self.weight % 2 else (-1) ** (m // 2)
        return 2 * sign * self.p ** ((self.weight - 1) * m // 2)

    def det(self) -> int:
        pk = self.p ** (self.weight - 1)
        if self.split:
            return pk
        return -pk if self.weight % 2 else pk

    def euler_factor(self) -> IntPoly:
        return IntPoly((1, -self.trace(1), self.det()))


def tensor_trace(reps, m: int) -> int:
    """tr(Frob^m) on the tensor product: the product of the factor traces."""
    out = 1
    for rep in reps:
        out *= rep.trace(m)
    return out


def char_poly_from_power_sums(sums: list[int], degree: int) -> IntPoly:
    """det(1 - Frob T) from power sums tr(Frob^m), m = 1..degree.

    Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
    Every e_k must come out integral; a failed division means the trace
    data was inconsistent.
    """
    if len(sums) < degree:
        raise ValueError("need power sums up to the degree")
    e = [1] + [0] * degree
    for k in range(1, degree + 1):
        acc = 0
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * sums[i - 1]
        if acc % k:
            raise ValueError(f"non-integer Newton step at k = {k}: inconsistent traces")
        e[k] = acc // k
    return IntPoly(tuple((-1) ** k * e[k] for k in range(degree + 1)))


def power_sums_from_poly(poly: IntPoly, upto: int) -> list[int]:
    """Inverse direction of Newton's identities, for round-trip checks."""
    degree = poly.degree
    e = [(-1) ** k * poly.coeff(k) for k in range(degree + 1)]
    sums: list[int] = []
    for k in range(1, upto + 1):
        acc = 0
        for i in range(1, min(k, degree) + 1):
            acc += (-1) ** (i - 1) * e[i] * (sums[k - i - 1] if k - i >= 1 else k)
        sums.append(acc)
    return sums


def tensor_euler_factor(reps, allow_large: bool = False) -> IntPoly:
    """Exact degree-2^n local factor of an n-fold tensor product."""
    reps = list(reps)
    if not reps:
        return IntPoly.one()
    if len(reps) > MAX_DEFAULT_FACTORS and not allow_large:
        raise ValueError(
            f"{len(reps)} factors gives degree {2 ** len(reps)}; pass allow_large=True"
        )
    degree = 2 ** len(reps)
    sums = [tensor_trace(reps, m) for m in range(1, degree + 1)]
    return char_poly_from_power_sums(sums, degree)


# ---------------------------------------------------------------------------
# The binomial factorization of the n-th tensor power of a weight-2 form


def tensor_power_lhs(curve_ap: int | None, p: int, field: CMField, n: int) -> IntPoly:
    rep = LocalRep(p, 2, field.is_split(p), curve_ap if field.is_split(p) else None, field)
    return tensor_euler_factor([rep] * n, allow_large=True)


def power_factorization_rhs(curve_ap: int | None, p: int, field: CMField, n: int) -> IntPoly:
    """prod_j L_p(weight n-2j+1, shift j)^C(n,j), with the two Dirichlet
    factors (1 - p^(n/2) T)^(C(n,n/2)/2) (1 - chi(p) p^(n/2) T)^(C(n,n/2)/2)
    closing the middle when n is even."""
    ap = curve_ap if field.is_split(p) else None
    out = IntPoly.one()
    for j in range((n - 1) // 2 + 1):
        factor = cm_euler_factor(n - 2 * j + 1, field, p, ap)
        out = out * factor.scale_arg(p**j) ** comb(n, j)
    if n % 2 == 0:
        middle = comb(n, n // 2)
        if middle % 2:
            raise AssertionError(f"odd middle multiplicity C({n},{n // 2}) = {middle}")
        half = middle // 2
        pn2 = p ** (n // 2)
        out = out * IntPoly((1, -pn2)) ** half * IntPoly((1, -field.chi(p) * pn2)) ** half
    return out


@dataclass(frozen=True)
class FactorizationCheck:
    p: int
    n: int
    lhs: IntPoly
    rhs: IntPoly
    trace_identity: bool  # split primes: a_p^n = sum_j C(n,j) p^j s_{n-2j} (+ middle)
    equal: bool


def verify_power_factorization(curve_ap: int | None, p: int, field: CMField, n: int) -> FactorizationCheck:
    """Polynomial identity between the n-th tensor power and its product side."""
    lhs = tensor_power_lhs(curve_ap, p, field, n)
    rhs = power_factorization_rhs(curve_ap, p, field, n)
    trace_ok = True
    if field.is_split(p):
        acc = sum(comb(n, j) * p**j * power_trace(curve_ap, p, n - 2 * j) for j in range((n - 1) // 2 + 1))
        if n % 2 == 0:
            acc += comb(n, n // 2) * p ** (n // 2)
        trace_ok = acc == curve_ap**n
    return FactorizationCheck(p, n, lhs, rhs, trace_ok, lhs == rhs)


# ---------------------------------------------------------------------------
# weight-4 x weight-3 = weight-6 + twisted weight-2 (the fivefold identity)


@dataclass(frozen=True)
class TensorSplitRow:
    p: int
    trace_lhs: int
    trace_rhs: int
    trace_equal: bool
    lhs: IntPoly
    rhs: IntPoly
    poly_equal: bool

    @property
    def equal(self) -> bool:
        return self.trace_equal and self.poly_equal


def g4xg3_row(family, p: int) -> TensorSplitRow:
    """At one good odd prime: a_p(w4) a_p(w3) = a_p(w6) + p^2 a_p(w2) and the
    full degree-4 factor identity L(w4 (x) w3) = L(w6) L(w2, shift 2)."""
    w2, w3, w4, w6 = (family.form(k) for k in (2, 3, 4, 6))
    lhs = tensor_euler_factor([LocalRep.from_form(w4, p), LocalRep.from_form(w3, p)])
    rhs = w6.euler_factor(p) * w2.euler_factor(p).scale_arg(p**2)
    t_lhs = w4.ap(p) * w3.ap(p)
    t_rhs = w6.ap(p) + p**2 * w2.ap(p)
    return TensorSplitRow(p, t_lhs, t_rhs, t_lhs == t_rhs, lhs, rhs, lhs == rhs)


def verify_g4xg3(pmax: int, family=None) -> list[TensorSplitRow]:
    """Run g4xg3_row over every good odd prime <= pmax (bad primes skipped:
    equality of L-series is only claimed up to finitely many factors)."""
    from .registry import GAUSSIAN_FAMILY

    fam = family if family is not None else GAUSSIAN_FAMILY
    from .arith import odd_primes_up_to

    return [g4xg3_row(fam, p) for p in odd_primes_up_to(pmax) if p not in fam.bad_primes]
