"""CM eigenvalue systems for the two reference fields Q(i) and Q(sqrt(-3)):
power-of-Grossencharakter trace recurrences, split/inert Euler factors,
normalized prime elements, invariant tensor dimensions, and the Frobenius
traces of the cyclic-quotient constructions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .arith import IntPoly, is_prime
from .pointcount import EllipticCurveModel, elliptic_ap
from .qseries import DEFAULT_PRECISION, HeckeCoefficientSpec, QSeries, hecke_expand


@dataclass(frozen=True)
class CMField:
    """Imaginary quadratic field tag: d = 4 for Q(i), d = 3 for Q(sqrt(-3)).

    chi is the attached quadratic character chi_{-d}; for odd primes not
    dividing d it agrees with the Legendre symbol (-d/p).
    """

    d: int

    def __post_init__(self):
        if self.d not in (3, 4):
            raise ValueError("supported field tags: d = 3 (zeta3) or d = 4 (i)")

    @property
    def name(self) -> str:
        return "i" if self.d == 4 else "zeta3"

    def chi(self, n: int) -> int:
        if self.d == 4:
            r = n % 4
            return 0 if r % 2 == 0 else (1 if r == 1 else -1)
        r = n % 3
        return 0 if r == 0 else (1 if r == 1 else -1)

    def is_split(self, p: int) -> bool:
        return self.chi(p) == 1

    def is_inert(self, p: int) -> bool:
        return self.chi(p) == -1

    def is_ramified(self, p: int) -> bool:
        return self.chi(p) == 0


GAUSSIAN = CMField(4)
EISENSTEIN = CMField(3)


def power_trace(a: int, p: int, m: int) -> int:
    """s_m = alpha^m + conj(alpha)^m for alpha + conj = a, alpha*conj = p.

    Lucas recurrence s_m = a s_{m-1} - p s_{m-2} with s_0 = 2, s_1 = a.
    For a split prime with weight-2 trace a this is the prime coefficient
    of the weight-(m+1) form: s_2 = a^2 - 2p, s_3 = a^3 - 3pa, ...
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 2
    prev, cur = 2, a
    for _ in range(m - 1):
        prev, cur = cur, a * cur - p * prev
    return cur


def cm_euler_factor(weight: int, field: CMField, p: int, ap: int | None = None) -> IntPoly:
    """Degree-2 local factor of the weight-k CM form at a good prime.

    split p:            1 - s_{k-1} T + p^(k-1) T^2   (needs the curve trace a_p)
    inert p, k odd:     1 - p^(k-1) T^2               (eigenvalues +-p^((k-1)/2))
    inert p, k even:    1 + p^(k-1) T^2               (eigenvalues +-i p^((k-1)/2))
    """
    if weight < 2:
        raise ValueError("weight must be >= 2")
    if field.is_ramified(p):
        raise ValueError(f"p = {p} is ramified in the CM field; no good Euler factor")
    pk = p ** (weight - 1)
    if field.is_split(p):
        if ap is None:
            raise ValueError("split prime needs the weight-2 trace a_p")
        return IntPoly((1, -power_trace(ap, p, weight - 1), pk))
    return IntPoly((1, 0, -pk if weight % 2 else pk))


# ---------------------------------------------------------------------------
# Normalized prime elements (the Grossencharakter convention)


@dataclass(frozen=True)
class QuadOrderElem:
    """x + y*i in Z[i], or x + y*w with w = (1+sqrt(-3))/2 in the Eisenstein order."""

    field: CMField
    x: int
    y: int

    @property
    def norm(self) -> int:
        if self.field.d == 4:
            return self.x * self.x + self.y * self.y
        return self.x * self.x + self.x * self.y + self.y * self.y

    @property
    def trace(self) -> int:
        # trace(i) = 0, trace(w) = 1
        return 2 * self.x if self.field.d == 4 else 2 * self.x + self.y

    def conjugate(self) -> "QuadOrderElem":
        if self.field.d == 4:
            return QuadOrderElem(self.field, self.x, -self.y)
        return QuadOrderElem(self.field, self.x + self.y, -self.y)

    def __str__(self) -> str:
        unit = "i" if self.field.d == 4 else "w"
        if self.y == 0:
            return str(self.x)
        sign = "+" if self.y > 0 else "-"
        mag = "" if abs(self.y) == 1 else str(abs(self.y))
        return f"{self.x} {sign} {mag}{unit}"


def norm_p_elements(p: int, field: CMField) -> list[QuadOrderElem]:
    """All order elements of norm p (8 for Z[i], 12 for the Eisenstein order)."""
    out = []
    if field.d == 4:
        for x in range(-isqrt(p), isqrt(p) + 1):
            y2 = p - x * x
            if y2 < 0:
                continue
            y = isqrt(y2)
            if y * y == y2:
                out.append(QuadOrderElem(field, x, y))
                if y:
                    out.append(QuadOrderElem(field, x, -y))
    else:
        bound = 2 * isqrt(p) + 1
        for x in range(-bound, bound + 1):
            # y^2 + xy + (x^2 - p) = 0 -> y = (-x +- sqrt(4p - 3x^2)) / 2
            disc = 4 * p - 3 * x * x
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r != disc:
                continue
            for s in (r, -r):
                if (s - x) % 2 == 0:
                    out.append(QuadOrderElem(field, x, (s - x) // 2))
    return sorted(set(out), key=lambda e: (e.x, e.y))


def is_normalized(elem: QuadOrderElem) -> bool:
    """The congruence singling out the canonical generator of a prime ideal.

    Z[i]:  alpha = 1 mod (2+2i), i.e. 4 | (x-1+y) and 4 | (y-x+1).
    Z[w]:  alpha = 1 mod 3,      i.e. x = 1 and y = 0 mod 3.
    """
    if elem.field.d == 4:
        return (elem.x - 1 + elem.y) % 4 == 0 and (elem.y - elem.x + 1) % 4 == 0
    return elem.x % 3 == 1 and elem.y % 3 == 0


def normalize_prime_element(p: int, field: CMField) -> QuadOrderElem:
    """The normalized prime element above a split p.

    Exactly one associate per prime ideal satisfies the congruence (the
    units form a transversal of the residue classes), so two survivors
    remain among all norm-p elements: a conjugate pair with equal trace.
    Returns the one with y > 0.  That trace is the a_p of the reference
    curve of the field's family.
    """
    if not (is_prime(p) and field.is_split(p)):
        raise ValueError(f"p = {p} is not a split prime for d = {field.d}")
    hits = [e for e in norm_p_elements(p, field) if is_normalized(e)]
    if len(hits) != 2 or {hits[0].trace, hits[1].trace} != {hits[0].trace}:
        raise AssertionError(f"normalization not unique at p = {p}: {[str(h) for h in hits]}")
    return next(e for e in hits if e.y > 0)


# ---------------------------------------------------------------------------
# Invariant tensor dimensions and quotient traces


_GROUPS = ("Z2diag", "Z3", "Z4")


def invariant_tensor_dimension(group: str, n: int) -> int:
    """Dimension of the subgroup-invariant part of the n-fold tensor square.

    Basis tensors are sign vectors (e_1, ..., e_n), e_i in {+1, -1},
    where the order-r generator acts on e_{+-1} with eigenvalue
    zeta_r^(+-1); the element (a_1, ..., a_n) with sum a_i = 0 mod r
    scales the tensor by zeta_r^(sum a_i e_i).  For the diagonal Z_2
    group each factor acts by -1 on the whole 2-dimensional space
    instead, so every tensor is invariant.  Checked against the group's
    generators (1, 0, .., r-1, .., 0) by brute force over all 2^n signs.
    """
    if group not in _GROUPS:
        raise ValueError(f"group must be one of {_GROUPS}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if group == "Z2diag":
        # (-1)^(sum a_i) = +1 whenever sum a_i is even: everything survives
        return 2**n
    r = 3 if group == "Z3" else 4
    count = 0
    for bits in range(2**n):
        signs = [1 if bits >> i & 1 else -1 for i in range(n)]
        # generators a = e_1 + (r-1) e_j, j = 2..n; invariance needs
        # signs[0] - signs[j] = 0 mod r for every j
        if all((signs[0] - signs[j]) % r == 0 for j in range(1, n)):
            count += 1
    return count


def quotient_frobenius_trace(curve_ap: int, p: int, field: CMField, n: int) -> int:
    """tr Frob_p on the 2-dimensional invariant piece of the n-fold quotient.

    Split p: the invariant subspace is spanned by the two pure tensors,
    on which Frobenius acts by alpha^n and conj(alpha)^n.  Inert p: the
    matrix is antidiagonal, trace 0 for both parities.  Equals the prime
    coefficient of the weight-(n+1) form of the family.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if field.is_split(p):
        return power_trace(curve_ap, p, n)
    return 0


# ---------------------------------------------------------------------------
# Form families over the two reference curves


@dataclass(frozen=True)
class CMForm:
    """Weight-k member of a CM family; prime coefficients from the family."""

    family: "CMFormFamily"
    weight: int

    def ap(self, p: int) -> int:
        return self.family.ap(self.weight, p)

    def character(self, n: int) -> int:
        # nebentypus: trivial for even weight, chi_{-d} for odd weight
        return 1 if self.weight % 2 == 0 else self.family.field.chi(n)

    def euler_factor(self, p: int) -> IntPoly:
        fam = self.family
        if p in fam.bad_primes:
            raise ValueError(f"p = {p} is a bad prime for the {fam.name} family")
        a = fam.curve_ap(p) if fam.field.is_split(p) else None
        return cm_euler_factor(self.weight, fam.field, p, a)

    def hecke_spec(self) -> HeckeCoefficientSpec:
        return HeckeCoefficientSpec(
            weight=self.weight,
            character=self.character,
            ap_source=lambda p: self.ap(p),
            bad_primes=self.family.bad_primes,
        )

    def q_expansion(self, precision: int = DEFAULT_PRECISION) -> QSeries:
        return hecke_expand(self.hecke_spec(), precision)

    def __str__(self) -> str:
        return f"weight-{self.weight} CM form ({self.family.name} family)"


@dataclass(frozen=True)
class CMFormFamily:
    """All weights of one Grossencharakter power tower over a fixed curve.

    The reference curve pins the weight-2 coefficients at split primes;
    inert primes contribute 0 and the finitely many bad primes are
    excluded from every comparison.
    """

    field: CMField
    curve: EllipticCurveModel
    bad_primes: frozenset[int]
    name: str

    def curve_ap(self, p: int) -> int:
        if p in self.bad_primes:
            raise ValueError(f"p = {p} is a bad prime for the {self.name} family")
        return _cached_curve_ap(self.curve, p)

    def ap(self, weight: int, p: int) -> int:
        """Prime coefficient of the weight-k form: s_{k-1} split, 0 inert."""
        if weight < 2:
            raise ValueError("weight must be >= 2")
        if p in self.bad_primes:
            return 0
        if self.field.is_split(p):
            return power_trace(self.curve_ap(p), p, weight - 1)
        return 0

    def form(self, weight: int) -> CMForm:
        return CMForm(self, weight)


@lru_cache(maxsize=None)
def _cached_curve_ap(curve: EllipticCurveModel, p: int) -> int:
    return elliptic_ap(curve, p)
