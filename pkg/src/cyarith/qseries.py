"""Truncated integer q-expansions: Dedekind eta products and Hecke
multiplicative expansion of eigenforms.

All series here are cusp forms, so coefficients start at q^1 and c_0 is
identically zero.  A QSeries never reads beyond its stated precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .arith import primes_up_to

DEFAULT_PRECISION = 200  # every bundled comparison needs far less


@dataclass(frozen=True)
class QSeries:
    """Integer coefficients c_1 .. c_N of a truncated q-expansion."""

    values: tuple[int, ...]  # values[n] = c_n; values[0] is always 0

    def __post_init__(self):
        if not self.values or self.values[0] != 0:
            raise ValueError("cusp-form series: index starts at q^1, c_0 = 0")

    @classmethod
    def from_coeffs(cls, coeffs, precision: int) -> "QSeries":
        vals = [0] * (precision + 1)
        for n, c in enumerate(coeffs, start=1):
            if n > precision:
                break
            vals[n] = c
        return cls(tuple(vals))

    @classmethod
    def from_map(cls, coeffs: Mapping[int, int], precision: int) -> "QSeries":
        vals = [0] * (precision + 1)
        for n, c in coeffs.items():
            if 1 <= n <= precision:
                vals[n] = c
        return cls(tuple(vals))

    @property
    def precision(self) -> int:
        return len(self.values) - 1

    def coeff(self, n: int) -> int:
        if not 1 <= n <= self.precision:
            raise IndexError(f"coefficient q^{n} outside precision {self.precision}")
        return self.values[n]

    def coeffs_upto(self, n: int) -> tuple[int, ...]:
        return self.values[1 : n + 1]


@dataclass(frozen=True)
class MatchResult:
    equal: bool
    first_mismatch: int | None = None
    left: int | None = None
    right: int | None = None

    def __bool__(self) -> bool:
        return self.equal


def series_match(a: QSeries, b: QSeries, upto: int) -> MatchResult:
    """Coefficient-exact comparison through q^upto with first-mismatch report."""
    if upto > min(a.precision, b.precision):
        raise ValueError("comparison range exceeds series precision")
    for n in range(1, upto + 1):
        if a.values[n] != b.values[n]:
            return MatchResult(False, n, a.values[n], b.values[n])
    return MatchResult(True)


# ---------------------------------------------------------------------------
# Dense truncated series helpers (plain lists indexed by exponent)


def _mul_trunc(a: list[int], b: list[int], top: int) -> list[int]:
    out = [0] * (top + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > top:
            continue
        jmax = top - i
        for j, bj in enumerate(b[: jmax + 1]):
            if bj:
                out[i + j] += ai * bj
    return out


def _pow_trunc(a: list[int], k: int, top: int) -> list[int]:
    # binary exponentiation on truncated series: O(log k) truncated products
    result = [0] * (top + 1)
    result[0] = 1
    base = list(a[: top + 1])
    while k:
        if k & 1:
            result = _mul_trunc(result, base, top)
        k >>= 1
        if k:
            base = _mul_trunc(base, base, top)
    return result


def eta_unit_part(scale: int, top: int) -> list[int]:
    """prod_{k>=1} (1 - q^(scale*k)) truncated at q^top.

    Pentagonal number theorem: the product is sum_m (-1)^m q^(g_m*scale)
    over generalized pentagonal numbers g_m = m(3m-1)/2, m in Z.
    """
    out = [0] * (top + 1)
    out[0] = 1
    m = 1
    while True:
        g1 = scale * m * (3 * m - 1) // 2
        g2 = scale * m * (3 * m + 1) // 2
        if g1 > top and g2 > top:
            break
        s = -1 if m % 2 else 1
        if g1 <= top:
            out[g1] = s
        if g2 <= top:
            out[g2] = s
        m += 1
    return out


@dataclass(frozen=True)
class EtaProduct:
    """prod_i eta(q^(m_i))^(k_i), held as ((m_1, k_1), (m_2, k_2), ...).

    The eta prefactors contribute q^(sum m_i k_i / 24); the sum must be
    divisible by 24 for the product to be an integral q-series.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(m), int(k)) for m, k in self.factors))
        for m, k in self.factors:
            if m < 1 or k < 1:
                raise ValueError("eta factors need positive scale and exponent")
        if self.weight_24 % 24 != 0:
            raise ValueError(
                f"sum(m*k) = {self.weight_24} is not divisible by 24; "
                "the leading exponent would be fractional"
            )

    @property
    def weight_24(self) -> int:
        return sum(m * k for m, k in self.factors)

    @property
    def q_shift(self) -> int:
        return self.weight_24 // 24

    @property
    def weight(self):
        # each eta factor carries weight 1/2; exact even when half-integral
        total = sum(k for _, k in self.factors)
        return total // 2 if total % 2 == 0 else Fraction(total, 2)

    def expand(self, precision: int = DEFAULT_PRECISION) -> QSeries:
        """Exact coefficients through q^precision."""
        shift = self.q_shift
        top = precision - shift
        vals = [0] * (precision + 1)
        if top >= 0:
            unit = [0] * (top + 1)
            unit[0] = 1
            for m, k in self.factors:
                unit = _mul_trunc(unit, _pow_trunc(eta_unit_part(m, top), k, top), top)
            for e, c in enumerate(unit):
                vals[e + shift] = c
        return QSeries(tuple(vals))

    def __str__(self) -> str:
        return "*".join(
            f"eta(q^{m})^{k}" if k > 1 else f"eta(q^{m})" for m, k in self.factors
        )


def eta_product_expand(factors, precision: int = DEFAULT_PRECISION) -> QSeries:
    return EtaProduct(tuple(factors)).expand(precision)


# ---------------------------------------------------------------------------
# Hecke-multiplicative expansion


@dataclass(frozen=True)
class HeckeCoefficientSpec:
    """Everything needed to expand an eigenform from its prime coefficients.

    `ap_source` must yield a_p for every good prime in range; primes in
    `bad_primes` take their value from `bad_values` (default 0).  The
    character is the form's nebentypus evaluated at good primes.
    """

    weight: int
    character: Callable[[int], int]
    ap_source: Callable[[int], int]
    bad_primes: frozenset[int] = frozenset()
    bad_values: Mapping[int, int] | None = None

    def __post_init__(self):
        if self.weight < 2:
            raise ValueError("weight must be >= 2")

    def ap(self, p: int) -> int:
        if p in self.bad_primes:
            return (self.bad_values or {}).get(p, 0)
        try:
            a = self.ap_source(p)
        except (KeyError, ValueError) as exc:
            raise ValueError(f"missing prime coefficient a_{p}") from exc
        # Ramanujan bound |a_p| <= 2 p^((k-1)/2), integer-exact form
        if a * a > 4 * p ** (self.weight - 1):
            raise ValueError(f"a_{p} = {a} violates the Ramanujan bound for weight {self.weight}")
        return a

    def chi(self, p: int) -> int:
        return 0 if p in self.bad_primes else self.character(p)


def hecke_expand(spec: HeckeCoefficientSpec, precision: int = DEFAULT_PRECISION) -> QSeries:
    """Full multiplicative expansion a_1 .. a_N from prime data.

    Prime powers follow a_{p^(r+1)} = a_p a_{p^r} - chi(p) p^(k-1) a_{p^(r-1)};
    coprime indices multiply.
    """
    n = precision
    a = [0] * (n + 1)
    if n >= 1:
        a[1] = 1
    for p in primes_up_to(n):
        ap = spec.ap(p)
        cpk = spec.chi(p) * p ** (spec.weight - 1)
        a[p] = ap
        prev, cur, pe = 1, ap, p
        while pe * p <= n:
            prev, cur = cur, ap * cur - cpk * prev
            pe *= p
            a[pe] = cur
    # multiplicative fill via smallest prime factor
    spf = list(range(n + 1))
    for p in primes_up_to(n):
        for m in range(p * p, n + 1, p):
            if spf[m] == m:
                spf[m] = p
    for m in range(2, n + 1):
        p = spf[m]
        pe, rest = p, m // p
        while rest % p == 0:
            pe *= p
            rest //= p
        if rest > 1:
            a[m] = a[pe] * a[rest]
    return QSeries(tuple(a))
