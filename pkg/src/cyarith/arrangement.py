"""Intersection lattices of integer hyperplane arrangements in P^n:
(dimension, multiplicity) stratification, near-pencil detection, the
crepant-resolvability criterion, blow-up scheduling, and good-reduction
analysis.

Arrangements here are unions of hyperplanes, so every flat is a linear
subspace and the smooth-intersection requirement on arrangements of
general divisors holds automatically.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from math import gcd

from .arith import all_minors, echelon, echelon_mod, primitive_rows, require_odd_prime


@dataclass(frozen=True)
class Hyperplane:
    """Primitive, sign-normalized integer coefficient vector in P^n."""

    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "Hyperplane":
        v = [int(c) for c in coeffs]
        g = 0
        for c in v:
            g = gcd(g, c)
        if g == 0:
            raise ValueError("zero vector is not a hyperplane")
        v = [c // g for c in v]
        lead = next(c for c in v if c != 0)
        if lead < 0:
            v = [-c for c in v]
        return cls(tuple(v))

    def __str__(self) -> str:
        names = [f"x{i}" for i in range(len(self.coeffs))]
        parts = []
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            if not parts:
                parts.append(f"{'-' if c < 0 else ''}{mag}{name}")
            else:
                parts.append(f"{'-' if c < 0 else '+'} {mag}{name}")
        return " ".join(parts)


@dataclass(frozen=True)
class Arrangement:
    """N distinct hyperplanes in P^dim."""

    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        for h in self.hyperplanes:
            if len(h.coeffs) != self.dim + 1:
                raise ValueError(
                    f"hyperplane {h.coeffs} has {len(h.coeffs)} coordinates, "
                    f"expected {self.dim + 1}"
                )
        if len(set(self.hyperplanes)) != len(self.hyperplanes):
            raise ValueError("hyperplanes must be pairwise distinct")

    @classmethod
    def from_rows(cls, dim: int, rows) -> "Arrangement":
        return cls(dim, tuple(Hyperplane.from_coeffs(r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.hyperplanes)

    def coefficient_matrix(self) -> list[list[int]]:
        return [list(h.coeffs) for h in self.hyperplanes]


def parse_arrangement(text: str) -> Arrangement:
    """Text format: first line `n N`, then N lines of n+1 integers."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty arrangement file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"malformed header {lines[0]!r}: expected `n N`")
    n, count = int(head[0]), int(head[1])
    if len(lines) - 1 != count:
        raise ValueError(f"expected {count} hyperplane rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        entries = [int(tok) for tok in ln.split()]
        if len(entries) != n + 1:
            raise ValueError(f"row {ln!r} has {len(entries)} entries, expected {n + 1}")
        rows.append(entries)
    return Arrangement.from_rows(n, rows)


def load_arrangement(path) -> Arrangement:
    with open(path, encoding="ascii") as fh:
        return parse_arrangement(fh.read())


@dataclass(frozen=True)
class Stratum:
    """A flat cut out by >= 2 hyperplanes of the arrangement.

    basis: primitive integer rows of the reduced echelon form of the
    defining linear forms -- the canonical key for the flat.  The
    containing-hyperplane set determines the flat (its span equals the
    defining-form space), so containment of flats is subset testing on
    the index masks.
    """

    basis: tuple[tuple[int, ...], ...]
    dim: int
    hyperplanes: tuple[int, ...]
    near_pencil: bool = False

    @property
    def mult(self) -> int:
        return len(self.hyperplanes)

    @property
    def mask(self) -> int:
        m = 0
        for i in self.hyperplanes:
            m |= 1 << i
        return m

    @property
    def type_key(self) -> tuple[int, int]:
        return (self.dim, self.mult)


def _canonical_basis(rows) -> tuple[tuple[int, ...], ...]:
    return primitive_rows(echelon(rows))


def intersection_poset(arr: Arrangement, method: str = "closure") -> list[Stratum]:
    """All flats obtainable as intersections of >= 2 hyperplanes.

    `closure`: breadth-first -- seed with pairwise intersections and
    repeatedly intersect the frontier with single hyperplanes.  Every
    flat D_{i1} cap ... cap D_{ir} is reached one hyperplane at a time,
    so this is equivalent to `subsets` (kept as the oracle mode), which
    ranks all 2^N subsets.

    Flats are deduplicated by canonical echelon basis.  Multiplicity is
    the full containing-hyperplane count, dimension is n - rank; empty
    intersections (rank n+1) are discarded.
    """
    n = arr.dim
    vectors = [h.coeffs for h in arr.hyperplanes]
    found: dict[tuple, dict] = {}

    def visit(rows) -> tuple | None:
        basis = _canonical_basis(rows)
        rank = len(basis)
        if rank > n or basis in found:
            return basis if basis in found else None
        members = tuple(
            i for i, v in enumerate(vectors) if len(_canonical_basis(basis + (v,))) == rank
        )
        if len(members) < 2:
            return None
        found[basis] = {"dim": n - rank, "members": members}
        return basis

    if method == "closure":
        frontier = []
        for i, j in combinations(range(arr.size), 2):
            key = visit((vectors[i], vectors[j]))
            if key is not None:
                frontier.append(key)
        seen_frontier = set(frontier)
        while frontier:
            nxt = []
            for basis in frontier:
                members = set(found[basis]["members"])
                for k, v in enumerate(vectors):
                    if k in members:
                        continue
                    key = visit(basis + (v,))
                    if key is not None and key not in seen_frontier:
                        seen_frontier.add(key)
                        nxt.append(key)
            frontier = nxt
    elif method == "subsets":
        for r in range(2, arr.size + 1):
            for idx in combinations(range(arr.size), r):
                visit(tuple(vectors[i] for i in idx))
    else:
        raise ValueError(f"unknown poset method {method!r}")

    strata = [
        Stratum(basis, info["dim"], info["members"]) for basis, info in found.items()
    ]
    # near-pencil: contained in a flat one dimension up with one fewer hyperplane
    by_mask = {s.mask: s for s in strata}
    flagged = []
    for s in strata:
        near = False
        for drop in s.hyperplanes:
            parent = by_mask.get(s.mask & ~(1 << drop))
            if parent is not None and parent.dim == s.dim + 1:
                near = True
                break
        flagged.append(replace(s, near_pencil=near))
    flagged.sort(key=lambda s: (-s.dim, s.mult, s.basis))
    return flagged


def admissible(dim: int, mult: int, ambient: int) -> bool:
    """The crepancy condition for blowing up a (dim, mult) center in P^ambient."""
    return mult // 2 == ambient - dim - 1


@dataclass(frozen=True)
class TypeRow:
    label: str
    dim: int
    mult: int
    count: int
    near_pencil: bool
    admissible: bool
    incidence: tuple[int, ...]
    incidence_uniform: bool


@dataclass(frozen=True)
class Classification:
    ambient_dim: int
    rows: tuple[TypeRow, ...]
    resolvable: bool
    violators: tuple[Stratum, ...]

    @property
    def census(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((r.dim, r.mult, r.count) for r in self.rows)

    def to_jsonable(self) -> dict:
        return {
            "types": [
                {
                    "label": r.label,
                    "dim": r.dim,
                    "mult": r.mult,
                    "count": r.count,
                    "near_pencil": r.near_pencil,
                    "admissible": r.admissible,
                    "incidence": list(r.incidence),
                    "incidence_uniform": r.incidence_uniform,
                }
                for r in self.rows
            ],
            "resolvable": self.resolvable,
        }


def classify(arr: Arrangement, poset: list[Stratum] | None = None) -> Classification:
    """Group strata into types, ordered by descending dimension then
    ascending multiplicity; report counts, flags, and incidence counts.

    The grouping key is (dim, mult); a (dim, mult) class whose members
    disagree on the near-pencil flag is split into two rows so every
    row's flags are exact.  The incidence columns count, for each
    stratum, the strata of every positive-dimensional type strictly
    containing it; a type's vector is reported when it is constant
    across the type (incidence_uniform), with -1 sentinels otherwise.
    """
    if poset is None:
        poset = intersection_poset(arr)
    n = arr.dim
    # key: (dim, mult, near_pencil); sorts like (dim, mult) when flags are constant
    type_keys = sorted(
        {(s.dim, s.mult, s.near_pencil) for s in poset}, key=lambda t: (-t[0], t[1], t[2])
    )
    positive = [t for t in type_keys if t[0] >= 1]
    pos_index = {t: i for i, t in enumerate(positive)}
    by_type: dict[tuple[int, int, bool], list[Stratum]] = {t: [] for t in type_keys}
    for s in poset:
        by_type[(s.dim, s.mult, s.near_pencil)].append(s)

    def incidence_vector(s: Stratum) -> tuple[int, ...]:
        counts = [0] * len(positive)
        for other in poset:
            if other is s or other.dim < 1:
                continue
            if other.mask != s.mask and other.mask & s.mask == other.mask:
                counts[pos_index[(other.dim, other.mult, other.near_pencil)]] += 1
        return tuple(counts)

    rows = []
    for idx, key in enumerate(type_keys, start=1):
        members = by_type[key]
        vectors = {incidence_vector(s) for s in members}
        uniform = len(vectors) == 1
        vec = vectors.pop() if uniform else tuple(-1 for _ in positive)
        rows.append(
            TypeRow(
                label=f"T{idx}",
                dim=key[0],
                mult=key[1],
                count=len(members),
                near_pencil=key[2],
                admissible=admissible(key[0], key[1], n),
                incidence=vec,
                incidence_uniform=uniform,
            )
        )
    ok, violators = crepant_resolvable_from_poset(poset, n)
    return Classification(n, tuple(rows), ok, tuple(violators))


def crepant_resolvable_from_poset(poset: list[Stratum], ambient: int):
    violators = [
        s for s in poset if not (s.near_pencil or admissible(s.dim, s.mult, ambient))
    ]
    return not violators, violators


def crepant_resolvable(arr: Arrangement, poset: list[Stratum] | None = None):
    """True iff every stratum is near-pencil or admissible, plus violators."""
    if poset is None:
        poset = intersection_poset(arr)
    return crepant_resolvable_from_poset(poset, arr.dim)


@dataclass(frozen=True)
class BlowUpStep:
    stratum: Stratum
    half_mult: int
    adds_exceptional: bool  # branch divisor picks up E exactly when mult is odd


def resolution_schedule(arr: Arrangement, poset: list[Stratum] | None = None) -> list[BlowUpStep]:
    """Blow-up centers in resolution order: all non-near-pencil strata by
    ascending dimension (ties by canonical basis), each annotated with
    the branch-divisor update D* = s*D - 2 floor(m/2) E.

    Strict transforms keep their (dim, mult) and newly created strata
    are near-pencil, so the schedule is computable from the original
    poset; only resolvable arrangements are accepted.
    """
    if poset is None:
        poset = intersection_poset(arr)
    ok, violators = crepant_resolvable_from_poset(poset, arr.dim)
    if not ok:
        raise ValueError(f"arrangement is not crepant-resolvable: {len(violators)} violating strata")
    centers = sorted(
        (s for s in poset if not s.near_pencil), key=lambda s: (s.dim, s.basis)
    )
    return [BlowUpStep(s, s.mult // 2, s.mult % 2 == 1) for s in centers]


# ---------------------------------------------------------------------------
# Good reduction


@dataclass(frozen=True)
class GoodReductionReport:
    all_unimodular: bool  # every minor of the coefficient matrix in {0, +-1}
    exceptional_odd_primes: tuple[int, ...]
    max_abs_minor: int

    @property
    def verdict(self) -> str:
        return "all odd primes good" if self.all_unimodular else (
            f"exceptional odd primes: {list(self.exceptional_odd_primes)}"
        )


def good_reduction_report(arr: Arrangement) -> GoodReductionReport:
    """Scan every minor (all sizes) of the N x (n+1) coefficient matrix.

    Minors in {0, +-1} force the mod-p stratification to agree with the
    rational one at every odd prime.  Otherwise the odd primes dividing
    some nonzero minor are the only candidates for a changed poset.
    """
    matrix = arr.coefficient_matrix()
    exceptional: set[int] = set()
    max_abs = 0
    for _, _, _, value in all_minors(matrix):
        v = abs(value)
        max_abs = max(max_abs, v)
        if v > 1:
            for q in _odd_prime_divisors(v):
                exceptional.add(q)
    return GoodReductionReport(max_abs <= 1, tuple(sorted(exceptional)), max_abs)


def _odd_prime_divisors(v: int):
    v = abs(v)
    while v % 2 == 0:
        v //= 2
    q = 3
    while q * q <= v:
        if v % q == 0:
            yield q
            while v % q == 0:
                v //= q
        q += 2
    if v > 1:
        yield v


@dataclass(frozen=True)
class ModPComparison:
    p: int
    equal: bool
    missing: tuple[tuple[int, ...], ...]  # hyperplane index sets present over Q only
    extra: tuple[tuple[int, ...], ...]  # present over F_p only
    changed_dim: tuple[tuple[int, ...], ...]


def poset_mod_p(arr: Arrangement, p: int) -> dict[tuple[int, ...], int]:
    """Flats of the reduced arrangement over F_p, keyed by the containing-
    hyperplane index set, value = dimension."""
    require_odd_prime(p)
    n = arr.dim
    vectors = [tuple(c % p for c in h.coeffs) for h in arr.hyperplanes]
    if any(not any(v) for v in vectors):
        raise ValueError(f"a hyperplane degenerates to zero mod {p}")
    if len(set(vectors)) != len(vectors):
        # two hyperplanes coincide mod p; the stratification cannot match
        return {}
    found: dict[tuple, dict] = {}

    def visit(rows):
        basis = echelon_mod(rows, p)
        rank = len(basis)
        if rank > n or basis in found:
            return basis if basis in found else None
        members = tuple(
            i
            for i, v in enumerate(vectors)
            if len(echelon_mod(basis + (v,), p)) == rank
        )
        if len(members) < 2:
            return None
        found[basis] = {"dim": n - rank, "members": members}
        return basis

    frontier = []
    for i, j in combinations(range(arr.size), 2):
        key = visit((vectors[i], vectors[j]))
        if key is not None:
            frontier.append(key)
    seen = set(frontier)
    while frontier:
        nxt = []
        for basis in frontier:
            members = set(found[basis]["members"])
            for k, v in enumerate(vectors):
                if k in members:
                    continue
                key = visit(basis + (v,))
                if key is not None and key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return {info["members"]: info["dim"] for info in found.values()}


def poset_matches_mod_p(arr: Arrangement, p: int, poset: list[Stratum] | None = None) -> ModPComparison:
    """Diff the F_p intersection poset against the rational one.

    Flats on both sides are identified with their containing-hyperplane
    index sets (which span the defining forms), so poset equality is set
    equality plus matching dimensions.
    """
    if poset is None:
        poset = intersection_poset(arr)
    rational = {s.hyperplanes: s.dim for s in poset}
    modp = poset_mod_p(arr, p)
    missing = tuple(sorted(k for k in rational if k not in modp))
    extra = tuple(sorted(k for k in modp if k not in rational))
    changed = tuple(sorted(k for k in rational if k in modp and rational[k] != modp[k]))
    return ModPComparison(p, not (missing or extra or changed), missing, extra, changed)
