"""Verification suites tying each headline identity to one runnable check.

Every suite recomputes its claims from scratch and returns deterministic
VerificationReport objects; reports are byte-identical across runs and
thread counts (work is mapped in a fixed order and reduced in order).
"""

from __future__ import annotations

from . import registry
from .arith import odd_primes_up_to
from .arrangement import (
    classify,
    good_reduction_report,
    intersection_poset,
    poset_matches_mod_p,
    resolution_schedule,
)
from .cmforms import (
    EISENSTEIN,
    GAUSSIAN,
    invariant_tensor_dimension,
    normalize_prime_element,
    quotient_frobenius_trace,
)
from .euler import (
    ELLIPTIC_BLOCK,
    KummerData,
    borcea_voisin_table,
    double_cover_euler,
    fold_elliptic,
    iterated_elliptic_euler,
)
from .pointcount import elliptic_ap, verify_ahlgren
from .qseries import hecke_expand
from .report import DERIVED, PUBLISHED, VerificationReport
from .tensor import verify_g4xg3, verify_power_factorization

SUITES = ("eta", "cm", "tensor", "ahlgren", "arrangement", "euler", "all")


def suite_eta(pmax: int = 100, threads: int = 1) -> list[VerificationReport]:
    """The five bundled eta products: four against the printed coefficients,
    the weight-6 level-4 power against the point-count oracle."""
    report = VerificationReport("eta-expansions")
    for eta, printed in registry.PRINTED_ETA_COEFFS.items():
        top = max(printed)
        series = eta.expand(top)
        computed = {n: series.coeff(n) for n in sorted(printed)}
        report.check(str(eta), computed, dict(sorted(printed.items())), PUBLISHED)
    # eta(q^2)^12 has no printed coefficients; its oracle is the brute-force
    # fivefold count through p = 13 (solved for a_p)
    rows = verify_ahlgren(13, brute_max=13, threads=threads)
    series = registry.ETA_WEIGHT6_LEVEL4.expand(13)
    computed = {row.p: series.coeff(row.p) for row in rows}
    expected = {row.p: row.p**5 + 2 * row.p**3 - 4 * row.p**2 - 9 * row.p - 1 - row.brute for row in rows}
    report.check(str(registry.ETA_WEIGHT6_LEVEL4), computed, expected, DERIVED)
    return [report]


def suite_cm(pmax: int = 100, threads: int = 1) -> list[VerificationReport]:
    reports = []

    printed = VerificationReport("grossencharakter-power-coefficients")
    for (family_name, weight), coeffs in registry.PRINTED_CM_COEFFS.items():
        family = registry.GAUSSIAN_FAMILY if family_name == "gaussian" else registry.EISENSTEIN_FAMILY
        top = max(coeffs)
        series = hecke_expand(family.form(weight).hecke_spec(), top)
        computed = {n: series.coeff(n) for n in sorted(coeffs)}
        printed.check(f"{family_name} weight {weight}", computed, dict(sorted(coeffs.items())), PUBLISHED)
    reports.append(printed)

    norm = VerificationReport("normalized-prime-elements")
    for field, family in ((GAUSSIAN, registry.GAUSSIAN_FAMILY), (EISENSTEIN, registry.EISENSTEIN_FAMILY)):
        split = [p for p in odd_primes_up_to(pmax) if field.is_split(p) and p not in family.bad_primes]
        computed = {p: normalize_prime_element(p, field).trace for p in split}
        expected = {p: family.curve_ap(p) for p in split}
        norm.check(f"trace of normalized element, d={field.d}, p<={pmax}", computed, expected, DERIVED)
    reports.append(norm)

    quot = VerificationReport("quotient-frobenius-traces")
    for field, family in ((GAUSSIAN, registry.GAUSSIAN_FAMILY), (EISENSTEIN, registry.EISENSTEIN_FAMILY)):
        good = [p for p in odd_primes_up_to(pmax) if p not in family.bad_primes and not field.is_ramified(p)]
        for n in range(1, 7):
            series = hecke_expand(family.form(n + 1).hecke_spec(), pmax)
            computed = {}
            for p in good:
                ap = family.curve_ap(p) if field.is_split(p) else 0
                computed[p] = quotient_frobenius_trace(ap, p, field, n)
            expected = {p: series.coeff(p) for p in good}
            quot.check(f"d={field.d}, n={n}, p<={pmax}", computed, expected, DERIVED)
    reports.append(quot)

    dims = VerificationReport("invariant-tensor-dimensions")
    for n in range(1, 11):
        dims.check(f"Z3, n={n}", invariant_tensor_dimension("Z3", n), 2, PUBLISHED)
        dims.check(f"Z4, n={n}", invariant_tensor_dimension("Z4", n), 2, PUBLISHED)
        dims.check(f"Z2diag, n={n}", invariant_tensor_dimension("Z2diag", n), 2**n, DERIVED)
    reports.append(dims)

    # model audit: the level-27 eta product matches y^2 = x^3 + 16 on the
    # nose, while the twist y^2 = x^3 - 16 flips sign at split p = 3 mod 4
    audit = VerificationReport("eisenstein-model-audit")
    series = registry.ETA_WEIGHT2_EISENSTEIN.expand(max(pmax, 19))
    mism = model_mismatch_primes(registry.CURVE_EISENSTEIN, series, pmax)
    audit.check(f"y^2 = x^3 + 16 vs eta(q^9)^2 eta(q^3)^2, odd good p <= {pmax}", mism, [], DERIVED)
    twist_mism = model_mismatch_primes(registry.CURVE_EISENSTEIN_TWIST, series, pmax)
    twist_expected = [
        p
        for p in odd_primes_up_to(pmax)
        if p != 3 and p % 4 == 3 and EISENSTEIN.is_split(p) and series.coeff(p) != 0
    ]
    audit.check(
        f"y^2 = x^3 - 16 mismatch set == split primes = 3 mod 4, p <= {pmax}",
        twist_mism,
        twist_expected,
        DERIVED,
    )
    audit.notes.append(
        "the twist mismatch is reported, not suppressed: only x^3 + 16 is a valid "
        "integral model for the level-27 family"
    )
    reports.append(audit)
    return reports


def model_mismatch_primes(curve, eta_series, pmax: int) -> list[int]:
    """Odd good primes where the curve trace differs from the eta coefficient."""
    out = []
    for p in odd_primes_up_to(min(pmax, eta_series.precision)):
        if curve.discriminant % p == 0:
            continue
        if elliptic_ap(curve, p) != eta_series.coeff(p):
            out.append(p)
    return out


def suite_tensor(pmax: int = 100, threads: int = 1) -> list[VerificationReport]:
    reports = []
    g4g3 = VerificationReport("tensor-w4xw3-factorization")
    rows = verify_g4xg3(pmax)
    g4g3.check(
        f"trace identity a_p(w4) a_p(w3) = a_p(w6) + p^2 a_p(w2), odd p <= {pmax}",
        [r.p for r in rows if not r.trace_equal],
        [],
        DERIVED,
    )
    g4g3.check(
        f"degree-4 Euler-factor equality, odd p <= {pmax}",
        [r.p for r in rows if not r.poly_equal],
        [],
        DERIVED,
    )
    reports.append(g4g3)

    binom = VerificationReport("tensor-power-binomial-factorization")
    cap = min(pmax, 50)
    for field, family in ((GAUSSIAN, registry.GAUSSIAN_FAMILY), (EISENSTEIN, registry.EISENSTEIN_FAMILY)):
        bad = []
        for n in range(2, 7):
            for p in odd_primes_up_to(cap):
                if p in family.bad_primes or field.is_ramified(p):
                    continue
                ap = family.curve_ap(p) if field.is_split(p) else None
                check = verify_power_factorization(ap, p, field, n)
                if not (check.equal and check.trace_identity):
                    bad.append((p, n))
        binom.check(f"d={field.d}, n=2..6, good odd p <= {cap}", bad, [], DERIVED)
    reports.append(binom)
    return reports


def suite_ahlgren(pmax: int = 100, brute_max: int | None = 13, threads: int = 1) -> list[VerificationReport]:
    report = VerificationReport("ahlgren-fivefold-count-identity")
    rows = verify_ahlgren(pmax, brute_max=brute_max, threads=threads)
    report.check(
        f"N(p) = p^5 + 2p^3 - 4p^2 - 9p - 1 - a_p for odd p <= {pmax}",
        [r.p for r in rows if not r.match],
        [],
        DERIVED,
    )
    if brute_max is not None:
        report.check(
            f"fast count == brute-force count for p <= {brute_max}",
            [r.p for r in rows if r.brute is not None and r.brute != r.count],
            [],
            DERIVED,
        )
    report.notes.append(f"{len(rows)} primes checked")
    return [report]


def suite_arrangement(threads: int = 1) -> list[VerificationReport]:
    reports = []
    arr = registry.load_bundled_arrangement("ahlgren")
    poset = intersection_poset(arr)
    cls = classify(arr, poset)

    table = VerificationReport("twelve-plane-singularity-table")
    census = {(r.dim, r.mult): r.count for r in cls.rows}
    expected_census = {(d, m): c for d, m, c, _ in registry.AHLGREN_REFERENCE_TABLE}
    table.check("(dim, mult) -> count census", census, expected_census, PUBLISHED)
    near = {(r.dim, r.mult) for r in cls.rows if r.near_pencil}
    table.check("near-pencil types", sorted(near), sorted(registry.AHLGREN_NEAR_PENCIL_TYPES), PUBLISHED)
    adm = {(r.dim, r.mult) for r in cls.rows if r.admissible}
    table.check("admissible types", sorted(adm), sorted(registry.AHLGREN_ADMISSIBLE_TYPES), PUBLISHED)
    table.check("crepant resolvable", cls.resolvable, True, PUBLISHED)
    # incidence block: cell-by-cell against the transcription; disagreement
    # with the published table is a discrepancy, not a failure
    computed_rows = {(r.dim, r.mult): r.incidence for r in cls.rows}
    for dim, mult, _, printed in registry.AHLGREN_REFERENCE_TABLE:
        got = computed_rows.get((dim, mult))
        for k, cell in enumerate(printed, start=1):
            table.compare_published(f"type ({dim},{mult}) N{k}", got[k - 1] if got else None, cell)
    reports.append(table)

    sched = VerificationReport("resolution-schedule")
    steps = resolution_schedule(arr, poset)
    sched.check(
        "centers ordered by ascending dimension",
        [s.stratum.dim for s in steps] == sorted(s.stratum.dim for s in steps),
        True,
        DERIVED,
    )
    sched.check(
        "exceptional divisor joins branch locus exactly at odd multiplicity",
        all(step.adds_exceptional == (step.stratum.mult % 2 == 1) for step in steps),
        True,
        DERIVED,
    )
    sched.notes.append(f"{len(steps)} blow-up centers")
    reports.append(sched)

    red = VerificationReport("good-reduction")
    rep = good_reduction_report(arr)
    red.check("all coefficient-matrix minors in {0, +-1}", rep.all_unimodular, True, PUBLISHED)
    for p in (3, 5, 7):
        cmp = poset_matches_mod_p(arr, p, poset)
        red.check(f"F_{p} poset == rational poset", cmp.equal, True, DERIVED)
    reports.append(red)
    return reports


def suite_euler(threads: int = 1) -> list[VerificationReport]:
    report = VerificationReport("double-cover-euler-calculus")
    fold = {n: fold_elliptic(n).e_cover for n in range(1, 11)}
    closed = {n: iterated_elliptic_euler(n) for n in range(1, 11)}
    report.check("fold over n elliptic blocks == (6^n + 3(-2)^n)/2, n <= 10", fold, closed, DERIVED)
    report.check(
        "borcea-voisin euler numbers",
        list(borcea_voisin_table()),
        [-108, -96, -84, -72, -60, -48, -36, -24, -12, 0, 12, 24, 36, 48, 60, 72, 84, 96, 108, 120],
        PUBLISHED,
    )
    report.check(
        "K3 with sextic branch x elliptic block",
        double_cover_euler(KummerData(24, -18), ELLIPTIC_BLOCK).e_cover,
        -108,
        PUBLISHED,
    )
    return [report]


def run_suite(name: str, pmax: int = 100, brute_max: int | None = 13, threads: int = 1) -> list[VerificationReport]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    if name == "eta":
        return suite_eta(pmax, threads)
    if name == "cm":
        return suite_cm(pmax, threads)
    if name == "tensor":
        return suite_tensor(pmax, threads)
    if name == "ahlgren":
        return suite_ahlgren(pmax, brute_max, threads)
    if name == "arrangement":
        return suite_arrangement(threads)
    if name == "euler":
        return suite_euler(threads)
    reports = []
    for sub in ("eta", "cm", "tensor", "ahlgren", "arrangement", "euler"):
        reports.extend(run_suite(sub, pmax=pmax, brute_max=brute_max, threads=threads))
    return reports
