"""Acceptance suite: one test per criterion, exact integer equality throughout.

Each test prints a single ``criterion N: PASS|FAIL`` line (visible with ``-s``,
and repeated in the terminal summary by conftest.py).  Run directly with
``python tests/test_acceptance.py`` for the lines alone.
"""

import time
from math import factorial

from lrsq.finite_combinatorics import (
    eta_glq_identity,
    eta_series,
    glq_class_count_brute,
    glq_class_series,
    orbit_count_brute,
    orbit_count_lr,
)
from lrsq.hesselink import dominant_weights, hesselink_multiplicity, weyl_dimension
from lrsq.hilbert_identities import (
    bigraded_identity,
    block_invariant_dim,
    finite_invariant_dim,
    harmonic_finite_dim,
    harmonic_stable_series,
    molien_invariant_dim,
    stable_block_series,
    verify_main_formula,
)
from lrsq.lr_engine import kostka, lr_coefficient, lr_multi, sum_lr_squared
from lrsq.partition_core import compositions, partitions_of
from lrsq.power_series import TruncatedSeries, inverse_one_minus
from lrsq.symfunc import count_functions, macdonald_corollary_count, multiply, power_sum_to_monomial, schur, schur_expand

RESULTS = {}


def record(number, title, ok, detail=""):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    RESULTS[number] = line
    print(line)
    assert ok, line


def strict_compositions(d):
    return [c for k in range(1, d + 1) for c in compositions(d, k) if all(c)]


def test_criterion_01_main_formula():
    start = time.perf_counter()
    bad = [(m, D) for m, D in [(1, 10), (2, 7), (3, 6), (4, 5)] if not verify_main_formula(m, D).equal]
    elapsed = time.perf_counter() - start
    record(1, "main formula for (m,D) in (1,10),(2,7),(3,6),(4,5)", not bad and elapsed < 300,
           f"mismatches {bad}, {elapsed:.1f}s")


def test_criterion_02_factorial():
    bad = [m for m in range(1, 8)
           if sum(lr_multi(lam, [(1,)] * m) ** 2 for lam in partitions_of(m)) != factorial(m)]
    record(2, "sum of (f^lam)^2 = m! for m = 1..7", not bad, f"failing m {bad}" if bad else "")


def test_criterion_03_kostka():
    bad = []
    for d in range(0, 7):
        for nu in partitions_of(d):
            for lam in partitions_of(d):
                if lr_multi(lam, [(x,) for x in nu]) != kostka(lam, nu):
                    bad.append((lam, nu))
    record(3, "one-row LR = Kostka for all lam, nu |- d <= 6", not bad, f"{len(bad)} mismatches" if bad else "")


def test_criterion_04_lr_oracle():
    checked, bad = 0, []
    for d in range(0, 8):
        for a in range(d + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(d - a):
                    expansion = schur_expand(multiply(schur(mu), schur(nu)))
                    for lam in partitions_of(d):
                        checked += 1
                        if expansion.get(lam, 0) != lr_coefficient(lam, mu, nu):
                            bad.append((lam, mu, nu))
    record(4, "LR rule = Schur product expansion, |lam| <= 7", not bad, f"{checked} queries, {len(bad)} bad")


def test_criterion_05_finite_invariants():
    bad = []
    for n in (1, 2, 3):
        for total in range(0, 6):
            for m in (1, 2):
                for profile in compositions(total, m):
                    if finite_invariant_dim(n, profile) != molien_invariant_dim(n, profile):
                        bad.append((n, profile))
    unstable = []
    for d in range(0, 7):
        for m in (1, 2):
            for profile in compositions(d, m):
                stable = sum_lr_squared(d, m, profile)
                for n in range(max(d, 1), d + 3):
                    if finite_invariant_dim(n, profile) != stable:
                        unstable.append((n, profile))
    record(5, "finite-n dims = Molien-Weyl oracle; stable for n >= d <= 6", not bad and not unstable,
           f"{len(bad)} oracle mismatches, {len(unstable)} unstable")


def test_criterion_06_block_stable():
    bad = []
    for m in (2, 3):
        series = stable_block_series(m, 6).univariate()
        for d in range(0, 7):
            for nj in (max(d, 1), d + 1):
                ns = (nj,) * m
                restricted = sum(sum_lr_squared(d, m, p, (sum(ns),) + ns) for p in compositions(d, m))
                if restricted != series[d] or block_invariant_dim(ns, d) != series[d]:
                    bad.append((m, d, nj))
    record(6, "prod 1/(1-m t^k) = restricted LR-squared sums, d <= 6, m in {2,3}", not bad,
           f"mismatches {bad}" if bad else "")


def test_criterion_07_harmonic():
    bad = []
    for m in (2, 3):
        series = harmonic_stable_series(m, 5).univariate()
        for d in range(0, 6):
            for nj in (max(d, 1), d + 1):
                if harmonic_finite_dim((nj,) * m, d) != series[d]:
                    bad.append((m, d, nj))
    pinned = [1, 1, 3, 5, 12]
    computed = harmonic_stable_series(2, 4).univariate()
    record(7, "harmonic dims stabilize to prod (1-t^k)/(1-m t^k); m=2 pinned 1,1,3,5,12",
           not bad and computed == pinned,
           f"stabilization mismatches {bad}; pinned {pinned} vs computed {computed}")


def test_criterion_08_bigraded():
    record(8, "bigraded identity to degree 6", bigraded_identity(6).equal)


def test_criterion_09_orbits():
    start = time.perf_counter()
    bad = [c for d in range(1, 7) for c in strict_compositions(d) if orbit_count_brute(c) != orbit_count_lr(c)]
    elapsed = time.perf_counter() - start
    record(9, "brute-force orbit counts = LR-squared sums, compositions of d <= 6", not bad and elapsed < 120,
           f"mismatches {bad}, {elapsed:.1f}s")


def test_criterion_10_eta():
    bad = []
    for m in (1, 2, 3):
        coeffs = eta_series(m, 6).univariate()
        for d in range(0, 7):
            if coeffs[d] != sum(orbit_count_lr(c) for c in compositions(d, m)):
                bad.append((m, d))
    product_bad = [m for m in (1, 2, 3, 4) if eta_series(m, 8) != stable_block_series(m, 8)]
    record(10, "eta_m = weak-composition LR sums (d <= 6, m <= 3) and = prod 1/(1-m t^k) to degree 8",
           not bad and not product_bad, f"coefficient mismatches {bad}, product mismatches {product_bad}")


def test_criterion_11_glq():
    start = time.perf_counter()
    bad = [(m, q) for m, q in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)]
           if glq_class_count_brute(m, q) != glq_class_series(q, m).coefficient((m,))]
    elapsed = time.perf_counter() - start
    identity_bad = [q for q in (2, 3) if not eta_glq_identity(q, 8).equal]
    record(11, "GL_m(q) brute-force classes = series; eta-GL identity q in {2,3}, D = 8",
           not bad and not identity_bad and elapsed < 60,
           f"brute mismatches {bad}, identity failures {identity_bad}, brute {elapsed:.1f}s")


def kostant_freeness(n, D):
    num = TruncatedSeries.constant(1, 1, D)
    for j in range(1, n + 1):
        num = num * (1 - TruncatedSeries.variable(0, 1, D, j))
    return (num * inverse_one_minus(TruncatedSeries.variable(0, 1, D)) ** (n * n)).univariate()


def test_criterion_12_hesselink():
    examples = (hesselink_multiplicity(2, (1, -1), 6) == {1: 1}
                and hesselink_multiplicity(3, (1, 0, -1), 6) == {1: 1, 2: 1})
    negative = [(n, lam) for n in (2, 3, 4) for lam in dominant_weights(n, -3, 3)
                if any(v < 0 for v in hesselink_multiplicity(n, lam, 6).values())]
    rule_bad = []
    D = 4
    for n in (2, 3):
        total = [0] * (D + 1)
        for lam in dominant_weights(n, -D, D):
            dim = weyl_dimension(n, lam)
            for deg, c in hesselink_multiplicity(n, lam, D).items():
                total[deg] += c * dim
        if total != kostant_freeness(n, D):
            rule_bad.append(n)
    record(12, "Hesselink examples, non-negativity (n <= 4, d <= 6), freeness sum rule (n = 2, 3)",
           examples and not negative and not rule_bad,
           f"examples {'ok' if examples else 'bad'}, {len(negative)} negative, sum rule failures {rule_bad}")


def test_criterion_13_transition_counts():
    bad = []
    for d in range(0, 8):
        for gamma in partitions_of(d):
            row = power_sum_to_monomial(gamma)
            for delta in partitions_of(d):
                if row.get(delta, 0) != count_functions(gamma, delta):
                    bad.append((gamma, delta))
    pair_bad = [delta for d in range(0, 6) for delta in partitions_of(d)
                     if macdonald_corollary_count(delta) != sum_lr_squared(d, max(len(delta), 1),
                                                                           delta if delta else (0,))]
    record(13, "L_(gamma,delta) = function counts (|gamma| <= 7); pair count = LR sum (d <= 5)",
           not bad and not pair_bad, f"{len(bad)} transition mismatches, pair count mismatches {pair_bad}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
