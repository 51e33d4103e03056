"""Hilbert series of matrix invariants: product formulas against LR-squared sums.

Every identity is checked by building both sides independently and comparing
coefficient maps exactly.  Stable quantities are always evaluated at a finite
matrix size that is large enough (n >= d); nothing is computed "at infinity".
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import ceil, factorial
from typing import Sequence

from .lr_engine import profile_lr_squared, sum_lr_squared
from .power_series import (
    Exponent,
    TruncatedSeries,
    exponents_up_to,
    inverse_one_minus,
    product_over_k,
    substitute,
)

MOLIEN_MAX_N = 3
MOLIEN_MAX_DEGREE = 6


@dataclass
class IdentityReport:
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    equal: bool
    first_discrepancy: Exponent | None = None
    others: dict[str, TruncatedSeries] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "equal": self.equal,
            "first_discrepancy": list(self.first_discrepancy) if self.first_discrepancy else None,
        }
        for name, series in sorted(self.others.items()):
            out[name] = series.to_json()
        return out


def compare(lhs: TruncatedSeries, rhs: TruncatedSeries, **others: TruncatedSeries) -> IdentityReport:
    """Compare two or more series coefficient-wise; the first mismatch is the lex-smallest exponent."""
    bad: list[Exponent] = []
    for other in (rhs, *others.values()):
        lhs._check_shape(other)
        keys = set(lhs.coeffs) | set(other.coeffs)
        bad.extend(e for e in keys if lhs.coeffs.get(e, 0) != other.coeffs.get(e, 0))
    first = min(bad) if bad else None
    return IdentityReport(lhs, rhs, first is None, first, dict(others))


# main formula

def main_formula_lhs(m: int, D: int) -> TruncatedSeries:
    """prod_k 1 / (1 - (t_1^k + ... + t_m^k)) to total degree D."""
    if m < 1:
        raise ValueError("m must be positive")

    def factor(k):
        s = sum((TruncatedSeries.variable(j, m, D, power=k) for j in range(m)),
                TruncatedSeries(m, D))
        return inverse_one_minus(s)

    return product_over_k(factor, D)


def _rhs_coefficient(exp: Exponent) -> tuple[Exponent, int]:
    return exp, profile_lr_squared(exp)


def main_formula_rhs(m: int, D: int, workers: int = 1) -> TruncatedSeries:
    """sum over lam, mus of (c^lam_mus)^2 t^{|mus|}, one LR-squared sum per exponent vector."""
    if m < 1:
        raise ValueError("m must be positive")
    exps = list(exponents_up_to(m, D))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            coeffs = dict(pool.map(_rhs_coefficient, exps, chunksize=8))
    else:
        coeffs = dict(map(_rhs_coefficient, exps))
    return TruncatedSeries(m, D, coeffs)


def verify_main_formula(m: int, D: int, workers: int = 1) -> IdentityReport:
    return compare(main_formula_lhs(m, D), main_formula_rhs(m, D, workers))


# finite n and the Molien-Weyl oracle

def finite_invariant_dim(n: int, profile: Sequence[int]) -> int:
    """dim C[M_n^m]^{GL_n} in multidegree profile: the LR-squared sum with l(lam) <= n."""
    if n < 1:
        raise ValueError("n must be positive")
    profile = tuple(profile)
    return sum_lr_squared(sum(profile), len(profile), profile, (n,))


def is_stable(n: int, profile: Sequence[int]) -> bool:
    """True when n >= total degree, so the length bound on lam is vacuous."""
    return n >= sum(profile)


def _laurent_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _complete_homogeneous(weights: list[tuple[int, ...]], d: int, n: int) -> dict:
    """h_d evaluated on the monomials x^w: the degree-d part of prod_w 1/(1 - t x^w)."""
    # layers[k] = degree-k part after processing a prefix of the weights
    layers = [{(0,) * n: 1}] + [{} for _ in range(d)]
    for w in weights:
        new = [dict(layer) for layer in layers]
        for k in range(1, d + 1):
            # new[k] = layers[k] + x^w * new[k-1]
            for e, c in new[k - 1].items():
                key = tuple(x + y for x, y in zip(e, w))
                new[k][key] = new[k].get(key, 0) + c
        layers = new
    return {e: c for e, c in layers[d].items() if c}


def molien_invariant_dim(n: int, profile: Sequence[int]) -> int:
    """Invariant dimension by Weyl integration over the maximal torus of U(n).

    (1/n!) * CT[ prod_{i != j} (1 - x_i/x_j) * prod_l h_{d_l}(x_i/x_j : all i, j) ].
    The adjoint character has weights x_i/x_j, including n copies of the trivial weight.
    """
    profile = tuple(profile)
    if not 1 <= n <= MOLIEN_MAX_N:
        raise ValueError(f"Molien oracle supports 1 <= n <= {MOLIEN_MAX_N}, got n={n}")
    if any(d < 0 for d in profile) or sum(profile) > MOLIEN_MAX_DEGREE:
        raise ValueError(f"Molien oracle supports total degree <= {MOLIEN_MAX_DEGREE}, got {sum(profile)}")

    def unit(i, j):
        v = [0] * n
        v[i] += 1
        v[j] -= 1
        return tuple(v)

    weights = [unit(i, j) for i in range(n) for j in range(n)]
    integrand = {(0,) * n: 1}
    for i in range(n):
        for j in range(n):
            if i != j:
                integrand = _laurent_mul(integrand, {(0,) * n: 1, unit(i, j): -1})
    for d in profile:
        integrand = _laurent_mul(integrand, _complete_homogeneous(weights, d, n))
    ct = integrand.get((0,) * n, 0)
    if ct % factorial(n):
        raise ArithmeticError(f"constant term {ct} not divisible by {n}!")
    return ct // factorial(n)


# block diagonal K(n) = GL_{n_1} x ... x GL_{n_m}

def block_invariant_dim(ns: Sequence[int], d: int) -> int:
    """dim C[M_n]^{K(ns)}_d: LR-squared sum with l(lam) <= sum(ns), l(mu(j)) <= n_j."""
    ns = tuple(ns)
    if not ns or any(x < 1 for x in ns):
        raise ValueError("block sizes must be positive")
    return sum_lr_squared(d, len(ns), None, (sum(ns),) + ns)


def stable_block_series(m: int, D: int) -> TruncatedSeries:
    """prod_k 1/(1 - m t^k)."""
    return product_over_k(lambda k: inverse_one_minus(TruncatedSeries.variable(0, 1, D, k, m)), D)


def harmonic_stable_series(m: int, D: int) -> TruncatedSeries:
    """prod_k (1 - t^k)/(1 - m t^k)."""
    if m < 2:
        raise ValueError("m must be at least 2")

    def factor(k):
        tk = TruncatedSeries.variable(0, 1, D, k)
        return (1 - tk) * inverse_one_minus(tk * m)

    return product_over_k(factor, D)


def slot_weight(j: int, m: int) -> int:
    """Grade of tensor slot j (1-based): slots come in blocks of m-1 with weights 1, 2, 3, ..."""
    return ceil(j / (m - 1))


def graded_rhs(m: int, D: int) -> TruncatedSeries:
    """sum (c^lam_mus)^2 t^{grade(mus)}, grade = sum_j slot_weight(j) |mu(j)|."""
    if m < 2:
        raise ValueError("m must be at least 2")
    weights = [slot_weight(j, m) for j in range(1, D * (m - 1) + 1)]
    coeffs = [0] * (D + 1)

    def rec(j, grade, sizes):
        if j == len(weights):
            coeffs[grade] += profile_lr_squared(sizes)
            return
        a = 0
        while grade + a * weights[j] <= D:
            rec(j + 1, grade + a * weights[j], sizes + [a] if a else sizes)
            a += 1

    rec(0, 0, [])
    return TruncatedSeries.from_univariate(coeffs)


def verify_graded(m: int, D: int) -> IdentityReport:
    return compare(harmonic_stable_series(m, D), graded_rhs(m, D))


def harmonic_finite_dim(ns: Sequence[int], d: int) -> int:
    """dim H^d(M_n)^{K(ns)} from C[M_n]^K = C[M_n]^{GL_n} (x) H^K.

    The coefficient of t^d in (sum_e a^(ns)(e) t^e) * prod_{j<=n} (1 - t^j).
    """
    ns = tuple(ns)
    n = sum(ns)
    if d < 0:
        raise ValueError("d must be non-negative")
    poly = TruncatedSeries.constant(1, 1, d)
    for j in range(1, n + 1):
        poly = poly * (1 - TruncatedSeries.variable(0, 1, d, j))
    num = poly.univariate()
    return sum(block_invariant_dim(ns, e) * num[d - e] for e in range(d + 1))


def verify_block_stable(m: int, D: int) -> IdentityReport:
    """Block dimensions at n_j = D against prod_k 1/(1 - m t^k)."""
    ns = (max(D, 1),) * m
    coeffs = [block_invariant_dim(ns, d) for d in range(D + 1)]
    return compare(stable_block_series(m, D), TruncatedSeries.from_univariate(coeffs))


# the bigraded specialization

def bigraded_cells(D: int) -> list[tuple[int, int]]:
    """Cells (i, j), i, j >= 1, of q^i t^j with i + j <= D, numbered along anti-diagonals."""
    return [(i, s - i) for s in range(2, D + 1) for i in range(s - 1, 0, -1)]


def bigraded_lhs(D: int) -> TruncatedSeries:
    """prod_k 1 / (1 - sum_{i,j>=1} (q^i t^j)^k) in variables (q, t)."""
    names = ("q", "t")

    def factor(k):
        s = TruncatedSeries(2, D, {(i * k, j * k): 1 for i, j in bigraded_cells(D)}, names)
        return inverse_one_minus(s)

    return product_over_k(factor, D)


def bigraded_rhs(D: int) -> TruncatedSeries:
    """prod_k (1 - q^k)(1 - t^k) / (1 - (q^k + t^k))."""
    names = ("q", "t")

    def factor(k):
        qk = TruncatedSeries.variable(0, 2, D, k, names=names)
        tk = TruncatedSeries.variable(1, 2, D, k, names=names)
        return (1 - qk) * (1 - tk) * inverse_one_minus(qk + tk)

    return product_over_k(factor, D)


def bigraded_lr_side(D: int) -> TruncatedSeries:
    """The main-formula LR sum in variables z_s, specialized by z_s -> q^i t^j."""
    cells = bigraded_cells(D)
    if not cells:
        return TruncatedSeries.constant(1, 2, D, ("q", "t"))
    # each z_s has (q, t)-degree >= 2, so z-degree D // 2 is enough
    z_series = main_formula_rhs(len(cells), D // 2)
    return substitute(z_series, cells, D, ("q", "t"))


def bigraded_identity(D: int) -> IdentityReport:
    return compare(bigraded_lhs(D), bigraded_rhs(D), lr_sum=bigraded_lr_side(D))
