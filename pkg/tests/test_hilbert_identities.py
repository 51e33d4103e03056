import pytest

from lrsq.hilbert_identities import (
    bigraded_cells,
    bigraded_identity,
    bigraded_lhs,
    bigraded_lr_side,
    bigraded_rhs,
    block_invariant_dim,
    compare,
    finite_invariant_dim,
    graded_rhs,
    harmonic_finite_dim,
    harmonic_stable_series,
    is_stable,
    main_formula_lhs,
    main_formula_rhs,
    molien_invariant_dim,
    slot_weight,
    stable_block_series,
    verify_block_stable,
    verify_graded,
    verify_main_formula,
)
from lrsq.lr_engine import sum_lr_squared
from lrsq.partition_core import compositions, partitions_of
from lrsq.power_series import TruncatedSeries
from oracles import geometric, univariate_product


def test_main_formula_lhs_examples():
    assert main_formula_lhs(1, 4).univariate() == [1, 1, 2, 3, 5]
    assert main_formula_lhs(2, 3).coefficient((1, 1)) == 2
    for m in (1, 2, 3):
        assert main_formula_lhs(m, 3).constant_term() == 1


def test_main_formula_rhs_examples():
    assert main_formula_rhs(1, 8).univariate() == [len(partitions_of(d)) for d in range(9)]
    assert main_formula_rhs(2, 2).coefficient((1, 1)) == 2
    assert main_formula_rhs(3, 3).coefficient((1, 1, 1)) == 6


@pytest.mark.parametrize("m,D", [(2, 6), (3, 5), (1, 10)])
def test_verify_main_formula(m, D):
    report = verify_main_formula(m, D)
    assert report.equal
    assert report.first_discrepancy is None


def test_main_formula_parallel_matches_serial():
    assert main_formula_rhs(2, 5, workers=2) == main_formula_rhs(2, 5)


def test_compare_reports_first_discrepancy():
    a = TruncatedSeries(2, 3, {(0, 0): 1, (1, 1): 2, (2, 0): 5})
    b = TruncatedSeries(2, 3, {(0, 0): 1, (1, 1): 3, (2, 0): 4})
    report = compare(a, b)
    assert not report.equal
    assert report.first_discrepancy == (1, 1)
    assert report.to_json()["first_discrepancy"] == [1, 1]
    c = TruncatedSeries(2, 3, {(0, 0): 1, (0, 1): 1, (1, 1): 2, (2, 0): 5})
    assert compare(a, a, other=c).first_discrepancy == (0, 1)


def test_finite_invariant_dim_examples():
    assert finite_invariant_dim(1, (1, 1)) == 1
    assert finite_invariant_dim(2, (1, 1)) == 2
    assert finite_invariant_dim(4, (2, 2)) == main_formula_rhs(2, 4).coefficient((2, 2))


def test_molien_examples():
    assert molien_invariant_dim(1, (2, 1)) == 1
    assert molien_invariant_dim(2, (2,)) == 2
    assert molien_invariant_dim(2, (1, 1)) == 2
    with pytest.raises(ValueError):
        molien_invariant_dim(4, (1,))
    with pytest.raises(ValueError):
        molien_invariant_dim(2, (4, 3))


def test_molien_one_matrix_counts_partitions():
    # one n x n matrix: invariants are polynomials in tr X, ..., tr X^n
    for n in (1, 2, 3):
        for d in range(5):
            assert molien_invariant_dim(n, (d,)) == len(partitions_of(d, max_length=n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_finite_dims_match_molien(n):
    for total in range(0, 6):
        for m in (1, 2):
            for profile in compositions(total, m):
                assert finite_invariant_dim(n, profile) == molien_invariant_dim(n, profile), profile


def test_stabilization_in_n():
    for d in range(0, 7):
        for profile in compositions(d, 2):
            values = [finite_invariant_dim(n, profile) for n in range(1, d + 3)]
            assert values == sorted(values)
            stable = sum_lr_squared(d, 2, profile)
            for n, v in zip(range(1, d + 3), values):
                if is_stable(n, profile):
                    assert v == stable


def test_block_invariant_dim_examples():
    assert block_invariant_dim((1, 1), 1) == 2
    for n in (1, 2, 3):
        for d in range(6):
            assert block_invariant_dim((n,), d) == len(partitions_of(d, max_length=n))


def test_stable_block_series():
    assert stable_block_series(2, 4).univariate() == [1, 2, 6, 14, 34]
    assert stable_block_series(1, 8).univariate() == [len(partitions_of(d)) for d in range(9)]
    D = 10
    assert stable_block_series(3, D).univariate() == univariate_product(
        [geometric(3, k, D) for k in range(1, D + 1)], D)


@pytest.mark.parametrize("m", [2, 3])
def test_block_dims_stabilize(m):
    D = 5
    assert verify_block_stable(m, D).equal
    series = stable_block_series(m, D).univariate()
    for d in range(D + 1):
        assert sum(sum_lr_squared(d, m, p) for p in compositions(d, m)) == series[d]


def test_harmonic_stable_series():
    # dense oracle: prod (1 - t^k) * prod 1/(1 - 2 t^k)
    D = 8
    factors = [[1] + [0] * (k - 1) + [-1] for k in range(1, D + 1)]
    factors += [geometric(2, k, D) for k in range(1, D + 1)]
    want = univariate_product(factors, D)
    assert harmonic_stable_series(2, D).univariate() == want
    assert want[:5] == [1, 1, 3, 6, 14]
    assert harmonic_stable_series(3, 4).constant_term() == 1
    with pytest.raises(ValueError):
        harmonic_stable_series(1, 3)


def test_slot_weight():
    assert [slot_weight(j, 2) for j in range(1, 5)] == [1, 2, 3, 4]
    assert [slot_weight(j, 3) for j in range(1, 7)] == [1, 1, 2, 2, 3, 3]


def test_graded_rhs_examples():
    g = graded_rhs(2, 4).univariate()
    assert g[1] == 1
    assert g[2] == 3


@pytest.mark.parametrize("m", [2, 3, 4])
def test_graded_identity(m):
    assert verify_graded(m, 8 if m == 2 else 6).equal


def test_harmonic_finite_dim_examples():
    assert harmonic_finite_dim((2, 1), 0) == 1
    for n in (1, 2, 3):
        for d in range(1, 5):
            assert harmonic_finite_dim((n,), d) == 0


@pytest.mark.parametrize("m", [2, 3])
def test_harmonic_finite_dims_stabilize(m):
    D = 5 if m == 2 else 4
    stable = harmonic_stable_series(m, D).univariate()
    for d in range(D + 1):
        assert harmonic_finite_dim((max(d, 1),) * m, d) == stable[d]


def test_bigraded_cells():
    assert bigraded_cells(4) == [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)]
    assert bigraded_cells(1) == []


def test_bigraded_examples():
    lhs = bigraded_lhs(6)
    assert lhs.coefficient((1, 1)) == 1
    for d in range(1, 7):
        assert lhs.coefficient((0, d)) == 0
        assert bigraded_rhs(6).coefficient((0, d)) == 0


@pytest.mark.parametrize("D", [2, 4, 6])
def test_bigraded_identity(D):
    report = bigraded_identity(D)
    assert report.equal
    assert report.others["lr_sum"] == bigraded_lr_side(D)
