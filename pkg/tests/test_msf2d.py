"""Quadratic-field scalars, 2D existence decisions, lattice counting."""

import random
from fractions import Fraction

import pytest

from oracles import brute_lattice_count
from waveset.errors import InputError, PreconditionError
from waveset.msf2d import (
    Mat2,
    QuadScalar,
    floor_sqrt_fraction,
    lattice_count,
    lce_report,
    quad_sqrt,
    rational_sqrt,
    wavelet_set_exists,
)

F = Fraction
I2 = Mat2.identity()
SQRT2 = QuadScalar(0, 1, 2)


# ------------------------------------------------------------ QuadScalar


def test_quad_arithmetic():
    x = QuadScalar(1, 2, 5)  # 1 + 2*sqrt(5)
    y = QuadScalar(3, -1, 5)
    assert x + y == QuadScalar(4, 1, 5)
    assert x * y == QuadScalar(3 - 10, 6 - 1, 5)
    assert (x / x) == QuadScalar(1)
    assert (x * y / y) == x


def test_quad_signs():
    assert QuadScalar(1, 1, 2).sign() == 1
    assert QuadScalar(-1, -1, 2).sign() == -1
    # 3 - 2*sqrt(2) is positive (9 > 8); 2 - 2*sqrt(2) is negative (4 < 8).
    assert QuadScalar(3, -2, 2).sign() == 1
    assert QuadScalar(2, -2, 2).sign() == -1
    assert QuadScalar(-3, 2, 2).sign() == -1
    assert QuadScalar(-2, 2, 2).sign() == 1


def test_quad_comparisons():
    assert QuadScalar(0, 1, 2) > 1
    assert QuadScalar(0, 1, 2) < F(3, 2)


def test_quad_field_tags():
    with pytest.raises(InputError):
        QuadScalar(0, 1, 4)  # not square-free
    with pytest.raises(InputError):
        QuadScalar(0, 1, 2) + QuadScalar(0, 1, 3)  # mixed fields


def test_rational_sqrt():
    assert rational_sqrt(F(9, 4)) == F(3, 2)
    assert rational_sqrt(F(2)) is None
    assert rational_sqrt(F(-1)) is None


def test_quad_sqrt_in_field():
    # sqrt(2) inside Q(sqrt(2)); sqrt(3 + 2 sqrt(2)) = 1 + sqrt(2).
    assert quad_sqrt(QuadScalar(2), 2) == SQRT2
    assert quad_sqrt(QuadScalar(3, 2, 2), 2) == QuadScalar(1, 1, 2)
    assert quad_sqrt(QuadScalar(3), 2) is None
    assert quad_sqrt(QuadScalar(1, 1, 2), 2) is None


# -------------------------------------------------------- existence test


def test_lower_triangular_family_has_no_tiling_set():
    for alpha in (0, 1, F(7, 3)):
        a = Mat2.from_rows([[3, 0], [alpha, F(1, 2)]])
        res = wavelet_set_exists(a, I2)
        assert res.verdict == "not_exists"
        assert res.witness == (0, 1)


def test_upper_triangular_rational_shear_blocks_tiling():
    a = Mat2.from_rows([[3, 1], [0, F(1, 2)]])
    res = wavelet_set_exists(a, I2)
    assert res.verdict == "not_exists"
    assert res.witness == (2, -5)


def test_upper_triangular_irrational_shear_allows_tiling():
    a = Mat2.from_rows([[3, SQRT2], [0, F(1, 2)]])
    assert wavelet_set_exists(a, I2).verdict == "exists"


def test_expansive_always_exists():
    assert wavelet_set_exists(Mat2.from_rows([[2, 0], [0, 2]]), I2).verdict == "exists"


def test_complex_pair_exists():
    # Rotation-dilation: eigenvalues 1 +- 2i, squared modulus 5.
    res = wavelet_set_exists(Mat2.from_rows([[1, -2], [2, 1]]), I2)
    assert res.verdict == "exists"
    assert "complex" in res.detail


def test_unit_eigenvalue_flagged():
    res = wavelet_set_exists(Mat2.from_rows([[1, 1], [0, 3]]), I2)
    assert res.verdict == "exists" and res.unit_eigenvalue


def test_determinant_precondition():
    with pytest.raises(PreconditionError):
        wavelet_set_exists(Mat2.from_rows([[1, 0], [0, 1]]), I2)


def test_singular_lattice_rejected():
    with pytest.raises(PreconditionError):
        wavelet_set_exists(Mat2.from_rows([[3, 0], [0, F(1, 2)]]),
                           Mat2.from_rows([[1, 1], [1, 1]]))


def test_irrational_lattice_unsupported():
    p = Mat2.from_rows([[SQRT2, 0], [0, 1]])
    res = wavelet_set_exists(Mat2.from_rows([[3, 0], [0, F(1, 2)]]), p)
    assert res.verdict == "unsupported"


def test_existence_invariant_under_unimodular_lattice_change():
    rng = random.Random(23)
    unimodulars = [
        Mat2.from_rows([[1, 1], [0, 1]]),
        Mat2.from_rows([[1, 0], [1, 1]]),
        Mat2.from_rows([[0, 1], [-1, 0]]),
        Mat2.from_rows([[2, 1], [1, 1]]),
    ]
    for _ in range(30):
        entries = [[F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(2)] for _ in range(2)]
        a = Mat2.from_rows(entries)
        det = a.det()
        if not (det > 1 or det < -1):
            continue
        base = wavelet_set_exists(a, I2).verdict
        for u in unimodulars:
            assert wavelet_set_exists(a, u).verdict == base


# ------------------------------------------------------- lattice counting


def test_floor_sqrt_fraction():
    assert floor_sqrt_fraction(F(0)) == 0
    assert floor_sqrt_fraction(F(17, 4)) == 2
    assert floor_sqrt_fraction(F(25)) == 5


def test_counts_for_doubling_dilation():
    two_i = Mat2.from_rows([[2, 0], [0, 2]])
    assert lattice_count(two_i, I2, 0) == 5
    assert lattice_count(two_i, I2, 1) == 13


def test_counts_match_brute_force():
    rng = random.Random(31)
    for _ in range(15):
        rows = ((F(rng.randint(1, 3)), F(rng.randint(-2, 2), 2)),
                (F(0), F(rng.randint(1, 3))))
        a = Mat2.from_rows([list(rows[0]), list(rows[1])])
        for j in (-1, 0, 1, 2):
            assert lattice_count(a, I2, j) == brute_lattice_count(rows, j)


def test_count_invariant_under_negated_dilation():
    a = Mat2.from_rows([[2, 1], [0, 3]])
    neg = Mat2.from_rows([[-2, -1], [0, -3]])
    for j in (0, 1, 2):
        assert lattice_count(a, I2, j) == lattice_count(neg, I2, j)


def test_count_origin_only():
    shrink = Mat2.from_rows([[F(1, 3), 0], [0, F(1, 3)]])
    assert lattice_count(shrink, I2, 1) == 1


def test_count_area_envelope():
    # For A = 2I the count tracks the disc area pi * 4^j within a factor 2.
    two_i = Mat2.from_rows([[2, 0], [0, 2]])
    pi_lo, pi_hi = F(157, 50), F(63, 20)
    for j in (3, 4, 5):
        count = lattice_count(two_i, I2, j)
        area_lo, area_hi = pi_lo * F(4) ** j, pi_hi * F(4) ** j
        assert area_lo / 2 <= count <= 2 * area_hi


def test_lce_report_examples():
    two_i = Mat2.from_rows([[2, 0], [0, 2]])
    rep = lce_report(two_i, I2, 0, 4, 5)
    assert [r.count for r in rep.rows] == [5, 13, 49, 197, 797]
    assert rep.all_bounded
    assert rep.rows[0].ratio == 5

    rep_tight = lce_report(two_i, I2, 0, 4, 1)
    assert not rep_tight.all_bounded and rep_tight.witness_j == 0

    rep_origin = lce_report(Mat2.from_rows([[3, 0], [0, 3]]), I2, 0, 0, 5)
    assert rep_origin.rows[0].count == 5


def test_lce_rejects_bad_range():
    with pytest.raises(InputError):
        lce_report(Mat2.from_rows([[2, 0], [0, 2]]), I2, 3, 1, 5)
