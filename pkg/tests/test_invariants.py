from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz_geography.invariants import (
    FibrationNumerics,
    InvalidFibration,
    compute_invariants,
    signature,
    signature_from_slope,
    slope,
    slope_alternate_forms,
    weighted_separating_sum,
)

from .oracle import reference_invariants


@st.composite
def censuses(draw, g_max=12, n_max=200, s_max=60):
    g = draw(st.integers(2, g_max))
    n = draw(st.integers(1, n_max))
    sep = draw(st.lists(st.integers(0, s_max), min_size=g // 2, max_size=g // 2))
    return FibrationNumerics(g, n, sep)


@pytest.mark.parametrize(
    "g, n, sep, x, s",
    [(2, 9, [5], 5, 5), (3, 9, [4], 8, 4), (4, 9, [1, 1], 7, 2)],
)
def test_weighted_separating_sum(g, n, sep, x, s):
    f = FibrationNumerics(g, n, sep)
    assert weighted_separating_sum(f) == x
    assert f.s == s


@pytest.mark.parametrize(
    "g, n, sep, expected",
    [(2, 6, [2], -4), (2, 4, [3], -3), (3, 28, [0], -16)],
)
def test_signature_examples(g, n, sep, expected):
    assert signature(FibrationNumerics(g, n, sep)) == expected


def test_signature_matches_local_formula_genus2():
    # genus 2 local signature: -3n/5 - s/5
    for n in range(1, 30):
        for s in range(0, 30):
            assert signature(FibrationNumerics(2, n, [s])) == Fraction(-3 * n - s, 5)


def test_minimal_genus2_fixture():
    inv = compute_invariants(FibrationNumerics(2, 4, [3]))
    assert (inv.sigma, inv.euler, inv.chi_h, inv.c1sq, inv.slope) == (-3, 3, 0, -3, 5)
    assert inv.k_f_sq == 5 and inv.chi_f == 1 and inv.ratio == Fraction(3, 4)


def test_classical_no_separating_genus2():
    inv = compute_invariants(FibrationNumerics(2, 20, [0]))
    assert (inv.chi_h, inv.sigma, inv.euler, inv.slope) == (1, -12, 16, 2)


def test_genus3_boundary_census():
    inv = compute_invariants(FibrationNumerics(3, 4, [2]))
    assert inv.chi_h == -1
    assert inv.slope == 6 == Fraction(4 * (8 + 34), 12 + 16)


@pytest.mark.parametrize(
    "g, n, sep, expected",
    [(2, 4, [3], 5), (2, 6, [2], 4), (5, 1, [0, 0], Fraction(16, 5)), (5, 37, [0, 0], Fraction(16, 5))],
)
def test_slope_examples(g, n, sep, expected):
    assert slope(FibrationNumerics(g, n, sep)) == expected


@pytest.mark.parametrize(
    "g, n, sep, expected",
    [(2, 4, [3], 5), (3, 28, [0], Fraction(8, 3)), (2, 6, [2], 4)],
)
def test_slope_alternate_form_examples(g, n, sep, expected):
    assert slope_alternate_forms(FibrationNumerics(g, n, sep)) == (expected,) * 3


@pytest.mark.parametrize("lam, total, expected", [(8, 17, 0), (4, 8, -4), (5, 7, -3)])
def test_signature_from_slope_examples(lam, total, expected):
    assert signature_from_slope(lam, total) == expected


def test_signature_from_slope_rejects_twelve():
    with pytest.raises(ValueError, match="12"):
        signature_from_slope(12, 5)


@pytest.mark.parametrize(
    "args, match",
    [
        ((1, 4, []), "g >= 2"),
        ((2, 0, [3]), "n >= 1"),
        ((2, 4, [-1]), "nonnegative"),
        ((4, 4, [1]), "exactly g//2"),
        ((3, 4, [1, 1]), "exactly g//2"),
        ((2, 4.5, [1]), "integer"),
    ],
)
def test_invalid_census(args, match):
    with pytest.raises(InvalidFibration, match=match):
        FibrationNumerics(*args)


def test_from_counts_sparse():
    f = FibrationNumerics.from_counts(6, 10, {3: 2})
    assert f.sep == (0, 0, 2)
    with pytest.raises(InvalidFibration, match="h"):
        FibrationNumerics.from_counts(6, 10, {4: 1})


def test_ordering_is_lexicographic():
    a = FibrationNumerics(2, 4, [3])
    b = FibrationNumerics(2, 5, [0])
    c = FibrationNumerics(3, 1, [0])
    assert sorted([c, b, a]) == [a, b, c]


@settings(max_examples=300, deadline=None)
@given(censuses())
def test_matches_reference_definitions(f):
    ref = reference_invariants(f.g, f.n, list(f.sep))
    inv = compute_invariants(f)
    for key, value in ref.items():
        assert getattr(inv, key) == value, key


@settings(max_examples=300, deadline=None)
@given(censuses())
def test_slope_formulas_agree(f):
    inv = compute_invariants(f)
    lam = slope(f)
    assert lam == inv.slope == (inv.c1sq + 8 * (f.g - 1)) / inv.chi_f
    assert slope_alternate_forms(f) == (lam, lam, lam)


@settings(max_examples=300, deadline=None)
@given(censuses())
def test_structural_identities(f):
    g = f.g
    inv = compute_invariants(f)
    assert inv.euler == f.n + inv.s - 4 * (g - 1)
    assert inv.k_f_sq == inv.c1sq + 8 * (g - 1)
    assert inv.chi_f == inv.chi_h + g - 1 == Fraction(f.n * g + 4 * inv.x, 4 * (2 * g + 1))
    assert inv.chi_f > 0
    assert 4 * inv.chi_h == inv.sigma + inv.euler
    assert inv.c1sq == 2 * inv.euler + 3 * inv.sigma


@settings(max_examples=300, deadline=None)
@given(censuses())
def test_signature_round_trip(f):
    assert signature_from_slope(slope(f), f.n + f.s) == signature(f)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 40), st.integers(1, 10**6))
def test_no_separating_slope_floor(g, n):
    f = FibrationNumerics(g, n, [0] * (g // 2))
    assert slope(f) == 4 - Fraction(4, g)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 500), st.integers(0, 500))
def test_low_genus_closed_forms(n, s):
    assert slope(FibrationNumerics(2, n, [s])) == Fraction(2 * (n + 7 * s), n + 2 * s)
    assert slope(FibrationNumerics(3, n, [s])) == Fraction(4 * (2 * n + 17 * s), 3 * n + 8 * s)


def test_arbitrary_precision():
    f = FibrationNumerics(10**6 + 1, 10**30, [0] * ((10**6 + 1) // 2 - 1) + [10**25])
    inv = compute_invariants(f)
    assert slope_alternate_forms(f) == (inv.slope,) * 3
    assert signature_from_slope(inv.slope, f.n + f.s) == inv.sigma
