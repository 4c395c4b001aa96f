import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz_geography.checks import (
    CHECK_IDS,
    REGISTRY,
    UNCONDITIONAL_CHECKS,
    Batch,
    HypothesisError,
    HypothesisFlags,
    UnknownCheckError,
    Verdict,
    get_check,
    min_nonseparating,
    run_all,
    run_check,
)
from lefschetz_geography.invariants import FibrationNumerics, compute_invariants

from .oracle import reference_admissible

F = FibrationNumerics


def test_registry_is_closed_and_ordered():
    assert CHECK_IDS == tuple(f"C{i:02d}" for i in range(1, 23))
    assert len({c.name for c in REGISTRY}) == 22
    assert UNCONDITIONAL_CHECKS == {"C01", "C02", "C20"}


def test_unknown_check_lists_valid_ids():
    with pytest.raises(UnknownCheckError, match="C01, C02"):
        run_check("C99", F(2, 4, [3]))


def test_lookup_by_name():
    assert get_check("g2_sharpness").check_id == "C10"


def test_c01_boundary_case():
    r = run_check("C01", F(2, 4, [3]))
    assert r.verdict is Verdict.HOLDS
    assert (r.lhs, r.rhs) == (6, 6)


def test_c09_minimal_fibration():
    r = run_check("C09", F(2, 4, [3]))
    assert r.holds
    assert r.witness["k"] == 1
    assert r.witness["excess"] == 5


def test_c02_no_separating_branch():
    r = run_check("C02", F(3, 28, [0]))
    assert r.holds
    assert r.witness["slope"] == Fraction(8, 3) == r.witness["floor"]
    assert r.witness["slope_above_floor"] is False and r.witness["has_separating"] is False


def test_c12_example():
    r = run_check("C12", F(2, 6, [2]))
    assert r.holds
    assert (r.lhs, r.rhs) == (4, 6)


def test_run_all_minimal_fibration_all_hold():
    results = run_all(F(2, 4, [3]))
    assert [r.check_id for r in results] == list(CHECK_IDS)
    applicable = [r for r in results if r.verdict is not Verdict.NOT_APPLICABLE]
    assert all(r.holds for r in applicable)
    assert {r.check_id for r in results if r.verdict is Verdict.NOT_APPLICABLE} == {"C22"}


def test_run_all_single_cycle_fails_c09():
    by_id = {r.check_id: r for r in run_all(F(2, 1, [0]))}
    assert by_id["C09"].verdict is Verdict.FAILS
    assert by_id["C09"].witness["combination"] == 1


def test_c10_both_sides_false():
    r = run_check("C10", F(2, 6, [2]))
    assert r.holds
    assert r.witness["two_n_minus_s"] == 10
    assert r.lhs == 4 and r.rhs == 5
    assert r.witness["on_boundary_line"] is False and r.witness["slope_is_sharp"] is False


def test_genus_scope_not_applicable():
    for cid in ("C06", "C10", "C19"):
        assert run_check(cid, F(3, 4, [2])).verdict is Verdict.NOT_APPLICABLE
    assert run_check("C22", F(5, 8, [0, 0])).verdict is Verdict.NOT_APPLICABLE
    assert run_check("C22", F(6, 8, [0, 0, 0])).holds


def test_c11_needs_enough_nonseparating_cycles():
    assert run_check("C11", F(2, 2, [1])).verdict is Verdict.NOT_APPLICABLE
    assert run_check("C11", F(3, 4, [2])).verdict is Verdict.NOT_APPLICABLE
    assert run_check("C11", F(3, 12, [13])).holds


def test_c11_chain_collapses_on_boundary_line():
    r = run_check("C11", F(2, 6, [7]))
    terms = [r.witness[f"term_{i}"] for i in range(1, 7)]
    assert len(set(terms)) == 1 and terms[0] == Fraction(11, 2)


def test_c15_c16_need_integral_chi_h():
    f = F(2, 5, [1])
    assert compute_invariants(f).chi_h.denominator != 1
    assert run_check("C15", f).verdict is Verdict.NOT_APPLICABLE
    assert run_check("C16", f).verdict is Verdict.NOT_APPLICABLE


def test_c16_genus3_boundary_t_equals_one():
    r = run_check("C16", F(3, 4, [2]))
    assert r.holds
    assert r.witness["t"] == 1
    assert r.parts["eleven_n_minus_8s_is_28t"]


def test_treat_as_realizable_turns_conditional_into_not_applicable():
    f = F(2, 1, [0])
    results = {r.check_id: r for r in run_all(f, HypothesisFlags(treat_as_realizable=True))}
    assert results["C09"].verdict is Verdict.NOT_APPLICABLE
    assert results["C01"].holds and results["C02"].holds
    # C14 keeps its unconditional lower half
    assert results["C14"].verdict is Verdict.HOLDS


def test_c14_upper_undefined_for_small_n():
    r = run_check("C14", F(2, 2, [0]))
    assert r.rhs is None
    assert r.parts["upper"] is True


@pytest.mark.parametrize("g, b2plus, expected", [(2, 1, 6), (2, 3, 8), (5, 1, 12), (7, 5, 18)])
def test_min_nonseparating(g, b2plus, expected):
    assert min_nonseparating(g, b2plus, True) == expected


@pytest.mark.parametrize(
    "g, b2plus, sc", [(2, 0, True), (2, 1, False), (2, 2, True), (1, 1, True)]
)
def test_min_nonseparating_rejects_unmet_hypotheses(g, b2plus, sc):
    with pytest.raises(HypothesisError):
        min_nonseparating(g, b2plus, sc)


def test_c13_with_simply_connected_flag():
    # chi_h = 0 at (2,4,[3]) would force b2+ = -1: no simply connected realization
    r = run_check("C13", F(2, 4, [3]), HypothesisFlags(simply_connected=True))
    assert r.verdict is Verdict.FAILS
    assert r.witness["min_nonseparating"] is None
    r = run_check("C13", F(2, 6, [7]), HypothesisFlags(simply_connected=True))
    assert r.holds and r.witness["min_nonseparating"] == 6
    r = run_check("C13", F(2, 6, [7]), HypothesisFlags(simply_connected=True, b2plus=3))
    assert r.verdict is Verdict.FAILS and r.witness["min_nonseparating"] == 8


def test_c02_factored_identity_is_checked():
    r = run_check("C02", F(4, 10, [3, 2]))
    assert r.parts["factored_identity"]
    g, n, x, s = 4, 10, 3 * 3 + 2 * 4, 5
    assert r.rhs == Fraction(4 * (2 * g + 1) * (4 * x - s * g), (n * g + 4 * x) * g)


def _small_box():
    for g in range(2, 7):
        for n in range(1, 25):
            for sep in itertools.product(range(0, 9), repeat=g // 2):
                if sum(sep) <= 8:
                    yield F(g, n, sep)


def test_vectorized_batch_matches_scalar_core():
    by_g = {}
    for f in _small_box():
        by_g.setdefault(f.g, []).append(f)
    for g, fs in by_g.items():
        vec = Batch.from_census(g, [f.n for f in fs], [f.s for f in fs], [f.x for f in fs])
        ref = Batch.from_invariants(g, [(f, compute_invariants(f)) for f in fs])
        for name in ("sigma", "euler", "chi_h", "c1sq", "chi_f", "slope", "ratio"):
            assert getattr(vec, name).to_fractions() == getattr(ref, name).to_fractions(), name
        # same verdicts from both routes, part by part
        for check in REGISTRY:
            if not check.applies_to_genus(g):
                continue
            a, b = check.evaluate(vec), check.evaluate(ref)
            assert np.array_equal(a.applicable, b.applicable)
            for part in a.parts:
                assert np.array_equal(a.parts[part], b.parts[part]), (check.check_id, part)


def test_admissibility_uses_both_conditions():
    for f in _small_box():
        adm = all(r.verdict is not Verdict.FAILS
                  for r in run_all(f, check_ids=["C05"])) and compute_invariants(f).chi_h.denominator == 1
        assert adm == reference_admissible(f.g, f.n, list(f.sep))


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 9), st.integers(1, 120), st.data())
def test_unconditional_checks_hold_everywhere(g, n, data):
    sep = data.draw(st.lists(st.integers(0, 50), min_size=g // 2, max_size=g // 2))
    f = F(g, n, sep)
    for cid in sorted(UNCONDITIONAL_CHECKS):
        assert run_check(cid, f).holds, cid
    assert run_check("C14", f).parts["lower"]


def test_conditional_checks_hold_on_admissible_small_box():
    for f in _small_box():
        if not reference_admissible(f.g, f.n, list(f.sep)):
            continue
        for r in run_all(f):
            assert r.verdict is not Verdict.FAILS, (f, r.check_id, r.parts)


def test_result_serialization():
    d = run_check("C04", F(2, 4, [3])).to_dict()
    assert d["check_id"] == "C04" and d["verdict"] == "holds"
    assert d["lhs"] == "3/4" and d["witness"]["rho_bound"] == "2/1"
    assert d["anchor"].startswith("Ratio estimate")
