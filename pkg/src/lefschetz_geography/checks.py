"""Registry of the named bounds, equivalences and divisibility laws C01..C22.

Every check is written once, against a :class:`Batch`: the exact invariants of
many censuses that share one genus, stored as :class:`RatArray` columns.  A
single census is just a batch of length one, so :func:`run_check` and the
vectorized sweeps in :mod:`lefschetz_geography.enumeration` evaluate the very
same inequalities.

Checks come in two classes.  *Unconditional* parts are identities that follow
from the signature formula alone and must hold for every census.  *Conditional*
parts additionally rely on the signature bound ``sigma <= n - s - 4`` (check
C05) and on integrality of ``chi_h``; they are only guaranteed for admissible
censuses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from .invariants import FibrationNumerics, InvariantSet, compute_invariants
from .ratarray import RatArray

__all__ = [
    "Verdict",
    "CheckResult",
    "Check",
    "Batch",
    "BatchVerdict",
    "HypothesisFlags",
    "UnknownCheckError",
    "HypothesisError",
    "REGISTRY",
    "CHECK_IDS",
    "UNCONDITIONAL_CHECKS",
    "get_check",
    "run_check",
    "run_all",
    "admissibility_masks",
    "min_nonseparating",
]


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"


class UnknownCheckError(ValueError):
    pass


class HypothesisError(ValueError):
    """A hypothesis required by a statement (simple connectivity, b2+ >= 1) is not met."""


@dataclass(frozen=True)
class HypothesisFlags:
    """Optional hypotheses for :func:`run_all`.

    With ``treat_as_realizable`` the admissibility conditions (integral chi_h
    and C05) act as a filter: conditional checks on an inadmissible census are
    reported ``not_applicable`` instead of ``fails``.  ``simply_connected``
    together with ``b2plus`` adds the minimum-n requirement to C13.
    """

    treat_as_realizable: bool = False
    simply_connected: bool = False
    b2plus: int | None = None


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    verdict: Verdict
    lhs: Fraction | None
    rhs: Fraction | None
    witness: dict = field(default_factory=dict)
    anchor: str = ""
    parts: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "verdict": self.verdict.value,
            "lhs": _fmt(self.lhs),
            "rhs": _fmt(self.rhs),
            "parts": dict(self.parts),
            "witness": {k: _fmt(v) for k, v in self.witness.items()},
            "anchor": self.anchor,
        }


def _fmt(value):
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


# ---------------------------------------------------------------------------
# Batches of invariants
# ---------------------------------------------------------------------------


@dataclass
class Batch:
    """Exact invariants of censuses sharing genus ``g``, one entry per census."""

    g: int
    n: RatArray
    s: RatArray
    x: RatArray
    sigma: RatArray
    euler: RatArray
    chi_h: RatArray
    c1sq: RatArray
    chi_f: RatArray
    slope: RatArray
    ratio: RatArray

    @classmethod
    def from_census(cls, g: int, n, s, x) -> "Batch":
        """Vectorized invariants straight from integer arrays ``n, s, x``."""
        N, S, X = RatArray(n), RatArray(s), RatArray(x)
        sigma = (4 * X - (g + 1) * N) / (2 * g + 1) - S
        euler = N + S - 4 * (g - 1)
        chi_f = (g * N + 4 * X) / (4 * (2 * g + 1))
        c1sq = 2 * euler + 3 * sigma
        return cls(
            g=g,
            n=N,
            s=S,
            x=X,
            sigma=sigma,
            euler=euler,
            chi_h=chi_f - (g - 1),
            c1sq=c1sq,
            chi_f=chi_f,
            slope=(c1sq + 8 * (g - 1)) / chi_f,
            ratio=S / N,
        )

    @classmethod
    def from_invariants(cls, g: int, rows: Iterable[tuple[FibrationNumerics, InvariantSet]]) -> "Batch":
        rows = list(rows)
        col = lambda get: RatArray.from_fractions([get(f, inv) for f, inv in rows])  # noqa: E731
        return cls(
            g=g,
            n=col(lambda f, inv: f.n),
            s=col(lambda f, inv: inv.s),
            x=col(lambda f, inv: inv.x),
            sigma=col(lambda f, inv: inv.sigma),
            euler=col(lambda f, inv: inv.euler),
            chi_h=col(lambda f, inv: inv.chi_h),
            c1sq=col(lambda f, inv: inv.c1sq),
            chi_f=col(lambda f, inv: inv.chi_f),
            slope=col(lambda f, inv: inv.slope),
            ratio=col(lambda f, inv: inv.ratio),
        )

    def __len__(self) -> int:
        return len(self.n)


def admissibility_masks(batch: Batch) -> dict[str, np.ndarray]:
    """Boolean masks for the two necessary conditions used as filters."""
    return {
        "integral_chi_h": batch.chi_h.is_integer(),
        "signature_bound_c05": batch.sigma <= batch.n - batch.s - 4,
    }


@dataclass
class BatchVerdict:
    applicable: np.ndarray
    parts: dict[str, np.ndarray]
    lhs: RatArray
    rhs: RatArray
    witness: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Check:
    check_id: str
    name: str
    anchor: str
    scope: str
    applies_to_genus: Callable[[int], bool]
    evaluate: Callable[[Batch], BatchVerdict]
    unconditional_parts: frozenset = frozenset()

    @property
    def unconditional(self) -> bool:
        """True when every part is an identity needing no admissibility."""
        return self.check_id in UNCONDITIONAL_CHECKS


def _all(shape_like: RatArray) -> np.ndarray:
    return np.ones(shape_like.shape, dtype=bool)


def _undefined_unless(values: RatArray, when: np.ndarray) -> RatArray:
    return RatArray(np.where(when, values.num, 0), np.where(when, values.den, 0), reduced=True)


def _vacuous(mask: np.ndarray, when: np.ndarray) -> np.ndarray:
    """``mask`` where ``when`` holds, True elsewhere."""
    return mask | ~when


# ---------------------------------------------------------------------------
# The checks
# ---------------------------------------------------------------------------


def _c01(b: Batch) -> BatchVerdict:
    g = b.g
    lhs, rhs = b.s * g, 2 * b.x
    refined = b.s * (g - 1)
    return BatchVerdict(
        applicable=_all(b.n),
        parts={"sg_le_2x": lhs <= rhs, "s_gm1_le_x": refined <= b.x},
        lhs=lhs,
        rhs=rhs,
        witness={"x": b.x, "s_times_g_minus_1": refined},
    )


def _c02(b: Batch) -> BatchVerdict:
    g = b.g
    floor = Fraction(4) - Fraction(4, g)
    diff = b.slope - floor
    factored = 4 * (2 * g + 1) * (4 * b.x - g * b.s) / ((g * b.n + 4 * b.x) * g)
    above = b.slope > floor
    separating = ~b.s.is_zero()
    return BatchVerdict(
        applicable=_all(b.n),
        parts={"biconditional": above == separating, "factored_identity": diff == factored},
        lhs=diff,
        rhs=factored,
        witness={"slope": b.slope, "floor": floor, "slope_above_floor": above, "has_separating": separating},
    )


def _c03(b: Batch) -> BatchVerdict:
    return BatchVerdict(_all(b.n), {"ratio_le_5": b.ratio <= 5}, b.ratio, RatArray(np.full(b.n.shape, 5)))


def _t_value(b: Batch) -> RatArray:
    g = b.g
    return ((3 * g + 2) * b.n - 4 * b.x) / (4 * (2 * g + 1))


def _c04(b: Batch) -> BatchVerdict:
    g = b.g
    bound = Fraction(3 * g + 2, 4 * (g - 1))
    sharp = bound - Fraction(2 * g + 1, g - 1) / b.n
    return BatchVerdict(
        applicable=_all(b.n),
        parts={"ratio_le_rho_bound": b.ratio <= bound, "ratio_le_sharp_bound": b.ratio <= sharp},
        lhs=b.ratio,
        rhs=sharp,
        witness={"x": b.x, "s_times_g_minus_1": b.s * (g - 1), "t": _t_value(b), "rho_bound": bound},
    )


def _c05(b: Batch) -> BatchVerdict:
    rhs = b.n - b.s - 4
    return BatchVerdict(_all(b.n), {"sigma_le_n_minus_s_minus_4": b.sigma <= rhs}, b.sigma, rhs)


def _c06(b: Batch) -> BatchVerdict:
    rhs = 6 * b.chi_h - 3
    return BatchVerdict(
        applicable=_all(b.n),
        parts={"c1sq_le_6chih_minus_3": b.c1sq <= rhs, "noether_identity": b.c1sq == 2 * b.chi_h - 6 + b.s},
        lhs=b.c1sq,
        rhs=rhs,
        witness={"chi_h": b.chi_h, "s": b.s},
    )


def _c07(b: Batch) -> BatchVerdict:
    floor = 0 if b.g == 2 else -1
    rhs = RatArray(np.full(b.n.shape, floor))
    return BatchVerdict(_all(b.n), {"chi_h_lower": b.chi_h >= rhs}, b.chi_h, rhs)


def _c08(b: Batch) -> BatchVerdict:
    if b.g == 2:
        rhs = 6 - 1 / (b.chi_h + 1)
    else:
        rhs = Fraction(29, 4) - Fraction(5, 4) / (b.chi_h + 2)
    return BatchVerdict(_all(b.n), {"slope_upper": b.slope <= rhs}, b.slope, rhs, {"chi_h": b.chi_h})


def _c09(b: Batch) -> BatchVerdict:
    N, S = b.n, b.s
    if b.g == 2:
        combo, modulus, excess, floor, shift = 2 * S + N, 10, 2 * N - S, 5, 1
    else:
        combo, modulus, excess, floor, shift = 3 * N + 8 * S, 28, 11 * N - 8 * S, 28, 2
    k = combo / modulus
    return BatchVerdict(
        applicable=_all(b.n),
        parts={
            "k_positive_integer": k.is_integer() & (k >= 1),
            "excess_lower": excess >= floor,
            "k_equals_chi_h_shift": k == b.chi_h + shift,
        },
        lhs=excess,
        rhs=RatArray(np.full(b.n.shape, floor)),
        witness={"k": k, "combination": combo, "excess": excess},
    )


def _c10(b: Batch) -> BatchVerdict:
    boundary = (2 * b.n - b.s) == 5
    bound = 6 - 1 / (b.chi_h + 1)
    sharp = b.slope == bound
    return BatchVerdict(
        applicable=_all(b.n),
        parts={"biconditional": boundary == sharp},
        lhs=b.slope,
        rhs=bound,
        witness={"two_n_minus_s": 2 * b.n - b.s, "on_boundary_line": boundary, "slope_is_sharp": sharp},
    )


def _chain_terms(b: Batch) -> list[RatArray]:
    N, S = b.n, b.s
    if b.g == 2:
        return [
            2 * (N + 7 * S) / (N + 2 * S),
            2 * (1 + 3 * S) / (1 + S),
            2 * (6 * S + 3 * N - 5) / (2 * S + N),
            2 * (3 * N - 7) / (N - 2),
            10 * (S + N - 2) / (2 * S + N),
            2 * (5 * N - S - 12) / (N - 2),
        ]
    return [
        4 * (2 * N + 17 * S) / (3 * N + 8 * S),
        (29 * S + 8) / (4 * S + 3),
        (87 * N + 232 * S - 140) / (4 * (3 * N + 8 * S)),
        (29 * N - 68) / (4 * (N - 2)),
        2 * (15 * N + 26 * S - 28) / (3 * N + 8 * S),
        2 * (5 * N - S - 12) / (N - 2),
    ]


def _c11(b: Batch) -> BatchVerdict:
    terms = _chain_terms(b)
    min_n = 4 if b.g == 2 else 8
    parts = {f"step_{i + 1}": terms[i] <= terms[i + 1] for i in range(len(terms) - 1)}
    return BatchVerdict(
        applicable=b.n >= min_n,
        parts=parts,
        lhs=terms[0],
        rhs=terms[-1],
        witness={f"term_{i + 1}": t for i, t in enumerate(terms)},
    )


def _c12(b: Batch) -> BatchVerdict:
    rhs = 10 - (2 + b.s) / b.chi_f
    return BatchVerdict(
        applicable=_all(b.n),
        parts={"slope_le_refined": b.slope <= rhs, "slope_le_10": b.slope <= 10},
        lhs=b.slope,
        rhs=rhs,
        witness={"chi_f": b.chi_f},
    )


def _c13(b: Batch) -> BatchVerdict:
    lhs = 2 * b.chi_h + 2 * b.g
    return BatchVerdict(_all(b.n), {"n_lower": lhs <= b.n}, lhs, b.n, {"chi_h": b.chi_h})


def _c14(b: Batch) -> BatchVerdict:
    g, N, S = b.g, b.n, b.s
    lower = Fraction(4 * (g - 1), g) + (4 * S / g) * ((2 * g + 1) * (3 * g - 4)) / (g * N + 4 * S * (g - 1))
    upper = 10 - 2 * (2 + S) / (N - 2)
    has_upper = N > 2
    return BatchVerdict(
        applicable=_all(b.n),
        parts={"lower": lower <= b.slope, "upper": _vacuous(b.slope <= upper, has_upper)},
        lhs=b.slope,
        rhs=_undefined_unless(upper, has_upper),
        witness={"lower_bound": lower},
    )


def _c15(b: Batch) -> BatchVerdict:
    g = b.g
    n = b.n.num
    parts = {"gn_divisible_by_4": (g * n) % 4 == 0}
    if g % 2 == 1:
        parts["n_divisible_by_4"] = n % 4 == 0
    elif g % 4 == 2:
        parts["n_even"] = n % 2 == 0
    residue = RatArray((g * n) % 4)
    return BatchVerdict(
        applicable=b.chi_h.is_integer(),
        parts=parts,
        lhs=residue,
        rhs=RatArray(np.zeros(n.shape, dtype=np.int64)),
        witness={"n_mod_4": RatArray(n % 4)},
    )


def _c16(b: Batch) -> BatchVerdict:
    g, N, S = b.g, b.n, b.s
    total = b.sigma + N + S
    quarter = total / 4
    parts = {
        "sum_divisible_by_4": quarter.is_integer(),
        "sum_equals_4_chi_f": total == 4 * b.chi_f,
    }
    t = _t_value(b)
    witness = {"sigma_plus_n_plus_s": total, "t": t}
    parts["t_identity"] = t == (N - S - b.sigma) / 4
    if g % 4 != 0:
        parts["t_integer"] = t.is_integer()
        parts["t_positive"] = t >= 1
        lhs, rhs = t, RatArray(np.ones(N.shape, dtype=np.int64))
    else:
        lhs, rhs = total, 4 * b.chi_f
    if g == 2:
        parts["two_n_minus_s_is_5_n_plus_sigma"] = 2 * N - S == 5 * (N + b.sigma)
    elif g == 3:
        parts["eleven_n_minus_8s_is_28t"] = 11 * N - 8 * S == 28 * t
    return BatchVerdict(b.chi_h.is_integer(), parts, lhs, rhs, witness)


def _c17(b: Batch) -> BatchVerdict:
    if b.g == 2:
        first = -2 * b.chi_h - 3
        second = -b.euler / 3 - 2
    else:
        first = Fraction(-3, 4) * b.chi_h - Fraction(11, 4)
        second = Fraction(-3, 19) * b.euler - Fraction(44, 19)
    return BatchVerdict(
        applicable=_all(b.n),
        parts={"sigma_vs_chi_h": b.sigma <= first, "sigma_vs_euler": b.sigma <= second},
        lhs=b.sigma,
        rhs=first,
        witness={"euler_bound": second, "chi_h": b.chi_h, "euler": b.euler},
    )


def _c18(b: Batch) -> BatchVerdict:
    if b.g == 2:
        rhs = (4 * b.chi_h + 3) / (2 * b.chi_h + 4)
    else:
        rhs = (11 * b.chi_h + 19) / (8 * (b.chi_h + 3))
    return BatchVerdict(_all(b.n), {"ratio_vs_chi_h": b.ratio <= rhs}, b.ratio, rhs, {"chi_h": b.chi_h})


def _c19(b: Batch) -> BatchVerdict:
    zero = RatArray(np.zeros(b.n.shape, dtype=np.int64))
    return BatchVerdict(_all(b.n), {"sigma_negative": b.sigma < zero}, b.sigma, zero)


def _c20(b: Batch) -> BatchVerdict:
    g = b.g
    avg = b.sigma / (b.n + b.s)
    bound = Fraction(-(g + 1), 2 * g + 1)
    separating = ~b.s.is_zero()
    return BatchVerdict(
        applicable=_all(b.n),
        parts={"average_lower": avg >= bound, "strict_if_separating": _vacuous(avg > bound, separating)},
        lhs=avg,
        rhs=RatArray.from_fractions([bound]).reshape(()) + 0 * b.n,
    )


def _c21(b: Batch) -> BatchVerdict:
    bound = Fraction(3) + Fraction(2, b.g)
    return BatchVerdict(_all(b.n), {"ratio_lt_bound": b.ratio < bound}, b.ratio, 0 * b.n + bound)


def _c22(b: Batch) -> BatchVerdict:
    return BatchVerdict(_all(b.n), {"s_le_n": b.s <= b.n}, b.s, b.n)


def _any(g: int) -> bool:
    return True


def _genus2(g: int) -> bool:
    return g == 2


def _genus2or3(g: int) -> bool:
    return g in (2, 3)


def _genus_ge6(g: int) -> bool:
    return g >= 6


REGISTRY: tuple[Check, ...] = (
    Check("C01", "lemma_sg_le_2x", "Lemma: s*g <= 2x for g >= 2, refined to s*(g-1) <= x", "all", _any, _c01,
          frozenset({"sg_le_2x", "s_gm1_le_x"})),
    Check("C02", "main_theorem_equivalence",
          "Main theorem: slope > 4 - 4/g iff the fibration contains separating vanishing cycles", "all", _any, _c02,
          frozenset({"biconditional", "factored_identity"})),
    Check("C03", "stipsicz_ratio", "Stipsicz bound: s/n <= 5", "all", _any, _c03),
    Check("C04", "rho_upper", "Ratio estimate: rho(g) <= (3g+2)/(4(g-1))", "all", _any, _c04),
    Check("C05", "burak_signature", "Signature bound for hyperelliptic fibrations: sigma <= n - s - 4", "all", _any,
          _c05),
    Check("C06", "g2_noether", "Genus 2: c1^2 <= 6 chi_h - 3 and c1^2 = 2 chi_h - 6 + s", "g=2", _genus2, _c06),
    Check("C07", "g2_chi_h_nonneg", "Genus 2: chi_h >= 0; genus 3: chi_h >= -1", "g in {2,3}", _genus2or3, _c07),
    Check("C08", "g2_slope_upper",
          "Genus 2: slope <= 6 - 1/(chi_h+1); genus 3: slope <= 29/4 - (5/4)/(chi_h+2)", "g in {2,3}",
          _genus2or3, _c08),
    Check("C09", "g2_admissibility_system",
          "Genus 2: 2s+n = 10k, 2n-s >= 5; genus 3: 3n+8s = 28k, 11n-8s >= 28 (k a positive integer)",
          "g in {2,3}", _genus2or3, _c09),
    Check("C10", "g2_sharpness", "Genus 2: 2n - s = 5 iff slope = 6 - 1/(chi_h+1)", "g=2", _genus2, _c10),
    Check("C11", "g2_chain", "Five-term slope chain in n and s (genus 2 with n >= 4, genus 3 with n >= 8)",
          "g in {2,3}", _genus2or3, _c11),
    Check("C12", "general_slope_upper", "slope <= 10 - (2+s)/(chi_h+g-1) <= 10", "all", _any, _c12),
    Check("C13", "n_lower_from_chi_h", "2 chi_h + 2g <= n", "all", _any, _c13),
    Check("C14", "double_slope_estimate",
          "4(g-1)/g + (4s/g)(2g+1)(3g-4)/(ng+4s(g-1)) <= slope <= 10 - 2(2+s)/(n-2)", "all", _any, _c14,
          frozenset({"lower"})),
    Check("C15", "n_divisibility", "4 | gn; 4 | n for odd g; 2 | n for g = 2 mod 4", "all", _any, _c15),
    Check("C16", "quarter_integer",
          "sigma+n+s = 4(chi_h+g-1); t = ((3g+2)n - 4x)/(4(2g+1)) is a positive integer when 4 does not divide g",
          "all", _any, _c16),
    Check("C17", "g2_signature_bounds",
          "Genus 2: sigma <= -2 chi_h - 3, sigma <= -chi/3 - 2; "
          "genus 3: sigma <= -(3/4) chi_h - 11/4, sigma <= -(3/19) chi - 44/19", "g in {2,3}", _genus2or3, _c17),
    Check("C18", "g2_ratio_vs_chih",
          "Genus 2: s/n <= (4 chi_h+3)/(2 chi_h+4); genus 3: s/n <= (11 chi_h+19)/(8(chi_h+3))", "g in {2,3}",
          _genus2or3, _c18),
    Check("C19", "slope_negative_sig", "Genus 2: the signature is negative", "g=2", _genus2, _c19),
    Check("C20", "avg_signature", "sigma/(n+s) >= -(g+1)/(2g+1), strictly when s > 0", "all", _any, _c20,
          frozenset({"average_lower", "strict_if_separating"})),
    Check("C21", "rho_general", "s/n < 3 + 2/g", "all", _any, _c21),
    Check("C22", "s_le_n_high_genus", "Genus g >= 6: s <= n", "g>=6", _genus_ge6, _c22),
)

CHECK_IDS: tuple[str, ...] = tuple(c.check_id for c in REGISTRY)
UNCONDITIONAL_CHECKS = frozenset({"C01", "C02", "C20"})
_BY_KEY = {c.check_id: c for c in REGISTRY} | {c.name: c for c in REGISTRY}

assert len(set(CHECK_IDS)) == len(CHECK_IDS)


def get_check(check_id: str) -> Check:
    try:
        return _BY_KEY[check_id.strip()]
    except KeyError:
        raise UnknownCheckError(
            f"unknown check id {check_id!r}; valid ids: {', '.join(CHECK_IDS)}"
        ) from None


def min_nonseparating(g: int, b2plus: int, simply_connected: bool = True) -> int:
    """Least possible n for a simply connected genus-g fibration with the given b2+."""
    if g < 2:
        raise HypothesisError(f"genus must satisfy g >= 2, got {g}")
    if not simply_connected:
        raise HypothesisError("the minimum-n bound needs a simply connected total space")
    if b2plus < 1:
        raise HypothesisError(f"the minimum-n bound needs b2+ >= 1, got {b2plus}")
    if b2plus == 1:
        return 2 * g + 2
    if b2plus % 2 == 0:
        raise HypothesisError(f"b2+ of a simply connected fibration is odd, got {b2plus}")
    return 2 * g + 4


# ---------------------------------------------------------------------------
# Scalar entry points
# ---------------------------------------------------------------------------


def _scalar(value):
    if isinstance(value, RatArray):
        if value.num.ndim == 0:
            return Fraction(int(value.num), int(value.den)) if value.den != 0 else None
        return None if value.den[0] == 0 else Fraction(int(value.num[0]), int(value.den[0]))
    if isinstance(value, np.ndarray):
        item = value.reshape(-1)[0] if value.ndim else value.item()
        return bool(item) if value.dtype == bool else int(item)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    return value


def _single_batch(f: FibrationNumerics, inv: InvariantSet | None = None) -> Batch:
    return Batch.from_invariants(f.g, [(f, inv or compute_invariants(f))])


def _admissible(batch: Batch) -> bool:
    masks = admissibility_masks(batch)
    return bool(masks["integral_chi_h"][0] and masks["signature_bound_c05"][0])


def _evaluate(check: Check, f: FibrationNumerics, batch: Batch, flags: HypothesisFlags,
              admissible: bool) -> CheckResult:
    if not check.applies_to_genus(f.g):
        return CheckResult(check.check_id, Verdict.NOT_APPLICABLE, None, None,
                           {"reason": f"genus scope {check.scope}"}, check.anchor)
    bv = check.evaluate(batch)
    witness = {k: _scalar(v) for k, v in bv.witness.items()}
    lhs, rhs = _scalar(bv.lhs), _scalar(bv.rhs)
    if not bool(bv.applicable[0]):
        return CheckResult(check.check_id, Verdict.NOT_APPLICABLE, lhs, rhs,
                           witness | {"reason": "hypothesis of the statement not met"}, check.anchor)
    parts = {name: bool(mask[0]) for name, mask in bv.parts.items()}
    if check.check_id == "C13" and flags.simply_connected:
        if flags.b2plus is not None:
            floor = min_nonseparating(f.g, flags.b2plus, True)
        else:
            # simply connected: b2+ = 2 chi_h - 1
            b2plus = 2 * witness["chi_h"] - 1
            try:
                floor = min_nonseparating(f.g, int(b2plus), True) if b2plus.denominator == 1 else None
            except HypothesisError:
                floor = None
        witness["min_nonseparating"] = floor
        parts["n_ge_min_nonseparating"] = floor is not None and f.n >= floor
    evaluated = dict(parts)
    if flags.treat_as_realizable and not admissible:
        evaluated = {k: v for k, v in parts.items() if k in check.unconditional_parts}
        if not evaluated:
            return CheckResult(check.check_id, Verdict.NOT_APPLICABLE, lhs, rhs,
                               witness | {"reason": "census is not admissible"}, check.anchor, parts)
    verdict = Verdict.HOLDS if all(evaluated.values()) else Verdict.FAILS
    return CheckResult(check.check_id, verdict, lhs, rhs, witness, check.anchor, parts)


def run_check(check_id: str, f: FibrationNumerics, flags: HypothesisFlags | None = None) -> CheckResult:
    check = get_check(check_id)
    flags = flags or HypothesisFlags()
    batch = _single_batch(f)
    return _evaluate(check, f, batch, flags, _admissible(batch))


def run_all(f: FibrationNumerics, flags: HypothesisFlags | None = None,
            check_ids: Iterable[str] | None = None) -> list[CheckResult]:
    """Evaluate the registry (or the given subset) on one census, in registry order."""
    flags = flags or HypothesisFlags()
    checks = REGISTRY if check_ids is None else _ordered(check_ids)
    batch = _single_batch(f)
    admissible = _admissible(batch)
    return [_evaluate(c, f, batch, flags, admissible) for c in checks]


def _ordered(check_ids: Iterable[str]) -> tuple[Check, ...]:
    wanted = {get_check(cid).check_id for cid in check_ids}
    return tuple(c for c in REGISTRY if c.check_id in wanted)
