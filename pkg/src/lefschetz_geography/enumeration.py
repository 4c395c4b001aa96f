"""Exhaustive sweeps over bounded census boxes, the low-genus Diophantine
families, and the genus-2 region taxonomy.

Every invariant depends on a census ``(g, n, s_1, .., s_[g/2])`` only through
``(g, n, s, x)``.  Sweeps therefore group the separating-type compositions of a
genus into classes with equal ``(s, x)``, evaluate each class once (vectorized,
exact) and weight the verdict by the class size.  Tuple counts stay exact and
concrete counterexamples are recovered by re-enumerating compositions in
lexicographic order.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .checks import (
    REGISTRY,
    Batch,
    CheckResult,
    admissibility_masks,
    get_check,
    run_check,
)
from .invariants import FibrationNumerics, InvariantSet, compute_invariants

__all__ = [
    "FILTERS",
    "DEFAULT_FILTERS",
    "SweepBox",
    "CheckTally",
    "Extremum",
    "SweepReport",
    "DiophantineFamily",
    "FamilySolution",
    "RegionLabel",
    "compositions",
    "census_classes",
    "enumerate_admissible",
    "verify_theorems",
    "solve_g2_system",
    "solve_g3_system",
    "g2_boundary_ratio_sequence",
    "classify_region_g2",
]

FILTERS = ("basic", "integral_chi_h", "signature_bound_c05", "divisibility_c15_c16")
DEFAULT_FILTERS = ("basic", "integral_chi_h", "signature_bound_c05")
DEFAULT_COUNTEREXAMPLE_CAP = 100


@dataclass(frozen=True)
class SweepBox:
    g_min: int
    g_max: int
    n_max: int
    s_total_max: int
    filters: tuple[str, ...] = DEFAULT_FILTERS

    def __post_init__(self):
        if self.g_min < 2 or self.g_max < self.g_min:
            raise ValueError(f"genus range must satisfy 2 <= g_min <= g_max, got [{self.g_min}, {self.g_max}]")
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if self.s_total_max < 0:
            raise ValueError(f"s_total_max must be >= 0, got {self.s_total_max}")
        unknown = set(self.filters) - set(FILTERS)
        if unknown:
            raise ValueError(f"unknown filters {sorted(unknown)}; valid filters: {', '.join(FILTERS)}")
        # canonical order, basic always on
        ordered = tuple(f for f in FILTERS if f in self.filters or f == "basic")
        object.__setattr__(self, "filters", ordered)

    @property
    def genera(self) -> range:
        return range(self.g_min, self.g_max + 1)

    def to_dict(self) -> dict:
        return {
            "g_range": [self.g_min, self.g_max],
            "n_max": self.n_max,
            "s_total_max": self.s_total_max,
            "filters": list(self.filters),
        }


# ---------------------------------------------------------------------------
# Compositions
# ---------------------------------------------------------------------------


def compositions(slots: int, total_max: int) -> Iterator[tuple[int, ...]]:
    """All ``slots``-vectors of nonnegative integers with sum <= total_max, lexicographically."""
    if slots == 0:
        yield ()
        return
    for first in range(total_max + 1):
        for rest in compositions(slots - 1, total_max - first):
            yield (first,) + rest


@dataclass(frozen=True)
class CensusClass:
    s: int
    x: int
    count: int
    first_sep: tuple[int, ...]


def census_classes(g: int, s_total_max: int) -> list[CensusClass]:
    """Group compositions by ``(s, x)``, in lexicographic order of their first member."""
    weights = [h * (g - h) for h in range(1, g // 2 + 1)]
    seen: dict[tuple[int, int], list] = {}
    for sep in compositions(len(weights), s_total_max):
        key = (sum(sep), sum(w * c for w, c in zip(weights, sep)))
        entry = seen.get(key)
        if entry is None:
            seen[key] = [1, sep]
        else:
            entry[0] += 1
    return [CensusClass(s, x, c, first) for (s, x), (c, first) in seen.items()]


# ---------------------------------------------------------------------------
# Admissible stream
# ---------------------------------------------------------------------------


def _passes_scalar_filters(g: int, n: int, s: int, x: int, filters: Sequence[str]) -> bool:
    if "integral_chi_h" in filters and (n * g + 4 * x) % (4 * (2 * g + 1)):
        return False
    # sigma <= n - s - 4  <=>  (3g+2) n - 4x >= 4 (2g+1)
    if "signature_bound_c05" in filters and (3 * g + 2) * n - 4 * x < 4 * (2 * g + 1):
        return False
    return True


def enumerate_admissible(box: SweepBox) -> Iterator[tuple[FibrationNumerics, InvariantSet]]:
    """Yield every census in ``box`` passing its filters, ordered by ``(g, n, sep)``."""
    divisibility = "divisibility_c15_c16" in box.filters
    for g in box.genera:
        weights = [h * (g - h) for h in range(1, g // 2 + 1)]
        for n in range(1, box.n_max + 1):
            for sep in compositions(len(weights), box.s_total_max):
                s = sum(sep)
                x = sum(w * c for w, c in zip(weights, sep))
                if not _passes_scalar_filters(g, n, s, x, box.filters):
                    continue
                f = FibrationNumerics(g, n, sep)
                if divisibility and not all(run_check(cid, f).holds for cid in ("C15", "C16")):
                    continue
                yield f, compute_invariants(f)


# ---------------------------------------------------------------------------
# Theorem sweeps
# ---------------------------------------------------------------------------


@dataclass
class CheckTally:
    pass_count: int = 0
    fail_count: int = 0
    not_applicable_count: int = 0
    counterexamples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "pass_count": self.pass_count,
            "fail_count": self.fail_count,
            "not_applicable_count": self.not_applicable_count,
            "counterexamples_shown": len(self.counterexamples),
            "counterexamples": [
                {"g": f.g, "n": f.n, "sep": list(f.sep), "result": r.to_dict()} for f, r in self.counterexamples
            ],
        }


@dataclass(frozen=True)
class Extremum:
    value: Fraction
    census: FibrationNumerics

    def to_dict(self) -> dict:
        return {
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "g": self.census.g,
            "n": self.census.n,
            "sep": list(self.census.sep),
        }


# name -> (sense, description); sense +1 keeps the maximum, -1 the minimum
EXTREMA = {
    "max_ratio": (+1, "largest s/n"),
    "min_total_cycles": (-1, "smallest n+s"),
    "max_slope": (+1, "largest slope"),
    "min_slope_separating": (-1, "smallest slope among censuses with s > 0"),
}


@dataclass
class SweepReport:
    box: SweepBox
    check_ids: tuple[str, ...]
    tuples_enumerated: int = 0
    tuples_admissible: int = 0
    per_check: dict[str, CheckTally] = field(default_factory=dict)
    extremal: dict[int, dict[str, Extremum]] = field(default_factory=dict)
    counterexample_cap: int = DEFAULT_COUNTEREXAMPLE_CAP

    @property
    def total_failures(self) -> int:
        return sum(t.fail_count for t in self.per_check.values())

    @property
    def ok(self) -> bool:
        return self.total_failures == 0

    def overall_extremal(self) -> dict[str, Extremum]:
        best: dict[str, Extremum] = {}
        for g in sorted(self.extremal):
            for name, ext in self.extremal[g].items():
                best[name] = _better(best.get(name), ext, EXTREMA[name][0])
        return best

    def to_dict(self) -> dict:
        return {
            "box": self.box.to_dict(),
            "checks": list(self.check_ids),
            "counterexample_cap": self.counterexample_cap,
            "tuples_enumerated": self.tuples_enumerated,
            "tuples_admissible": self.tuples_admissible,
            "total_failures": self.total_failures,
            "per_check": {cid: self.per_check[cid].to_dict() for cid in self.check_ids},
            "extremal": {
                "by_genus": {
                    str(g): {name: e.to_dict() for name, e in self.extremal[g].items()}
                    for g in sorted(self.extremal)
                },
                "overall": {name: e.to_dict() for name, e in self.overall_extremal().items()},
            },
        }


def _better(current: Extremum | None, candidate: Extremum | None, sense: int) -> Extremum | None:
    """Keep the strictly better value; ties keep the earlier (current) census."""
    if candidate is None:
        return current
    if current is None:
        return candidate
    if sense * (candidate.value - current.value) > 0:
        return candidate
    return current


@dataclass(frozen=True)
class _Unit:
    g: int
    n_lo: int
    n_hi: int


def _units(box: SweepBox, n_chunk: int | None) -> list[_Unit]:
    step = n_chunk or box.n_max
    return [
        _Unit(g, lo, min(lo + step - 1, box.n_max))
        for g in box.genera
        for lo in range(1, box.n_max + 1, step)
    ]


def _filter_mask(batch: Batch, filters: Sequence[str]) -> np.ndarray:
    mask = np.ones(len(batch), dtype=bool)
    adm = admissibility_masks(batch)
    if "integral_chi_h" in filters:
        mask &= adm["integral_chi_h"]
    if "signature_bound_c05" in filters:
        mask &= adm["signature_bound_c05"]
    if "divisibility_c15_c16" in filters:
        for cid in ("C15", "C16"):
            bv = get_check(cid).evaluate(batch)
            ok = bv.applicable.copy()
            for part in bv.parts.values():
                ok &= part
            mask &= ok
    return mask


def _sweep_unit(box: SweepBox, check_ids: tuple[str, ...], cap: int, unit: _Unit,
                classes: list[CensusClass] | None = None) -> SweepReport:
    g = unit.g
    classes = classes if classes is not None else census_classes(g, box.s_total_max)
    report = SweepReport(box, check_ids, counterexample_cap=cap)
    report.per_check = {cid: CheckTally() for cid in check_ids}
    if not classes or unit.n_lo > unit.n_hi:
        return report

    ns = np.arange(unit.n_lo, unit.n_hi + 1, dtype=np.int64)
    k = len(classes)
    n_arr = np.repeat(ns, k)
    s_arr = np.tile(np.array([c.s for c in classes], dtype=np.int64), len(ns))
    x_arr = np.tile(np.array([c.x for c in classes], dtype=np.int64), len(ns))
    weight = np.tile(np.array([c.count for c in classes], dtype=np.int64), len(ns))
    class_idx = np.tile(np.arange(k), len(ns))

    batch = Batch.from_census(g, n_arr, s_arr, x_arr)
    admissible = _filter_mask(batch, box.filters)
    report.tuples_enumerated = int(weight.sum())
    report.tuples_admissible = int(weight[admissible].sum())

    for cid in check_ids:
        check = get_check(cid)
        tally = report.per_check[cid]
        if not check.applies_to_genus(g):
            continue
        bv = check.evaluate(batch)
        uncond_ok = np.ones(len(batch), dtype=bool)
        cond_ok = np.ones(len(batch), dtype=bool)
        has_uncond = has_cond = False
        for part, mask in bv.parts.items():
            if part in check.unconditional_parts:
                uncond_ok &= mask
                has_uncond = True
            else:
                cond_ok &= mask
                has_cond = True
        in_scope = np.ones(len(batch), dtype=bool) if has_uncond else admissible.copy()
        holds = uncond_ok & (cond_ok | ~admissible) if has_cond else uncond_ok
        evaluated = in_scope & bv.applicable
        failing = evaluated & ~holds
        tally.pass_count += int(weight[evaluated & holds].sum())
        tally.fail_count += int(weight[failing].sum())
        tally.not_applicable_count += int(weight[in_scope & ~bv.applicable].sum())
        if failing.any():
            tally.counterexamples = _harvest(g, cid, n_arr[failing], class_idx[failing], classes,
                                             box.s_total_max, cap)

    report.extremal = {g: _unit_extrema(g, batch, admissible, n_arr, class_idx, classes)}
    return report


def _harvest(g: int, cid: str, n_fail: np.ndarray, cls_fail: np.ndarray, classes: list[CensusClass],
             s_total_max: int, cap: int) -> list[tuple[FibrationNumerics, CheckResult]]:
    """First ``cap`` failing censuses in lexicographic order, with full CheckResults."""
    weights = [h * (g - h) for h in range(1, g // 2 + 1)]
    failing_by_n: dict[int, set] = {}
    for n, ci in zip(n_fail.tolist(), cls_fail.tolist()):
        failing_by_n.setdefault(n, set()).add((classes[ci].s, classes[ci].x))
    out = []
    for n in sorted(failing_by_n):
        keys = failing_by_n[n]
        for sep in compositions(len(weights), s_total_max):
            if (sum(sep), sum(w * c for w, c in zip(weights, sep))) in keys:
                f = FibrationNumerics(g, n, sep)
                out.append((f, run_check(cid, f)))
                if len(out) >= cap:
                    return out
    return out


def _unit_extrema(g, batch: Batch, admissible, n_arr, class_idx, classes) -> dict[str, Extremum]:
    idx = np.flatnonzero(admissible)
    if idx.size == 0:
        return {}
    ratio = batch.ratio[idx].to_fractions()
    slope = batch.slope[idx].to_fractions()
    ns = n_arr[idx].tolist()
    cis = class_idx[idx].tolist()
    best: dict[str, tuple] = {}

    def offer(name, value, i):
        sense = EXTREMA[name][0]
        key = (ns[i], classes[cis[i]].first_sep)
        cur = best.get(name)
        if cur is None or sense * (value - cur[0]) > 0 or (value == cur[0] and key < cur[1]):
            best[name] = (value, key)

    for i in range(len(idx)):
        s = classes[cis[i]].s
        offer("max_ratio", ratio[i], i)
        offer("min_total_cycles", Fraction(ns[i] + s), i)
        offer("max_slope", slope[i], i)
        if s > 0:
            offer("min_slope_separating", slope[i], i)
    return {
        name: Extremum(value, FibrationNumerics(g, n, sep))
        for name, (value, (n, sep)) in sorted(best.items(), key=lambda kv: list(EXTREMA).index(kv[0]))
    }


def _merge(into: SweepReport, part: SweepReport) -> None:
    into.tuples_enumerated += part.tuples_enumerated
    into.tuples_admissible += part.tuples_admissible
    for cid, tally in part.per_check.items():
        acc = into.per_check[cid]
        acc.pass_count += tally.pass_count
        acc.fail_count += tally.fail_count
        acc.not_applicable_count += tally.not_applicable_count
        room = into.counterexample_cap - len(acc.counterexamples)
        if room > 0:
            acc.counterexamples.extend(tally.counterexamples[:room])
    for g, exts in part.extremal.items():
        slot = into.extremal.setdefault(g, {})
        for name, ext in exts.items():
            slot[name] = _better(slot.get(name), ext, EXTREMA[name][0])
        into.extremal[g] = {name: slot[name] for name in EXTREMA if name in slot}


def _run_unit(args) -> SweepReport:
    box, check_ids, cap, unit = args
    return _sweep_unit(box, check_ids, cap, unit)


def verify_theorems(box: SweepBox, check_ids: Sequence[str] | None = None, *,
                    counterexample_cap: int = DEFAULT_COUNTEREXAMPLE_CAP,
                    workers: int = 1, n_chunk: int | None = None) -> SweepReport:
    """Run the selected checks over ``box``.

    Unconditional parts are evaluated on every census in the box; conditional
    parts only on censuses passing ``box.filters``.  The grid is cut into
    ``(g, n-range)`` units; with ``workers > 1`` units run in separate
    processes.  Units are merged in lexicographic order, so the report does
    not depend on ``workers`` or ``n_chunk``.
    """
    ids = tuple(c.check_id for c in REGISTRY) if check_ids is None else tuple(
        c.check_id for c in REGISTRY if c.check_id in {get_check(i).check_id for i in check_ids}
    )
    report = SweepReport(box, ids, counterexample_cap=counterexample_cap)
    report.per_check = {cid: CheckTally() for cid in ids}
    units = _units(box, n_chunk)
    if workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_run_unit, [(box, ids, counterexample_cap, u) for u in units])
            for part in parts:
                _merge(report, part)
    else:
        cache: dict[int, list[CensusClass]] = {}
        for u in units:
            if u.g not in cache:
                cache = {u.g: census_classes(u.g, box.s_total_max)}
            _merge(report, _sweep_unit(box, ids, counterexample_cap, u, cache[u.g]))
    return report


# ---------------------------------------------------------------------------
# Diophantine families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiophantineFamily:
    genus: int
    params: dict
    n_formula: str
    s_formula: str
    description: str

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "params": {k: list(v) for k, v in self.params.items()},
            "n_formula": self.n_formula,
            "s_formula": self.s_formula,
            "description": self.description,
        }


@dataclass(frozen=True)
class FamilySolution:
    genus: int
    params: dict
    n: int
    s: int
    slope: Fraction

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.s, self.n)

    @property
    def census(self) -> FibrationNumerics:
        return FibrationNumerics(self.genus, self.n, [self.s])


def _family_slope(g: int, n: int, s: int) -> Fraction:
    return compute_invariants(FibrationNumerics(g, n, [s])).slope


def solve_g2_system(k_max: int, t_max: int) -> tuple[DiophantineFamily, Iterator[FamilySolution]]:
    """Solutions of ``2s + n = 10k``, ``2n - s = 5t``: ``n = 2t + 2k``, ``s = 4k - t``."""
    if k_max < 1 or t_max < 1:
        raise ValueError("k_max and t_max must be >= 1")
    family = DiophantineFamily(
        genus=2,
        params={"k": (1, k_max), "t": (1, t_max)},
        n_formula="2t + 2k",
        s_formula="4k - t",
        description="genus 2: 2s + n = 10k, 2n - s = 5t with k, t positive and s >= 0",
    )

    def gen():
        for k in range(1, k_max + 1):
            for t in range(1, t_max + 1):
                n, s = 2 * t + 2 * k, 4 * k - t
                if s < 0:
                    break
                yield FamilySolution(2, {"k": k, "t": t}, n, s, _family_slope(2, n, s))

    return family, gen()


def solve_g3_system(m_max: int) -> tuple[DiophantineFamily, Iterator[FamilySolution]]:
    """Boundary family ``11n - 8s = 28``: ``k = 4m + 1``, ``n = 2 + 2k``, ``s = (11k - 3)/4``."""
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    family = DiophantineFamily(
        genus=3,
        params={"m": (0, m_max)},
        n_formula="2 + 2k, k = 4m + 1",
        s_formula="(11k - 3)/4, k = 4m + 1",
        description="genus 3: 3n + 8s = 28k, 11n - 8s = 28 (t = 1)",
    )

    def gen():
        for m in range(m_max + 1):
            k = 4 * m + 1
            n = 2 + 2 * k
            s, rem = divmod(11 * k - 3, 4)
            assert rem == 0
            yield FamilySolution(3, {"m": m, "k": k}, n, s, _family_slope(3, n, s))

    return family, gen()


def g2_boundary_ratio_sequence(m_max: int) -> Iterator[Fraction]:
    """``s/n = (4m+3)/(2m+4)`` for ``m = 0 .. m_max``."""
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    for m in range(m_max + 1):
        yield Fraction(4 * m + 3, 2 * m + 4)


# ---------------------------------------------------------------------------
# Genus-2 regions
# ---------------------------------------------------------------------------


class RegionLabel(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"

    @property
    def slope_interval(self) -> str:
        return {"I": "2 <= slope <= 4", "II": "4 < slope < 5", "III": "5 <= slope < 6"}[self.value]

    @property
    def ratio_interval(self) -> str:
        return {"I": "0 <= s/n <= 1/3", "II": "1/3 < s/n < 3/4", "III": "3/4 <= s/n < 2"}[self.value]


def _region_by_slope(lam: Fraction) -> RegionLabel | None:
    if 2 <= lam <= 4:
        return RegionLabel.I
    if 4 < lam < 5:
        return RegionLabel.II
    if 5 <= lam < 6:
        return RegionLabel.III
    return None


def _region_by_ratio(r: Fraction) -> RegionLabel | None:
    if 0 <= r <= Fraction(1, 3):
        return RegionLabel.I
    if Fraction(1, 3) < r < Fraction(3, 4):
        return RegionLabel.II
    if Fraction(3, 4) <= r < 2:
        return RegionLabel.III
    return None


def classify_region_g2(f: FibrationNumerics) -> RegionLabel:
    if f.g != 2:
        raise ValueError(f"region taxonomy is defined for genus 2 only, got g={f.g}")
    inv = compute_invariants(f)
    by_slope, by_ratio = _region_by_slope(inv.slope), _region_by_ratio(inv.ratio)
    if by_slope != by_ratio:
        raise ArithmeticError(
            f"slope {inv.slope} gives region {by_slope} but s/n = {inv.ratio} gives {by_ratio}"
        )
    if by_slope is None:
        raise ValueError(f"slope {inv.slope} (s/n = {inv.ratio}) lies outside [2, 6)")
    return by_slope
