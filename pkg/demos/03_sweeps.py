"""
Exhaustive sweeps and extremal censuses
=======================================

verify_theorems walks every census in a box and tallies each check.
The default box below has close to ten million censuses and takes a few
seconds, since censuses sharing (s, x) are evaluated once.
"""

import time

from lefschetz_geography import SweepBox, verify_theorems

box = SweepBox(g_min=2, g_max=8, n_max=60, s_total_max=40)
t0 = time.perf_counter()
report = verify_theorems(box)
print(f"{report.tuples_enumerated} censuses, {report.tuples_admissible} admissible, "
      f"{report.total_failures} failures in {time.perf_counter() - t0:.1f} s")

# largest s/n per genus, against the bound (3g+2)/(4(g-1))
from fractions import Fraction
for g, ext in sorted(report.extremal.items()):
    e = ext["max_ratio"]
    print(g, e.value, "<=", Fraction(3 * g + 2, 4 * (g - 1)), "at n =", e.census.n, "sep =", e.census.sep)

# dropping the admissibility filters exposes counterexamples to the conditional checks
loose = verify_theorems(SweepBox(2, 2, 10, 6, ("basic",)), ["C09"], counterexample_cap=3)
tally = loose.per_check["C09"]
print("C09 without filters:", tally.fail_count, "failures, first:", [f for f, _ in tally.counterexamples])
