"""
Running the bound checks
========================

Every check returns a verdict, the two sides of the inequality it tests,
and a witness dict. Checks other than C01, C02 and C20 only claim to hold
on admissible censuses.
"""

from lefschetz_geography import FibrationNumerics, HypothesisFlags, run_all, run_check

f = FibrationNumerics(2, 4, [3])
for r in run_all(f):
    print(r.check_id, r.verdict.value, r.lhs, r.rhs)

# a single cycle cannot come from a genus-2 fibration: C09 catches it
bad = FibrationNumerics(2, 1, [0])
print(run_check("C09", bad).to_dict())

# treat_as_realizable keeps only the unconditional parts on inadmissible input
for r in run_all(bad, HypothesisFlags(treat_as_realizable=True)):
    if r.verdict.value != "not_applicable":
        print("still checked:", r.check_id, r.verdict.value)

# minimum number of non-separating cycles for a simply connected total space
r = run_check("C13", FibrationNumerics(2, 6, [7]), HypothesisFlags(simply_connected=True))
print(r.witness)
