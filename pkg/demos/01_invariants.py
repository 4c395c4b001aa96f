"""
Invariants of a single census
=============================

A census is the genus g of the fiber, the number n of non-separating
vanishing cycles, and the counts s_h of separating cycles of each type h.
Everything below is exact: Fractions in, Fractions out.
"""

from lefschetz_geography import FibrationNumerics, compute_invariants, slope_alternate_forms

# genus 2, four non-separating and three separating cycles
f = FibrationNumerics(2, 4, [3])
inv = compute_invariants(f)
for key, value in inv.as_dict().items():
    print(f"{key:>8} = {value}")

# the slope can be computed four ways; they always agree
print("slope forms:", slope_alternate_forms(f), inv.slope)

# without separating cycles the slope sits on its floor 4 - 4/g
for g in (2, 3, 5, 10):
    print(g, compute_invariants(FibrationNumerics(g, 40 * g, [0] * (g // 2))).slope)

# large g is no problem, arithmetic is arbitrary precision
big = FibrationNumerics.from_counts(101, 10**12, {50: 7})
print("g=101 slope:", compute_invariants(big).slope)
