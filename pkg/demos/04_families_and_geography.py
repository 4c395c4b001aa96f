"""
Diophantine families and the genus-2 geography
==============================================

The genus-2 admissible censuses are parametrized by two positive integers
k, t; the slope along a family is 6 - t/k. The t = 1 slice is the
boundary line 2n - s = 5.
"""

from lefschetz_geography import (
    SweepBox,
    classify_region_g2,
    emit_geography,
    g2_boundary_ratio_sequence,
    geography_points,
    solve_g2_system,
    solve_g3_system,
)

family, sols = solve_g2_system(k_max=4, t_max=3)
print(family.description)
for p in sols:
    print(p.params, (p.n, p.s), p.slope, classify_region_g2(p.census).value)

print("boundary ratios:", [str(r) for r in g2_boundary_ratio_sequence(5)])

# genus 3 boundary family 11n - 8s = 28
for p in solve_g3_system(3)[1]:
    print("g=3", p.params, (p.n, p.s), p.ratio)

# geography rows as CSV, ready for any plotting tool
points = geography_points(SweepBox(2, 2, 12, 20))
print(emit_geography(points), end="")
