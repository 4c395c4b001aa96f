"""Brute-force reference values straight from the defining formulas.

Independent of the package: sigma from the hyperelliptic signature formula,
chi_h = (sigma + chi)/4, c1^2 = 2 chi + 3 sigma, slope = K_f^2 / chi_f.
"""

from fractions import Fraction


def reference_invariants(g, n, sep):
    s = sum(sep)
    x = sum((h + 1) * (g - h - 1) * c for h, c in enumerate(sep))
    sigma = Fraction(-(g + 1) * n, 2 * g + 1) + sum(Fraction(4 * (h + 1) * (g - h - 1) * c, 2 * g + 1)
                                                   for h, c in enumerate(sep)) - s
    chi = n + s - 4 * (g - 1)
    chi_h = (sigma + chi) / 4
    c1sq = 2 * chi + 3 * sigma
    slope = (c1sq + 8 * (g - 1)) / (chi_h + g - 1)
    return {"x": x, "s": s, "sigma": sigma, "euler": chi, "chi_h": chi_h, "c1sq": c1sq, "slope": slope}


def reference_admissible(g, n, sep):
    inv = reference_invariants(g, n, sep)
    return inv["chi_h"].denominator == 1 and inv["sigma"] <= n - inv["s"] - 4


def brute_force_admissible(g, n_max, s_max):
    """All admissible (n, s) for genus 2 or 3 by scanning the grid."""
    assert g in (2, 3)
    return {(n, s) for n in range(1, n_max + 1) for s in range(s_max + 1) if reference_admissible(g, n, [s])}
