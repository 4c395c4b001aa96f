"""Exact numerical invariants of hyperelliptic genus-g Lefschetz fibrations.

A fibration is described only by its vanishing-cycle census: the genus ``g``,
the number ``n`` of non-separating vanishing cycles and, for each separating
type ``h = 1 .. g//2``, the number ``s_h`` of separating cycles of that type.
Everything else (signature, Euler characteristic, holomorphic Euler
characteristic, c1^2, slope) follows in closed form.  All quantities are
returned as :class:`fractions.Fraction`; nothing here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "FibrationNumerics",
    "InvariantSet",
    "InvalidFibration",
    "weighted_separating_sum",
    "signature",
    "compute_invariants",
    "slope",
    "slope_alternate_forms",
    "signature_from_slope",
]


class InvalidFibration(ValueError):
    """Raised when a census violates g >= 2, n >= 1, s_h >= 0 or len(sep) == g//2."""


@dataclass(frozen=True, order=True)
class FibrationNumerics:
    """Vanishing-cycle census ``(g, n, s_1, ..., s_[g/2])``.

    ``sep[h-1]`` is the number of separating vanishing cycles of type ``h``,
    i.e. those cutting the fiber into pieces of genus ``h`` and ``g - h``.
    Ordering is lexicographic in ``(g, n, sep)``.
    """

    g: int
    n: int
    sep: tuple[int, ...]

    def __init__(self, g: int, n: int, sep: Sequence[int] = ()):
        object.__setattr__(self, "g", _as_int(g, "g"))
        object.__setattr__(self, "n", _as_int(n, "n"))
        object.__setattr__(self, "sep", tuple(_as_int(c, "sep entry") for c in sep))
        if self.g < 2:
            raise InvalidFibration(f"genus must satisfy g >= 2, got g={self.g}")
        if self.n < 1:
            raise InvalidFibration(
                f"need at least one non-separating vanishing cycle (n >= 1), got n={self.n}"
            )
        if len(self.sep) != self.g // 2:
            raise InvalidFibration(
                f"sep must have exactly g//2 = {self.g // 2} entries for g={self.g}, "
                f"got {len(self.sep)}"
            )
        for h, count in enumerate(self.sep, start=1):
            if count < 0:
                raise InvalidFibration(f"s_{h} must be nonnegative, got {count}")

    @classmethod
    def from_counts(cls, g: int, n: int, counts: dict[int, int]) -> "FibrationNumerics":
        """Build from a sparse ``{h: s_h}`` map; missing types default to 0."""
        g = _as_int(g, "g")
        sep = [0] * (g // 2) if g >= 2 else []
        for h, c in counts.items():
            if not 1 <= h <= g // 2:
                raise InvalidFibration(
                    f"separating type h must satisfy 1 <= h <= g//2 = {g // 2}, got h={h}"
                )
            sep[h - 1] = c
        return cls(g, n, sep)

    @property
    def s(self) -> int:
        return sum(self.sep)

    @property
    def x(self) -> int:
        return weighted_separating_sum(self)


def _as_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            if int(value) == value:
                return int(value)
        except (TypeError, ValueError):
            pass
        raise InvalidFibration(f"{name} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class InvariantSet:
    x: int
    s: int
    sigma: Fraction
    euler: int
    chi_h: Fraction
    c1sq: Fraction
    k_f_sq: Fraction
    chi_f: Fraction
    slope: Fraction
    ratio: Fraction

    def as_dict(self) -> dict:
        return {
            "x": self.x,
            "s": self.s,
            "sigma": self.sigma,
            "euler": self.euler,
            "chi_h": self.chi_h,
            "c1sq": self.c1sq,
            "k_f_sq": self.k_f_sq,
            "chi_f": self.chi_f,
            "slope": self.slope,
            "ratio": self.ratio,
        }


def weighted_separating_sum(f: FibrationNumerics) -> int:
    """Return ``x = sum_h h (g - h) s_h``."""
    g = f.g
    return sum(h * (g - h) * c for h, c in enumerate(f.sep, start=1))


def signature(f: FibrationNumerics) -> Fraction:
    """Signature ``-(g+1) n/(2g+1) + 4x/(2g+1) - s``."""
    g, n = f.g, f.n
    return Fraction(4 * f.x - (g + 1) * n, 2 * g + 1) - f.s


def compute_invariants(f: FibrationNumerics) -> InvariantSet:
    g, n = f.g, f.n
    x, s = f.x, f.s
    sigma = signature(f)
    euler = n + s - 4 * (g - 1)
    chi_f = Fraction(n * g + 4 * x, 4 * (2 * g + 1))
    chi_h = chi_f - (g - 1)
    c1sq = 2 * euler + 3 * sigma
    k_f_sq = c1sq + 8 * (g - 1)
    return InvariantSet(
        x=x,
        s=s,
        sigma=sigma,
        euler=euler,
        chi_h=chi_h,
        c1sq=c1sq,
        k_f_sq=k_f_sq,
        chi_f=chi_f,
        slope=k_f_sq / chi_f,
        ratio=Fraction(s, n),
    )


def slope(f: FibrationNumerics) -> Fraction:
    """Slope from the census directly: ``4 (n(g-1) - s(2g+1) + 12x) / (ng + 4x)``.

    Deliberately not routed through :func:`compute_invariants` so the two can
    be compared.
    """
    g, n, x, s = f.g, f.n, f.x, f.s
    return Fraction(4 * (n * (g - 1) - s * (2 * g + 1) + 12 * x), n * g + 4 * x)


def slope_alternate_forms(f: FibrationNumerics) -> tuple[Fraction, Fraction, Fraction]:
    """The three equivalent slope expressions in terms of ``n + s``, ``chi_f`` and sigma:

    ``12 - (n+s)/chi_f``, ``12 - 4(n+s)/(sigma+n+s)`` and ``8 + 4 sigma/(sigma+n+s)``.
    """
    g, n, s = f.g, f.n, f.s
    chi_f = Fraction(n * g + 4 * f.x, 4 * (2 * g + 1))
    total = n + s
    sigma = signature(f)
    shifted = sigma + total
    return (
        12 - total / chi_f,
        12 - 4 * total / shifted,
        8 + 4 * sigma / shifted,
    )


def signature_from_slope(lam, n_plus_s: int) -> Fraction:
    """Recover the signature as ``-(lam - 8)/(lam - 12) * (n + s)``."""
    lam = Fraction(lam)
    if lam == 12:
        raise ValueError("slope 12 does not arise from any fibration (division by zero)")
    return -(lam - 8) / (lam - 12) * n_plus_s
