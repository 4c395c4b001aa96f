"""Vectorized exact rationals on top of numpy integer arrays.

:class:`RatArray` stores a numerator and a positive denominator array, kept in
lowest terms after every operation.  Storage starts as ``int64`` and is
promoted to ``object`` (Python ints, unbounded) before any operation whose
result could leave the int64 range, so results are exact regardless of input
size.  Division by zero yields a zero denominator; such entries are
"undefined" and every comparison involving them is False.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import numpy as np

__all__ = ["RatArray"]

# Headroom below 2**63 for one product plus one sum of two such products.
_INT64_SAFE = 2**61


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return max(abs(int(a.max())), abs(int(a.min())))


def _as_int_array(values) -> np.ndarray:
    arr = np.asarray(values)
    if arr.dtype == object:
        return arr
    if not np.issubdtype(arr.dtype, np.integer):
        raise TypeError(f"RatArray needs integer input, got dtype {arr.dtype}")
    return arr.astype(np.int64, copy=False)


class RatArray:
    __slots__ = ("num", "den")
    __array_priority__ = 1000

    def __init__(self, num, den=1, *, reduced: bool = False):
        num = _as_int_array(num)
        den = _as_int_array(den)
        num, den = np.broadcast_arrays(num, den)
        if num.dtype != den.dtype:
            num, den = num.astype(object), den.astype(object)
        if reduced:
            self.num, self.den = np.array(num), np.array(den)
        else:
            self.num, self.den = self._reduce(np.array(num), np.array(den))

    @staticmethod
    def _reduce(num: np.ndarray, den: np.ndarray):
        neg = den < 0
        if neg.any():
            num = np.where(neg, -num, num)
            den = np.where(neg, -den, den)
        g = np.gcd(num, den)
        g = np.where(g == 0, 1, g)
        # zero denominators stay zero so undefined entries remain detectable
        return num // g, den // g

    @classmethod
    def from_fractions(cls, values) -> "RatArray":
        values = [Fraction(v) for v in values]
        num = np.array([v.numerator for v in values], dtype=object)
        den = np.array([v.denominator for v in values], dtype=object)
        out = cls(num, den, reduced=True)
        return out._shrink()

    def _shrink(self) -> "RatArray":
        if self.num.dtype == object and max(_absmax(self.num), _absmax(self.den)) < _INT64_SAFE:
            self.num = self.num.astype(np.int64)
            self.den = self.den.astype(np.int64)
        return self

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> "RatArray | None":
        if isinstance(other, RatArray):
            return other
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return RatArray(np.array(int(other), dtype=object if abs(int(other)) >= _INT64_SAFE else np.int64))
        if isinstance(other, Rational):
            f = Fraction(other)
            return RatArray.from_fractions([f]).reshape(())
        if isinstance(other, np.ndarray) and (other.dtype == object or np.issubdtype(other.dtype, np.integer)):
            return RatArray(other)
        return None

    def reshape(self, shape) -> "RatArray":
        return RatArray(self.num.reshape(shape), self.den.reshape(shape), reduced=True)

    @staticmethod
    def _widen(*arrays: np.ndarray, bound: int) -> list[np.ndarray]:
        if any(a.dtype == object for a in arrays) or bound >= _INT64_SAFE:
            return [a.astype(object) for a in arrays]
        return list(arrays)

    # -- arithmetic ---------------------------------------------------------

    def _addsub(self, other: "RatArray", sign: int) -> "RatArray":
        a, b, c, d = self.num, self.den, other.num, other.den
        bound = max(_absmax(a) * _absmax(d), _absmax(c) * _absmax(b), _absmax(b) * _absmax(d))
        a, b, c, d = self._widen(a, b, c, d, bound=2 * bound)
        return RatArray(a * d + sign * (c * b), b * d)._shrink()

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else other._addsub(self, -1)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        bound = max(_absmax(a) * _absmax(c), _absmax(b) * _absmax(d))
        a, b, c, d = self._widen(a, b, c, d, bound=bound)
        return RatArray(a * c, b * d)._shrink()

    __rmul__ = __mul__

    def reciprocal(self) -> "RatArray":
        return RatArray(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else other * self.reciprocal()

    def __neg__(self):
        return RatArray(-self.num, self.den, reduced=True)

    # -- predicates ---------------------------------------------------------

    @property
    def defined(self) -> np.ndarray:
        return self.den != 0

    def _cmp_terms(self, other):
        other = self._coerce(other)
        if other is None:
            raise TypeError(f"cannot compare RatArray with {type(other).__name__}")
        a, b, c, d = self.num, self.den, other.num, other.den
        bound = max(_absmax(a) * _absmax(d), _absmax(c) * _absmax(b))
        a, b, c, d = self._widen(a, b, c, d, bound=bound)
        ok = (b != 0) & (d != 0)
        return a * d, c * b, ok

    def __lt__(self, other):
        lhs, rhs, ok = self._cmp_terms(other)
        return ok & np.asarray(lhs < rhs, dtype=bool)

    def __le__(self, other):
        lhs, rhs, ok = self._cmp_terms(other)
        return ok & np.asarray(lhs <= rhs, dtype=bool)

    def __gt__(self, other):
        lhs, rhs, ok = self._cmp_terms(other)
        return ok & np.asarray(lhs > rhs, dtype=bool)

    def __ge__(self, other):
        lhs, rhs, ok = self._cmp_terms(other)
        return ok & np.asarray(lhs >= rhs, dtype=bool)

    def __eq__(self, other):  # type: ignore[override]
        lhs, rhs, ok = self._cmp_terms(other)
        return ok & np.asarray(lhs == rhs, dtype=bool)

    def __ne__(self, other):  # type: ignore[override]
        return ~(self == other)

    __hash__ = None  # type: ignore[assignment]

    def is_integer(self) -> np.ndarray:
        return self.den == 1

    def is_zero(self) -> np.ndarray:
        return (self.num == 0) & self.defined

    # -- access -------------------------------------------------------------

    @property
    def shape(self):
        return self.num.shape

    def __len__(self) -> int:
        return len(self.num)

    def __getitem__(self, idx):
        num, den = self.num[idx], self.den[idx]
        if np.ndim(num) == 0:
            if den == 0:
                raise ZeroDivisionError("undefined entry (zero denominator)")
            return Fraction(int(num), int(den))
        return RatArray(num, den, reduced=True)

    def to_fractions(self) -> list[Fraction]:
        return [Fraction(int(p), int(q)) for p, q in zip(self.num.ravel(), self.den.ravel())]

    def __repr__(self) -> str:
        items = ", ".join(f"{p}/{q}" for p, q in zip(self.num.ravel()[:6], self.den.ravel()[:6]))
        more = ", ..." if self.num.size > 6 else ""
        return f"RatArray([{items}{more}])"
