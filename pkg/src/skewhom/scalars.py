"""Scalar arithmetic over pluggable backends.

Three element kinds share one calling convention: exact rationals
(``fractions.Fraction``), elements of the quadratic extension generated by a
square root of a positive rational, and floats compared against a tolerance.
All scalars of one computation live in a single backend; the backend object
owns zero tests, sign tests, coercion, and the text forms used by the file
formats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import BackendMismatchError, ZeroDivisorError

Rational = Fraction


def as_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce ints, ``"p/q"`` strings, and Fractions to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_is_square(q: Fraction) -> Optional[Fraction]:
    """Exact nonnegative square root of ``q``, or ``None`` if ``q`` has none.

    Present exactly when numerator and denominator are both perfect integer
    squares.  Negative input raises ``ValueError``.
    """
    q = as_rational(q)
    if q < 0:
        raise ValueError("square test is undefined for negative rationals")
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _fraction_sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True, eq=False)
class QuadExt:
    """Element ``a + b*s`` of the ring Q[s]/(s**2 - d).

    Every operand of one expression must carry the same discriminant ``d``.
    When ``d`` is not a perfect rational square the ring is a field and each
    nonzero element is invertible; otherwise :meth:`inverse` can hit a zero
    divisor and raises.
    """

    a: Fraction
    b: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        object.__setattr__(self, "d", as_rational(self.d))

    def _lift(self, other: object) -> Optional["QuadExt"]:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise BackendMismatchError(
                    f"mixed discriminants {self.d} and {other.d}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(as_rational(other), Fraction(0), self.d)
        return None

    def __add__(self, other: object) -> "QuadExt":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadExt":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other: object) -> "QuadExt":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(o.a - self.a, o.b - self.b, self.d)

    def __mul__(self, other: object) -> "QuadExt":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QuadExt":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QuadExt":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def __pow__(self, exponent: int) -> "QuadExt":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = QuadExt(Fraction(1), Fraction(0), self.d)
        base = self
        n = exponent
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise BackendMismatchError(
                    f"mixed discriminants {self.d} and {other.d}"
                )
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        # b == 0 elements must hash like the rationals they equal
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Conjugate norm ``a**2 - b**2 * d`` (a plain rational)."""
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisorError(f"{self} has conjugate norm 0")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def sign(self) -> int:
        """Sign under the real embedding with ``s`` the positive root of ``d``."""
        if self.d <= 0:
            raise ValueError("sign is defined only for positive discriminants")
        if self.b == 0:
            return _fraction_sign(self.a)
        if self.a == 0:
            return _fraction_sign(self.b)
        sa, sb = _fraction_sign(self.a), _fraction_sign(self.b)
        if sa == sb:
            return sa
        t = self.norm()
        if t > 0:
            return sa
        if t < 0:
            return sb
        return 0

    def __repr__(self) -> str:
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*s"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*s"


def quad_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    """Ring product under ``s**2 = d``; mismatched discriminants raise."""
    return x * y


def quad_inv(x: QuadExt) -> QuadExt:
    """Multiplicative inverse; raises :class:`ZeroDivisorError` on norm 0."""
    return x.inverse()


@dataclass(frozen=True)
class ScalarBackend:
    """Selects the element kind all scalars of one computation share.

    ``kind`` is one of ``"rational"``, ``"quadratic"`` (the extension by
    ``sqrt(1 + theta**2)``), or ``"float"``.  A quadratic backend whose
    discriminant is a perfect rational square degenerates: its designated
    root is a plain rational and all arithmetic collapses to ``Fraction``,
    which avoids zero divisors in the pair representation.
    """

    kind: str
    theta: Union[Fraction, float, None] = None
    tolerance: float = 1e-9

    def __post_init__(self) -> None:
        if self.kind not in ("rational", "quadratic", "float"):
            raise ValueError(f"unknown backend kind {self.kind!r}")
        if self.kind == "quadratic":
            if self.theta is None:
                raise ValueError("quadratic backend requires a rational theta")
            object.__setattr__(self, "theta", as_rational(self.theta))
        if self.kind == "float":
            if self.tolerance <= 0:
                raise ValueError("float tolerance must be positive")
            if self.theta is not None:
                object.__setattr__(self, "theta", float(self.theta))

    @property
    def exact(self) -> bool:
        return self.kind != "float"

    @property
    def d(self) -> Fraction:
        """Extension discriminant ``1 + theta**2`` (quadratic backends only)."""
        if self.kind != "quadratic":
            raise ValueError("discriminant exists only for quadratic backends")
        return 1 + self.theta * self.theta

    @property
    def degenerate(self) -> bool:
        """True when the designated root is itself rational."""
        return self.kind == "quadratic" and rational_is_square(self.d) is not None

    @property
    def sqrt_d(self) -> Union[Fraction, QuadExt, float]:
        """The designated square root of ``1 + theta**2`` as a backend scalar."""
        if self.kind == "float":
            t = float(self.theta) if self.theta is not None else 0.0
            return math.sqrt(1.0 + t * t)
        if self.kind != "quadratic":
            raise ValueError("rational backend carries no designated root")
        root = rational_is_square(self.d)
        if root is not None:
            return root
        return QuadExt(Fraction(0), Fraction(1), self.d)

    def coerce(self, value: object):
        """Normalize ``value`` into this backend's scalar type."""
        if self.kind == "float":
            if isinstance(value, (int, float, Fraction, str)):
                return float(Fraction(value)) if isinstance(value, str) else float(value)
            raise BackendMismatchError(f"cannot coerce {value!r} into the float backend")
        if isinstance(value, QuadExt):
            if self.kind != "quadratic" or value.d != self.d:
                raise BackendMismatchError(f"{value!r} does not belong to this backend")
            if self.degenerate:
                return value.a + value.b * self.sqrt_d
            return value
        if isinstance(value, float):
            raise BackendMismatchError("floats are not scalars of an exact backend")
        return as_rational(value)

    def is_zero(self, x: object) -> bool:
        if self.kind == "float":
            return abs(x) <= self.tolerance
        if isinstance(x, QuadExt):
            return not x
        return x == 0

    def eq(self, x: object, y: object) -> bool:
        if self.kind == "float":
            return abs(x - y) <= self.tolerance
        return x == y

    def sign(self, x: object) -> int:
        if self.kind == "float":
            if abs(x) <= self.tolerance:
                return 0
            return 1 if x > 0 else -1
        if isinstance(x, QuadExt):
            return x.sign()
        return _fraction_sign(as_rational(x))

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"kind": "rational"}
        if self.kind == "quadratic":
            return {"kind": "quadratic", "theta": str(self.theta)}
        return {"kind": "float", "tol": self.tolerance}

    @staticmethod
    def from_json(obj: dict) -> "ScalarBackend":
        kind = obj.get("kind")
        if kind == "rational":
            return rational_backend()
        if kind == "quadratic":
            return quadratic_backend(as_rational(obj["theta"]))
        if kind == "float":
            return float_backend(float(obj.get("tol", 1e-9)))
        raise ValueError(f"unknown backend kind {kind!r}")


def rational_backend() -> ScalarBackend:
    return ScalarBackend("rational")


def quadratic_backend(theta: Union[int, str, Fraction]) -> ScalarBackend:
    """Backend for the extension by ``sqrt(1 + theta**2)``, ``theta`` rational."""
    return ScalarBackend("quadratic", as_rational(theta))


def float_backend(tolerance: float = 1e-9, theta: Optional[float] = None) -> ScalarBackend:
    return ScalarBackend("float", theta, tolerance)


def format_scalar(x: object):
    """Text form used by the file formats: ``"p/q"``, ``{"a":..,"b":..}``, or a number."""
    if isinstance(x, QuadExt):
        return {"a": str(x.a), "b": str(x.b)}
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, float):
        return x
    raise TypeError(f"not a scalar: {x!r}")


def parse_scalar(obj: object, backend: ScalarBackend):
    """Inverse of :func:`format_scalar` relative to ``backend``."""
    if isinstance(obj, dict):
        if backend.kind != "quadratic":
            raise BackendMismatchError("quadratic scalar in a non-quadratic file")
        a, b = as_rational(obj["a"]), as_rational(obj["b"])
        return backend.coerce(QuadExt(a, b, backend.d))
    if isinstance(obj, bool):
        raise TypeError(f"not a scalar: {obj!r}")
    if isinstance(obj, (str, int, float)):
        return backend.coerce(obj)
    raise TypeError(f"not a scalar: {obj!r}")
