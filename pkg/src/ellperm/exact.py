"""Exact arithmetic kernels: rationals, weight polynomials, truncated EGF series.

Everything downstream (class weight polynomials, elliptic Taylor coefficients,
continued-fraction convergents) is computed over three representations:

  Rat       -- alias for fractions.Fraction.  Fraction already keeps values in
               lowest terms with a positive denominator, which is exactly the
               canonical form the rest of the suite asserts.
  WPoly     -- dense univariate polynomial over Rat, coefficient of w^i at
               index i, trailing zeros trimmed.  The variable w stands for the
               peak weight k or for the modulus square m = k^2; the caller
               decides which reading applies.
  EgfSeries -- truncated exponential generating function sum c_i u^i / i!
               with WPoly coefficients.  Coefficients are stored without the
               1/i! factor; factorials enter only through the binomial
               convolution in series_mul, which keeps denominators small.

Truncation orders are per-series and mixing orders is an error, never a
silent truncation.  All values are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Union

Rat = Fraction
RatLike = Union[int, Fraction]


def _as_rat(value: RatLike) -> Rat:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class WPoly:
    """Dense polynomial in one weight variable, canonical (trailing zeros trimmed)."""

    coeffs: tuple[Rat, ...] = ()

    def __post_init__(self) -> None:
        cs = [_as_rat(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Rat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: WPoly) -> WPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return WPoly(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __sub__(self, other: WPoly) -> WPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return WPoly(
            tuple(self.coefficient(i) - other.coefficient(i) for i in range(n))
        )

    def __neg__(self) -> WPoly:
        return WPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: WPoly | RatLike) -> WPoly:
        if not isinstance(other, WPoly):
            s = _as_rat(other)
            return WPoly(tuple(c * s for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return WPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return WPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> WPoly:
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = wpoly(1)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> WPoly:
        """Multiply by w^k."""
        if self.is_zero():
            return self
        return WPoly((Fraction(0),) * k + self.coeffs)

    def stretch(self, factor: int) -> WPoly:
        """Substitute w -> w^factor (used for the modulus change m = k^2)."""
        if factor < 1:
            raise ValueError("stretch factor must be >= 1")
        out = [Fraction(0)] * (factor * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[factor * i] = c
        return WPoly(tuple(out))

    def map_abs(self) -> WPoly:
        return WPoly(tuple(abs(c) for c in self.coeffs))

    def eval(self, x: RatLike) -> Rat:
        return poly_eval(self, x)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "w" if i == 1 else f"w^{i}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        return " + ".join(parts).replace("+ -", "- ")


def wpoly(*coeffs: RatLike) -> WPoly:
    """Build a WPoly from ascending coefficients: wpoly(1, 14, 1) is 1 + 14w + w^2."""
    return WPoly(tuple(_as_rat(c) for c in coeffs))


W_ZERO = wpoly()
W_ONE = wpoly(1)
W_VAR = wpoly(0, 1)


def poly_arith(a: WPoly, b: WPoly, op: str) -> WPoly:
    """Exact add/sub/mul on weight polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(p: WPoly, x: RatLike) -> Rat:
    """Horner evaluation, exact."""
    xv = _as_rat(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * xv + c
    return acc


def poly_invert_unit(p: WPoly) -> WPoly:
    """Invert a degree-0 polynomial.

    Only units of the polynomial ring are invertible here; a genuinely
    weight-dependent divisor would leave the ring.
    """
    if p.degree != 0:
        raise ValueError(
            "cannot invert a weight-dependent polynomial exactly; "
            "evaluate at a numeric modulus first"
        )
    return wpoly(1 / p.coeffs[0])


def _coerce_poly(value: WPoly | RatLike) -> WPoly:
    if isinstance(value, WPoly):
        return value
    return wpoly(value)


@dataclass(frozen=True)
class EgfSeries:
    """Truncated EGF: coefficient i (a WPoly) multiplies u^i / i!."""

    order: int
    coeffs: tuple[WPoly, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("series order must be non-negative")
        cs = tuple(_coerce_poly(c) for c in self.coeffs)
        if len(cs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(cs)}"
            )
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_values(cls, values: Iterable[WPoly | RatLike]) -> EgfSeries:
        cs = tuple(_coerce_poly(v) for v in values)
        if not cs:
            raise ValueError("series needs at least the order-0 coefficient")
        return cls(len(cs) - 1, cs)

    def coefficient(self, i: int) -> WPoly:
        return self.coeffs[i]


def series_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Binomial convolution: coefficient n is sum_i C(n,i) f_i g_{n-i}."""
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} vs {g.order}")
    out = []
    for n in range(f.order + 1):
        acc = W_ZERO
        for i in range(n + 1):
            acc = acc + comb(n, i) * (f.coeffs[i] * g.coeffs[n - i])
        out.append(acc)
    return EgfSeries(f.order, tuple(out))


def series_derive(f: EgfSeries) -> EgfSeries:
    """EGF derivative: drop coefficient 0, shift the rest down one slot."""
    if f.order < 1:
        raise ValueError("cannot derive a series of order 0")
    return EgfSeries(f.order - 1, f.coeffs[1:])


def series_truncate(f: EgfSeries, order: int) -> EgfSeries:
    if order < 0 or order > f.order:
        raise ValueError(f"cannot truncate order-{f.order} series to order {order}")
    return EgfSeries(order, f.coeffs[: order + 1])


def series_agreement_order(f: EgfSeries, g: EgfSeries) -> int | None:
    """Smallest index where the series differ, or None when they agree throughout."""
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} vs {g.order}")
    for n in range(f.order + 1):
        if f.coeffs[n] != g.coeffs[n]:
            return n
    return None
