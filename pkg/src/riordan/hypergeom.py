"""Generalized hypergeometric series as exact coefficient streams.

A spec holds upper parameters (a_1..a_p), lower parameters (c_1..c_q)
and a rational argument scale L; the expanded series is

    sum_n  (a_1)_n ... (a_p)_n / ((c_1)_n ... (c_q)_n) * (L t)^n / n!

computed through the term ratio

    A_{n+1} / A_n = prod(a_i + n) / prod(c_j + n) * L / (n + 1).

No symbolic simplification is attempted: the consumers only ever need
coefficient streams.  Alongside the generic expansion live the closed
forms tied to arrays whose A-sequence is (1 + t)^q: the h-series of such
an array, the generalized binomial series B_q and its rational powers,
and the coefficient formula for (t h)^s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence, Union

from .reports import Counterexample, IdentityReport
from .series import FormalPowerSeries, SeriesError

Scalar = Union[int, Fraction]

_ONE = Fraction(1)


class HypergeomError(ValueError):
    """Base class for hypergeometric failures."""


class PoleError(HypergeomError):
    """A vanishing denominator: bad lower parameter or power-series pole."""


def _fraction(value) -> Fraction:
    if isinstance(value, float):
        raise HypergeomError("float parameters are not exact; use Fraction or int")
    return Fraction(value)


def _is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameter lists plus argument scale; validated at construction."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    scale: Fraction = _ONE

    def __init__(self, upper: Sequence[Scalar], lower: Sequence[Scalar], scale: Scalar = 1):
        object.__setattr__(self, "upper", tuple(_fraction(a) for a in upper))
        object.__setattr__(self, "lower", tuple(_fraction(c) for c in lower))
        object.__setattr__(self, "scale", _fraction(scale))
        for c in self.lower:
            if _is_nonpositive_integer(c):
                raise PoleError(f"lower parameter {c} is zero or a negative integer")


def pochhammer(a: Scalar, n: int) -> Fraction:
    """Rising factorial a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise HypergeomError(f"pochhammer needs n >= 0, got {n}")
    a = _fraction(a)
    out = _ONE
    for i in range(n):
        out *= a + i
    return out


def expand(spec: HypergeometricSpec, precision: int) -> FormalPowerSeries:
    """Exact coefficient stream of the spec, constant term 1."""
    if precision < 1:
        raise SeriesError("precision must be positive")
    coeffs = [_ONE]
    a = _ONE
    for n in range(precision - 1):
        num = spec.scale
        for u in spec.upper:
            num *= u + n
        den = Fraction(n + 1)
        for c in spec.lower:
            den *= c + n
        a = a * num / den
        coeffs.append(a)
    return FormalPowerSeries(coeffs)


def power_spec(q: int, r: Scalar) -> HypergeometricSpec:
    """The spec whose expansion is (B_q)^r.

    Parameters are generated from q rather than stored as literals:
    upper (r+i)/q for i = 0..q-1, lower (r+i)/(q-1) for i = 1..q-1,
    argument scale q^q / (q-1)^(q-1).
    """
    if q < 2:
        raise HypergeomError(f"q must be >= 2, got {q}")
    r = _fraction(r)
    return HypergeometricSpec(
        upper=[(r + i) / q for i in range(q)],
        lower=[Fraction(r + i, q - 1) for i in range(1, q)],
        scale=Fraction(q**q, (q - 1) ** (q - 1)),
    )


def h_spec(q: int) -> HypergeometricSpec:
    """The spec of the h-series of an array with A = (1+t)^q (h = B_q^q)."""
    return power_spec(q, q)


def h_for_binomial_A(q: int, precision: int) -> FormalPowerSeries:
    """The h-series of a proper array whose A-sequence is (1 + t)^q.

    Coefficient of t^(n-1) is C(qn, n) / ((q-1)n + 1); starts 1, q, ...
    """
    if q < 2:
        raise HypergeomError(f"q must be >= 2, got {q}")
    if precision < 1:
        raise SeriesError("precision must be positive")
    return FormalPowerSeries(
        [
            Fraction(comb(q * (m + 1), m + 1), (q - 1) * (m + 1) + 1)
            for m in range(precision)
        ]
    )


def binomial_series(q: int, r: Scalar, precision: int) -> FormalPowerSeries:
    """(B_q)^r with coefficient n equal to r/(qn+r) C(qn+r, n).

    Evaluated through the cancelled product r * prod_{i=1}^{n-1}(qn+r-i) / n!
    so rational r is legal; a vanishing qn + r below the precision is
    still rejected as a pole of the stated form.
    """
    if q < 1:
        raise HypergeomError(f"q must be >= 1, got {q}")
    if precision < 1:
        raise SeriesError("precision must be positive")
    r = _fraction(r)
    if r == 0:
        return FormalPowerSeries.one(precision)
    coeffs = [_ONE]
    for n in range(1, precision):
        if q * n + r == 0:
            raise PoleError(f"qn + r vanishes at n = {n}")
        prod = r
        for i in range(1, n):
            prod *= q * n + r - i
        coeffs.append(prod / factorial(n))
    return FormalPowerSeries(coeffs)


def power_coeff(q: int, s: int, j: int) -> Fraction:
    """[t^j] (t h)^s for the A = (1+t)^q array: qs/((q-1)j+s) C(qj-1, j-s).

    Returns 0 for j < s (the order constraint).
    """
    if q < 2:
        raise HypergeomError(f"q must be >= 2, got {q}")
    if s < 1:
        raise HypergeomError(f"s must be >= 1, got {s}")
    if j < s:
        return Fraction(0)
    return Fraction(q * s, (q - 1) * j + s) * comb(q * j - 1, j - s)


def power_series_coeff(q: int, s: int, n: int) -> Fraction:
    """[t^n] h^s in the shifted form qs/((q-1)n+qs) C(q(n+s)-1, n).

    Substituting j = n + s turns this into :func:`power_coeff`; both are
    kept so tests can pin their agreement with the series oracle.
    """
    if q < 2:
        raise HypergeomError(f"q must be >= 2, got {q}")
    if s < 1:
        raise HypergeomError(f"s must be >= 1, got {s}")
    if n < 0:
        return Fraction(0)
    return Fraction(q * s, (q - 1) * n + q * s) * comb(q * (n + s) - 1, n)


def verify_power_identity(q: int, r: Scalar, precision: int) -> IdentityReport:
    """Check (B_q)^r via two routes: rational power of the r=1 expansion
    against the direct expansion of the r-parameter spec."""
    base = expand(power_spec(q, 1), precision)
    lhs = base.pow_rational(_fraction(r))
    rhs = expand(power_spec(q, r), precision)
    cex = None
    for n in range(precision):
        if lhs.coeff(n) != rhs.coeff(n):
            cex = Counterexample(
                params={"q": str(q), "r": str(r), "n": str(n)},
                lhs=str(lhs.coeff(n)),
                rhs=str(rhs.coeff(n)),
            )
            break
    return IdentityReport(
        identity="hypergeometric-power-law",
        grid=f"q={q}, r={r}, coefficients below {precision}",
        points=precision,
        counterexample=cex,
    )
