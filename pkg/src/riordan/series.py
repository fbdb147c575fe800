"""Truncated formal power series over exact rationals.

A series is a finite coefficient vector together with an explicit
precision: ``f`` is known modulo ``t**f.precision`` and nothing beyond.
Coefficients are :class:`fractions.Fraction`; no operation ever rounds.
Requesting a coefficient at or past the precision is an error rather
than a silent zero, and binary operations truncate to the smaller
operand precision, so knowledge never grows by accident.

Everything here is immutable and pure; values can be shared freely
across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SeriesError(ValueError):
    """Base class for series arithmetic failures."""


class PrecisionError(SeriesError):
    """A coefficient beyond the known precision was requested."""


class NonInvertibleError(SeriesError):
    """Division (or negative power) by a series with zero constant term."""


class CompositionOrderError(SeriesError):
    """Inner series of a composition has a nonzero constant term."""


class NormalizationError(SeriesError):
    """Rational power of a series whose constant term is not exactly 1."""


class ReversionOrderError(SeriesError):
    """Reversion of a series whose order is not exactly 1."""


class SingularInversionError(SeriesError):
    """Denominator of the Lagrange generating-function form is not invertible."""


def _fraction(value) -> Fraction:
    if isinstance(value, float):
        raise SeriesError("float coefficients are not exact; use Fraction or int")
    return Fraction(value)


class FormalPowerSeries:
    """A power series known modulo ``t**precision``.

    ``FormalPowerSeries(coeffs)`` takes the precision from the length of
    ``coeffs``; with an explicit ``precision`` the list is zero-padded or
    truncated to fit.  Instances are immutable; arithmetic returns new
    series truncated to the smaller operand precision.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], precision: int | None = None):
        cs = [_fraction(c) for c in coeffs]
        if precision is not None:
            if precision < 1:
                raise SeriesError(f"precision must be positive, got {precision}")
            if len(cs) > precision:
                del cs[precision:]
            else:
                cs.extend([_ZERO] * (precision - len(cs)))
        elif not cs:
            raise SeriesError("empty coefficient list needs an explicit precision")
        self._coeffs = tuple(cs)

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, precision: int) -> "FormalPowerSeries":
        return cls([], precision=precision)

    @classmethod
    def one(cls, precision: int) -> "FormalPowerSeries":
        return cls([_ONE], precision=precision)

    @classmethod
    def t(cls, precision: int) -> "FormalPowerSeries":
        """The series ``t`` (requires precision >= 2 to be visible)."""
        return cls([_ZERO, _ONE], precision=precision)

    @classmethod
    def constant(cls, value: Scalar, precision: int) -> "FormalPowerSeries":
        return cls([_fraction(value)], precision=precision)

    # -- basic queries -----------------------------------------------

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, n: int) -> Fraction:
        """Coefficient of ``t**n``; error if ``n`` is out of the known range."""
        if n < 0:
            raise SeriesError(f"negative index {n}")
        if n >= len(self._coeffs):
            raise PrecisionError(
                f"coefficient {n} requested but series only known mod t^{len(self._coeffs)}"
            )
        return self._coeffs[n]

    __getitem__ = coeff

    @property
    def order(self) -> int:
        """Index of the first nonzero coefficient (= precision if all zero)."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return len(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return self.order == len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalPowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if len(self._coeffs) > 8 else ""
        return f"FormalPowerSeries([{head}{tail}], precision={len(self._coeffs)})"

    # -- precision management ----------------------------------------

    def truncate(self, precision: int) -> "FormalPowerSeries":
        """Forget coefficients from ``precision`` on (never invents any)."""
        if precision > len(self._coeffs):
            raise PrecisionError(
                f"cannot extend precision {len(self._coeffs)} to {precision}"
            )
        if precision == len(self._coeffs):
            return self
        return FormalPowerSeries(self._coeffs[:precision])

    def _padded(self, extra: int) -> "FormalPowerSeries":
        # Internal only: appends zeros *claiming* knowledge.  Every call site
        # must argue why the fabricated coefficients cannot reach the result.
        return FormalPowerSeries(self._coeffs + (_ZERO,) * extra)

    def shift_up(self, k: int = 1) -> "FormalPowerSeries":
        """Multiply by ``t**k``; the result is genuinely known ``k`` orders further."""
        if k < 0:
            raise SeriesError("shift_up needs k >= 0")
        return FormalPowerSeries((_ZERO,) * k + self._coeffs)

    def shift_down(self, k: int = 1) -> "FormalPowerSeries":
        """Divide by ``t**k``; the first ``k`` coefficients must vanish."""
        if k < 0:
            raise SeriesError("shift_down needs k >= 0")
        if len(self._coeffs) - k < 1:
            raise PrecisionError(f"shift_down({k}) would leave no known coefficients")
        if any(self._coeffs[i] for i in range(k)):
            raise SeriesError(f"series has order < {k}, cannot divide by t^{k}")
        return FormalPowerSeries(self._coeffs[k:])

    # -- ring operations ---------------------------------------------

    @staticmethod
    def _coerce(value, precision: int):
        if isinstance(value, FormalPowerSeries):
            return value
        if isinstance(value, (int, Fraction)):
            return FormalPowerSeries.constant(value, precision)
        return None

    def __add__(self, other):
        other = self._coerce(other, len(self._coeffs))
        if other is None:
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        return FormalPowerSeries(
            [self._coeffs[i] + other._coeffs[i] for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return FormalPowerSeries([-c for c in self._coeffs])

    def __sub__(self, other):
        other = self._coerce(other, len(self._coeffs))
        if other is None:
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        return FormalPowerSeries(
            [self._coeffs[i] - other._coeffs[i] for i in range(n)]
        )

    def __rsub__(self, other):
        other = self._coerce(other, len(self._coeffs))
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _fraction(other)
            return FormalPowerSeries([c * a for a in self._coeffs])
        if not isinstance(other, FormalPowerSeries):
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        a, b = self._coeffs, other._coeffs
        out = [_ZERO] * n
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return FormalPowerSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _fraction(other)
            if not c:
                raise NonInvertibleError("division by zero scalar")
            return FormalPowerSeries([a / c for a in self._coeffs])
        if not isinstance(other, FormalPowerSeries):
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        g = other._coeffs
        if not g[0]:
            raise NonInvertibleError("divisor has zero constant term")
        g0 = g[0]
        out = [_ZERO] * n
        for i in range(n):
            acc = self._coeffs[i]
            for j in range(1, i + 1):
                if g[j] and out[i - j]:
                    acc -= g[j] * out[i - j]
            out[i] = acc / g0
        return FormalPowerSeries(out)

    def __rtruediv__(self, other):
        other = self._coerce(other, len(self._coeffs))
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        """Integer power by square-and-multiply; ``f**0`` is 1."""
        if not isinstance(k, int):
            return NotImplemented
        n = len(self._coeffs)
        if k < 0:
            if not self._coeffs[0]:
                raise NonInvertibleError("negative power of a series with f(0) = 0")
            return (FormalPowerSeries.one(n) / self) ** (-k)
        result = FormalPowerSeries.one(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus helpers --------------------------------------------

    def derivative(self) -> "FormalPowerSeries":
        """Termwise derivative; precision drops by one."""
        if len(self._coeffs) < 2:
            raise PrecisionError("derivative needs precision >= 2")
        return FormalPowerSeries(
            [i * self._coeffs[i] for i in range(1, len(self._coeffs))]
        )

    def integral(self, constant: Scalar = 0) -> "FormalPowerSeries":
        """Termwise antiderivative; precision grows by one."""
        out = [_fraction(constant)]
        out.extend(c / (i + 1) for i, c in enumerate(self._coeffs))
        return FormalPowerSeries(out)

    # -- composition, powers, reversion ------------------------------

    def compose(self, inner: "FormalPowerSeries") -> "FormalPowerSeries":
        """``self(inner(t))`` by Horner's rule; requires ``inner(0) = 0``."""
        if not isinstance(inner, FormalPowerSeries):
            raise SeriesError("compose needs a series argument")
        if inner._coeffs[0]:
            raise CompositionOrderError("inner series must have order >= 1")
        n = min(len(self._coeffs), len(inner._coeffs))
        g = inner.truncate(n)
        acc = FormalPowerSeries.zero(n)
        for c in reversed(self._coeffs[:n]):
            acc = acc * g
            if c:
                acc = acc + c
        return acc

    def _log(self) -> "FormalPowerSeries":
        # log f = integral(f'/f), valid for f(0) = 1
        if len(self._coeffs) == 1:
            return FormalPowerSeries.zero(1)
        return (self.derivative() / self).integral()

    @staticmethod
    def _exp(g: "FormalPowerSeries") -> "FormalPowerSeries":
        # exp g for g(0) = 0, via e' = e g' termwise: n e_n = sum k g_k e_{n-k}
        n = len(g._coeffs)
        e = [_ONE] + [_ZERO] * (n - 1)
        gc = g._coeffs
        for m in range(1, n):
            acc = _ZERO
            for k in range(1, m + 1):
                if gc[k] and e[m - k]:
                    acc += k * gc[k] * e[m - k]
            e[m] = acc / m
        return FormalPowerSeries(e)

    def pow_rational(self, r: Scalar) -> "FormalPowerSeries":
        """``f**r`` for rational ``r`` via exp(r log f); needs ``f(0) = 1``."""
        r = _fraction(r)
        if self._coeffs[0] != 1:
            raise NormalizationError(
                "rational powers need constant term exactly 1; factor out constants first"
            )
        return self._exp(self._log() * r)

    def revert(self) -> "FormalPowerSeries":
        """Compositional inverse: ``self.compose(result) = t``.

        Requires order exactly 1.  Newton iteration with doubling working
        precision; the independent Lagrange coefficient formula
        (:func:`lagrange_coeffs`) serves as the test oracle.
        """
        n = len(self._coeffs)
        if self.order != 1:
            raise ReversionOrderError("reversion needs a series of order exactly 1")
        w = FormalPowerSeries([_ZERO, _ONE / self._coeffs[1]], precision=min(2, n))
        prec = 2
        while prec < n:
            prec = min(2 * prec, n)
            g = self.truncate(prec)
            # Zero-padding the current guess is safe: the Newton step below
            # repairs every coefficient up to twice the previously correct order.
            w = w._padded(prec - len(w._coeffs))
            err = g.compose(w) - FormalPowerSeries.t(prec)
            den = g.derivative().compose(w)  # precision prec - 1, den(0) != 0
            inv = FormalPowerSeries.one(prec - 1) / den
            # err has order >= 2, so the top coefficient of err * inv never
            # touches the fabricated top coefficient of the padded inverse.
            w = w - err * inv._padded(1)
        return w

    # -- serialization -----------------------------------------------

    def to_record(self) -> dict:
        """JSON-ready record; fractions as decimal strings, round-trips exactly."""
        return {"prec": len(self._coeffs), "coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_record(cls, record: dict) -> "FormalPowerSeries":
        return cls([Fraction(c) for c in record["coeffs"]], precision=record["prec"])


# -- Lagrange inversion ----------------------------------------------


def _check_phi(phi: FormalPowerSeries, n: int) -> FormalPowerSeries:
    if not phi.coeff(0):
        raise SeriesError("phi(0) must be nonzero")
    if phi.precision >= n:
        return phi.truncate(n)
    if phi.precision == n - 1:
        # The solution of w = t phi(w) mod t^n only involves phi mod t^(n-1),
        # so one fabricated top coefficient cannot reach the result.
        return phi._padded(1)
    raise PrecisionError(f"phi known mod t^{phi.precision}, need at least t^{n - 1}")


def lagrange_solve(phi: FormalPowerSeries, precision: int) -> FormalPowerSeries:
    """The unique series ``w`` with ``w = t * phi(w)``, ``phi(0) != 0``.

    Computed as the compositional inverse of ``t / phi(t)``.
    """
    if precision < 1:
        raise SeriesError("precision must be positive")
    if not phi.coeff(0):
        raise SeriesError("phi(0) must be nonzero")
    if precision == 1:
        return FormalPowerSeries.zero(1)
    p = _check_phi(phi, precision)
    g = FormalPowerSeries.t(precision) / p
    return g.revert()


def lagrange_coeffs(phi: FormalPowerSeries, k: int, precision: int) -> FormalPowerSeries:
    """``w**k`` for ``w = t phi(w)`` straight from the coefficient formula.

    Coefficient ``n`` is ``(k/n) [t^(n-k)] phi(t)**n``.  Deliberately
    independent of :func:`lagrange_solve`, so the two can cross-check.
    """
    if k < 1:
        raise SeriesError("k must be >= 1")
    if precision < 1:
        raise SeriesError("precision must be positive")
    if precision == 1:
        if not phi.coeff(0):
            raise SeriesError("phi(0) must be nonzero")
        return FormalPowerSeries.zero(1)
    p = _check_phi(phi, precision)
    out = [_ZERO] * precision
    power = FormalPowerSeries.one(precision)
    for n in range(1, precision):
        power = power * p
        if n >= k:
            out[n] = Fraction(k, n) * power.coeff(n - k)
    return FormalPowerSeries(out)


def lagrange_gf(
    F: FormalPowerSeries, phi: FormalPowerSeries, precision: int
) -> FormalPowerSeries:
    """The series whose coefficient ``n`` is ``[t^n] F(t) phi(t)**n``.

    Evaluated as ``F(w) / (1 - t phi'(w))`` at ``w = t phi(w)``.
    """
    if precision < 1:
        raise SeriesError("precision must be positive")
    if not phi.coeff(0):
        raise SeriesError("phi(0) must be nonzero")
    if precision == 1:
        return FormalPowerSeries.constant(F.coeff(0), 1)
    if F.precision < precision:
        raise PrecisionError(f"F known mod t^{F.precision}, need t^{precision}")
    p = _check_phi(phi, precision)
    f = F.truncate(precision)
    w = lagrange_solve(p, precision)
    den = 1 - p.derivative().compose(w).shift_up()
    if not den.coeff(0):
        raise SingularInversionError("1 - t phi'(w) has zero constant term")
    return f.compose(w) / den
