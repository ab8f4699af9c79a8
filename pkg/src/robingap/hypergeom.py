"""Confluent hypergeometric function of the first kind, evaluated robustly.

The function

    M(a, b; rho) = sum_k  a^(k) / b^(k) * rho^k / k!

(with ``a^(k)`` the rising factorial) grows like ``rho^(a-b) e^rho`` for
large ``rho``, so for arguments in the hundreds its value overflows a plain
float long before the series converges.  Everything here therefore works in
a sign/log-magnitude representation (:class:`ScaledReal`): the series is
summed with running rescaling of the accumulator, and ratios of two huge
values reduce to a subtraction of log magnitudes.

Only real arguments are supported, and only the function of the first kind:
the second-kind solution U never enters any computation downstream (it is
excluded from eigenfunctions on integrability grounds, not evaluated).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ScaledReal",
    "SeriesControl",
    "SeriesError",
    "rising_factorial",
    "rising_factorial_scaled",
    "kummer_m",
    "kummer_m_terms",
    "kummer_m_derivative",
    "kummer_ratio",
    "upper_incomplete_gamma_regularized",
]

# Accumulator rescale point: far below the float overflow threshold so that
# term * factor products stay representable between rescales.
_RESCALE = 1e250
_LOG_RESCALE = math.log(_RESCALE)

# Largest magnitude exp() can produce without overflowing a float.
_MAX_LOG_FLOAT = math.log(math.fsum([math.ldexp(1.0, 1023)]))  # ~709.78
_MIN_LOG_FLOAT = math.log(5e-324)


class SeriesError(ArithmeticError):
    """Series evaluation failed (invalid parameters or no convergence)."""


@dataclass(frozen=True)
class ScaledReal:
    """A real number stored as ``sign * exp(log_mag)``.

    ``sign`` is -1, 0 or +1; ``log_mag`` is ignored when ``sign == 0``.
    Zero is represented exactly.  Conversion to a plain float raises
    :class:`OverflowError` when the magnitude falls outside the float
    exponent range instead of silently returning ``inf`` or ``0.0``.
    """

    sign: int
    log_mag: float = 0.0

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")

    @classmethod
    def from_float(cls, x: float) -> "ScaledReal":
        if x == 0.0:
            return cls(0, 0.0)
        if math.isinf(x) or math.isnan(x):
            raise ValueError(f"cannot represent {x!r}")
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    def to_float(self) -> float:
        """Plain float value; explicit error outside the representable range."""
        if self.sign == 0:
            return 0.0
        if self.log_mag > _MAX_LOG_FLOAT:
            raise OverflowError(
                f"magnitude exp({self.log_mag:.6g}) overflows a float"
            )
        if self.log_mag < _MIN_LOG_FLOAT:
            raise OverflowError(
                f"magnitude exp({self.log_mag:.6g}) underflows a float"
            )
        return self.sign * math.exp(self.log_mag)

    def scaled_by(self, factor: float) -> "ScaledReal":
        """Product with a plain float, staying in scaled form."""
        if factor == 0.0 or self.sign == 0:
            return ScaledReal(0, 0.0)
        sign = self.sign * (1 if factor > 0 else -1)
        return ScaledReal(sign, self.log_mag + math.log(abs(factor)))

    def ratio(self, other: "ScaledReal") -> float:
        """``self / other`` as a plain float (log magnitudes subtract)."""
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero-sign ScaledReal")
        if self.sign == 0:
            return 0.0
        return ScaledReal(self.sign * other.sign, self.log_mag - other.log_mag).to_float()

    def minus(self, other: "ScaledReal") -> "ScaledReal":
        """Difference ``self - other`` computed without leaving log space."""
        if other.sign == 0:
            return self
        if self.sign == 0:
            return ScaledReal(-other.sign, other.log_mag)
        hi, lo, flip = (self, other, 1) if self.log_mag >= other.log_mag else (other, self, -1)
        d = hi.sign - lo.sign * math.exp(lo.log_mag - hi.log_mag)
        if d == 0.0:
            return ScaledReal(0, 0.0)
        return ScaledReal(flip * (1 if d > 0 else -1), hi.log_mag + math.log(abs(d)))


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the power series."""

    rel_tol: float = 1e-14
    max_terms: int = 100_000

    def __post_init__(self) -> None:
        if not (0.0 < self.rel_tol < 1.0):
            raise ValueError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


def rising_factorial(a: float, k: int) -> float:
    """Rising factorial ``a (a+1) ... (a+k-1)``, with the empty product 1.

    Raises :class:`OverflowError` if the plain-float result overflows; use
    :func:`rising_factorial_scaled` when values this large are expected.
    """
    if k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k}")
    out = 1.0
    for i in range(k):
        out *= a + i
        if math.isinf(out):
            raise OverflowError(
                f"rising_factorial({a}, {k}) overflows at factor {i}"
            )
    return out


def rising_factorial_scaled(a: float, k: int) -> ScaledReal:
    """Rising factorial in sign/log form, for arguments of any size."""
    if k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k}")
    sign = 1
    log_mag = 0.0
    for i in range(k):
        f = a + i
        if f == 0.0:
            return ScaledReal(0, 0.0)
        sign *= 1 if f > 0 else -1
        log_mag += math.log(abs(f))
    return ScaledReal(sign, log_mag)


def _validate_b(b: float) -> None:
    if b <= 0 and b == int(b):
        raise SeriesError(f"b must avoid 0, -1, -2, ...; got b={b}")


def kummer_m_terms(
    a: float, b: float, rho: float, ctrl: SeriesControl = SeriesControl()
) -> tuple[ScaledReal, int]:
    """As :func:`kummer_m`, additionally returning the number of terms summed."""
    _validate_b(b)
    if rho < 0:
        raise SeriesError(f"rho must be nonnegative, got {rho}")
    if rho == 0.0:
        return ScaledReal(1, 0.0), 1

    # Terms follow the two-term recurrence t_{k+1} = t_k (a+k)/(b+k) rho/(k+1).
    # They grow up to a hump near k ~ rho before decaying, hence the k > rho
    # guard on the stopping test.  The accumulator is rescaled whenever it
    # threatens the float range, and summed in compensated (Kahan) form to
    # control cancellation when a < 0 makes the terms alternate.
    term = 1.0
    total = 1.0
    comp = 0.0
    log_offset = 0.0
    k = 0
    while k < ctrl.max_terms:
        factor = (a + k) / (b + k) * rho / (k + 1)
        term *= factor
        if term == 0.0:
            # Polynomial case: a in {0, -1, -2, ...} zeroes the factor and
            # the series terminates exactly.
            break
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        k += 1
        if abs(term) <= ctrl.rel_tol * abs(total) and k > rho:
            break
        biggest = max(abs(total), abs(term))
        if biggest > _RESCALE:
            total /= _RESCALE
            term /= _RESCALE
            comp /= _RESCALE
            log_offset += _LOG_RESCALE
    else:
        ratio = (a + k) / (b + k) * rho / (k + 1)
        raise SeriesError(
            f"kummer_m({a}, {b}, {rho}) did not converge within "
            f"{ctrl.max_terms} terms (last term ratio {ratio:.3e})"
        )

    if total == 0.0:
        return ScaledReal(0, 0.0), k + 1
    sign = 1 if total > 0 else -1
    return ScaledReal(sign, math.log(abs(total)) + log_offset), k + 1


def kummer_m(
    a: float, b: float, rho: float, ctrl: SeriesControl = SeriesControl()
) -> ScaledReal:
    """Kummer's function M(a, b; rho) for rho >= 0, in scaled form.

    The power series is summed with relative truncation error at most
    ``ctrl.rel_tol``; intermediate partial sums never overflow thanks to the
    running rescaling.  When ``a`` is a nonpositive integer the series is a
    polynomial of degree ``-a`` and terminates exactly.
    """
    value, _ = kummer_m_terms(a, b, rho, ctrl)
    return value


def kummer_m_derivative(
    a: float, b: float, rho: float, ctrl: SeriesControl = SeriesControl()
) -> ScaledReal:
    """d/drho M(a, b; rho), via M'(a,b;rho) = (a/b) M(a+1, b+1; rho)."""
    _validate_b(b)
    _validate_b(b + 1)
    if a == 0.0:
        return ScaledReal(0, 0.0)
    return kummer_m(a + 1.0, b + 1.0, rho, ctrl).scaled_by(a / b)


def kummer_ratio(
    a: float, b: float, rho: float, ctrl: SeriesControl = SeriesControl()
) -> float:
    """M(a+1, b+1; rho) / M(a, b; rho) as a plain float.

    Both values may individually be far outside the float range; the ratio
    is formed by subtracting log magnitudes.  Raises
    :class:`ZeroDivisionError` when the denominator vanishes.
    """
    numer = kummer_m(a + 1.0, b + 1.0, rho, ctrl)
    denom = kummer_m(a, b, rho, ctrl)
    return numer.ratio(denom)


def upper_incomplete_gamma_regularized(n: int, x0: float) -> float:
    """Q(n, x0) = e^{-x0} sum_{k<n} x0^k / k!  for integer n >= 1.

    This is the regularized upper incomplete gamma function at integer
    order, i.e. the tail mass Gamma(n)^{-1} int_{x0}^inf e^{-y} y^{n-1} dy.
    Summed in log space so large ``x0`` underflows gracefully to 0.
    """
    if n < 1 or n != int(n):
        raise ValueError(f"n must be a positive integer, got {n}")
    if x0 < 0:
        raise ValueError(f"x0 must be nonnegative, got {x0}")
    if x0 == 0.0:
        return 1.0
    logs = [-x0 + k * math.log(x0) - math.lgamma(k + 1) for k in range(int(n))]
    peak = max(logs)
    if peak < _MIN_LOG_FLOAT:
        return 0.0
    acc = math.fsum(math.exp(lg - peak) for lg in logs)
    return min(1.0, math.exp(peak) * acc)
