"""Small special-function kit: real dilogarithm, integer zeta, half-integer gamma.

Only what the closed-form free energies and asymptote coefficients need; no
general special-function dependency.
"""

from __future__ import annotations

import math

from .errors import DomainError

_PI2_6 = math.pi * math.pi / 6.0

# Exact values for the even arguments that appear in the asymptote table.
_ZETA_EXACT = {
    2: _PI2_6,
    4: math.pi**4 / 90.0,
    6: math.pi**6 / 945.0,
    8: math.pi**8 / 9450.0,
}

# Bernoulli numbers B_2, B_4, ... for the Euler-Maclaurin tail.
_BERNOULLI = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0)


def _li2_series(x: float) -> float:
    # Plain power series; used only for |x| <= 1/2 where it converges fast.
    term = x
    total = x
    k = 1
    while abs(term) > 1e-17 * max(abs(total), 1e-300):
        k += 1
        term *= x
        total += term / (k * k)
    return total


def dilogarithm(x: float) -> float:
    """Li2(x) for real x <= 1, accurate to about 1e-14.

    Uses the power series on |x| <= 1/2 and the standard reflection
    (x -> 1-x), Landen (x -> x/(x-1)) and inversion (x -> 1/x) identities
    to map every other argument into that disk.
    """
    if x > 1.0:
        raise DomainError(f"dilogarithm requires x <= 1, got {x}")
    if x == 1.0:
        return _PI2_6
    if x == -1.0:
        return -_PI2_6 / 2.0
    if x < -1.0:
        # Li2(x) = -pi^2/6 - ln^2(-x)/2 - Li2(1/x)
        return -_PI2_6 - 0.5 * math.log(-x) ** 2 - dilogarithm(1.0 / x)
    if x > 0.5:
        # Li2(x) + Li2(1-x) = pi^2/6 - ln(x) ln(1-x)
        return _PI2_6 - math.log(x) * math.log1p(-x) - _li2_series(1.0 - x)
    if x < -0.5:
        # Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2
        return -_li2_series(x / (x - 1.0)) - 0.5 * math.log1p(-x) ** 2
    return _li2_series(x)


def zeta_int(s: int) -> float:
    """Riemann zeta at integer s >= 2, via exact table or Euler-Maclaurin."""
    if s < 2:
        raise DomainError(f"zeta_int requires s >= 2, got {s}")
    if s in _ZETA_EXACT:
        return _ZETA_EXACT[s]
    n = 16
    total = sum(k ** (-float(s)) for k in range(1, n))
    total += n ** (1.0 - s) / (s - 1.0) + 0.5 * n ** (-float(s))
    power = s * n ** (-s - 1.0)
    fact = 1.0
    for j, b in enumerate(_BERNOULLI):
        total += b / math.factorial(2 * (j + 1)) * fact * power
        fact *= (s + 2 * j + 1) * (s + 2 * j + 2)
        power /= n * n
    return total


def gamma_int_half(x: float) -> float:
    """Gamma function at positive integer or half-integer arguments."""
    two_x = 2.0 * x
    if x <= 0 or abs(two_x - round(two_x)) > 1e-12:
        raise DomainError(f"gamma_int_half requires positive integer/half-integer, got {x}")
    if round(two_x) % 2 == 0:
        return float(math.factorial(int(round(x)) - 1))
    val = math.sqrt(math.pi)
    y = 0.5
    while y < x - 0.25:
        val *= y
        y += 1.0
    return val
