"""Residue polynomials of the transform pole at s = 1.

For integer order k the inversion transform has a pole of order k+1 at
s = 1 whose residue is e^t * P_k(t) / k! with P_k a monic degree-k
polynomial depending on the power offset alpha.  The coefficients come
from two short series expansions about s = 1:

  * the binomial series of s^(-alpha-1), and
  * the coefficients v_n of ((s-1)/ln s)^(k+1), generated by the Miller
    recurrence for integer powers of a power series.

Their Cauchy product c_n then gives the polynomial coefficients
p_{k-j} = c_j * k!/(k-j)!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RealPolynomial:
    """Polynomial with real coefficients, ascending order."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(float(x) for x in self.coeffs)
        while len(c) > 1 and c[-1] == 0.0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)
        if not c:
            raise ValueError("a polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = np.zeros_like(np.asarray(t, dtype=float))
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc if acc.ndim else float(acc)


def miller_v(k: int, n_max: int) -> list:
    """Coefficients v_0..v_N of ((s-1)/ln s)^(k+1) about s = 1.

    ln(s)/(s-1) = 1 + sum_{j>=1} (-1)^j (s-1)^j/(j+1); its (-k-1) power
    satisfies the Miller recurrence
        v_0 = 1,
        v_n = sum_{j=1}^{n} (k j/n + 1) (-1)^(j+1) v_{n-j} / (j+1).
    """
    if k < 0 or n_max < 0:
        raise ValueError("k and n_max must be non-negative")
    v = [1.0]
    for n in range(1, n_max + 1):
        acc = 0.0
        for j in range(1, n + 1):
            sign = 1.0 if j % 2 == 1 else -1.0
            acc += (k * j / n + 1.0) * sign * v[n - j] / (j + 1.0)
        v.append(acc)
    return v


def series_c(k: int, alpha: float, n_max: int) -> list:
    """Taylor coefficients c_n of s^(-alpha-1) ((s-1)/ln s)^(k+1) at s = 1.

    The binomial factor binom(-alpha-1, j) is accumulated by its product
    form (-alpha-1)(-alpha-2)...(-alpha-j)/j!, which stays stable for
    negative non-integer arguments.
    """
    v = miller_v(k, n_max)
    binom = [1.0]
    for j in range(1, n_max + 1):
        binom.append(binom[-1] * (-alpha - j) / j)
    return [sum(binom[j] * v[n - j] for j in range(n + 1)) for n in range(n_max + 1)]


def residue_polynomial(k: int, alpha: float) -> RealPolynomial:
    """The monic degree-k polynomial P_k with residue e^t P_k(t)/k! at s=1.

    Coefficient of t^m is c_{k-m} * k!/m!.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    c = series_c(k, alpha, k)
    kfact = math.factorial(k)
    coeffs = [c[k - m] * kfact / math.factorial(m) for m in range(k + 1)]
    return RealPolynomial(tuple(coeffs))


def residue_at_one(t: float, k: int, alpha: float) -> float:
    """e^t * P_k(t) / k!, the residue of the inversion integrand at s = 1."""
    p = residue_polynomial(k, alpha)
    try:
        return math.exp(t) * p(t) / math.factorial(k)
    except OverflowError as exc:
        raise OverflowError(
            f"residue term e^t P_k(t)/k! overflows at t = {t!r}") from exc
