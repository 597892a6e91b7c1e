"""Transform values and numerical inversion on a parabolic contour.

The transform of mu(t, beta, alpha) is M(s) = 1/(s^(alpha+1) (Ln s)^(beta+1))
with the principal logarithm.  Its singularity structure depends on the
nature of beta:

  * beta a non-negative integer: branch cut (-inf, 0], plus a pole of
    order beta+1 at s = 1.  The inversion contour crosses the real axis
    inside (0, 1) and the pole is removed by residue subtraction, with
    the residue supplied in closed form by the residues module.
  * otherwise: the cut extends over (-inf, 1] and the contour must cross
    to the right of 1, paying an e^(sigma t) conditioning penalty.

The contour family is the left-opening parabola

    s(theta) = x0 + w*(2i*theta - theta^2),   theta in [-a, a],

with vertex x0 on the real axis, discretized by the trapezoidal rule.
Parameter choice balances three error sources: trapezoidal aliasing
(controlled by the width of the strip around the real theta-axis in
which the integrand stays analytic), truncation of the theta range, and
round-off amplified by e^(x0 t).  The width w = 4/3*(x0 - cut) fixes the
upper strip half-width at 0.5; the step h then follows from the aliasing
bounds and the truncation point from a numerical scan of the integrand
magnitude.  When round-off alone exceeds the target the construction
refuses and raises ToleranceUnachievable (callers can fall back to the
large-argument expansion).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (BranchCutError, DomainError, SingularityError,
                     ToleranceUnachievable)
from .residues import residue_at_one
from .scalars import recip_gamma

_INTEGER_TOL = 1e-12
_EPS = 1e-16  # working-precision constant for the round-off balance
_MAX_NODES = 2_000_000


def _beta_is_integer(beta: float) -> bool:
    return abs(beta - round(beta)) <= _INTEGER_TOL and round(beta) >= 0


@dataclass(frozen=True)
class ContourSpec:
    """Parabolic inversion contour plus the cut/residue mode it assumes."""

    vertex_shift: float   # real-axis crossing point x0
    width: float          # parabola scale parameter w
    step: float           # trapezoid step h in the contour parameter
    nodes: int            # symmetric truncation: theta_j = j*h, |j| <= nodes
    residue_mode: bool    # subtract the pole at s = 1 separately

    def __post_init__(self):
        if self.nodes < 8:
            raise ValueError("a contour needs at least 8 nodes per half")
        if self.width <= 0 or self.step <= 0:
            raise ValueError("width and step must be positive")
        if self.residue_mode and not 0.0 < self.vertex_shift < 1.0:
            raise ValueError("residue-mode contours must cross inside (0, 1)")
        if not self.residue_mode and self.vertex_shift <= 1.0:
            raise ValueError("cut-avoiding contours must cross right of 1")

    def points(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self.vertex_shift + self.width * (2j * theta - theta * theta)

    def derivative(self, theta):
        theta = np.asarray(theta, dtype=float)
        return 2.0 * self.width * (1j - theta)


def transform_value(s: complex, beta: float, alpha: float) -> complex:
    """M(s) = 1/(s^(alpha+1) (Ln s)^(beta+1)) with principal branches.

    Rejects points on the active cut ((-inf, 0] for integer beta,
    (-inf, 1] otherwise) and the singular points s = 0 and s = 1.
    """
    s = complex(s)
    if s == 0:
        raise SingularityError("transform is singular at s = 0")
    integer_beta = _beta_is_integer(beta)
    if s.imag == 0.0:
        if s.real == 1.0:
            raise SingularityError("transform is singular at s = 1")
        cut_end = 0.0 if integer_beta else 1.0
        if s.real <= cut_end:
            raise BranchCutError(
                f"s = {s!r} lies on the branch cut (-inf, {cut_end!r}]")
        s = complex(s.real, 0.0)  # normalize -0.0j to the upper side
    ln_s = cmath.log(s)
    s_pow = cmath.exp((alpha + 1.0) * ln_s)
    if integer_beta:
        ln_pow = ln_s ** (int(round(beta)) + 1)
    else:
        ln_pow = cmath.exp((beta + 1.0) * cmath.log(ln_s))
    return 1.0 / (s_pow * ln_pow)


def _transform_on_contour(s, beta: float, alpha: float):
    """Vectorized M(s) for contour nodes known to avoid cuts and poles."""
    ln_s = np.log(s)
    s_pow = np.exp((alpha + 1.0) * ln_s)
    if _beta_is_integer(beta):
        ln_pow = ln_s ** (int(round(beta)) + 1)
    else:
        ln_pow = np.exp((beta + 1.0) * np.log(ln_s))
    return 1.0 / (s_pow * ln_pow)


def _magnitude_estimate(t: float, beta: float, alpha: float) -> float:
    """Rough |mu(t, beta, alpha)| used to convert tol into an absolute target."""
    if _beta_is_integer(beta):
        k = int(round(beta))
        poly = sum(abs(alpha) ** (k - m) * t ** m /
                   (math.factorial(m) * math.factorial(k - m))
                   for m in range(k + 1))
        est = math.exp(t) * max(poly, 1e-3)
    else:
        growth = t ** beta * abs(recip_gamma(beta + 1.0)) if t >= 1.0 else 1.0
        est = math.exp(t) * max(growth, 1e-3)
    return min(max(est, 1.0), 1e8)


def contour_for(t: float, beta: float, tol: float,
                crossing: float | None = None) -> ContourSpec:
    """Build a contour whose predicted total error is below tol.

    tol is interpreted relative to a rough magnitude estimate of the
    result (floored at an absolute scale of 1).  crossing overrides the
    default real-axis crossing point (0.5 in residue mode, 1.5 otherwise);
    it must respect the mode's admissible interval.
    """
    if not t > 0:
        raise DomainError("t must be positive")
    if not 0 < tol < 1:
        raise ValueError("tol must lie in (0, 1)")
    residue_mode = _beta_is_integer(beta)
    cut_end = 0.0 if residue_mode else 1.0
    x0 = crossing if crossing is not None else (0.5 if residue_mode else 1.5)
    delta = x0 - cut_end
    if delta <= 0 or (residue_mode and x0 >= 1.0):
        raise ValueError(f"crossing {x0!r} is invalid for this mode")
    w = 4.0 * delta / 3.0  # upper strip half-width becomes exactly 0.5

    target = tol * _magnitude_estimate(t, beta, 0.0)
    # round-off on the contour is amplified by e^(x0 t)
    if 16.0 * _EPS * math.exp(x0 * t) > target:
        raise ToleranceUnachievable(
            f"e^({x0!r}*t) amplifies round-off beyond tol at t = {t!r}; "
            "use the large-argument expansion instead")

    log_term = max(math.log(100.0 / target), 1.0)
    # Aliasing bounds.  A singularity of strength p touching a strip edge
    # contributes ~ (2pi/h)^(p-1) e^(Re(s*) t) e^(-2pi d/h), so the step
    # must shrink by the singularity-strength term; since it depends on h
    # the bound is solved by a short fixed-point iteration.
    up_strength = 2.5 if residue_mode else beta + 1.0   # cut-end exponent
    pole_order = (int(round(beta)) + 1) if residue_mode else 0
    if residue_mode:
        d_down = math.sqrt(1.0 + (1.0 - x0) / w) - 1.0
    h = 0.25
    for _ in range(4):
        bump = max(math.log(2.0 * math.pi / h), 0.0)
        h_up = 2.0 * math.pi * 0.5 / (
            max(cut_end * t, 0.0) + log_term + up_strength * bump)
        if residue_mode:
            h_down = 2.0 * math.pi * d_down / (
                t + log_term + (pole_order - 1) * bump)
        else:
            # no singularity to the right; balance against e^(vertex(-0.5) t)
            h_down = 2.0 * math.pi * 0.5 / ((x0 + 1.25 * w) * t + log_term)
        h = min(h_up, h_down, 0.25)

    # truncation point: scan the integrand magnitude outward until the
    # estimated tail drops below target/10.  The transform magnitude is
    # bounded independently of alpha by |Ln s|^-(beta+1) (valid on the
    # tail where |s| >= 1), so one contour serves every admissible alpha.
    def tail_bound(theta: float) -> float:
        s = complex(x0 - w * theta * theta, 2.0 * w * theta)
        m = min(abs(cmath.log(s)) ** (-(beta + 1.0)), 10.0)
        g = math.exp((x0 - w * theta * theta) * t) * m * \
            2.0 * w * math.hypot(1.0, theta) / (2.0 * math.pi)
        decay = 2.0 * w * theta * t
        return g * max(h, 1.0 / max(decay, 1e-300))

    a = max(1.0, math.sqrt(max(log_term / (w * t), 1.0)))
    while tail_bound(a) > target / 10.0:
        a *= 1.25
        if a / h > _MAX_NODES:
            raise ToleranceUnachievable(
                "node count would exceed the supported maximum")
    nodes = max(int(math.ceil(a / h)), 8)
    return ContourSpec(x0, w, h, nodes, residue_mode)


def invert(t: float, beta: float, alpha: float, tol: float = 1e-10,
           spec: ContourSpec | None = None) -> float:
    """mu(t, beta, alpha) by trapezoidal inversion of the transform.

    Conjugate symmetry of the integrand halves the work: only nodes with
    theta >= 0 are evaluated and the pair sums reduce to imaginary parts.
    Summation runs in fixed node order, so results are reproducible
    bit-for-bit.  In residue mode the closed-form residue term at s = 1
    is added to the contour sum.
    """
    if not t > 0:
        raise DomainError("t must be positive")
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError("invert requires alpha > -1 and beta > -1")
    if spec is None:
        spec = contour_for(t, beta, tol)
    theta = spec.step * np.arange(spec.nodes + 1)
    s = spec.points(theta)
    terms = np.exp(s * t) * _transform_on_contour(s, beta, alpha) \
        * spec.derivative(theta)
    imag = terms.imag
    contour_part = (spec.step / math.pi) * (0.5 * imag[0] + imag[1:].sum())
    if spec.residue_mode:
        return contour_part + residue_at_one(t, int(round(beta)), alpha)
    return contour_part
