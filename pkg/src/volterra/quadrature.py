"""Adaptive quadrature on finite and semi-infinite intervals.

The finite-interval engine is an adaptive Gauss-Kronrod 7-15 scheme with
bisection of the worst panel.  Node points are interior, so integrable
endpoint singularities (log x at 0, x^b with b > -1) are handled without
special casing.

Semi-infinite integrals use geometrically growing panels [a, a+1],
[a+1, a+3], [a+3, a+7], ...  Each panel is integrated adaptively and the
sweep stops once two consecutive panel contributions fall below a tenth
of the (relative-aware) tolerance; that rule is sound for the eventually
monotone integrands this package produces, whose panel sums decay at
least geometrically on the doubling panels.

Integrands must accept and return numpy arrays (they are called with the
15 Kronrod abscissae of a panel at a time).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NoDecayDetected, NonFiniteIntegrand, ToleranceNotMet

# 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
_XGK = np.array([
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0,
])
_WGK = np.array([
    0.2293532201052922e-1, 0.6309209262997855e-1, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278,
])
_WG = np.array([
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694,
])

_NODES = np.concatenate((-_XGK[:7], [0.0], _XGK[6::-1]))
_WEIGHTS_K = np.concatenate((_WGK[:7], [_WGK[7]], _WGK[6::-1]))
_WEIGHTS_G = np.zeros(15)
_WEIGHTS_G[1:14:2] = np.concatenate((_WG[:3], [_WG[3]], _WG[2::-1]))


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and budget for an integration run."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_evaluations: int = 2_000_000

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_evaluations <= 0:
            raise ValueError("max_evaluations must be positive")


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0 or self.evaluations <= 0:
            raise ValueError("inconsistent quadrature result")


DEFAULT_CONFIG = QuadratureConfig()


def _kronrod_panel(f, a: float, b: float):
    """One G7-K15 evaluation on [a, b]: (k15, |k15 - g7|)."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fx = np.asarray(f(mid + half * _NODES), dtype=float)
    if fx.shape != (15,):
        raise TypeError("integrand must map a length-15 array to a length-15 array")
    if not np.all(np.isfinite(fx)):
        raise NonFiniteIntegrand(
            f"integrand returned a non-finite value in [{a!r}, {b!r}]")
    k15 = half * float(fx @ _WEIGHTS_K)
    g7 = half * float(fx @ _WEIGHTS_G)
    return k15, abs(k15 - g7)


def integrate_finite(f: Callable, a: float, b: float,
                     cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """Integrate f on the finite interval [a, b] adaptively.

    Raises ToleranceNotMet (with the best estimate attached) if the
    evaluation budget runs out, and NonFiniteIntegrand on NaN/inf values.
    """
    if not a < b:
        raise ValueError("integrate_finite requires a < b")
    value, err = _kronrod_panel(f, a, b)
    evals = 15
    # heap of (-error, a, b, value, error); bisect the worst panel
    heap = [(-err, a, b, value, err)]
    total = value
    total_err = err
    min_width = 1e-14 * (abs(b - a) + abs(a) + abs(b))
    while total_err > max(cfg.abs_tol, cfg.rel_tol * abs(total)):
        if evals + 30 > cfg.max_evaluations:
            raise ToleranceNotMet(
                f"evaluation budget exhausted ({evals} used)",
                QuadratureResult(total, total_err, evals))
        neg_err, pa, pb, pval, perr = heapq.heappop(heap)
        if pb - pa < min_width:
            # cannot refine further; accept this panel's error
            heapq.heappush(heap, (0.0, pa, pb, pval, perr))
            remaining = sum(item[4] for item in heap)
            if remaining <= max(cfg.abs_tol, cfg.rel_tol * abs(total)):
                total_err = remaining
                break
            if all(item[0] == 0.0 for item in heap):
                raise ToleranceNotMet(
                    "panels at minimum width still exceed tolerance",
                    QuadratureResult(total, remaining, evals))
            continue
        pm = 0.5 * (pa + pb)
        lv, le = _kronrod_panel(f, pa, pm)
        rv, re = _kronrod_panel(f, pm, pb)
        evals += 30
        total += lv + rv - pval
        total_err += le + re - perr
        heapq.heappush(heap, (-le, pa, pm, lv, le))
        heapq.heappush(heap, (-re, pm, pb, rv, re))
    return QuadratureResult(total, total_err, evals)


def integrate_semiinfinite(f: Callable, a: float,
                           cfg: QuadratureConfig = DEFAULT_CONFIG,
                           max_panels: int = 64,
                           min_span: float = 4.0) -> QuadratureResult:
    """Integrate f on [a, infinity) by geometrically growing panels.

    The caller is responsible for supplying an integrand that decays;
    lack of decay is detected when the panel sweep runs out of panels or
    budget while contributions still exceed threshold.  min_span keeps
    the small-panel stop rule from firing before [a, a+min_span] is
    covered; pass a larger value when the integrand's mass sits far from
    a (the doubling panels reach it at logarithmic cost).
    """
    total = 0.0
    total_err = 0.0
    evals = 0
    small_streak = 0
    left = a
    width = 1.0
    history = []
    for _ in range(max_panels):
        right = left + width
        panel_cfg = QuadratureConfig(
            abs_tol=max(cfg.abs_tol, cfg.rel_tol * abs(total)) / 4.0,
            rel_tol=cfg.rel_tol,
            max_evaluations=max(cfg.max_evaluations - evals, 30),
        )
        try:
            res = integrate_finite(f, left, right, panel_cfg)
        except ToleranceNotMet as exc:
            partial = exc.result
            raise ToleranceNotMet(
                f"tolerance not met on panel [{left!r}, {right!r}]",
                QuadratureResult(total + partial.value,
                                 total_err + partial.error_estimate,
                                 evals + partial.evaluations)) from exc
        total += res.value
        total_err += res.error_estimate
        evals += res.evaluations
        history.append(abs(res.value))
        threshold = max(cfg.abs_tol, cfg.rel_tol * abs(total)) / 10.0
        if abs(res.value) < threshold:
            small_streak += 1
            if small_streak >= 2:
                # discarded tail is bounded by the geometric continuation
                # of the last panel contributions
                total_err += 2.0 * threshold
                return QuadratureResult(total, total_err, evals)
        else:
            small_streak = 0
        if evals >= cfg.max_evaluations:
            raise ToleranceNotMet(
                "evaluation budget exhausted before the tail converged",
                QuadratureResult(total, total_err, evals))
        left = right
        width *= 2.0
    # panels exhausted: decays too slowly (or not at all)
    tail = history[-4:]
    if len(tail) == 4 and not all(y < x for x, y in zip(tail, tail[1:])):
        raise NoDecayDetected(
            f"panel contributions not decreasing after {max_panels} panels")
    raise ToleranceNotMet(
        f"tail still above threshold after {max_panels} panels",
        QuadratureResult(total, total_err, evals))
