"""Thin adaptive-quadrature layer over scipy's Gauss-Kronrod integrator.

Keeps the QuadratureSpec error contract in one place: every integral in the
package reports (value, error estimate, node count) and raises
QuadratureFailure instead of silently returning an unconverged result.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from scipy.integrate import quad

from .errors import QuadratureFailure
from .lattice import QuadratureSpec


def adaptive_quad(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    spec: QuadratureSpec,
    points: Sequence[float] = (),
) -> tuple[float, float, int]:
    """Integrate f over [lo, hi] (hi may be math.inf), splitting at `points`.

    Returns (value, abs_error_estimate, nodes_used).
    """
    cuts = sorted(p for p in points if lo < p < hi)
    edges = [lo, *cuts, hi]
    total = 0.0
    err = 0.0
    nodes = 0
    for left, right in zip(edges[:-1], edges[1:]):
        val, e, info = _quad_segment(f, left, right, spec)
        total += val
        err += e
        nodes += info
    if err > max(spec.abs_tol, spec.rel_tol * abs(total)) * 10.0:
        raise QuadratureFailure(
            f"integral error estimate {err:.3e} exceeds tolerance for value {total:.6e}"
        )
    return total, err, nodes


def _quad_segment(f, lo, hi, spec):
    upper = math.inf if math.isinf(hi) else hi
    val, e, info = quad(
        f,
        lo,
        upper,
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        limit=spec.max_subdivisions,
        full_output=1,
    )[:3]
    return val, e, int(info["neval"])
