"""The down-bent arch sinh(r) = -i exp(i xi), with r = x - i*eps.

Writing xi = v - i*u, the real line of x maps onto

    v = arctan(tanh(x) / tan(eps)),   u = 1/2 ln(sinh(x)**2 + sin(eps)**2),

a PT-symmetric arch confined to |v| < pi/2 - eps whose top sits at
x = 0 with height -u = ln(1/sin eps).
"""
from dataclasses import dataclass
import math

import numpy as np

from .liouville import CoordinateMap

DEFAULT_EPSILON = 0.3
ARCH_TOL = 1e-9


class InversionBranchError(ValueError):
    pass


def _check_epsilon(epsilon):
    if not 0 < epsilon < math.pi / 2:
        raise ValueError(f"epsilon must lie in (0, pi/2), got {epsilon}")


@dataclass(frozen=True)
class ContourPoint:
    x: float
    v: float
    u: float
    xi: complex
    r: complex


def _log_abs_sinh(x):
    ax = np.abs(x)
    with np.errstate(divide="ignore"):
        return ax + np.log1p(-np.exp(-2 * ax)) - math.log(2)


def xi_of_x(epsilon, x):
    """(v, u) of the arch point over x; works elementwise on arrays."""
    _check_epsilon(epsilon)
    x = np.asarray(x, dtype=float)
    v = np.arctan(np.tanh(x) / math.tan(epsilon))
    # 1/2 ln(sinh^2 x + sin^2 eps) without overflow for large |x|
    u = 0.5 * np.logaddexp(2 * _log_abs_sinh(x), 2 * math.log(math.sin(epsilon)))
    if v.ndim == 0:
        return float(v), float(u)
    return v, u


def arch_top_height(epsilon):
    return math.log(1 / math.sin(epsilon))


def tangent(epsilon, x):
    """Unit tangent d xi/dx along the arch; d xi/dx = -i coth(r)."""
    t = -1j / np.tanh(np.asarray(x) - 1j * epsilon)
    return t / np.abs(t)


def arch_map(epsilon, strict=True):
    """CoordinateMap inverting sinh r = -i exp(i xi) onto Im r = -eps.

    The principal asinh already lands on Im r = -eps for every arch point
    because |Im r| < pi/2 there. With ``strict`` the recovered r is checked
    against the line; residual sweeps that probe points slightly off the
    arch pass ``strict=False``.
    """
    _check_epsilon(epsilon)

    def r(xi):
        rr = np.arcsinh(-1j * np.exp(1j * np.asarray(xi, dtype=complex)))
        if strict:
            dev = np.max(np.abs(rr.imag + epsilon))
            if dev > ARCH_TOL:
                raise InversionBranchError(
                    f"recovered r leaves Im r = -{epsilon} by {dev:.3g}")
        return rr if rr.ndim else complex(rr)

    def d1(xi):
        return 1j * np.tanh(r(xi))

    def d2(xi):
        t = np.tanh(r(xi))
        return -t * (1 - t * t)

    def d3(xi):
        t = np.tanh(r(xi))
        sech2 = 1 - t * t
        return -1j * t * sech2 * (sech2 - 2 * t * t)

    return CoordinateMap(r, d1, d2, d3, f"arch(eps={epsilon})")


def sample_arch(epsilon, x_min, x_max, count):
    if count < 2:
        raise ValueError("need at least two points")
    if not x_min < x_max:
        raise ValueError("x_min must be below x_max")
    xs = np.linspace(x_min, x_max, count)
    if x_min == -x_max:
        # exact mirror symmetry so PT checks are not polluted by linspace rounding
        xs = (xs - xs[::-1]) / 2
    v, u = xi_of_x(epsilon, xs)
    return [ContourPoint(float(x), float(vi), float(ui), complex(vi, -ui), complex(x, -epsilon))
            for x, vi, ui in zip(xs, v, u)]
