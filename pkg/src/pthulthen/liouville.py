"""Liouville change of variables r = r(xi) between two Schrodinger problems.

If chi solves -chi'' + W chi = -kappa**2 chi in r, then
Psi(xi) = chi(r(xi)) / sqrt(r'(xi)) solves -Psi'' + V Psi = E Psi with

    V - E = r'**2 (W(r) + kappa**2) + 3/4 (r''/r')**2 - 1/2 r'''/r'.
"""
from dataclasses import dataclass
from typing import Callable
import logging
import math

import numpy as np

log = logging.getLogger(__name__)

INVERTIBILITY_TOL = 1e-12


class InvertibilityError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class CoordinateMap:
    """An analytic map r(xi) together with its first three derivatives."""
    r: Callable
    d1: Callable
    d2: Callable
    d3: Callable
    name: str = ""


def identity_map():
    one = lambda xi: np.ones_like(np.asarray(xi, dtype=complex))
    zero = lambda xi: np.zeros_like(np.asarray(xi, dtype=complex))
    return CoordinateMap(lambda xi: np.asarray(xi, dtype=complex), one, zero, zero, "identity")


def _checked_d1(cmap, xi):
    d1 = np.asarray(cmap.d1(xi), dtype=complex)
    if np.any(np.abs(d1) < INVERTIBILITY_TOL):
        raise InvertibilityError(f"r'(xi) vanishes for map {cmap.name or cmap!r}")
    return d1


def _scalar(v):
    v = np.asarray(v)
    return v if v.ndim else complex(v)


def schwarzian_terms(cmap, xi):
    """3/4 (r''/r')**2 - 1/2 r'''/r'."""
    d1 = _checked_d1(cmap, xi)
    ratio = cmap.d2(xi) / d1
    return _scalar(0.75 * ratio**2 - 0.5 * cmap.d3(xi) / d1)


def transform_potential(W, kappa_sq, cmap, xi):
    """Return V(xi) - E for the pulled-back problem."""
    d1 = _checked_d1(cmap, xi)
    r = cmap.r(xi)
    return _scalar(d1**2 * (W(r) + kappa_sq) + schwarzian_terms(cmap, xi))


class PhaseTracker:
    """Picks the sqrt(r') branch continuously along one contour sweep.

    The first call takes the principal root; later calls take whichever
    sign lies closer to the previous root. One tracker per sweep.
    """

    def __init__(self, jump_limit=math.pi / 2):
        self.prev = None
        self.jump_limit = jump_limit

    def reset(self):
        self.prev = None

    def sqrt(self, w):
        s = complex(np.sqrt(complex(w)))
        if self.prev is not None:
            if abs(s - self.prev) > abs(s + self.prev):
                s = -s
            # a jump of the root by theta means r' itself jumped by 2*theta
            jump = 2 * abs(np.angle(s / self.prev))
            if jump > self.jump_limit:
                log.warning("sqrt(r') phase jumped by %.3f rad between samples", jump)
        self.prev = s
        return s


def transform_wavefunction(chi_value, cmap, xi, branch_state=None):
    """Psi(xi) = chi(r(xi)) / sqrt(r'(xi)).

    Without ``branch_state`` the principal square root is used.
    """
    d1 = _checked_d1(cmap, xi)
    if branch_state is None:
        return _scalar(chi_value / np.sqrt(d1))
    return chi_value / branch_state.sqrt(d1)


def compose(outer, inner):
    """Map xi -> outer.r(inner.r(xi)) with chain-rule derivatives."""
    def d1(xi):
        return outer.d1(inner.r(xi)) * inner.d1(xi)

    def d2(xi):
        y = inner.r(xi)
        return outer.d2(y) * inner.d1(xi)**2 + outer.d1(y) * inner.d2(xi)

    def d3(xi):
        y, g1 = inner.r(xi), inner.d1(xi)
        return (outer.d3(y) * g1**3 + 3 * outer.d2(y) * g1 * inner.d2(xi)
                + outer.d1(y) * inner.d3(xi))

    return CoordinateMap(lambda xi: outer.r(inner.r(xi)), d1, d2, d3,
                         f"{outer.name}o{inner.name}")
