"""Generalized PT-symmetric Hulthen potential on the arch.

    V(xi) = A/(1 - exp(2i xi))**2 + B/(1 - exp(2i xi)),   E = kappa**2 > 0

The couplings come from the Poschl-Teller source via A = 1 - alpha**2 and
C = A + B = kappa**2 - beta**2. With t = sigma*alpha + 2n + 1 the constant
C = t (t + 2 tau*beta) is linear in tau*beta, so each (sigma, n) fixes the
source beta for a fixed potential, and

    E = C + 1/4 (t - C/t)**2.
"""
from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .contour import arch_map
from .liouville import PhaseTracker, transform_wavefunction
from .poschl_teller import (
    PoleError, PTModel, QuantumNumbers, SpectrumEntry, chi, kappa_of,
)

DEGENERATE_TOL = 1e-12
DEFAULT_N_CAP = 64


class DegenerateStateError(ZeroDivisionError):
    """sigma*alpha + 2n + 1 = 0, so tau*beta cannot be recovered."""


@dataclass(frozen=True)
class HulthenModel:
    """Couplings A, B and arch shift epsilon.

    alpha = sqrt(1 - A) is derived unless given; passing it keeps full
    precision near alpha = 0, where the square root loses half the digits.
    """
    A: float
    B: float
    epsilon: float
    alpha: float = None

    def __post_init__(self):
        if self.A > 1:
            raise ValueError(f"A = {self.A} > 1 would need an imaginary alpha")
        if not 0 < self.epsilon < math.pi / 2:
            raise ValueError(f"epsilon must lie in (0, pi/2), got {self.epsilon}")
        if self.alpha is None:
            object.__setattr__(self, "alpha", math.sqrt(1 - self.A))
        elif self.alpha < 0 or abs(1 - self.alpha**2 - self.A) > 1e-12 * max(1.0, abs(self.A)):
            raise ValueError(f"alpha = {self.alpha} is inconsistent with A = {self.A}")

    @property
    def C(self):
        return self.A + self.B

    @classmethod
    def from_alpha_C(cls, alpha, C, epsilon):
        A = 1 - alpha * alpha
        return cls(A, C - A, epsilon, alpha)

    @classmethod
    def from_pt_state(cls, pt, qn):
        """Hulthen partner of one Poschl-Teller bound state."""
        k = kappa_of(pt, qn)
        return cls.from_alpha_C(pt.alpha, k * k - pt.beta**2, pt.epsilon)


def potential_V(model, xi):
    w = 1 - np.exp(2j * np.asarray(xi, dtype=complex))
    if np.any(np.abs(w) < 1e-12):
        raise PoleError("V evaluated where exp(2i xi) = 1")
    out = model.A / w**2 + model.B / w
    return out if out.ndim else complex(out)


def _t(model, sigma, n):
    t = sigma * model.alpha + 2 * n + 1
    if abs(t) < DEGENERATE_TOL:
        raise DegenerateStateError(f"sigma={sigma}, n={n} gives t = 0")
    return t


# Both closed forms below are evaluated exactly on the (float) t and C and
# rounded once: near threshold kappa**2 << |C| and the float forms cancel.

def state_parameters(model, sigma, n):
    """(t, tau*beta, kappa) for the state (sigma, n) of a fixed potential."""
    t = _t(model, sigma, n)
    tf, C = Fraction(t), Fraction(model.C)
    return t, float((C - tf * tf) / (2 * tf)), float(-(tf * tf + C) / (2 * tf))


def energy(model, sigma, n):
    t = _t(model, sigma, n)
    tf, C = Fraction(t), Fraction(model.C)
    return float(C + (tf - C / tf) ** 2 / 4)


def enumerate_hulthen_spectrum(model, n_cap=DEFAULT_N_CAP):
    """Admissible (kappa > 0) states, reported with canonical tau = +1.

    Only the product tau*beta is determined, so it is stored signed in
    ``beta_effective``. For alpha = 0 the two sigma sectors coincide and
    only sigma = +1 is listed.
    """
    sigmas = (1,) if model.alpha == 0 else (-1, 1)
    out = []
    for sigma in sigmas:
        for n in range(n_cap + 1):
            try:
                _, tau_beta, kappa = state_parameters(model, sigma, n)
            except DegenerateStateError:
                continue
            if kappa > 0:
                out.append(SpectrumEntry(QuantumNumbers(sigma=sigma, tau=1, n=n),
                                         kappa, energy(model, sigma, n), tau_beta))
    out.sort(key=lambda e: (e.energy, e.qn))
    return out


def source_state(model, entry):
    """Poschl-Teller model and quantum numbers this Hulthen state pulls back from."""
    tb = entry.beta_effective
    tau = -1 if tb < 0 else 1
    pt = PTModel(model.alpha, abs(tb), model.epsilon)
    return pt, QuantumNumbers(sigma=entry.qn.sigma, tau=tau, n=entry.qn.n)


def psi(model, entry, xi, branch_state=None, strict=True):
    """Pulled-back eigenfunction at one point xi on (or next to) the arch."""
    pt, qn = source_state(model, entry)
    cmap = arch_map(model.epsilon, strict=strict)
    value, _, _ = chi(pt, qn, cmap.r(xi), derivatives=False)
    return transform_wavefunction(value, cmap, xi, branch_state)


def psi_along(model, entry, points):
    """psi on a sampled arch, branch tracked outward from the top point."""
    xs = np.array([p.x for p in points])
    top = int(np.argmin(np.abs(xs)))
    out = np.empty(len(points), dtype=complex)
    for order in (range(top, len(points)), range(top, -1, -1)):
        tracker = PhaseTracker()
        for i in order:
            out[i] = psi(model, entry, points[i].xi, tracker)
    return out
