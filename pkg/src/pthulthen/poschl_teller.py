"""PT-symmetric Poschl-Teller model on the shifted line r = x - i*eps.

    W(r) = (beta**2 - 1/4)/sinh(r)**2 - (alpha**2 - 1/4)/cosh(r)**2

Bound states carry a level index n and two generalized parities sigma, tau.
Their decay rate is kappa = -sigma*alpha - tau*beta - 2n - 1 and their
energy -kappa**2. Only kappa > 0 is used as the admissibility test; no
further regularity condition is imposed.
"""
from dataclasses import dataclass
import math

import numpy as np

from .core_math import jacobi_eval, jacobi_deriv

POLE_TOL = 1e-12


class PoleError(ZeroDivisionError):
    pass


class BranchCutError(ValueError):
    pass


@dataclass(frozen=True)
class PTModel:
    alpha: float
    beta: float
    epsilon: float

    def __post_init__(self):
        if not 0 < self.epsilon < math.pi / 2:
            raise ValueError(f"epsilon must lie in (0, pi/2), got {self.epsilon}")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta are stored nonnegative; use sigma/tau for signs")


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    sigma: int
    tau: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if self.sigma not in (-1, 1) or self.tau not in (-1, 1):
            raise ValueError("sigma and tau must be +1 or -1")


@dataclass(frozen=True)
class SpectrumEntry:
    """One bound state.

    ``energy`` is -kappa**2 for Poschl-Teller entries and +kappa**2 for
    Hulthen entries. ``beta_effective`` is the model beta on the
    Poschl-Teller side and the signed product tau*beta on the Hulthen side.
    """
    qn: QuantumNumbers
    kappa: float
    energy: float
    beta_effective: float


def line_point(model, x):
    return np.asarray(x) - 1j * model.epsilon


def potential_W(model, r):
    r = np.asarray(r, dtype=complex)
    s, c = np.sinh(r), np.cosh(r)
    if np.any(np.abs(s) < POLE_TOL) or np.any(np.abs(c) < POLE_TOL):
        raise PoleError("W evaluated at a pole (sinh r = 0 or cosh r = 0)")
    w = (model.beta**2 - 0.25) / s**2 - (model.alpha**2 - 0.25) / c**2
    return w if w.ndim else complex(w)


def kappa_of(model, qn):
    return -qn.sigma * model.alpha - qn.tau * model.beta - 2 * qn.n - 1


def enumerate_pt_spectrum(model):
    """All admissible bound states, sorted by energy then (sigma, tau, n).

    A zero coupling makes its two parity sectors identical; only the +1
    sector is kept then.
    """
    out = []
    for sigma in ((1,) if model.alpha == 0 else (-1, 1)):
        for tau in ((1,) if model.beta == 0 else (-1, 1)):
            n = 0
            while True:
                qn = QuantumNumbers(sigma, tau, n)
                k = kappa_of(model, qn)
                if k <= 0:
                    break
                out.append(SpectrumEntry(qn, k, -k * k, model.beta))
                n += 1
    out.sort(key=lambda e: (e.energy, e.qn))
    return out


def chi(model, qn, r, derivatives=True):
    """Unnormalized eigenfunction and its first two r-derivatives.

    chi = sinh(r)**p * cosh(r)**q * P_n^{(tau*beta, sigma*alpha)}(cosh 2r)
    with p = tau*beta + 1/2, q = sigma*alpha + 1/2, principal-branch powers.
    Returns (chi, chi', chi'') or (chi, None, None).
    """
    r = np.asarray(r, dtype=complex)
    s, c = np.sinh(r), np.cosh(r)
    if np.any((np.abs(s.imag) < POLE_TOL) & (s.real <= 0)):
        raise BranchCutError("sinh r on the negative real axis")
    a = qn.tau * model.beta
    b = qn.sigma * model.alpha
    p, q = a + 0.5, b + 0.5
    z = np.cosh(2 * r)
    f = s**p * c**q
    P = jacobi_eval(qn.n, a, b, z)
    if not derivatives:
        return f * P, None, None

    # f'/f = g, f'' = f (g^2 + g')
    g = p * c / s + q * s / c
    dg = -p / s**2 + q / c**2
    df = f * g
    d2f = f * (g * g + dg)
    sh2 = np.sinh(2 * r)
    Pz = jacobi_deriv(qn.n, a, b, z, 1)
    Pzz = jacobi_deriv(qn.n, a, b, z, 2)
    dP = 2 * sh2 * Pz
    d2P = 4 * sh2**2 * Pzz + 4 * z * Pz
    return f * P, df * P + f * dP, d2f * P + 2 * df * dP + f * d2P
