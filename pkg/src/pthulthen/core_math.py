"""Complex-parameter Jacobi polynomials and finite-difference helpers."""
import numpy as np

# relative size below which a recurrence coefficient is treated as zero
_DEGENERATE = 1e-14


class StepTooSmallError(ArithmeticError):
    """Round-off in a difference quotient swamps the estimate."""


def _jacobi_series(n, a, b, z):
    """P_n^{(a,b)}(z) as a power series in (z-1)/2; entire in a and b.

    Only used when the three-term recurrence hits a vanishing leading
    coefficient (e.g. a + b = 2 - 2n).
    """
    w = (np.asarray(z, dtype=complex) - 1) / 2
    total = np.zeros_like(w)
    # coefficient of w^k is (n+a+b+1)_k/k! * (a+k+1)_{n-k}/(n-k)!
    for k in range(n + 1):
        c = 1.0 + 0j
        for j in range(k):
            c *= (n + a + b + 1 + j) / (j + 1)
        for j in range(n - k):
            c *= (a + k + 1 + j) / (j + 1)
        total = total + c * w**k
    return total


def jacobi_eval(n, a, b, z):
    """Jacobi polynomial P_n^{(a,b)}(z) from the degree recurrence.

    ``a``, ``b`` and ``z`` may be complex; ``z`` may be an array. The
    recurrence runs in extended precision (where the platform has it) and
    is rounded to complex128 once, which keeps near-cancelling values
    accurate to a few ulps.
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    z128 = np.asarray(z, dtype=complex)
    if n == 0:
        one = np.ones_like(z128)
        return one if one.ndim else complex(one)
    z = z128.astype(np.clongdouble)
    a, b = np.clongdouble(a), np.clongdouble(b)
    # explicit degree-1 form sidesteps the 0/0 at a + b = -1
    p_prev = np.ones_like(z)
    p = (a - b + (a + b + 2) * z) / 2
    for k in range(2, n + 1):
        s = 2 * k + a + b
        lead = 2 * k * (k + a + b) * (s - 2)
        scale = max(1.0, abs(2 * k * k * s))
        if abs(lead) < _DEGENERATE * scale:
            p = _jacobi_series(n, complex(a), complex(b), z128)
            break
        mid = (s - 1) * (s * (s - 2) * z + a * a - b * b)
        last = 2 * (k + a - 1) * (k + b - 1) * s
        p_prev, p = p, (mid * p - last * p_prev) / lead
    p = np.asarray(p, dtype=complex)
    return p if p.ndim else complex(p)


def jacobi_deriv(n, a, b, z, k=1):
    """k-th z-derivative of P_n^{(a,b)}, k in {1, 2}.

    Uses d/dz P_n^{(a,b)} = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}.
    """
    if k not in (1, 2):
        raise ValueError(f"derivative order must be 1 or 2, got {k}")
    factor = 1.0 + 0j
    for _ in range(k):
        if n == 0:
            out = np.zeros_like(np.asarray(z, dtype=complex))
            return out if out.ndim else 0j
        factor *= (n + a + b + 1) / 2
        n, a, b = n - 1, a + 1, b + 1
    return factor * jacobi_eval(n, a, b, z)


def complex_second_derivative(f, z0, h=1e-4, direction=1.0, richardson=False,
                              cancel_tol=1e-3):
    """Central-difference f''(z0) for analytic f, sampled along ``direction``.

    The raw second difference along a unit complex direction d equals
    d**2 * f''(z0), so it is divided by d**2. With ``richardson=True`` the
    steps h and h/2 are combined to cancel the O(h**2) term.

    Raises StepTooSmallError when the estimated round-off, relative to the
    result, exceeds ``cancel_tol``.
    """
    if h <= 0:
        raise ValueError("step must be positive")
    d = complex(direction)
    d /= abs(d)
    z0 = complex(z0)
    f0 = complex(f(z0))

    def second(step):
        fp, fm = complex(f(z0 + step * d)), complex(f(z0 - step * d))
        est = (fp - 2 * f0 + fm) / (step * step * d * d)
        noise = 4 * np.finfo(float).eps * max(abs(fp), abs(f0), abs(fm)) / step**2
        return est, noise

    est, noise = second(h)
    if richardson:
        fine, fine_noise = second(h / 2)
        est = (4 * fine - est) / 3
        noise = (4 * fine_noise + noise) / 3
    if noise > cancel_tol * max(abs(est), 1.0):
        raise StepTooSmallError(
            f"round-off {noise:.3g} exceeds {cancel_tol:g} of |f''|={abs(est):.3g} at h={h:g}")
    return est
