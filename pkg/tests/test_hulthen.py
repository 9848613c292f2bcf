import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from pthulthen import contour, hulthen as hu, liouville as lv, poschl_teller as pt
from pthulthen.hulthen import HulthenModel

EPS = 0.3


@pytest.fixture
def model():
    return HulthenModel(-8.0, 24.0, EPS)


def test_derived_couplings(model):
    assert model.alpha == 3.0
    assert model.C == 16.0
    m = HulthenModel.from_alpha_C(3.5, 16.0, EPS)
    assert m.alpha == pytest.approx(3.5) and m.C == pytest.approx(16.0)


def test_imaginary_alpha_rejected():
    with pytest.raises(ValueError):
        HulthenModel(1.5, 0.0, EPS)
    with pytest.raises(ValueError):
        HulthenModel(0.0, 0.0, 2.0)


def test_potential_hand_value(model):
    assert hu.potential_V(model, -1j * math.log(2)) == pytest.approx(-80 / 9, abs=1e-13)


def test_potential_vanishes_far_down(model):
    vals = [abs(hu.potential_V(model, -1j * u)) for u in (2, 5, 10, 20, 40)]
    assert np.all(np.diff(vals) < 0)
    assert vals[-1] < 1e-30


def test_plain_hulthen_shape():
    m = HulthenModel(0.0, 2.5, EPS)
    for u in (0.1, 1.0, 3.0):
        assert hu.potential_V(m, -1j * u) == pytest.approx(2.5 / (1 - math.exp(2 * u)), rel=1e-14)


def test_potential_pole(model):
    with pytest.raises(pt.PoleError):
        hu.potential_V(model, 0.0)


def test_potential_pt_symmetry(model):
    for p in contour.sample_arch(EPS, -4, 4, 41):
        xi = p.xi + 0.05j  # also off the arch
        assert hu.potential_V(model, -xi.conjugate()) == pytest.approx(
            hu.potential_V(model, xi).conjugate(), rel=1e-13)


def test_state_parameters_hand_values(model):
    t, tb, k = hu.state_parameters(model, -1, 0)
    assert (t, tb, k) == (-2.0, -3.0, 5.0)
    with pytest.raises(hu.DegenerateStateError):
        hu.state_parameters(model, -1, 1)
    t, _, k = hu.state_parameters(model, 1, 0)
    assert t == 4 and k == -4


def test_energy_hand_values(model):
    assert hu.energy(model, -1, 0) == 25.0
    with pytest.raises(hu.DegenerateStateError):
        hu.energy(model, -1, 1)


def test_zero_C_collapse():
    m = HulthenModel(-3.0, 3.0, EPS)  # alpha = 2, C = 0
    for sigma in (-1, 1):
        for n in range(4):
            t, _, k = hu.state_parameters(m, sigma, n)
            assert hu.energy(m, sigma, n) == pytest.approx(t * t / 4)
            assert k == pytest.approx(-t / 2)


def test_spectrum_single_state(model):
    spec = hu.enumerate_hulthen_spectrum(model)
    assert len(spec) == 1
    e = spec[0]
    assert (e.qn.sigma, e.qn.n, e.qn.tau) == (-1, 0, 1)
    assert (e.kappa, e.energy, e.beta_effective) == (5.0, 25.0, -3.0)


def test_spectrum_two_states():
    spec = hu.enumerate_hulthen_spectrum(HulthenModel.from_alpha_C(3.5, 16.0, EPS))
    assert [(e.qn.sigma, e.qn.n) for e in spec] == [(-1, 0), (-1, 1)]
    assert spec[0].kappa == pytest.approx(4.45, rel=1e-14)
    assert spec[0].energy == pytest.approx(19.8025, rel=1e-14)
    assert spec[1].kappa == pytest.approx(16.25, rel=1e-14)
    assert spec[1].energy == pytest.approx(264.0625, rel=1e-14)


def test_spectrum_empty():
    assert hu.enumerate_hulthen_spectrum(HulthenModel.from_alpha_C(0.5, 16.0, EPS)) == []


def test_negative_C_allows_positive_t():
    # C = -10, alpha = 0.2: sigma=+1, n=0 has t = 1.2 and t^2 < -C
    spec = hu.enumerate_hulthen_spectrum(HulthenModel.from_alpha_C(0.2, -10.0, EPS))
    assert (1, 0) in [(e.qn.sigma, e.qn.n) for e in spec]
    assert all(e.energy > 0 and e.kappa > 0 for e in spec)


def test_n_cap_bounds_search():
    m = HulthenModel.from_alpha_C(3.5, 16.0, EPS)
    assert len(hu.enumerate_hulthen_spectrum(m, n_cap=0)) == 1


@settings(max_examples=500, deadline=None)
@given(st.floats(0, 5), st.floats(-20, 20), st.sampled_from([-1, 1]), st.integers(0, 10))
def test_energy_equals_kappa_squared(alpha, C, sigma, n):
    m = HulthenModel.from_alpha_C(alpha, C, EPS)
    assume(abs(sigma * m.alpha + 2 * n + 1) > 1e-6)
    _, _, k = hu.state_parameters(m, sigma, n)
    assume(k != 0)
    assert abs(hu.energy(m, sigma, n) - k * k) <= 1e-12 * k * k


@settings(max_examples=300, deadline=None)
@given(st.floats(0, 5), st.floats(0.01, 10), st.sampled_from([-1, 1]), st.integers(0, 10))
def test_round_trip_from_source(alpha, kappa, sigma, n):
    # choose the source beta so that the state has the requested kappa > 0
    tau_beta = -kappa - sigma * alpha - 2 * n - 1
    tau = -1 if tau_beta < 0 else 1
    src = pt.PTModel(alpha, abs(tau_beta), EPS)
    qn = pt.QuantumNumbers(sigma=sigma, tau=tau, n=n)
    k = pt.kappa_of(src, qn)
    m = HulthenModel.from_pt_state(src, qn)
    # rounding of C is amplified by 1/|t| in the inversion, see the next test
    assume(abs(sigma * m.alpha + 2 * n + 1) >= 0.5)
    _, tb, k2 = hu.state_parameters(m, sigma, n)
    scale = 1 + alpha**2 + tau_beta**2 + k * k
    assert abs(tb - tau * src.beta) < 1e-12 * scale
    assert abs(k2 - k) < 1e-12 * scale


def test_round_trip_error_scales_with_inverse_t():
    for t in (1e-1, 1e-3, 1e-5):
        src = pt.PTModel(1 - t, 1.0, EPS)
        qn = pt.QuantumNumbers(sigma=-1, tau=-1, n=0)
        m = HulthenModel.from_pt_state(src, qn)
        _, tb, _ = hu.state_parameters(m, -1, 0)
        assert abs(tb + 1.0) < 1e-15 / t


def test_round_trip_exact_couplings():
    src = pt.PTModel(3.0, 3.0, EPS)
    for e in pt.enumerate_pt_spectrum(src):
        m = HulthenModel.from_pt_state(src, e.qn)
        try:
            _, tb, k = hu.state_parameters(m, e.qn.sigma, e.qn.n)
        except hu.DegenerateStateError:
            assert e.qn.n == 1  # t = -3 + 3 = 0
            continue
        assert tb == -3.0 and k == e.kappa


def test_central_identity_every_enumerated_state():
    for m in (HulthenModel(-8.0, 24.0, EPS), HulthenModel.from_alpha_C(3.5, 16.0, EPS),
              HulthenModel.from_alpha_C(1.3, -4.0, 0.7)):
        cmap = contour.arch_map(m.epsilon)
        xis = np.array([p.xi for p in contour.sample_arch(m.epsilon, -6, 6, 200)])
        for e in hu.enumerate_hulthen_spectrum(m):
            src, qn = hu.source_state(m, e)
            W = lambda r: pt.potential_W(src, r)
            lhs = lv.transform_potential(W, e.kappa**2, cmap, xis) + e.energy
            assert np.max(np.abs(lhs - hu.potential_V(m, xis))) < 1e-8


def test_source_state_reproduces_kappa():
    m = HulthenModel.from_alpha_C(3.5, 16.0, EPS)
    for e in hu.enumerate_hulthen_spectrum(m):
        src, qn = hu.source_state(m, e)
        assert pt.kappa_of(src, qn) == pytest.approx(e.kappa, rel=1e-14)


def test_psi_decays_and_is_pt_symmetric():
    m = HulthenModel.from_alpha_C(3.5, 16.0, EPS)
    pts = contour.sample_arch(EPS, -10, 10, 201)
    for e in hu.enumerate_hulthen_spectrum(m):
        mod = np.abs(hu.psi_along(m, e, pts))
        assert np.allclose(mod, mod[::-1], rtol=1e-12, atol=0)
        assert mod[0] < 1e-12 * mod.max()


def test_psi_along_matches_pointwise():
    m = HulthenModel(-8.0, 24.0, EPS)
    e = hu.enumerate_hulthen_spectrum(m)[0]
    pts = contour.sample_arch(EPS, -5, 5, 21)
    tracked = hu.psi_along(m, e, pts)
    plain = np.array([hu.psi(m, e, p.xi) for p in pts])
    # the principal root is already continuous along this arch
    assert np.allclose(tracked, plain, rtol=1e-14)
