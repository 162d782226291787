import math

import numpy as np
import pytest

from orlab.errors import DomainError, SpecMismatch
from orlab.grids import GridSpec, gauss, rect
from orlab.growth import complementary, power
from orlab.norms import (holder_pairing, luxemburg_norm, modular,
                         modular_layercake, orlicz_dual_norm, quad)


def lp_norm(f, p):
    return quad(f, f.abs_values() ** p) ** (1.0 / p)


def test_modular_monotone_in_scale(spec):
    f = gauss(spec)
    phi = power(2.0)
    m1 = modular(f, phi, 0.5)
    m2 = modular(f, phi, 1.0)
    m3 = modular(f, phi, 2.0)
    assert m1 > m2 > m3 > 0
    with pytest.raises(DomainError):
        modular(f, phi, 0.0)


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_luxemburg_matches_lp(spec, p):
    # For Phi(t) = t^p the Luxemburg norm is exactly the L^p norm.
    for f in (gauss(spec), rect(spec, -0.5, 2.0)):
        res = luxemburg_norm(f, power(p))
        assert res.value == pytest.approx(lp_norm(f, p), rel=1e-9)
        assert res.modular_at_value <= 1.0 + 1e-9


def test_luxemburg_scaling_homogeneity(spec):
    f = gauss(spec)
    phi = power(2.0)
    n1 = luxemburg_norm(f, phi).value
    n3 = luxemburg_norm(f * 3.0, phi).value
    assert n3 == pytest.approx(3.0 * n1, rel=1e-8)


def test_zero_function_norm(spec):
    z = rect(spec, 0.0, 1.0, amplitude=0.0)
    assert luxemburg_norm(z, power(2.0)).value == 0.0


def test_dual_norm_sandwich(spec, corpus_phis):
    # ||f||_Phi <= sup-pairing dual estimate <= 2 ||f||_Phi.
    f = gauss(spec)
    for phi in corpus_phis:
        lux = luxemburg_norm(f, phi).value
        dual = orlicz_dual_norm(f, phi).value
        assert lux <= dual * (1.0 + 1e-6)
        assert dual <= 2.0 * lux * (1.0 + 1e-6)


def test_holder_pairing_bound(spec, rng):
    f = gauss(spec, 0.0, 1.0)
    g = gauss(spec, 0.5, 2.0)
    phi = power(2.0)
    pairing, bound, ok = holder_pairing(f, g, phi)
    assert ok
    assert pairing <= bound * (1.0 + 1e-9)
    # For p = 2 the pairing of two Gaussians is explicit.
    other = rect(GridSpec(spec.L, spec.N // 2), 0.0, 1.0)
    with pytest.raises(SpecMismatch):
        holder_pairing(f, other, phi)


def test_layercake_agrees_with_modular(spec):
    f = gauss(spec)
    for phi in (power(2.0), power(3.0)):
        direct = modular(f, phi, 1.0)
        layer = modular_layercake(f, phi)
        assert layer == pytest.approx(direct, rel=1e-3)


def test_complementary_power_pairing(spec):
    # Psi complementary to t^2/2-style scaling: check Young inequality numerically.
    phi = power(2.0)
    psi = complementary(phi)
    t = np.geomspace(1e-3, 1e3, 64)
    s = np.geomspace(1e-3, 1e3, 64)
    T, S = np.meshgrid(t, s)
    lhs = T * S
    rhs = np.exp(phi.log_eval(np.log(T))) + np.exp(psi.log_eval(np.log(S)))
    assert np.all(lhs <= rhs * (1.0 + 1e-9))
