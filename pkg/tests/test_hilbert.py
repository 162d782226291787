import numpy as np
import pytest

from orlab.grids import gauss, poisson_slice, rect, sample
from orlab.hilbert import (analytic_boundary, hilbert_maximal,
                           hilbert_transform, l2_pairing)


def conjugate_poisson(spec, y):
    return sample(spec, lambda x: x / (np.pi * (x * x + y * y)),
                  "rational_decay")


@pytest.mark.parametrize("method", ["spectral", "pv"])
def test_poisson_kernel_conjugate(spec, method):
    # H P_y = Q_y in closed form.
    y = 1.0
    Hf = hilbert_transform(poisson_slice(spec, y), method=method)
    target = conjugate_poisson(spec, y).values
    err = np.max(np.abs(Hf.values - target))
    assert err < 1e-3


def test_methods_agree(spec, corpus_fns):
    for f in corpus_fns:
        a = hilbert_transform(f, method="spectral").values
        b = hilbert_transform(f, method="pv").values
        scale = max(1.0, float(np.max(np.abs(f.values))))
        assert np.max(np.abs(a - b)) < 1e-3 * scale


def test_involution(spec, corpus_fns):
    for f in corpus_fns:
        HHf = hilbert_transform(hilbert_transform(f))
        err = np.max(np.abs(HHf.values + f.values))
        assert err < 1e-3 * max(1.0, float(np.max(np.abs(f.values))))


def test_pairing_skew_adjoint(spec):
    f = gauss(spec, 0.0, 1.0)
    g = gauss(spec, 0.7, 1.4)
    lhs = l2_pairing(hilbert_transform(f), g)
    rhs = -l2_pairing(f, hilbert_transform(g))
    assert lhs == pytest.approx(rhs, abs=1e-6)


def test_analytic_boundary_combination(spec):
    f = gauss(spec)
    g = analytic_boundary(f)
    expect = f.values + 1j * hilbert_transform(f).values
    assert np.max(np.abs(g.values - expect)) < 1e-10


def test_maximal_dominates_transform(spec):
    for f in (gauss(spec), rect(spec, -1.0, 1.0)):
        Hf = np.abs(hilbert_transform(f, method="pv").values)
        Mf = hilbert_maximal(f).values.real
        assert np.all(Hf <= Mf + 1e-9)
        assert np.all(Mf >= 0.0)


def test_unknown_method_rejected(spec):
    with pytest.raises(Exception):
        hilbert_transform(gauss(spec), method="fancy")
