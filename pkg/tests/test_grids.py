import io
import math

import numpy as np
import pytest

from orlab.errors import ComplexInput, DomainError, SpecMismatch
from orlab.grids import (GridFunction, GridSpec, bump, constant, gauss,
                         poisson_slice, rect, sample, smooth_rect, tent)
from orlab.norms import quad


def test_spec_geometry(spec):
    assert spec.h == pytest.approx(2.0 * spec.L / spec.N)
    x = spec.nodes()
    assert len(x) == spec.N
    assert x[0] == pytest.approx(-spec.L)
    # Symmetric about 0 up to the half-open right end.
    assert x[spec.N // 2] == pytest.approx(0.0)


def test_spec_validation():
    with pytest.raises(DomainError):
        GridSpec(-1.0, 64)
    with pytest.raises(DomainError):
        GridSpec(1.0, 0)


def test_constructors_basic(spec):
    g = gauss(spec)
    assert g.decay_class == "schwartz"
    assert float(np.max(g.abs_values())) == pytest.approx(1.0, abs=1e-12)

    r = rect(spec, -1.0, 1.0, amplitude=2.0)
    assert r.decay_class == "compact_support"
    assert quad(r, r.real_part()) == pytest.approx(4.0, rel=1e-6)

    t = tent(spec, 0.0, 1.0)
    assert quad(t, t.real_part()) == pytest.approx(1.0, rel=1e-6)

    p = poisson_slice(spec, y=1.0)
    # Total mass of the Poisson kernel is 1 up to grid truncation.
    assert quad(p, p.real_part()) == pytest.approx(1.0, abs=3e-3)

    b = bump(spec, 0.0, 1.0)
    assert b.decay_class == "compact_support"
    assert b.values[0] == 0.0

    c = constant(spec, 3.0)
    assert np.all(c.real_part() == 3.0)


def test_arithmetic_and_decay_mixing(spec):
    f = rect(spec, 0.0, 1.0)
    g = gauss(spec)
    s = f + g
    assert s.decay_class == "schwartz"
    d = (s - g).values
    assert np.max(np.abs(d - f.values)) == pytest.approx(0.0, abs=1e-14)
    assert np.max(np.abs((f * 2.0).values - 2.0 * f.values)) == 0.0

    other = rect(GridSpec(spec.L, spec.N // 2), 0.0, 1.0)
    with pytest.raises(SpecMismatch):
        f + other


def test_require_real(spec):
    f = rect(spec, 0.0, 1.0, amplitude=1.0 + 1.0j)
    with pytest.raises(ComplexInput):
        f.require_real("test input")
    g = rect(spec, 0.0, 1.0)
    assert np.isrealobj(g.require_real("test input")) or np.allclose(
        g.require_real("test input").imag, 0.0)


def test_csv_roundtrip(spec):
    f = smooth_rect(spec, -1.0, 1.0)
    buf = io.StringIO()
    f.to_csv(buf)
    buf.seek(0)
    g = GridFunction.from_csv(buf, decay_class=f.decay_class)
    assert g.spec == f.spec
    assert np.max(np.abs(g.values - f.values)) < 1e-12


def test_sample_rejects_nonfinite(spec):
    with pytest.raises(Exception), np.errstate(divide="ignore"):
        sample(spec, lambda x: 1.0 / x, "rational_decay")
