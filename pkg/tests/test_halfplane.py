import numpy as np
import pytest

from orlab.errors import DomainError
from orlab.grids import gauss, poisson_slice, rect
from orlab.halfplane import (HeightLattice, RadonMeasure, cauchy_integral,
                             cauchy_transform, conjugate_extend,
                             extend_direct, poisson_extend,
                             poisson_extend_measure)
from orlab.hilbert import analytic_boundary


def test_height_lattice_validation():
    with pytest.raises(DomainError):
        HeightLattice((0.5, 1.0))
    with pytest.raises(DomainError):
        HeightLattice((1.0, -0.5))
    lat = HeightLattice.dyadic(0, -3)
    assert lat.heights == (1.0, 0.5, 0.25, 0.125)


def test_poisson_semigroup(spec):
    # Extending the Poisson kernel P_1 to height y gives P_{1+y}.
    field = poisson_extend(poisson_slice(spec, 1.0))
    for y in (1.0, 0.5, 0.25):
        got = field.slice_at(y).values.real
        target = poisson_slice(spec, 1.0 + y).values.real
        assert np.max(np.abs(got - target)) < 1e-4


def test_poisson_matches_direct_quadrature(spec):
    f = gauss(spec)
    field = poisson_extend(f)
    y = 0.5
    direct = extend_direct(f, "poisson", y)
    # The fast path integrates the kernel over cells; the cross-check uses
    # point-sampled trapezoid weights, so agreement is at the h^2 level.
    assert np.max(np.abs(field.slice_at(y).values - direct)) < 1e-4


def test_conjugate_extension_closed_form(spec):
    # Conjugate extension of P_1 at height y is Q_{1+y}.
    field = conjugate_extend(poisson_slice(spec, 1.0))
    y = 0.5
    x = spec.nodes()
    target = x / (np.pi * (x * x + (1.0 + y) ** 2))
    got = field.slice_at(y).values.real
    assert np.max(np.abs(got - target)) < 1e-4


def test_cauchy_transform_combines_extensions(spec):
    f = gauss(spec)
    y = 0.25
    S = cauchy_transform(f).slice_at(y).values
    U = poisson_extend(f).slice_at(y).values
    V = conjugate_extend(f).slice_at(y).values
    assert np.max(np.abs(S - (U + 1j * V))) < 1e-8


def test_measure_extension_atom_is_poisson_kernel(spec):
    mu = RadonMeasure(atoms=((0.0, 1.0),))
    field = poisson_extend_measure(mu, spec=spec)
    y = 0.5
    got = field.slice_at(y).values.real
    target = poisson_slice(spec, y).values.real
    assert np.max(np.abs(got - target)) < 2e-3
    # Mass is preserved by every slice.
    sl = field.slice_at(y)
    from orlab.norms import quad
    assert quad(sl, sl.real_part()) == pytest.approx(1.0, abs=5e-3)


def test_cauchy_integral_analytic_membership(spec):
    # For boundary values of an analytic extension, the conjugate-point
    # integral vanishes and the direct integral reproduces the extension
    # (with the 1/(i pi) normalization, twice the plain Cauchy value).
    g = analytic_boundary(gauss(spec))
    z = 0.25 + 0.5j  # real part on a grid node
    lower = cauchy_integral(g, z, conjugate=True)
    assert abs(lower) < 5e-3
    direct = 0.5 * cauchy_integral(g, z)
    interp = poisson_extend(g, lattice=HeightLattice((0.5,))).slice_at(0.5)
    k = int(round((z.real + spec.L) / spec.h))
    assert abs(direct - interp.values[k]) < 1e-3


def test_interior_bound_scales(spec):
    f = rect(spec, -1.0, 1.0)
    field = poisson_extend(f)
    # Slices are bounded by the boundary sup and shrink as y grows.
    sups = [float(np.max(np.abs(s.values))) for _, s in field.slices()]
    assert all(s <= 1.0 + 1e-9 for s in sups)
    assert sups[0] <= sups[-1] + 1e-12
