"""Acceptance suite: numbered end-to-end criteria at the standard desk scale
(L = 256, N = 2^15, heights 2^0 .. 2^-8). Tolerances are pinned; each test
states the property it certifies.
"""
import itertools
import json
import math
from fractions import Fraction

import numpy as np
import pytest
from click.testing import CliRunner

from orlab.cli import main as cli_main
from orlab.errors import GateFailed
from orlab.grids import rect
from orlab.growth import (complementary, estimate_indices, power, powerlog,
                          tlog)
from orlab.halfplane import HeightLattice, cauchy_integral, conjugate_extend, poisson_extend
from orlab.hilbert import analytic_boundary, hilbert_transform, l2_pairing
from orlab.maximal import (PiecewiseConstant, build_counterexample,
                           dyadic_cover, dyadic_maximal_at, hl_maximal,
                           hl_maximal_at, hl_superlevel_measure,
                           nontangential_maximal, radial_maximal)
from orlab.norms import luxemburg_norm, orlicz_dual_norm, quad
from orlab.verify import (bundled_scenarios, cayley_transfer,
                          disk_center_value, field_norm)

RELTOL_ISO = 1e-2


@pytest.fixture(scope="module")
def fields(corpus_fns):
    return [poisson_extend(f) for f in corpus_fns]


@pytest.fixture(scope="module")
def random_step_functions(rng):
    """200 nonnegative piecewise-constant functions (the exact-path corpus)."""
    fns = []
    for _ in range(200):
        n_pieces = int(rng.integers(2, 8))
        bps = np.sort(rng.uniform(-10.0, 10.0, n_pieces + 1))
        vals = rng.uniform(0.0, 5.0, n_pieces)
        vals[rng.random(n_pieces) < 0.2] = 0.0
        if not np.any(vals > 0):
            vals[0] = 1.0
        fns.append(PiecewiseConstant.from_values(bps, vals))
    return fns


def test_ac01_poisson_isometry(corpus_fns, corpus_phis, fields):
    for f, F in zip(corpus_fns, fields):
        for phi in corpus_phis:
            nf = luxemburg_norm(f, phi).value
            nF = field_norm(F, phi)
            assert abs(nF - nf) <= RELTOL_ISO * nf, (f.label, phi.describe())


def test_ac02_classical_coincidence(corpus_fns):
    for f in corpus_fns:
        for p in (2.0, 3.0):
            lux = luxemburg_norm(f, power(p)).value
            lp = quad(f, f.abs_values() ** p) ** (1.0 / p)
            assert lux == pytest.approx(lp, rel=1e-9), (f.label, p)


def test_ac03_boundary_convergence(corpus_fns, corpus_phis, fields):
    for f, F in zip(corpus_fns, fields):
        for phi in corpus_phis:
            nf = luxemburg_norm(f, phi).value
            devs = [luxemburg_norm(s - f, phi).value for _, s in F.slices()]
            # Heights decrease along the lattice; deviations must follow.
            assert all(b <= a + 1e-6 for a, b in zip(devs, devs[1:]))
            assert devs[-1] <= RELTOL_ISO * nf


def test_ac04_interior_bound(corpus_fns, corpus_phis, fields):
    violations = 0
    for f, F in zip(corpus_fns, fields):
        for phi in corpus_phis:
            nF = field_norm(F, phi)
            for y, s in F.slices():
                bound = phi.inverse(2.0 / (math.pi * y)) * nF
                violations += int(np.max(np.abs(s.values)) > bound * (1 + 1e-12))
    assert violations == 0


def test_ac05_hilbert_involution_and_identities(corpus_fns, spec):
    for f in corpus_fns:
        scale = float(np.max(np.abs(f.values)))
        HHf = hilbert_transform(hilbert_transform(f))
        assert np.max(np.abs(HHf.values + f.values)) <= 1e-3 * scale
    for f, g in itertools.combinations(corpus_fns, 2):
        Hf, Hg = hilbert_transform(f), hilbert_transform(g)
        pair_scale = max(1e-30, abs(l2_pairing(f, g)),
                         abs(l2_pairing(f, f)) ** 0.5
                         * abs(l2_pairing(g, g)) ** 0.5)
        assert abs(l2_pairing(Hf, Hg) - l2_pairing(f, g)) <= 1e-3 * pair_scale
        assert abs(l2_pairing(f, Hg) + l2_pairing(Hf, g)) <= 1e-3 * pair_scale
    # Method agreement on the interior window |x| <= L/2.
    window = np.abs(spec.nodes()) <= spec.L / 2.0
    for f in corpus_fns:
        a = hilbert_transform(f, method="spectral").values
        b = hilbert_transform(f, method="pv").values
        assert np.max(np.abs((a - b)[window])) <= 1e-3


def test_ac06_conjugate_extension_identity(corpus_fns):
    for f in corpus_fns:
        V = conjugate_extend(f)
        UH = poisson_extend(hilbert_transform(f))
        for (y, v), (_, u) in zip(V.slices(), UH.slices()):
            if y >= 2.0 ** -4:
                assert np.max(np.abs(v.values - u.values)) <= 1e-3, (f.label, y)


def test_ac07_covering_lemma_and_domination(rng, random_step_functions):
    # (a) covering ratio <= 6 with zero violations on 1e5 random intervals.
    a = rng.uniform(-100.0, 100.0, 100_000)
    w = np.exp(rng.uniform(math.log(1e-6), math.log(100.0), 100_000))
    worst = 0.0
    for left, width in zip(a, w):
        interval, ratio = dyadic_cover((left, left + width))
        worst = max(worst, ratio)
        assert float(interval.left) <= left
        assert left + width <= float(interval.right)
    assert worst <= 6.0
    # (b) pointwise M_HL <= 6 (M_D0 + M_D1/3), exact path, zero violations.
    for f in random_step_functions:
        lo, hi = f.hull
        xs = np.concatenate([
            np.array(f.breakpoints),
            np.array([lo - 1.0, hi + 1.0, 0.5 * (lo + hi)]),
        ])
        hl = hl_maximal_at(f, xs)
        d0 = dyadic_maximal_at(f, 0, xs)
        d3 = dyadic_maximal_at(f, Fraction(1, 3), xs)
        assert np.all(hl <= 6.0 * (d0 + d3) * (1.0 + 1e-12))


def test_ac08_weak_type_inequality(random_step_functions):
    for f in random_step_functions:
        vmax = math.exp(max(f.log_values))
        masses = f.cumulative_masses()
        for lam in np.geomspace(1e-3 * vmax, 0.999 * vmax, 50):
            # mass of f above level lam
            above = sum(
                math.exp(lv) * (b - a)
                for a, b, lv in zip(f.breakpoints, f.breakpoints[1:],
                                    f.log_values)
                if math.exp(lv) > lam)
            lhs = hl_superlevel_measure(f, lam / 12.0)
            assert lhs >= above / lam - 1e-12, (lam, lhs, above)


@pytest.mark.parametrize("alpha", [0.0, 1.0, 4.0])
def test_ac09_maximal_sandwich(corpus_fns, alpha):
    lattice = HeightLattice.dyadic(8, -8)
    for f in corpus_fns:
        tol = 1e-2 * float(np.max(np.abs(f.values)))
        F = poisson_extend(f, lattice)
        mhl = hl_maximal(f).values.real
        mrad = radial_maximal(F).values.real
        mntg = nontangential_maximal(F, alpha).values.real
        assert np.all(mhl / (2.0 * math.pi) <= mrad + tol), f.label
        assert np.all(mntg <= (1.0 + 2.0 * alpha / math.pi) * mhl + tol), f.label


def test_ac10_nabla2_dichotomy(corpus_fns):
    # Doubling side: the maximal operator is norm-bounded for Power(2).
    phi = power(2.0)
    ratios = []
    for f in corpus_fns:
        nf = luxemburg_norm(f, phi).value
        nM = luxemburg_norm(hl_maximal(f), phi).value
        ratios.append(nM / nf)
    assert max(ratios) < 100.0
    # Failure side: TLog admits a divergent maximal-modular sequence whose
    # lower bounds grow by a factor >= 1.8 per term while the source modular
    # partial sums stay <= 1.
    report = build_counterexample(tlog(), tlog(), terms=3)
    assert all(r >= 1.8 for r in report.ratio_trend)
    partial = 0.0
    for t in report.terms:
        partial += t.modular_term
        assert partial <= 1.0
    with pytest.raises(GateFailed):
        build_counterexample(power(2.0), power(2.0))


def test_ac11_dual_norm_sandwich(corpus_fns, fields):
    for phi in (power(2.0), power(3.0)):
        for f, F in zip(corpus_fns, fields):
            lux = luxemburg_norm(f, phi).value
            dual = orlicz_dual_norm(f, phi).value
            assert lux <= dual + 1e-6
            assert dual <= 2.0 * lux + 1e-6
            # Field level: the boundary function realizes the field norms.
            nF = max(field_norm(F, phi), lux)
            assert nF <= dual + 1e-6
            assert dual <= 2.0 * nF + 1e-6


def test_ac12_duality_pairing(corpus_fns, fields, spec):
    pairs = list(itertools.combinations(range(len(corpus_fns)), 2))[:5]
    pairs.append((0, 0))  # Gaussian self-pair
    for i, j in pairs:
        f, g = corpus_fns[i], corpus_fns[j]
        target = l2_pairing(f, g)
        scale = max(1.0, abs(target))
        F, G = fields[i], fields[j]
        gaps = [abs(l2_pairing(sf, sg) - target)
                for (_, sf), (_, sg) in zip(F.slices(), G.slices())]
        assert all(b <= a + 1e-6 for a, b in zip(gaps, gaps[1:]))
        assert gaps[-1] <= 1e-2 * scale
    # Gaussian self-pair has the closed form sqrt(pi/2).
    self_pair = l2_pairing(corpus_fns[0], corpus_fns[0])
    assert self_pair == pytest.approx(math.sqrt(math.pi / 2.0), abs=1e-2)


PANEL = [x + 1j * y for x in (-2.0, 0.0, 2.0) for y in (0.5, 1.0, 2.0)]


def test_ac13_cauchy_membership_and_negative(corpus_fns):
    threshold = 5e-3
    for f in corpus_fns:
        g = analytic_boundary(f)
        scale = max(1.0, quad(g, g.abs_values()))
        residual = max(abs(cauchy_integral(g, z, conjugate=True))
                       for z in PANEL)
        assert residual <= threshold * scale, f.label
    # Negative control: real non-constant data is not analytic boundary data.
    f = corpus_fns[0]
    residual = max(abs(cauchy_integral(f, z, conjugate=True)) for z in PANEL)
    assert residual > 10.0 * threshold


def test_ac14_cayley_transfer(corpus_fns):
    phi = power(2.0)
    f = corpus_fns[0]
    F = poisson_extend(f, HeightLattice.dyadic(5, -8))
    disk, rep = cayley_transfer(F, phi, [0.5, 0.9])
    assert rep.overall
    center = disk_center_value(F)
    # F(i) is the boundary-slice value at height 1 over x = 0.
    k = int(round(f.spec.L / f.spec.h))
    target = F.slice_at(1.0).values[k]
    assert abs(center - target) <= 1e-6


def test_ac15_young_conjugation_and_indices():
    wide = np.geomspace(1e-12, 1e200, 8192)
    cases = [(power(2.0), 2.0, 2.0), (power(3.0), 3.0, 3.0),
             (powerlog(2.0, 1.0), 2.0, 3.0), (tlog(), 1.0, 2.0)]
    for phi, a_expect, b_expect in cases:
        psi = complementary(phi)
        # Double conjugate returns the original function.
        phi2 = complementary(psi)
        t = np.geomspace(1e-2, 1e4, 64)
        orig = np.exp(phi.log_eval(np.log(t)))
        back = np.exp(phi2.log_eval(np.log(t)))
        assert np.max(np.abs(back - orig) / orig) <= 1e-3, phi.describe()
        # Young equality holds at t = phi'(s).
        s = np.geomspace(0.1, 100.0, 32)
        ts = phi.deriv(s)
        ok = ts > 0
        lhs = s[ok] * ts[ok]
        rhs = (np.exp(phi.log_eval(np.log(s[ok])))
               + np.exp(psi.log_eval(np.log(ts[ok]))))
        assert np.max(np.abs(lhs - rhs) / rhs) <= 1e-6, phi.describe()
        idx = estimate_indices(phi, probe=wide)
        assert idx.a_lower == pytest.approx(a_expect, abs=1e-2)
        assert idx.b_upper == pytest.approx(b_expect, abs=1e-2)


def test_ac16_negative_control_discipline(tmp_path):
    scen = bundled_scenarios()
    families = {"poisson", "measure", "cauchy", "riesz", "maximal",
                "duality", "cayley"}
    failing = {s["command"].split(":", 1)[1] for s in scen
               if s["expect"] == "fail"}
    assert families <= failing
    # Running a failing scenario standalone exits with code 2.
    neg = next(s for s in scen
               if s["expect"] == "fail" and "poisson" in s["command"])
    p = tmp_path / "neg.json"
    p.write_text(json.dumps({k: v for k, v in neg.items()
                             if k not in ("id", "expect")} | {"id": neg["id"]}
                            | {"command": neg["command"]}))
    runner = CliRunner()
    r = runner.invoke(cli_main, ["verify", "poisson", "--scenario", str(p)])
    assert r.exit_code == 2
