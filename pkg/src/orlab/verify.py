"""Numerical verification of the representation and boundedness theorems.

Each ``verify_*`` operation turns one theorem into a list of named checks
with explicit left/right hand sides and tolerances, bundled into a
:class:`VerificationReport`.  Limits along the shrinking height lattice are
operationalized as a trend condition (the deviation sequence must be
monotone, within slack, after its maximum) plus an endpoint gap bound,
since a finite lattice cannot witness a limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import CorpusError, CoverageTooLow, DomainError
from .grids import GridFunction, GridSpec
from .growth import (GrowthFunction, check_dini_domination,
                     check_nabla2, complementary)
from .halfplane import (HalfPlaneField, HeightLattice, RadonMeasure,
                        cauchy_integral, cauchy_transform, conjugate_extend,
                        poisson_extend, poisson_extend_measure)
from .hilbert import analytic_boundary, hilbert_maximal, hilbert_transform, l2_pairing
from .maximal import (build_counterexample, counterexample_prefix,
                      grid_as_piecewise, hl_maximal, hl_maximal_at,
                      nontangential_maximal, radial_maximal)
from .norms import luxemburg_norm, modular, orlicz_dual_norm, quad

TREND_SLACK = 1e-6


@dataclass(frozen=True)
class Check:
    name: str
    lhs: float
    rhs: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
                "tolerance": self.tolerance, "pass": bool(self.passed)}


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    checks: Tuple[Check, ...]
    config: Dict[str, object] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "overall": bool(self.overall),
            "checks": [c.to_dict() for c in self.checks],
            "config": {k: _jsonable(v) for k, v in sorted(self.config.items())},
        }

    def table(self) -> str:
        rows = [f"{'check':44s} {'lhs':>13s} {'rhs':>13s} {'tol':>9s} ok"]
        for c in self.checks:
            rows.append(f"{c.name[:44]:44s} {c.lhs:13.6g} {c.rhs:13.6g} "
                        f"{c.tolerance:9.2g} {'+' if c.passed else 'FAIL'}")
        rows.append(f"overall: {'pass' if self.overall else 'FAIL'}")
        return "\n".join(rows)


def _jsonable(v):
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return str(v)


def _as_real(f: GridFunction, what: str) -> GridFunction:
    return f.with_values(f.require_real(what) + 0j)


def _leq(name: str, lhs: float, rhs: float, tol: float) -> Check:
    return Check(name, float(lhs), float(rhs), float(tol),
                 bool(lhs <= rhs + tol))


def _close(name: str, lhs: float, rhs: float, tol: float) -> Check:
    return Check(name, float(lhs), float(rhs), float(tol),
                 bool(abs(lhs - rhs) <= tol))


def _trend_ok(devs: Sequence[float], slack: float = TREND_SLACK) -> bool:
    """Nonincreasing after the maximum, within additive slack."""
    devs = list(devs)
    i0 = int(np.argmax(devs))
    return all(b <= a + slack for a, b in zip(devs[i0:], devs[i0 + 1:]))


def field_norm(F: HalfPlaneField, phi: GrowthFunction) -> float:
    """Hardy-Orlicz norm of a field: sup over heights of slice Luxemburg norms."""
    return max(luxemburg_norm(s, phi).value for _, s in F.slices())


def _merge_tol(cfg: Optional[dict], key: str, default: float) -> float:
    if cfg and "tolerances" in cfg and key in cfg["tolerances"]:
        return float(cfg["tolerances"][key])
    return default


# -- harmonic representation -------------------------------------------------


def verify_poisson_representation(f: GridFunction, phi: GrowthFunction,
                                  cfg: Optional[dict] = None) -> VerificationReport:
    """Harmonic-extension representation: isometry, monotone slice norms,
    boundary recovery, and the interior pointwise bound."""
    if f.decay_class not in ("compact_support", "rational_decay", "schwartz"):
        raise CorpusError(f"unsupported decay class {f.decay_class!r}")
    tol_iso = _merge_tol(cfg, "isometry_rel", 1e-2)
    tol_rec = _merge_tol(cfg, "recovery_rel", 1e-2)
    lattice = (cfg or {}).get("lattice") or HeightLattice()
    F = poisson_extend(f, lattice)
    nf = luxemburg_norm(f, phi).value
    slice_norms = [luxemburg_norm(s, phi).value for _, s in F.slices()]
    nF = max(slice_norms)
    checks = [
        _close("slice-norm supremum equals boundary norm", nF, nf,
               tol_iso * max(nf, 1e-12)),
        Check("slice norms nondecreasing toward the boundary",
              float(min(np.diff(slice_norms), default=0.0)), 0.0, TREND_SLACK,
              bool(all(b >= a - TREND_SLACK
                       for a, b in zip(slice_norms, slice_norms[1:])))),
    ]
    # boundary convergence trend and endpoint recovery
    devs = [luxemburg_norm(s - f, phi).value for _, s in F.slices()]
    checks.append(Check("boundary deviation trend monotone after its peak",
                        float(devs[-1]), float(devs[0]), TREND_SLACK,
                        _trend_ok(devs)))
    checks.append(_leq("smallest-height slice recovers the boundary data",
                       devs[-1], tol_rec * max(nf, 1e-12), 0.0))
    # interior bound |F(x+iy)| <= Phi^{-1}(2/(pi y)) * ||F||
    worst = -math.inf
    for y, s in F.slices():
        bound = float(phi.inverse(2.0 / (math.pi * y))) * nF
        worst = max(worst, float(np.max(np.abs(s.values))) - bound)
    checks.append(_leq("interior values under the height-scaled bound",
                       worst, 0.0, 1e-12 * max(nF, 1.0)))
    return VerificationReport(
        "harmonic representation (boundary isometry)", tuple(checks),
        {"phi": phi.describe(), "fn": f.label, "heights": list(lattice.heights),
         "tolerances": {"isometry_rel": tol_iso, "recovery_rel": tol_rec}},
    )


def verify_measure_representation(mu: RadonMeasure,
                                  testfns: Sequence[GridFunction],
                                  cfg: Optional[dict] = None) -> VerificationReport:
    """Weak-star convergence of measure extensions against test functions."""
    for p in testfns:
        if p.decay_class != "compact_support":
            raise CorpusError("test functions must have compact support")
    tol = _merge_tol(cfg, "pairing_rel", 1e-2)
    lattice = (cfg or {}).get("lattice") or HeightLattice()
    checks: List[Check] = []
    spec = testfns[0].spec
    F = poisson_extend_measure(mu, lattice, spec)
    for p in testfns:
        target = sum(w * float(np.interp(loc, p.x, p.values.real))
                     for loc, w in mu.atoms)
        if mu.density is not None:
            target += quad(p, p.values.real * mu.density.values.real)
        pairings = [quad(p, p.values.real * s.values.real) for _, s in F.slices()]
        devs = [abs(v - target) for v in pairings]
        checks.append(Check(
            f"pairing deviation trend [{p.label}]",
            float(devs[-1]), float(devs[0]), TREND_SLACK, _trend_ok(devs)))
        checks.append(_leq(f"pairing limit gap [{p.label}]",
                           devs[-1], tol * (1.0 + abs(target)), 0.0))
    return VerificationReport(
        "measure representation (weak-star boundary limit)", tuple(checks),
        {"atoms": list(mu.atoms), "has_density": mu.density is not None,
         "testfns": [p.label for p in testfns],
         "tolerances": {"pairing_rel": tol}},
    )


_PANEL = tuple(complex(a, b) for a in (-2.0, 0.0, 2.0) for b in (0.5, 1.0, 2.0))


def verify_cauchy_representation(f: GridFunction, phi: GrowthFunction,
                                 cfg: Optional[dict] = None,
                                 analytic_input: bool = False) -> VerificationReport:
    """Cauchy-integral representation for analytic boundary data.

    Manufactures an analytic-class member g = f + i H(f) (unless the input
    is declared already analytic), then checks the vanishing conjugate-pole
    integral, agreement of the Cauchy integral with the harmonic extension
    on a fixed panel, and boundary convergence of the analytic field.
    """
    tol_mem = _merge_tol(cfg, "membership", 5e-3)
    tol_panel = _merge_tol(cfg, "panel_agreement", 1e-3)
    g = f if analytic_input else analytic_boundary(f)
    scale = max(quad(g, g.abs_values()), 1e-12)
    resid = max(abs(cauchy_integral(g, z, conjugate=True)) for z in _PANEL)
    checks = [_leq("conjugate-pole integral vanishes on the panel",
                   resid, tol_mem * scale, 0.0)]
    heights = sorted({z.imag for z in _PANEL}, reverse=True)
    U = poisson_extend(g, HeightLattice(tuple(heights)))
    worst = 0.0
    for z in _PANEL:
        # cauchy_integral carries the 1/(i pi) conjugate-pair normalization,
        # twice the plain Cauchy value
        direct = 0.5 * cauchy_integral(g, z)
        s = U.slice_at(z.imag)
        interp = complex(np.interp(z.real, s.x, s.values.real),
                         np.interp(z.real, s.x, s.values.imag))
        worst = max(worst, abs(direct - interp))
    checks.append(_leq("Cauchy integral matches harmonic extension on panel",
                       worst, tol_panel * max(1.0, scale), 0.0))
    S = cauchy_transform(_as_real(f, 'Cauchy verification'), HeightLattice())
    devs = [float(np.max(np.abs(s.values - g.values))) for _, s in S.slices()]
    checks.append(Check("analytic slices converge to the boundary data",
                        float(devs[-1]), float(devs[0]), TREND_SLACK,
                        _trend_ok(devs) and devs[-1] <= 5e-2 * max(1.0, scale)))
    return VerificationReport(
        "Cauchy representation (analytic membership)", tuple(checks),
        {"phi": phi.describe(), "fn": f.label, "analytic_input": analytic_input,
         "tolerances": {"membership": tol_mem, "panel_agreement": tol_panel}},
    )


def verify_riesz_projection(f: GridFunction, phi: GrowthFunction,
                            cfg: Optional[dict] = None) -> VerificationReport:
    """Boundedness of the analytic projection and the conjugation identities.

    Requires the growth function and its conjugate to both be doubling;
    when the gate fails the report instead documents the degeneracy (an
    explicit divergence construction when available) and fails overall.
    """
    gate = check_nabla2(phi)
    if not gate.satisfied:
        return _degenerate_report("analytic projection boundedness", phi, cfg)
    tol = _merge_tol(cfg, "norm_rel", 1e-2)
    tol_id = _merge_tol(cfg, "identity_rel", 1e-3)
    f = _as_real(f, 'analytic projection verification')
    Hf = hilbert_transform(f)
    sf = f + Hf * 1j
    nf = luxemburg_norm(f, phi).value
    nS = field_norm(cauchy_transform(f), phi)
    ns_boundary = luxemburg_norm(sf, phi).value
    nS = max(nS, ns_boundary)
    checks = [
        _leq("boundary norm below analytic projection norm", nf, nS, tol * nf),
        Check("projection-to-input norm ratio is finite",
              nS / max(nf, 1e-300), math.inf, 0.0,
              bool(math.isfinite(nS / max(nf, 1e-300)))),
    ]
    HHf = hilbert_transform(Hf)
    scale = max(float(np.max(np.abs(f.values))), 1e-12)
    checks.append(_leq("conjugation applied twice negates the input",
                       float(np.max(np.abs(HHf.values + f.values))),
                       tol_id * scale, 0.0))
    g = _companion(f)
    Hg = hilbert_transform(g)
    pair_scale = max(abs(l2_pairing(f, g)), abs(l2_pairing(f, f)), 1e-12)
    checks.append(_close("conjugation preserves pairings",
                         l2_pairing(Hf, Hg), l2_pairing(f, g),
                         tol_id * pair_scale))
    checks.append(_close("conjugation is skew in pairings",
                         l2_pairing(f, Hg), -l2_pairing(Hf, g),
                         tol_id * pair_scale))
    # (f + iHf)(g + iHg) integrates to zero: split into pairing identities
    prod_defect = (abs(l2_pairing(f, g) - l2_pairing(Hf, Hg))
                   + abs(l2_pairing(f, Hg) + l2_pairing(Hf, g)))
    checks.append(_leq("analytic product integrates to zero",
                       prod_defect, tol_id * pair_scale * 10.0, 0.0))
    return VerificationReport(
        "analytic projection boundedness", tuple(checks),
        {"phi": phi.describe(), "fn": f.label,
         "upper_ratio": nS / max(nf, 1e-300),
         "tolerances": {"norm_rel": tol, "identity_rel": tol_id}},
    )


def verify_maximal_equivalences(f: GridFunction, phi: GrowthFunction,
                                alpha: float = 1.0,
                                cfg: Optional[dict] = None) -> VerificationReport:
    """Norm equivalence of the radial, cone, and averaging maximal operators."""
    gate = check_nabla2(phi)
    if not gate.satisfied:
        return _degenerate_report("maximal operator equivalences", phi, cfg,
                                  alpha=alpha)
    tol = _merge_tol(cfg, "norm_rel", 1e-2)
    f = _as_real(f, 'maximal verification')
    nf = luxemburg_norm(f, phi).value
    tol_add = tol * max(nf, 1e-12)
    # heights up to 2^8 so the radial maximal sees averaging at every scale
    # the grid window supports
    lattice = HeightLattice.dyadic(8, -8)
    F = poisson_extend(f, lattice)
    mrad = radial_maximal(F)
    mntg = nontangential_maximal(F, alpha)
    mhl = hl_maximal(f)
    checks = [
        _leq("boundary norm below radial maximal norm",
             nf, luxemburg_norm(mrad, phi).value, tol_add),
        _leq("radial maximal norm below cone maximal norm",
             luxemburg_norm(mrad, phi).value,
             luxemburg_norm(mntg, phi).value, tol_add),
        Check("cone-maximal-to-input norm ratio is finite",
              luxemburg_norm(mntg, phi).value / max(nf, 1e-300), math.inf,
              0.0, bool(math.isfinite(
                  luxemburg_norm(mntg, phi).value / max(nf, 1e-300)))),
    ]
    sup_scale = max(float(np.max(np.abs(f.values))), 1e-12)
    ptol = _merge_tol(cfg, "pointwise_rel", 1e-2) * sup_scale
    checks.append(_leq("averaging maximal below 2 pi radial maximal pointwise",
                       float(np.max(mhl.values.real / (2.0 * math.pi)
                                    - mrad.values.real)), 0.0, ptol))
    checks.append(_leq("cone maximal below aperture-scaled averaging maximal",
                       float(np.max(mntg.values.real
                                    - (1.0 + 2.0 * alpha / math.pi)
                                    * mhl.values.real)), 0.0, ptol))
    Hf = hilbert_transform(f, method="pv")
    Ht = hilbert_maximal(f)
    checks.append(_leq("conjugate function below its maximal truncations",
                       float(np.max(np.abs(Hf.values.real)
                                    - Ht.values.real)), 0.0, TREND_SLACK))
    Vmax = radial_maximal(conjugate_extend(f, lattice))
    env = (1.0 + 1.0 / math.pi) * mhl.values.real + Vmax.values.real
    checks.append(_leq("maximal conjugate under its averaging envelope",
                       float(np.max(Ht.values.real - env)), 0.0, ptol))
    checks.append(
        _leq("conjugate maximal norm finite multiple of input norm",
             luxemburg_norm(Ht, phi).value,
             math.inf if nf == 0 else 1e6 * nf, 0.0))
    return VerificationReport(
        "maximal operator equivalences", tuple(checks),
        {"phi": phi.describe(), "fn": f.label, "alpha": alpha,
         "cone_ratio": luxemburg_norm(mntg, phi).value / max(nf, 1e-300),
         "tolerances": {"norm_rel": tol}},
    )


def _degenerate_report(theorem: str, phi: GrowthFunction,
                       cfg: Optional[dict], **extra) -> VerificationReport:
    """Failing report for growth functions without the doubling-pair gate.

    When the Dini comparison also fails against the function itself, the
    explicit divergence construction is attached as evidence that no
    bounded constant can exist.
    """
    config: Dict[str, object] = {"phi": phi.describe(), "gate": "nabla2 not satisfied"}
    config.update(extra)
    if not check_dini_domination(phi, phi).satisfied:
        rep = build_counterexample(phi, phi, terms=3)
        config["divergence_ratios"] = list(rep.ratio_trend)
        config["divergence_modular_sum"] = sum(
            t.modular_term for t in rep.terms)
    gate_check = Check("conjugate pair is doubling", 0.0, 1.0, 0.0, False)
    return VerificationReport(theorem, (gate_check,), config)


def verify_duality(f: GridFunction, g: GridFunction, phi: GrowthFunction,
                   cfg: Optional[dict] = None) -> VerificationReport:
    """Duality pairing limit, the functional bound, and the norm sandwich."""
    psi = complementary(phi)
    tol = _merge_tol(cfg, "pairing_rel", 1e-2)
    tol_sand = _merge_tol(cfg, "sandwich_add", 1e-6)
    f = _as_real(f, 'duality verification')
    g = _as_real(g, 'duality verification')
    target = l2_pairing(f, g)
    Uf = poisson_extend(f)
    Ug = poisson_extend(g)
    pairings = [l2_pairing(sf, sg) for (_, sf), (_, sg) in zip(Uf.slices(), Ug.slices())]
    devs = [abs(p - target) for p in pairings]
    scale = 1.0 + abs(target)
    checks = [
        Check("pairing deviation trend monotone after its peak",
              float(devs[-1]), float(devs[0]), TREND_SLACK, _trend_ok(devs)),
        _leq("pairing limit gap", devs[-1], tol * scale, 0.0),
    ]
    nf = luxemburg_norm(f, phi).value
    dualg = orlicz_dual_norm(g, psi).value
    checks.append(_leq("functional bounded by dual norm times input norm",
                       abs(target), dualg * nf, tol * scale))
    # the slice norms increase toward the boundary, so the field norm is
    # the boundary norm; the lattice supremum alone undershoots it slightly
    nF = max(field_norm(Uf, phi), nf)
    dualF = orlicz_dual_norm(f, phi).value
    checks.append(_leq("field norm below its dual estimate",
                       nF, dualF, tol_sand))
    checks.append(_leq("dual estimate below twice the field norm",
                       dualF, 2.0 * nF, tol_sand))
    # analytic pairing: the conjugated product converges to 2 * the pairing
    Hf, Hg = hilbert_transform(f), hilbert_transform(g)
    Sf = cauchy_transform(f)
    Sg = cauchy_transform(g)
    a_target = 2.0 * target
    a_pairs = []
    for (_, sf), (_, sg) in zip(Sf.slices(), Sg.slices()):
        prod = sf.with_values(sf.values * np.conj(sg.values))
        a_pairs.append(quad(prod, prod.values.real))
    a_devs = [abs(p - a_target) for p in a_pairs]
    checks.append(_leq("analytic conjugated pairing limit gap",
                       a_devs[-1], tol * (1.0 + abs(a_target)), 0.0))
    return VerificationReport(
        "duality pairing and norm sandwich", tuple(checks),
        {"phi": phi.describe(), "psi": psi.describe(),
         "f": f.label, "g": g.label, "pairing_target": target,
         "tolerances": {"pairing_rel": tol, "sandwich_add": tol_sand}},
    )


# -- disk transfer -----------------------------------------------------------


@dataclass(frozen=True)
class DiskField:
    """Samples of a disk function on concentric circles.

    ``values[i, m]`` is the value at ``radii[i] * exp(i theta_m)`` with a
    uniform angular grid on [-pi, pi); NaN marks angles whose image fell
    outside the stored half-plane panel.
    """

    radii: Tuple[float, ...]
    M: int
    values: np.ndarray

    def __post_init__(self) -> None:
        if any(not (0.0 <= r < 1.0) for r in self.radii):
            raise DomainError("radii must lie in [0, 1)")
        if self.values.shape != (len(self.radii), self.M):
            raise DomainError("values shape must be (radii, M)")

    def angles(self) -> np.ndarray:
        return -math.pi + 2.0 * math.pi * np.arange(self.M) / self.M


def cayley_transfer(F: HalfPlaneField, phi: GrowthFunction,
                    radii: Sequence[float], M: int = 720,
                    cfg: Optional[dict] = None
                    ) -> Tuple[DiskField, VerificationReport]:
    """Pull the field back to the disk via z = i (1 - w) / (1 + w).

    Samples circles, interpolating the stored panel bilinearly in
    (x, log y); angles mapping outside the panel are excluded and their
    measure widens the tolerance of the circle-average bound.
    """
    tol = _merge_tol(cfg, "average_rel", 1e-2)
    radii = tuple(float(r) for r in radii)
    thetas = -math.pi + 2.0 * math.pi * np.arange(M) / M
    w = np.exp(1j * thetas)
    heights = np.asarray(F.lattice.heights)  # decreasing
    log_y = np.log(heights[::-1])
    xg = F.spec.nodes()
    vals = np.empty((len(radii), M), dtype=complex)
    nF = field_norm(F, phi)
    bound = float(phi.inverse(1.0)) * nF
    checks: List[Check] = []
    for i, r in enumerate(radii):
        z = 1j * (1.0 - r * w) / (1.0 + r * w)
        x, y = z.real, z.imag
        ok = ((y >= heights[-1]) & (y <= heights[0])
              & (x >= xg[0]) & (x <= xg[-1]))
        excluded = 1.0 - float(np.mean(ok))
        if excluded > 0.2:
            raise CoverageTooLow(
                f"radius {r}: {excluded:.0%} of the circle maps outside "
                f"the stored panel")
        row = np.full(M, np.nan + 0j)
        iy = np.clip(np.searchsorted(log_y, np.log(np.maximum(y, 1e-300)))
                     , 1, len(log_y) - 1)
        t = (np.log(np.maximum(y, 1e-300)) - log_y[iy - 1]) / (log_y[iy] - log_y[iy - 1])
        stored = F.values[::-1]  # align with increasing log y
        for m in np.nonzero(ok)[0]:
            lo = stored[iy[m] - 1]
            hi = stored[iy[m]]
            vlo = complex(np.interp(x[m], xg, lo.real),
                          np.interp(x[m], xg, lo.imag))
            vhi = complex(np.interp(x[m], xg, hi.real),
                          np.interp(x[m], xg, hi.imag))
            row[m] = (1.0 - t[m]) * vlo + t[m] * vhi
        vals[i] = row
        avg = float(np.mean(np.abs(row[ok])))
        checks.append(_leq(
            f"circle average at r={r} under the inverse-growth bound",
            avg, bound, tol * (1.0 + excluded) * max(bound, 1e-12)))
        checks.append(Check(f"coverage at r={r}", excluded, 0.2, 0.0,
                            bool(excluded <= 0.2)))
    report = VerificationReport(
        "disk transfer (circle-average bound)", tuple(checks),
        {"phi": phi.describe(), "radii": list(radii), "M": M,
         "field_norm": nF, "tolerances": {"average_rel": tol}},
    )
    return DiskField(radii, M, vals), report


def disk_center_value(F: HalfPlaneField) -> complex:
    """G(0) for the disk pull-back: the field value at the imaginary unit."""
    s = F.slice_at(1.0)
    return complex(np.interp(0.0, s.x, s.values.real),
                   np.interp(0.0, s.x, s.values.imag))


# -- bundled scenarios --------------------------------------------------------


def _companion(f: GridFunction) -> GridFunction:
    """A second corpus member on the same grid, for pairing checks."""
    from .grids import gauss

    return gauss(f.spec, 0.5, 1.5)


def default_spec() -> GridSpec:
    return GridSpec(L=256.0, N=2 ** 15)


def bundled_scenarios() -> List[dict]:
    """The acceptance corpus: scenario descriptors with expected outcomes."""
    return [
        {"id": "poisson-gauss-p2", "command": "verify:poisson",
         "phi": "power:p=2", "fn": "gauss", "expect": "pass"},
        {"id": "poisson-p1-plog", "command": "verify:poisson",
         "phi": "powerlog:p=2,beta=1", "fn": "poisson1", "expect": "pass"},
        {"id": "poisson-negative-tight", "command": "verify:poisson",
         "phi": "power:p=2", "fn": "gauss", "expect": "fail",
         "tolerances": {"isometry_rel": 1e-12, "recovery_rel": 1e-12}},
        {"id": "measure-atom", "command": "verify:measure",
         "atoms": [[0.0, 1.0]], "expect": "pass"},
        {"id": "measure-negative-coarse", "command": "verify:measure",
         "atoms": [[0.0, 1.0]], "heights": [1.0, 0.5], "expect": "fail"},
        {"id": "cauchy-gauss", "command": "verify:cauchy",
         "phi": "power:p=2", "fn": "gauss", "expect": "pass"},
        {"id": "cauchy-real-negative", "command": "verify:cauchy",
         "phi": "power:p=2", "fn": "gauss", "analytic_input": True,
         "expect": "fail"},
        {"id": "riesz-gauss-p2", "command": "verify:riesz",
         "phi": "power:p=2", "fn": "gauss", "expect": "pass"},
        {"id": "riesz-p1-p3", "command": "verify:riesz",
         "phi": "power:p=3", "fn": "poisson1", "expect": "pass"},
        {"id": "riesz-tlog-negative", "command": "verify:riesz",
         "phi": "tlog", "fn": "gauss", "expect": "fail"},
        {"id": "maximal-gauss-p2", "command": "verify:maximal",
         "phi": "power:p=2", "fn": "gauss", "alpha": 1.0, "expect": "pass"},
        {"id": "maximal-alpha0", "command": "verify:maximal",
         "phi": "power:p=2", "fn": "gauss", "alpha": 0.0, "expect": "pass"},
        {"id": "maximal-tlog-negative", "command": "verify:maximal",
         "phi": "tlog", "fn": "gauss", "alpha": 1.0, "expect": "fail"},
        {"id": "duality-gauss-p2", "command": "verify:duality",
         "phi": "power:p=2", "fn": "gauss", "fn2": "gauss", "expect": "pass"},
        {"id": "duality-negative-tight", "command": "verify:duality",
         "phi": "power:p=2", "fn": "gauss", "fn2": "gauss", "expect": "fail",
         "tolerances": {"pairing_rel": 1e-14, "sandwich_add": 0.0}},
        {"id": "cayley-gauss-p2", "command": "verify:cayley",
         "phi": "power:p=2", "fn": "gauss", "radii": [0.5, 0.9],
         "expect": "pass"},
        {"id": "cayley-negative-tight", "command": "verify:cayley",
         "phi": "power:p=2", "fn": "gauss", "radii": [0.5],
         "tolerances": {"average_rel": -2.0}, "expect": "fail"},
    ]
