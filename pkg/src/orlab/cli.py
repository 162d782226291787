"""Command-line front end: scenario loading, dispatch, reports, and plots.

Exit codes: 0 all checks passed, 2 a verification check failed, 1 the tool
itself failed (bad input, unknown key, unsupported configuration).
"""

from __future__ import annotations

import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional

import click
import numpy as np

from . import grids, verify as verify_mod
from .errors import OrlabError, ScenarioError
from .grids import GridFunction, GridSpec
from .growth import (check_delta2, check_dini_domination, check_nabla2,
                     estimate_indices, parse_phi)
from .halfplane import (HeightLattice, RadonMeasure, cauchy_transform,
                        conjugate_extend, poisson_extend,
                        poisson_extend_measure)
from .hilbert import hilbert_maximal, hilbert_transform
from .maximal import (PiecewiseConstant, build_counterexample, dyadic_maximal,
                      dyadic_maximal_at, hl_maximal, hl_maximal_at,
                      nontangential_maximal, radial_maximal)
from .norms import luxemburg_norm, orlicz_dual_norm
from .verify import (bundled_scenarios, cayley_transfer,
                     verify_cauchy_representation, verify_duality,
                     verify_maximal_equivalences,
                     verify_measure_representation,
                     verify_poisson_representation, verify_riesz_projection)

FN_FAMILIES = {
    "gauss": "gauss[:c=0,w=1]        Gaussian exp(-((x-c)/w)^2/2)",
    "poisson1": "poisson1[:y=1,c=0]  Poisson kernel slice (1/pi) y/((x-c)^2+y^2)",
    "rect": "rect:a=A,b=B[,amp=1]    indicator of [A, B)",
    "tent": "tent[:c=0,w=1]          triangular bump",
    "bump": "bump[:c=0,w=1]          smooth compactly supported bump",
    "const": "const[:v=1]            constant value",
    "smoothrect": "smoothrect:a=A,b=B[,ramp=0.5]  smoothed indicator",
    "zero": "zero                    identically zero",
}


def parse_fn(spec_str: str, spec: GridSpec) -> GridFunction:
    """Parse the function mini-language (see ``FN_FAMILIES``)."""
    name, _, rest = spec_str.partition(":")
    name = name.strip().lower()
    kv: Dict[str, float] = {}
    if rest:
        for item in rest.split(","):
            k, _, v = item.partition("=")
            if not v:
                raise ScenarioError(f"bad function spec fragment {item!r}")
            kv[k.strip()] = float(v)
    if name == "gauss":
        return grids.gauss(spec, kv.get("c", 0.0), kv.get("w", 1.0))
    if name in ("poisson1", "p1"):
        return grids.poisson_slice(spec, kv.get("y", 1.0), kv.get("c", 0.0))
    if name == "rect":
        return grids.rect(spec, kv["a"], kv["b"], kv.get("amp", 1.0))
    if name == "tent":
        return grids.tent(spec, kv.get("c", 0.0), kv.get("w", 1.0))
    if name == "bump":
        return grids.bump(spec, kv.get("c", 0.0), kv.get("w", 1.0))
    if name == "const":
        return grids.constant(spec, kv.get("v", 1.0))
    if name == "smoothrect":
        return grids.smooth_rect(spec, kv["a"], kv["b"], kv.get("ramp", 0.5))
    if name == "zero":
        return grids.constant(spec, 0.0)
    raise ScenarioError(f"unknown function family {name!r}")


# -- scenarios ----------------------------------------------------------------

_SCENARIO_KEYS = {
    "id", "command", "phi", "phi2", "fn", "fn2", "grid", "heights", "method",
    "alpha", "beta", "radii", "atoms", "analytic_input", "tolerances", "at",
    "op", "terms", "output", "seed", "expect",
}

_DEFAULTS = {
    "grid": {"L": 256.0, "N": 32768},
    "alpha": 1.0,
    "beta": "0",
    "method": "spectral",
    "terms": 3,
    "seed": 0,
}


@dataclass
class Scenario:
    """A fully resolved run description with defaults materialized."""

    command: str
    data: Dict[str, object] = dc_field(default_factory=dict)

    def __getitem__(self, key):
        return self.data[key]

    def get(self, key, default=None):
        return self.data.get(key, default)

    def echo(self) -> dict:
        return {"command": self.command, **{k: v for k, v in
                                            sorted(self.data.items())}}


def load_scenario(path_or_dict) -> Scenario:
    """Load and resolve a scenario; unknown keys are rejected by name."""
    if isinstance(path_or_dict, dict):
        raw = dict(path_or_dict)
    else:
        try:
            with open(path_or_dict) as fh:
                raw = json.load(fh)
        except OSError as e:
            raise ScenarioError(f"cannot read scenario file: {e}") from e
        except json.JSONDecodeError as e:
            raise ScenarioError(
                f"scenario parse error at line {e.lineno}, column {e.colno}: "
                f"{e.msg}") from e
    unknown = set(raw) - _SCENARIO_KEYS
    if unknown:
        raise ScenarioError(
            f"unknown scenario key(s): {', '.join(sorted(unknown))}")
    if "command" not in raw:
        raise ScenarioError("scenario needs a 'command' key")
    data = dict(_DEFAULTS)
    data.update({k: v for k, v in raw.items() if k != "command"})
    return Scenario(str(raw["command"]), data)


def _grid_of(sc: Scenario) -> GridSpec:
    g = sc.get("grid", _DEFAULTS["grid"])
    return GridSpec(L=float(g["L"]), N=int(g["N"]))


def _lattice_of(sc: Scenario) -> Optional[HeightLattice]:
    h = sc.get("heights")
    return HeightLattice(tuple(float(v) for v in h)) if h else None


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ORLAB_THREADS", "8")))
    except ValueError:
        return 8


# -- dispatch -----------------------------------------------------------------


def run_verify(sc: Scenario):
    """Run one verification scenario; returns a VerificationReport."""
    kind = sc.command.split(":", 1)[1] if ":" in sc.command else sc.command
    spec = _grid_of(sc)
    cfg: Dict[str, object] = {}
    if sc.get("tolerances"):
        cfg["tolerances"] = sc["tolerances"]
    lattice = _lattice_of(sc)
    if lattice:
        cfg["lattice"] = lattice
    phi = parse_phi(str(sc.get("phi", "power:p=2")))
    if kind == "poisson":
        return verify_poisson_representation(parse_fn(sc["fn"], spec), phi, cfg)
    if kind == "measure":
        mu = RadonMeasure(atoms=tuple((float(a), float(w))
                                      for a, w in sc.get("atoms", [])))
        fns = [grids.bump(spec, 0.0, 1.0), grids.bump(spec, 2.5, 0.4)]
        if sc.get("fn"):
            fns = [parse_fn(str(sc["fn"]), spec)] + fns[1:]
        return verify_measure_representation(mu, fns, cfg)
    if kind == "cauchy":
        return verify_cauchy_representation(
            parse_fn(sc["fn"], spec), phi, cfg,
            analytic_input=bool(sc.get("analytic_input", False)))
    if kind == "riesz":
        return verify_riesz_projection(parse_fn(sc["fn"], spec), phi, cfg)
    if kind == "maximal":
        return verify_maximal_equivalences(parse_fn(sc["fn"], spec), phi,
                                           float(sc.get("alpha", 1.0)), cfg)
    if kind == "duality":
        f = parse_fn(sc["fn"], spec)
        g = parse_fn(sc.get("fn2", sc["fn"]), spec)
        return verify_duality(f, g, phi, cfg)
    if kind == "cayley":
        f = parse_fn(sc["fn"], spec)
        F = poisson_extend(f, HeightLattice.dyadic(5, -8))
        _, rep = cayley_transfer(F, phi, sc.get("radii", [0.5, 0.9]), cfg=cfg)
        return rep
    raise ScenarioError(f"unknown verify target {kind!r}")


def _emit(report_dict: dict, output: Optional[str]) -> None:
    text = json.dumps(report_dict, sort_keys=True, indent=2,
                      allow_nan=True, default=str)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    click.echo(text)


def _plot_svg(path: str, xs, series: Dict[str, list], xlabel: str,
              ylabel: str, logy: bool = False) -> None:
    import matplotlib
    matplotlib.use("svg")
    matplotlib.rcParams["svg.hashsalt"] = "orlab"
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    for name, ys in series.items():
        ax.plot(xs, ys, marker="o", label=name)
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


# -- click commands -----------------------------------------------------------


@click.group(epilog="Growth families: " + "power:p=P[,c=C], powerlog:p=P,"
             "beta=B, qoverlog:q=Q, explike, tlog, sampled:file=PATH. "
             "Function families: " + "; ".join(FN_FAMILIES.values()))
def main() -> None:
    """Orlicz-space calculus and half-plane harmonic analysis toolkit."""


def _fail(e: Exception) -> None:
    click.echo(f"error: {e}", err=True)
    sys.exit(1)


@main.group()
def growth() -> None:
    """Growth-function structure checks."""


@growth.command("check")
@click.option("--phi", required=True, help="growth spec, e.g. power:p=2")
@click.option("--phi2", default=None, help="second growth spec for the Dini check")
@click.option("--output", default=None, type=click.Path())
def growth_check(phi: str, phi2: Optional[str], output: Optional[str]) -> None:
    """Report doubling, conjugate-doubling, indices, and Dini domination."""
    try:
        g = parse_phi(phi)
        rep = {
            "phi": g.describe(),
            "delta2": check_delta2(g).to_dict(),
            "nabla2": check_nabla2(g).to_dict(),
            "indices": estimate_indices(g).to_dict(),
        }
        if phi2:
            g2 = parse_phi(phi2)
            rep["dini_domination"] = check_dini_domination(g, g2).to_dict()
        _emit(rep, output)
    except OrlabError as e:
        _fail(e)


@main.command("norm")
@click.option("--phi", required=True)
@click.option("--fn", required=True)
@click.option("--grid", default="256,32768", help="L,N")
@click.option("--output", default=None, type=click.Path())
def norm_cmd(phi: str, fn: str, grid: str, output: Optional[str]) -> None:
    """Luxemburg norm of a function."""
    try:
        L, N = grid.split(",")
        spec = GridSpec(L=float(L), N=int(N))
        f = parse_fn(fn, spec)
        res = luxemburg_norm(f, parse_phi(phi))
        _emit({"phi": phi, "fn": fn, **res.to_dict()}, output)
    except OrlabError as e:
        _fail(e)


@main.command("dual-norm")
@click.option("--phi", required=True)
@click.option("--fn", required=True)
@click.option("--grid", default="256,32768")
@click.option("--output", default=None, type=click.Path())
def dual_norm_cmd(phi: str, fn: str, grid: str, output: Optional[str]) -> None:
    """Orlicz (dual) norm of a function."""
    try:
        L, N = grid.split(",")
        spec = GridSpec(L=float(L), N=int(N))
        f = parse_fn(fn, spec)
        res = orlicz_dual_norm(f, parse_phi(phi))
        _emit({"phi": phi, "fn": fn, **res.to_dict()}, output)
    except OrlabError as e:
        _fail(e)


@main.command("extend")
@click.option("--kind", type=click.Choice(["poisson", "conjugate", "cauchy"]),
              default="poisson")
@click.option("--fn", required=True)
@click.option("--grid", default="256,32768")
@click.option("--heights", default=None, help="comma-separated, decreasing")
@click.option("--csv", "csv_path", default=None, type=click.Path())
@click.option("--output", default=None, type=click.Path())
def extend_cmd(kind: str, fn: str, grid: str, heights: Optional[str],
               csv_path: Optional[str], output: Optional[str]) -> None:
    """Harmonic/conjugate/analytic extension to the height lattice."""
    try:
        L, N = grid.split(",")
        spec = GridSpec(L=float(L), N=int(N))
        f = parse_fn(fn, spec)
        lattice = (HeightLattice(tuple(float(v) for v in heights.split(",")))
                   if heights else HeightLattice())
        op = {"poisson": poisson_extend, "conjugate": conjugate_extend,
              "cauchy": cauchy_transform}[kind]
        F = op(f, lattice)
        if csv_path:
            F.to_csv(csv_path)
        _emit({"kind": kind, "fn": fn, "heights": list(lattice.heights),
               "abs_max": F.abs_max(),
               "csv": csv_path}, output)
    except OrlabError as e:
        _fail(e)


@main.command("hilbert")
@click.option("--fn", required=True)
@click.option("--method", type=click.Choice(["spectral", "pv"]),
              default="spectral")
@click.option("--grid", default="256,32768")
@click.option("--csv", "csv_path", default=None, type=click.Path())
@click.option("--output", default=None, type=click.Path())
def hilbert_cmd(fn: str, method: str, grid: str, csv_path: Optional[str],
                output: Optional[str]) -> None:
    """Conjugate function (Hilbert transform) of real boundary data."""
    try:
        L, N = grid.split(",")
        spec = GridSpec(L=float(L), N=int(N))
        f = parse_fn(fn, spec)
        Hf = hilbert_transform(f, method=method)
        if csv_path:
            Hf.to_csv(csv_path)
        _emit({"fn": fn, "method": method,
               "max_abs": float(np.max(np.abs(Hf.values))),
               "csv": csv_path}, output)
    except OrlabError as e:
        _fail(e)


@main.command("maximal")
@click.option("--op", type=click.Choice(["hl", "dyadic", "hilbert"]),
              default="hl")
@click.option("--fn", required=True)
@click.option("--beta", default="0", help="dyadic grid shift: 0 or 1/3")
@click.option("--at", "at_points", default=None,
              help="comma-separated evaluation points (exact path)")
@click.option("--grid", default="256,32768")
@click.option("--csv", "csv_path", default=None, type=click.Path())
@click.option("--output", default=None, type=click.Path())
def maximal_cmd(op: str, fn: str, beta: str, at_points: Optional[str],
                grid: str, csv_path: Optional[str],
                output: Optional[str]) -> None:
    """Maximal functions; --at evaluates exactly on the step-function path."""
    try:
        L, N = grid.split(",")
        spec = GridSpec(L=float(L), N=int(N))
        name, _, rest = fn.partition(":")
        if at_points is not None and op in ("hl", "dyadic"):
            xs = [float(v) for v in at_points.split(",")]
            if name.strip().lower() == "rect":
                kv = dict(item.split("=") for item in rest.split(","))
                pc = PiecewiseConstant.from_values(
                    [float(kv["a"]), float(kv["b"])],
                    [abs(float(kv.get("amp", 1.0)))])
            else:
                from .maximal import grid_as_piecewise
                pc = grid_as_piecewise(parse_fn(fn, spec))
            vals = (hl_maximal_at(pc, xs) if op == "hl"
                    else dyadic_maximal_at(pc, beta, xs))
            for v in vals:
                click.echo(f"{v:.12g}")
            if output:
                _emit({"op": op, "fn": fn, "at": xs,
                       "values": [float(v) for v in vals]}, output)
            return
        f = parse_fn(fn, spec)
        if op == "hl":
            m = hl_maximal(f)
        elif op == "dyadic":
            m = dyadic_maximal(f, beta)
        else:
            m = hilbert_maximal(f)
        if csv_path:
            m.to_csv(csv_path)
        _emit({"op": op, "fn": fn, "max": float(np.max(m.values.real)),
               "csv": csv_path}, output)
    except OrlabError as e:
        _fail(e)


@main.command("counterexample")
@click.option("--phi1", required=True)
@click.option("--phi2", required=True)
@click.option("--terms", default=3, type=int)
@click.option("--svg", "svg_path", default=None, type=click.Path())
@click.option("--output", default=None, type=click.Path())
def counterexample_cmd(phi1: str, phi2: str, terms: int,
                       svg_path: Optional[str],
                       output: Optional[str]) -> None:
    """Divergence witness for a failed Dini domination."""
    try:
        rep = build_counterexample(parse_phi(phi1), parse_phi(phi2), terms)
        d = rep.to_dict()
        if svg_path:
            ks = [t["k"] for t in d["terms"]]
            _plot_svg(svg_path, ks, {
                "log10 maximal-modular lower bound":
                    [t["log10:maximal_modular_lower"] for t in d["terms"]],
                "modular partial term": [math.log10(t["modular_term"])
                                         for t in d["terms"]],
            }, "term k", "log10 value")
            d["svg"] = svg_path
        _emit(d, output)
    except OrlabError as e:
        _fail(e)


@main.command("verify")
@click.argument("target", type=click.Choice(
    ["poisson", "measure", "cauchy", "riesz", "maximal", "duality",
     "cayley", "all"]))
@click.option("--phi", default="power:p=2")
@click.option("--fn", default="gauss")
@click.option("--fn2", default=None)
@click.option("--alpha", default=1.0, type=float)
@click.option("--scenario", "scenario_path", default=None, type=click.Path())
@click.option("--svg", "svg_path", default=None, type=click.Path())
@click.option("--output", default=None, type=click.Path())
def verify_cmd(target: str, phi: str, fn: str, fn2: Optional[str],
               alpha: float, scenario_path: Optional[str],
               svg_path: Optional[str], output: Optional[str]) -> None:
    """Run one theorem verification, or `all` for the bundled corpus."""
    try:
        if target == "all":
            _verify_all(output)
            return
        if scenario_path:
            sc = load_scenario(scenario_path)
        else:
            data = {"command": f"verify:{target}", "phi": phi, "fn": fn,
                    "alpha": alpha}
            if fn2:
                data["fn2"] = fn2
            sc = load_scenario(data)
        rep = run_verify(sc)
        if svg_path and target == "poisson":
            heights = rep.config.get("heights") or list(
                HeightLattice().heights)
            spec = _grid_of(sc)
            F = poisson_extend(parse_fn(sc["fn"], spec),
                               HeightLattice(tuple(heights)))
            g = parse_phi(str(sc.get("phi", "power:p=2")))
            norms = [luxemburg_norm(s, g).value for _, s in F.slices()]
            _plot_svg(svg_path, heights, {"slice Luxemburg norm": norms},
                      "height y", "norm")
        _emit(rep.to_dict(), output)
        click.echo(rep.table(), err=True)
        sys.exit(0 if rep.overall else 2)
    except OrlabError as e:
        _fail(e)


def _run_bundled(desc: dict):
    sc = load_scenario({k: v for k, v in desc.items()
                        if k in _SCENARIO_KEYS or k == "command"})
    rep = run_verify(sc)
    return desc["id"], desc["expect"], rep


def _verify_all(output: Optional[str]) -> None:
    descs = bundled_scenarios()
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        results = list(pool.map(_run_bundled, descs))
    results.sort(key=lambda r: r[0])
    rows = []
    suite_ok = True
    for sid, expect, rep in results:
        got = "pass" if rep.overall else "fail"
        ok = got == expect
        suite_ok &= ok
        rows.append({"id": sid, "expected": expect, "got": got,
                     "as_expected": ok, "report": rep.to_dict()})
        click.echo(f"{sid:28s} expected={expect:4s} got={got:4s} "
                   f"{'ok' if ok else 'MISMATCH'}", err=True)
    _emit({"suite": "bundled", "overall": suite_ok, "scenarios": rows},
          output)
    sys.exit(0 if suite_ok else 2)


@main.command("report")
@click.option("--scenario", "scenario_path", required=True,
              type=click.Path(exists=True))
@click.option("--output", default=None, type=click.Path())
def report_cmd(scenario_path: str, output: Optional[str]) -> None:
    """Run any scenario file and emit its JSON report."""
    try:
        sc = load_scenario(scenario_path)
        if sc.command.startswith("verify"):
            rep = run_verify(sc)
            _emit({"scenario": sc.echo(), **rep.to_dict()}, output)
            sys.exit(0 if rep.overall else 2)
        if sc.command == "norm":
            spec = _grid_of(sc)
            res = luxemburg_norm(parse_fn(sc["fn"], spec),
                                 parse_phi(str(sc["phi"])))
            _emit({"scenario": sc.echo(), **res.to_dict()}, output)
            return
        if sc.command == "counterexample":
            rep = build_counterexample(parse_phi(str(sc["phi"])),
                                       parse_phi(str(sc.get("phi2", sc["phi"]))),
                                       int(sc.get("terms", 3)))
            _emit({"scenario": sc.echo(), **rep.to_dict()}, output)
            return
        raise ScenarioError(f"unsupported scenario command {sc.command!r}")
    except OrlabError as e:
        _fail(e)


if __name__ == "__main__":
    main()
