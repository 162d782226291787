import math

import numpy as np
import pytest

from orlab.grids import gauss
from orlab.growth import power, powerlog, tlog
from orlab.verify import (bundled_scenarios, default_spec, field_norm,
                          verify_cauchy_representation, verify_duality,
                          verify_maximal_equivalences,
                          verify_poisson_representation,
                          verify_riesz_projection)
from orlab.halfplane import poisson_extend
from orlab.norms import luxemburg_norm


def test_poisson_report_structure(spec):
    f = gauss(spec)
    rep = verify_poisson_representation(f, power(2.0))
    assert rep.overall
    d = rep.to_dict()
    assert d["theorem"] == rep.theorem
    assert all(set(c) >= {"name", "pass", "lhs", "rhs"} for c in d["checks"])
    assert isinstance(rep.table(), str) and rep.table()


def test_poisson_negative_on_tight_tolerance(spec):
    f = gauss(spec)
    rep = verify_poisson_representation(
        f, power(2.0), cfg={"tolerances": {"isometry_rel": 1e-14}})
    assert not rep.overall


def test_field_norm_matches_boundary(spec):
    f = gauss(spec)
    phi = power(2.0)
    F = poisson_extend(f)
    nf = luxemburg_norm(f, phi).value
    nF = field_norm(F, phi)
    assert nF <= nf * (1.0 + 1e-6)
    assert nF >= 0.8 * nf


def test_riesz_degenerate_family_reports_failure(spec):
    # A family without the lower doubling property cannot support the
    # projection bound; the report must fail and carry divergence evidence.
    rep = verify_riesz_projection(gauss(spec), tlog())
    assert not rep.overall
    d = rep.to_dict()
    assert "divergence_ratios" in d.get("config", {}) or any(
        not c["passed"] for c in d["checks"])


def test_maximal_chain_passes(spec):
    rep = verify_maximal_equivalences(gauss(spec), power(2.0), alpha=1.0)
    assert rep.overall


def test_duality_pass_and_tight_negative(spec):
    f = gauss(spec)
    g = gauss(spec, 0.5, 1.5)
    assert verify_duality(f, g, power(2.0)).overall
    rep = verify_duality(f, g, power(2.0),
                         cfg={"tolerances": {"pairing_rel": 1e-15}})
    assert not rep.overall


def test_cauchy_real_function_is_not_analytic(spec):
    # A real, non-constant boundary function is not the trace of an
    # analytic extension; treating it as one must fail the membership test.
    rep = verify_cauchy_representation(gauss(spec), power(2.0),
                                       analytic_input=True)
    assert not rep.overall


def test_bundled_scenarios_shape():
    scen = bundled_scenarios()
    assert len(scen) >= 14
    ids = [s["id"] for s in scen]
    assert len(set(ids)) == len(ids)
    assert all(s["expect"] in ("pass", "fail") for s in scen)
    assert sum(1 for s in scen if s["expect"] == "fail") >= 7
