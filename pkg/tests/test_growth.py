import math

import numpy as np
import pytest

from orlab.errors import DomainError
from orlab.growth import (check_delta2, check_dini_domination, check_equivalence,
                          check_nabla2, check_type_bounds, complementary,
                          estimate_indices, explike, parse_phi, power,
                          powerlog, qoverlog, tlog)


def test_power_eval_and_inverse():
    phi = power(2.0)
    assert phi.log_eval(math.log(3.0)) == pytest.approx(math.log(9.0))
    assert phi.inverse(9.0) == pytest.approx(3.0)


def test_parse_phi_roundtrip():
    for s in ("power:p=2", "power:p=3,c=0.5", "powerlog:p=2,beta=1",
              "qoverlog:q=2", "explike", "tlog"):
        g = parse_phi(s)
        assert np.isfinite(g.log_eval(0.0))
    with pytest.raises(DomainError):
        parse_phi("mystery")


def test_indices_closed_forms():
    # Slowly varying log factors push t Phi'/Phi toward its limit at a rate
    # ~ 1/log t, so the probe must reach very large t for 1e-2 accuracy.
    wide = np.geomspace(1e-12, 1e200, 8192)
    idx = estimate_indices(power(2.0))
    assert idx.a_lower == pytest.approx(2.0, abs=1e-2)
    assert idx.b_upper == pytest.approx(2.0, abs=1e-2)
    idx = estimate_indices(powerlog(2.0, 1.0), probe=wide)
    assert idx.a_lower == pytest.approx(2.0, abs=1e-2)
    assert idx.b_upper == pytest.approx(3.0, abs=1e-2)
    idx = estimate_indices(tlog(), probe=wide)
    assert idx.a_lower == pytest.approx(1.0, abs=1e-2)
    assert idx.b_upper == pytest.approx(2.0, abs=1e-2)


def test_doubling_conditions():
    assert check_delta2(power(2.0)).satisfied
    assert check_nabla2(power(2.0)).satisfied
    assert check_delta2(tlog()).satisfied
    assert not check_nabla2(tlog()).satisfied
    assert not check_delta2(explike()).satisfied


def test_dini_domination_dichotomy():
    assert check_dini_domination(power(2.0), power(2.0)).satisfied
    assert not check_dini_domination(tlog(), tlog()).satisfied


def test_conjugate_of_power_is_power():
    psi = complementary(power(2.0))
    # conjugate of t^2 is s^2/4
    for s in (0.5, 1.0, 4.0, 100.0):
        assert math.exp(psi.log_eval(math.log(s))) == pytest.approx(
            s * s / 4.0, rel=1e-3)


def test_equivalence_and_type_bounds():
    assert check_equivalence(power(2.0), power(2.0, c=3.0)).satisfied
    assert not check_equivalence(power(2.0), power(3.0)).satisfied
    assert check_type_bounds(power(2.0), 2.5, "upper").satisfied
    assert not check_type_bounds(power(3.0), 2.5, "upper").satisfied


def test_qoverlog_is_convex_family_check():
    # q/log families are convex only for large enough q; the check runs
    rep = check_delta2(qoverlog(2.0))
    assert isinstance(rep.satisfied, bool)
