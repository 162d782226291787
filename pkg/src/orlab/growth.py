"""Growth functions (convex Young functions): evaluation, conjugation, indices
and the structural condition checks (doubling, complementary-doubling, Dini
domination, upper/lower type, equivalence).

Families are closed-form where possible; conjugates of non-power families are
returned as sampled tables with monotone log-log interpolation.  Everything
overflow-prone is also available through ``log_eval`` (log of the function at
``exp(u)``), which the asymptotic condition checks use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import (ConjugateUnavailable, DomainError, InconsistentCriteria, NotConvex,
                     NotNFunction, RangeError)

__all__ = [
    "GrowthFunction",
    "IndexReport",
    "ConditionReport",
    "power",
    "powerlog",
    "qoverlog",
    "explike",
    "tlog",
    "sampled",
    "parse_phi",
    "complementary",
    "estimate_indices",
    "check_delta2",
    "check_nabla2",
    "check_dini_domination",
    "check_type_bounds",
    "check_equivalence",
    "default_probe",
]

_FAMILIES = ("power", "powerlog", "qoverlog", "explike", "tlog", "sampled")


def default_probe(t_min: float = 1e-8, t_max: float = 1e8, n: int = 4096) -> np.ndarray:
    """Geometric probe grid used by all inf/sup-over-t>0 estimates."""
    return np.geomspace(t_min, t_max, n)


@dataclass(frozen=True)
class GrowthFunction:
    """A nonnegative nondecreasing function on [0, inf) with Phi(0) = 0.

    ``family`` selects the formula; ``params`` its parameters.  Sampled
    families carry log-log knot tables and interpolate linearly in log-log
    coordinates (monotone by construction).
    """

    family: str
    params: dict = field(default_factory=dict)
    log_knots_t: Optional[np.ndarray] = None
    log_knots_v: Optional[np.ndarray] = None
    label: str = ""

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise DomainError(f"unknown growth family {self.family!r}")
        if self.family == "sampled":
            lt, lv = self.log_knots_t, self.log_knots_v
            if lt is None or lv is None or len(lt) != len(lv) or len(lt) < 2:
                raise DomainError("sampled family needs at least two log-log knots")
            if np.any(np.diff(lt) <= 0) or np.any(np.diff(lv) < 0):
                raise DomainError("sampled knots must be strictly increasing in t, nondecreasing in value")

    # -- evaluation -------------------------------------------------------

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        if np.any(t < 0):
            raise DomainError("growth functions are defined on t >= 0")
        out = self._eval(t)
        return float(out[0]) if scalar else out

    def _eval(self, t: np.ndarray) -> np.ndarray:
        f, p = self.family, self.params
        with np.errstate(over="ignore"):
            if f == "power":
                return p.get("c", 1.0) * t ** p["p"]
            if f == "powerlog":
                return t ** p["p"] * np.log1p(t) ** p["beta"]
            if f == "qoverlog":
                return t ** p["q"] / np.log(math.e + t)
            if f == "explike":
                return np.where(t < 1e-4, 0.5 * t * t * (1 + t / 3.0), np.expm1(t) - t)
            if f == "tlog":
                return t * np.log1p(t)
        # sampled
        out = np.zeros_like(t)
        pos = t > 0
        out[pos] = np.exp(self._log_interp(np.log(t[pos])))
        return out

    def _log_interp(self, u: np.ndarray) -> np.ndarray:
        lt, lv = self.log_knots_t, self.log_knots_v
        # linear continuation with the edge slopes outside the knot range
        out = np.interp(u, lt, lv)
        lo = u < lt[0]
        hi = u > lt[-1]
        if np.any(lo):
            s = (lv[1] - lv[0]) / (lt[1] - lt[0])
            out[lo] = lv[0] + s * (u[lo] - lt[0])
        if np.any(hi):
            s = (lv[-1] - lv[-2]) / (lt[-1] - lt[-2])
            out[hi] = lv[-1] + s * (u[hi] - lt[-1])
        return out

    def log_eval(self, u):
        """log(Phi(exp(u))), stable for |u| far beyond float range of t."""
        u = np.asarray(u, dtype=float)
        scalar = u.ndim == 0
        u = np.atleast_1d(u)
        f, p = self.family, self.params
        if f == "power":
            out = math.log(p.get("c", 1.0)) + p["p"] * u
        elif f == "powerlog":
            out = p["p"] * u + p["beta"] * _log_log1p_exp(u)
        elif f == "qoverlog":
            # log(e + t) = 1 + log1p(t/e)
            out = p["q"] * u - np.log(1.0 + _log1p_exp(u - 1.0))
        elif f == "explike":
            out = np.empty_like(u)
            lo = u < -20.0
            hi = u > 3.4  # t >~ 30: log Phi = t + log1p(-(t+1) e^{-t})
            mid = ~(lo | hi)
            out[lo] = 2.0 * u[lo] - math.log(2.0)
            with np.errstate(over="ignore"):
                t_hi = np.exp(u[hi])
                corr = np.where(t_hi < 700.0, np.log1p(-(np.minimum(t_hi, 700.0) + 1.0) * np.exp(-np.minimum(t_hi, 700.0))), 0.0)
                out[hi] = t_hi + corr
            t_mid = np.exp(u[mid])
            out[mid] = np.log(np.expm1(t_mid) - t_mid)
        elif f == "tlog":
            out = u + _log_log1p_exp(u)
        else:
            out = self._log_interp(u)
        return float(out[0]) if scalar else out

    # -- derivative and inverse ------------------------------------------

    def deriv(self, t):
        t = np.asarray(t, dtype=float)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        f, p = self.family, self.params
        if f == "power":
            out = p.get("c", 1.0) * p["p"] * t ** (p["p"] - 1.0)
        elif f == "powerlog":
            L = np.log1p(t)
            out = p["p"] * t ** (p["p"] - 1.0) * L ** p["beta"]
            out += np.where(t > 0, t ** p["p"] * p["beta"] * L ** (p["beta"] - 1.0) / (1.0 + t), 0.0)
        elif f == "qoverlog":
            le = np.log(math.e + t)
            out = (p["q"] * t ** (p["q"] - 1.0) * le - t ** p["q"] / (math.e + t)) / le**2
        elif f == "explike":
            out = np.expm1(t)
        elif f == "tlog":
            out = np.log1p(t) + t / (1.0 + t)
        else:
            h = np.maximum(t * 1e-6, 1e-300)
            out = (self._eval(t + h) - self._eval(np.maximum(t - h, 0.0))) / (2.0 * h)
        return float(out[0]) if scalar else out

    def inverse(self, s):
        """Phi^{-1}(s) by closed form (power) or monotone bisection in log t."""
        s = np.asarray(s, dtype=float)
        scalar = s.ndim == 0
        s = np.atleast_1d(s)
        if np.any(s < 0):
            raise DomainError("inverse defined for s >= 0")
        if self.family == "power":
            p = self.params
            out = (s / p.get("c", 1.0)) ** (1.0 / p["p"])
        else:
            out = np.array([self._inverse_scalar(float(v)) for v in s])
        return float(out[0]) if scalar else out

    def _inverse_scalar(self, s: float) -> float:
        if s == 0.0:
            return 0.0
        if math.isinf(s):
            return math.inf
        ls = math.log(s)
        lo, hi = -1.0, 1.0
        for _ in range(200):
            if self.log_eval(lo) < ls:
                break
            lo *= 2.0
        for _ in range(200):
            if self.log_eval(hi) > ls:
                break
            hi *= 2.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if self.log_eval(mid) < ls:
                lo = mid
            else:
                hi = mid
            if hi - lo < 1e-13 * max(1.0, abs(hi)):
                break
        return math.exp(0.5 * (lo + hi))

    # -- structure --------------------------------------------------------

    def is_convex_family(self) -> bool:
        f, p = self.family, self.params
        if f == "power":
            return p["p"] >= 1.0
        if f == "powerlog":
            return p["p"] >= 1.0
        if f == "qoverlog":
            return p["q"] > 1.0
        if f in ("explike", "tlog"):
            return True
        return self._secant_slopes_monotone()

    def is_n_function(self) -> bool:
        """Phi(t)/t -> 0 at 0 and -> inf at infinity, by declared family."""
        f, p = self.family, self.params
        if not self.is_convex_family():
            return False
        if f == "power":
            return p["p"] > 1.0
        if f == "powerlog":
            return p["p"] > 1.0 or (p["p"] == 1.0 and p["beta"] > 0)
        if f == "qoverlog":
            return p["q"] > 1.0
        if f in ("explike", "tlog"):
            return True
        # sampled: inspect edge slopes of log Phi vs log t
        lt, lv = self.log_knots_t, self.log_knots_v
        s0 = (lv[1] - lv[0]) / (lt[1] - lt[0])
        s1 = (lv[-1] - lv[-2]) / (lt[-1] - lt[-2])
        return s0 > 1.0 and s1 > 1.0

    def _secant_slopes_monotone(self, probe: Optional[np.ndarray] = None) -> bool:
        t = default_probe(1e-6, 1e6, 512) if probe is None else probe
        with np.errstate(over="ignore"):
            v = self._eval(t)
        ok = np.isfinite(v)  # overflowed top of the range carries no information
        t, v = t[ok], v[ok]
        slopes = np.diff(v) / np.diff(t)
        return bool(np.all(np.diff(slopes) >= -1e-9 * np.maximum(slopes[:-1], 1e-300)))

    def describe(self) -> str:
        if self.label:
            return self.label
        p = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}:{p}" if p else self.family


def _log1p_exp(u: np.ndarray) -> np.ndarray:
    """log1p(exp(u)) without overflow."""
    return np.where(u > 40.0, u, np.log1p(np.exp(np.minimum(u, 40.0))))


def _log_log1p_exp(u: np.ndarray) -> np.ndarray:
    """log(log1p(exp(u))): ~u for u << 0, ~log(u) for u >> 0."""
    out = np.empty_like(u)
    hi = u > 40.0
    lo = u < -40.0
    mid = ~(hi | lo)
    out[hi] = np.log(u[hi])
    out[lo] = u[lo]
    out[mid] = np.log(np.log1p(np.exp(u[mid])))
    return out


# -- constructors and the CLI mini-language -------------------------------


def power(p: float, c: float = 1.0) -> GrowthFunction:
    if p <= 0:
        raise DomainError("power exponent must be positive")
    return GrowthFunction("power", {"p": float(p), "c": float(c)})


def powerlog(p: float, beta: float) -> GrowthFunction:
    return GrowthFunction("powerlog", {"p": float(p), "beta": float(beta)})


def qoverlog(q: float) -> GrowthFunction:
    return GrowthFunction("qoverlog", {"q": float(q)})


def explike() -> GrowthFunction:
    return GrowthFunction("explike")


def tlog() -> GrowthFunction:
    return GrowthFunction("tlog")


def sampled(t_knots: np.ndarray, v_knots: np.ndarray, label: str = "") -> GrowthFunction:
    t = np.asarray(t_knots, dtype=float)
    v = np.asarray(v_knots, dtype=float)
    if np.any(t <= 0) or np.any(v <= 0):
        raise DomainError("sampled knots must be strictly positive")
    return GrowthFunction("sampled", {}, np.log(t), np.log(v), label=label)


def parse_phi(spec: str) -> GrowthFunction:
    """Parse the growth-function mini-language.

    ``power:p=2``, ``power:p=2,c=0.5``, ``powerlog:p=2,beta=1``,
    ``qoverlog:q=2``, ``explike``, ``tlog``, ``sampled:file=knots.txt``.
    """
    name, _, rest = spec.partition(":")
    name = name.strip().lower()
    kv = {}
    if rest:
        for item in rest.split(","):
            k, _, v = item.partition("=")
            if not v:
                raise DomainError(f"bad growth spec fragment {item!r}")
            kv[k.strip()] = v.strip()
    if name == "power":
        return power(float(kv["p"]), float(kv.get("c", 1.0)))
    if name == "powerlog":
        return powerlog(float(kv["p"]), float(kv["beta"]))
    if name == "qoverlog":
        return qoverlog(float(kv["q"]))
    if name == "explike":
        return explike()
    if name == "tlog":
        return tlog()
    if name == "sampled":
        data = np.loadtxt(kv["file"])
        return sampled(data[:, 0], data[:, 1], label=spec)
    raise DomainError(f"unknown growth family {name!r}")


# -- reports ---------------------------------------------------------------


@dataclass(frozen=True)
class IndexReport:
    a_lower: float
    b_upper: float
    argmin_t: float
    argmax_t: float
    probe_range: tuple

    def to_dict(self) -> dict:
        return {
            "a_lower": self.a_lower,
            "b_upper": self.b_upper,
            "argmin_t": self.argmin_t,
            "argmax_t": self.argmax_t,
            "probe_range": list(self.probe_range),
        }


@dataclass(frozen=True)
class ConditionReport:
    satisfied: bool
    constant: Optional[float]
    witness: Optional[float]
    probe_grid: str

    def __post_init__(self):
        # constant accompanies success, witness accompanies failure
        assert self.satisfied == (self.witness is None)
        assert self.satisfied == (self.constant is not None)

    def to_dict(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "constant": self.constant,
            "witness": self.witness,
            "probe_grid": self.probe_grid,
        }


def _trend_bounded(log_ratio: np.ndarray, t_grid: np.ndarray, slack: float = 1.05) -> bool:
    """Classify a ratio sequence over an increasing probe as bounded.

    Bounded means the endpoint value does not exceed ``slack`` times the
    median of the top decade of the probe: a growing ratio keeps climbing
    through the last decade, a bounded one flattens out.
    """
    if not np.all(np.isfinite(log_ratio)):
        return False
    top = t_grid >= t_grid[-1] / 10.0
    if np.count_nonzero(top) < 2:
        top = np.arange(len(t_grid)) >= len(t_grid) - 2
    return bool(log_ratio[-1] <= math.log(slack) + np.median(log_ratio[top]))


def _probe_desc(probe: np.ndarray) -> str:
    return f"geometric[{probe[0]:.3g},{probe[-1]:.3g}]x{len(probe)}"


# -- operations -------------------------------------------------------------


def complementary(phi: GrowthFunction, s_min: float = 1e-8, s_max: float = 1e8,
                  n_knots: int = 16384) -> GrowthFunction:
    """Young conjugate Psi(s) = sup_t {s t - Phi(t)}.

    Closed form for power families; otherwise a sampled table over a
    geometric s-grid, with golden-section refinement of the maximizer.
    The s-range is clipped so the maximizer (where Phi'(t) = s) stays inside
    the linear-arithmetic t-grid; the table extrapolates beyond its knots.
    """
    if phi.family == "power":
        p = phi.params["p"]
        c = phi.params.get("c", 1.0)
        if p > 1.0:
            q = p / (p - 1.0)
            cq = (p - 1.0) / p * (c * p) ** (-1.0 / (p - 1.0))
            return power(q, cq)
    if not phi._secant_slopes_monotone():
        raise NotConvex("conjugate requested for a non-convex probe profile")

    t_lo, t_hi = 1e-12, 1e12
    with np.errstate(over="ignore"):
        d_lo = float(phi.deriv(t_lo * 10.0))
        d_hi = float(phi.deriv(t_hi / 10.0))
    s_min_eff = max(s_min, d_lo) if d_lo > 0 else s_min
    s_max_eff = min(s_max, d_hi) if math.isfinite(d_hi) else s_max
    if not s_min_eff < s_max_eff:
        raise ConjugateUnavailable(f"empty conjugate range for {phi.describe()}")
    s_grid = np.geomspace(s_min_eff, s_max_eff, n_knots)
    t_grid = np.geomspace(t_lo, t_hi, 4096)
    # The supremum of s t - Phi(t) is attained where Phi'(t) = s; the
    # derivative profile is nondecreasing (convexity was checked above), so
    # a binary search brackets every maximizer at once.
    with np.errstate(over="ignore"):
        deriv_t = phi.deriv(t_grid)
    deriv_t = np.maximum.accumulate(np.where(np.isfinite(deriv_t), deriv_t,
                                             np.inf))
    j = np.searchsorted(deriv_t, s_grid)
    if np.any(j >= len(t_grid)):
        bad = s_grid[j >= len(t_grid)][0]
        raise RangeError(f"conjugate supremum diverges at s={bad:.3g}")
    lo = t_grid[np.maximum(j - 1, 0)]
    hi = t_grid[np.minimum(j + 1, len(t_grid) - 1)]
    vals = _golden_max_vec(lambda t: s_grid * t - phi(t), lo, hi)
    vals = np.maximum.accumulate(np.maximum(vals, 1e-300))
    # drop any leading degenerate region where the sup is numerically zero
    keep = vals > 1e-290
    if not np.any(keep):
        raise RangeError("conjugate is numerically zero on the whole s-range")
    return GrowthFunction(
        "sampled", {}, np.log(s_grid[keep]), np.log(vals[keep]),
        label=f"conj({phi.describe()})",
    )


def _golden_max_vec(f, lo: np.ndarray, hi: np.ndarray,
                    iters: int = 60) -> np.ndarray:
    """Golden-section maximum of f applied elementwise to bracket arrays."""
    g = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo.astype(float).copy(), hi.astype(float).copy()
    c = b - g * (b - a)
    d = a + g * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        left = fc >= fd
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        c = b - g * (b - a)
        d = a + g * (b - a)
        fc, fd = f(c), f(d)
    return np.maximum(fc, fd)


def _golden_max(f, lo: float, hi: float, iters: int = 60) -> float:
    g = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - g * (b - a)
    d = a + g * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = f(d)
    return max(fc, fd)


def estimate_indices(phi: GrowthFunction, probe: Optional[np.ndarray] = None) -> IndexReport:
    """Grid extrema of t Phi'(t) / Phi(t) over the probe."""
    t = default_probe() if probe is None else np.asarray(probe, dtype=float)
    u = np.log(t)
    if np.any(~np.isfinite(phi.log_eval(u))):
        raise DomainError("growth function vanishes inside the probe range")
    r = _log_index_ratio(phi, u)
    i, j = int(np.argmin(r)), int(np.argmax(r))
    return IndexReport(float(r[i]), float(r[j]), float(t[i]), float(t[j]),
                       (float(t[0]), float(t[-1])))


def _log_index_ratio(phi: GrowthFunction, u: np.ndarray, du: float = 1e-4) -> np.ndarray:
    """t Phi'(t)/Phi(t) = d log Phi(e^u) / du, overflow-safe."""
    return (phi.log_eval(u + du) - phi.log_eval(u - du)) / (2.0 * du)


def check_delta2(phi: GrowthFunction, probe: Optional[np.ndarray] = None) -> ConditionReport:
    """Doubling: Phi(2t) <= K Phi(t); K is the probe max of the ratio."""
    t = default_probe() if probe is None else np.asarray(probe, dtype=float)
    u = np.log(t)
    log_ratio = phi.log_eval(u + math.log(2.0)) - phi.log_eval(u)
    ok = _trend_bounded(log_ratio, t)
    m = float(np.max(log_ratio))
    if ok and m < 700:
        return ConditionReport(True, math.exp(m), None, _probe_desc(t))
    return ConditionReport(False, None, float(t[int(np.argmax(log_ratio))]), _probe_desc(t))


def _log_dini_integral(phi: GrowthFunction, u_grid: np.ndarray,
                       u_floor: float = math.log(1e-12)) -> np.ndarray:
    """log of I(t) = int_0^t Phi(s)/s^2 ds at t = exp(u_grid).

    Substituting s = e^u turns the integrand into Phi(e^u)/e^u; the grid is
    truncated at ``u_floor`` and the sub-floor remainder is bounded by
    Phi(s0)/s0 (the integrand's antiderivative scale, valid because
    Phi(s)/s is nondecreasing) and added explicitly.
    """
    u = np.linspace(u_floor, float(u_grid[-1]), 8192)
    w = np.exp(np.minimum(phi.log_eval(u) - u, 700.0))
    cum = np.concatenate([[0.0], np.cumsum(0.5 * (w[1:] + w[:-1]) * np.diff(u))])
    remainder = math.exp(min(phi.log_eval(u_floor) - u_floor, 700.0))
    vals = np.interp(u_grid, u, cum) + remainder
    return np.log(np.maximum(vals, 1e-300))


def check_nabla2(phi: GrowthFunction, probe: Optional[np.ndarray] = None) -> ConditionReport:
    """Complementary-doubling check, via two routes that must agree.

    Route 1: the differential index inf t Phi'/Phi must exceed 1, probed in
    log domain far beyond float range so slowly-decaying indices (t log t)
    are classified correctly.  Route 2: boundedness of
    (t/Phi(t)) * int_0^t Phi(s)/s^2 ds.
    """
    if not phi.is_n_function():
        raise NotNFunction(f"{phi.describe()} is not an N-function")
    t = default_probe() if probe is None else np.asarray(probe, dtype=float)
    if np.any(phi(np.clip(t, 0, 1e300)) < 0):
        raise DomainError("negative values on probe")

    # route 1 on a wide log-domain grid: the inf is asymptotic
    u_wide = np.linspace(-700.0, 2000.0, 4096)
    with np.errstate(over="ignore", invalid="ignore"):
        r_wide = _log_index_ratio(phi, u_wide)
    r_wide = r_wide[np.isfinite(r_wide)]  # non-finite means astronomically large
    a_wide = float(np.min(r_wide))
    index_ok = a_wide > 1.0 + 1e-3

    # route 2 on the requested probe
    u = np.log(t)
    log_ratio = u - phi.log_eval(u) + _log_dini_integral(phi, u)
    dini_ok = _trend_bounded(log_ratio, t)

    if index_ok != dini_ok:
        raise InconsistentCriteria(
            f"index criterion ({a_wide:.4f}) and Dini criterion disagree for {phi.describe()}"
        )
    if index_ok:
        return ConditionReport(True, float(np.exp(np.max(log_ratio))), None, _probe_desc(t))
    return ConditionReport(False, None, float(t[int(np.argmax(log_ratio))]), _probe_desc(t))


def check_dini_domination(phi1: GrowthFunction, phi2: GrowthFunction,
                          probe: Optional[np.ndarray] = None) -> ConditionReport:
    """Two-weight Dini bound: int_0^t Phi2(s)/s^2 ds <= C Phi1(t)/t."""
    t = default_probe() if probe is None else np.asarray(probe, dtype=float)
    u = np.log(t)
    log_ratio = u - phi1.log_eval(u) + _log_dini_integral(phi2, u)
    if _trend_bounded(log_ratio, t):
        return ConditionReport(True, float(np.exp(np.max(log_ratio))), None, _probe_desc(t))
    return ConditionReport(False, None, float(t[int(np.argmax(log_ratio))]), _probe_desc(t))


def check_type_bounds(phi: GrowthFunction, exponent: float, kind: str,
                      probe: Optional[np.ndarray] = None) -> ConditionReport:
    """Upper type: Phi(st) <= C t^q Phi(s) for t >= 1 (lower: 0 < t <= 1)."""
    if exponent <= 0:
        raise DomainError("type exponent must be positive")
    if kind not in ("upper", "lower"):
        raise DomainError("kind must be 'upper' or 'lower'")
    s = default_probe(n=256) if probe is None else np.asarray(probe, dtype=float)
    if kind == "upper":
        tt = np.geomspace(1.0, 1e8, 257)
    else:
        tt = np.geomspace(1e-8, 1.0, 257)
    us, ut = np.log(s)[:, None], np.log(tt)[None, :]
    log_ratio = phi.log_eval(us + ut) - exponent * ut - phi.log_eval(us)
    # trend along the t-direction, worst case over s
    axis_profile = np.max(log_ratio, axis=0)
    if kind == "lower":
        axis_profile = axis_profile[::-1]  # extremal t is t -> 0
    if _trend_bounded(axis_profile, tt if kind == 'upper' else 1.0 / tt[::-1]):
        return ConditionReport(True, float(np.exp(np.max(log_ratio))), None, _probe_desc(s))
    i, j = np.unravel_index(int(np.argmax(log_ratio)), log_ratio.shape)
    return ConditionReport(False, None, float(tt[j]), _probe_desc(s))


def check_equivalence(phi1: GrowthFunction, phi2: GrowthFunction,
                      probe: Optional[np.ndarray] = None) -> ConditionReport:
    """Search c >= 1 with c^{-1} Phi1(t/c) <= Phi2(t) <= c Phi1(c t) on the probe.

    The default probe spans far more decades than the constant search can
    absorb (c <= 1e6, probe 1e+-30), so inequivalent growth rates cannot
    hide behind a large constant.
    """
    t = (np.geomspace(1e-30, 1e30, 4096) if probe is None
         else np.asarray(probe, dtype=float))
    u = np.log(t)
    l2 = phi2.log_eval(u)
    for c in np.geomspace(1.0, 1e6, 121):
        lc = math.log(c)
        lower = -lc + phi1.log_eval(u - lc)
        upper = lc + phi1.log_eval(u + lc)
        if np.all(lower <= l2 + 1e-12) and np.all(l2 <= upper + 1e-12):
            return ConditionReport(True, float(c), None, _probe_desc(t))
    gap = np.abs(phi1.log_eval(u) - l2)
    return ConditionReport(False, None, float(t[int(np.argmax(gap))]), _probe_desc(t))
