"""Shifted dyadic grids, maximal operators, and the Dini-failure example.

Two beta-dyadic grids (beta in {0, 1/3}) suffice to dominate the
Hardy-Littlewood maximal operator with constant 6.  Grid inputs get fast
prefix-sum/window-maximum paths; piecewise-constant inputs get exact paths:
candidate-interval enumeration for pointwise values and a piecewise-linear
sweep for superlevel-set measures.

The example builder turns a failed Dini domination between two growth
functions into an explicit function whose modular stays summable while the
modular of its maximal function grows geometrically; all member quantities
are carried in the log domain because the plateau heights grow like
exp(2 * 4^k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ._kernels import centered_window_max, default_window_sizes, hl_maximal_grid
from .errors import DomainError, GateFailed, NotLocalized, SearchOverflow
from .grids import GridFunction
from .growth import GrowthFunction, check_dini_domination, _log_dini_integral

BETAS = (Fraction(0), Fraction(1, 3))


def _coerce_beta(beta) -> Fraction:
    if isinstance(beta, str):
        beta = Fraction(beta)
    beta = Fraction(beta).limit_denominator(3)
    if beta not in BETAS:
        raise DomainError(f"beta must be 0 or 1/3, got {beta}")
    return beta


@dataclass(frozen=True)
class DyadicInterval:
    """The interval 2^(-j) ([0,1) + k + (-1)^j beta) of the shifted grid."""

    beta: Fraction
    j: int
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", _coerce_beta(self.beta))

    @property
    def shift(self) -> Fraction:
        return self.beta if self.j % 2 == 0 else -self.beta

    @property
    def left(self) -> Fraction:
        return Fraction(self.k + self.shift, 1) / Fraction(2) ** self.j

    @property
    def right(self) -> Fraction:
        return Fraction(self.k + 1 + self.shift, 1) / Fraction(2) ** self.j

    @property
    def length(self) -> Fraction:
        return Fraction(1, 1) / Fraction(2) ** self.j

    def parent(self) -> "DyadicInterval":
        # k' = floor((k + 3 shift)/2): the level j-1 interval containing this
        return DyadicInterval(self.beta, self.j - 1,
                              math.floor(Fraction(self.k + 3 * self.shift, 2)))

    def children(self) -> Tuple["DyadicInterval", "DyadicInterval"]:
        c0 = 2 * self.k + int(3 * self.shift)
        return (DyadicInterval(self.beta, self.j + 1, c0),
                DyadicInterval(self.beta, self.j + 1, c0 + 1))

    def contains_point(self, x) -> bool:
        x = Fraction(x)
        return self.left <= x < self.right

    def contains(self, a, b) -> bool:
        """Whether [a, b) is inside this interval."""
        return self.left <= Fraction(a) and Fraction(b) <= self.right

    @staticmethod
    def containing_point(beta, j: int, x) -> "DyadicInterval":
        beta = _coerce_beta(beta)
        shift = beta if j % 2 == 0 else -beta
        k = math.floor(Fraction(x) * Fraction(2) ** j - shift)
        return DyadicInterval(beta, j, k)

    def to_floats(self) -> Tuple[float, float]:
        return float(self.left), float(self.right)


def dyadic_cover(interval: Tuple[float, float]) -> Tuple[DyadicInterval, float]:
    """Smallest beta-dyadic interval (over both grids) containing [a, b).

    Guaranteed |J| <= 6 |I|; ties prefer beta = 0, then smaller index.
    """
    a, b = Fraction(interval[0]), Fraction(interval[1])
    if not a < b:
        raise DomainError("need a < b")
    j0 = math.floor(-math.log2(float(b - a)))
    while Fraction(2) ** (-j0) < b - a:  # guard against log rounding
        j0 -= 1
    best: Optional[DyadicInterval] = None
    for beta in BETAS:
        for j in range(j0, j0 - 6, -1):
            cand = DyadicInterval.containing_point(beta, j, a)
            if cand.contains(a, b):
                if (best is None or cand.length < best.length
                        or (cand.length == best.length and best.beta != 0
                            and cand.beta == 0)):
                    best = cand
                break
    assert best is not None, "covering lemma guarantees a cover within 6x"
    ratio = float(best.length / (b - a))
    return best, ratio


# -- piecewise-constant functions -------------------------------------------


@dataclass(frozen=True)
class PiecewiseConstant:
    """Nonnegative step function: zero outside the breakpoint hull.

    Plateau levels are stored as log-magnitudes (-inf encodes zero) so that
    the example builder can represent levels far beyond float range.
    Operations that need linear arithmetic (exact maximal evaluation,
    superlevel sweeps) require the levels to be exponentiable.
    """

    breakpoints: Tuple[float, ...]
    log_values: Tuple[float, ...]

    def __post_init__(self) -> None:
        bp = tuple(float(b) for b in self.breakpoints)
        lv = tuple(float(v) for v in self.log_values)
        if len(bp) != len(lv) + 1:
            raise DomainError("need one breakpoint more than plateau values")
        if any(y <= x for x, y in zip(bp, bp[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        if any(math.isnan(v) for v in lv):
            raise DomainError("plateau log-values must not be NaN")
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "log_values", lv)

    @staticmethod
    def from_values(breakpoints: Sequence[float],
                    values: Sequence[float]) -> "PiecewiseConstant":
        if any(v < 0 for v in values):
            raise DomainError("plateau values must be nonnegative")
        return PiecewiseConstant(
            tuple(breakpoints),
            tuple(math.log(v) if v > 0 else -math.inf for v in values),
        )

    @property
    def values(self) -> np.ndarray:
        return np.exp(np.asarray(self.log_values))

    @property
    def hull(self) -> Tuple[float, float]:
        return self.breakpoints[0], self.breakpoints[-1]

    def __call__(self, x: float) -> float:
        bp = self.breakpoints
        if x < bp[0] or x >= bp[-1]:
            return 0.0
        i = int(np.searchsorted(bp, x, side="right")) - 1
        return float(math.exp(self.log_values[i])) if \
            self.log_values[i] > -math.inf else 0.0

    def cumulative_masses(self) -> np.ndarray:
        """Integral of the function from the left hull edge to each breakpoint."""
        widths = np.diff(np.asarray(self.breakpoints))
        return np.concatenate([[0.0], np.cumsum(self.values * widths)])

    def integral(self, a: float, b: float) -> float:
        if b <= a:
            return 0.0
        bp = np.asarray(self.breakpoints)
        lo = np.clip(np.maximum(bp[:-1], a), None, None)
        lo = np.maximum(bp[:-1], a)
        hi = np.minimum(bp[1:], b)
        overlap = np.clip(hi - lo, 0.0, None)
        return float(np.dot(self.values, overlap))

    def total_mass(self) -> float:
        return self.integral(*self.hull)

    def to_grid(self, spec) -> GridFunction:
        x = spec.nodes()
        out = np.zeros(spec.N)
        bp = np.asarray(self.breakpoints)
        idx = np.searchsorted(bp, x, side="right") - 1
        inside = (idx >= 0) & (idx < len(self.log_values))
        vals = self.values
        out[inside] = vals[idx[inside]]
        a, b = self.hull
        dc = "compact_support" if (a >= -0.9 * spec.L and b <= 0.9 * spec.L) \
            else "rational_decay"
        return GridFunction(spec, out + 0j, dc, "piecewise")


def grid_as_piecewise(f: GridFunction) -> PiecewiseConstant:
    """|f| as a step function constant on the length-h cells around nodes."""
    h = f.spec.h
    x = f.x
    bps = np.concatenate([x - h / 2.0, [x[-1] + h / 2.0]])
    vals = f.abs_values()
    # Coalesce runs of equal cells: the exact evaluators cost O(B^2) in the
    # number of pieces, and plateaued inputs collapse to a handful.
    keep = np.concatenate([[True], vals[1:] != vals[:-1]])
    return PiecewiseConstant.from_values(
        np.concatenate([bps[:-1][keep], bps[-1:]]), vals[keep])


# -- exact evaluators for piecewise-constant inputs --------------------------


def hl_maximal_at(f: PiecewiseConstant, xs: Sequence[float]) -> np.ndarray:
    """Exact Hardy-Littlewood maximal values at the given points.

    An optimal averaging interval has each endpoint either at a breakpoint
    of f or at the evaluation point itself: sliding an endpoint across a
    plateau changes the average by a monotone Mobius map, so interior
    endpoints are never strictly optimal.
    """
    bp = np.asarray(f.breakpoints)
    F = f.cumulative_masses()
    vals = f.values
    out = np.empty(len(xs))
    for i, x in enumerate(np.asarray(xs, dtype=float)):
        fx = f(x)
        mass_to_x = f.integral(bp[0], x) if x > bp[0] else 0.0
        lefts = [(b, m) for b, m in zip(bp, F) if b <= x] + [(x, mass_to_x)]
        rights = [(b, m) for b, m in zip(bp, F) if b >= x] + [(x, mass_to_x)]
        best = fx
        for a, Fa in lefts:
            for b, Fb in rights:
                if b > a:
                    best = max(best, (Fb - Fa) / (b - a))
        out[i] = best
    return out


def dyadic_maximal_at(f: PiecewiseConstant, beta,
                      xs: Sequence[float]) -> np.ndarray:
    """Exact beta-grid dyadic maximal values at the given points.

    For each point, the dyadic intervals containing it are walked from the
    one that also contains the whole hull (coarser ones only dilute the
    total mass) down to the first one inside a single plateau (finer ones
    repeat that plateau's value).
    """
    beta = _coerce_beta(beta)
    bp = f.breakpoints
    a_h, b_h = f.hull
    total = f.total_mass()
    out = np.empty(len(xs))
    for i, x in enumerate(np.asarray(xs, dtype=float)):
        if total <= 0.0:
            out[i] = 0.0
            continue
        j0 = math.floor(-math.log2(max(b_h, x) - min(a_h, x) + 1e-300))
        start = DyadicInterval.containing_point(beta, j0, x)
        best = 0.0
        # descend: finer intervals around x until one sits inside a plateau
        cand = start
        while True:
            l, r = cand.to_floats()
            best = max(best, f.integral(l, r) / float(cand.length))
            if not any(l < b < r for b in bp):
                # every finer interval around x sees a constant level
                best = max(best, f(x))
                break
            lc, rc = cand.children()
            cand = lc if lc.contains_point(x) else rc
            if cand.j > 1100:  # breakpoints collide at float resolution
                best = max(best, f(x))
                break
        # ascend: a coarser interval of width w has average at most total/w,
        # so stop once that ceiling falls below the best value found
        cand = start
        while total / (2.0 * float(cand.length)) > best:
            cand = cand.parent()
            l, r = cand.to_floats()
            best = max(best, f.integral(l, r) / float(cand.length))
        out[i] = best
    return out


def hl_superlevel_measure(f: PiecewiseConstant, lam: float) -> float:
    """Exact measure of { M_HL(f) > lam }.

    With G(t) = integral of f up to t minus lam * t, a point x has maximal
    average above lam iff max_{b >= x} G(b) > min_{a <= x} G(a); both
    envelopes are piecewise linear in x, so the set is a finite interval
    union measured segment by segment.
    """
    if lam <= 0:
        raise DomainError("level must be positive")
    bp = np.asarray(f.breakpoints)
    F = f.cumulative_masses()
    G = F - lam * (bp - bp[0])
    n = len(bp)
    suffix_max = np.maximum.accumulate(G[::-1])[::-1]
    prefix_min = np.minimum.accumulate(G)

    total = 0.0
    slopes = f.values - lam
    # interior segments [bp[s], bp[s+1]]
    for s in range(n - 1):
        x0, x1 = bp[s], bp[s + 1]
        g0, g1 = G[s], G[s + 1]
        slope = slopes[s]
        c_r = suffix_max[s + 1]          # best b strictly to the right part
        c_l = prefix_min[s]              # best a to the left part
        # D(x) = max(G(x), c_r) - min(G(x), c_l) > 0 on a sub-union; split
        # the segment at the crossings of G with the two constants
        pts = {x0, x1}
        for c in (c_r, c_l):
            if slope != 0.0:
                t = x0 + (c - g0) / slope
                if x0 < t < x1:
                    pts.add(t)
        pts = sorted(pts)
        for u, v in zip(pts, pts[1:]):
            mid = 0.5 * (u + v)
            gm = g0 + slope * (mid - x0)
            if max(gm, c_r) - min(gm, c_l) > 0.0:
                total += v - u
    # right ray: set extends while G(x) > prior minimum
    g_end, m0 = G[-1], prefix_min[-1]
    if g_end > m0:
        total += (g_end - m0) / lam
    # left ray: G(x) = -lam (x - bp[0]) grows leftwards; set extends while
    # the later maximum exceeds it
    M0 = suffix_max[0]
    if M0 > G[0]:
        total += (M0 - G[0]) / lam
    return total


def dyadic_superlevel_measure(f: PiecewiseConstant, lam: float, beta) -> float:
    """Exact measure of the dyadic superlevel set: sum of stopping intervals."""
    return float(sum(float(iv.length)
                     for iv in stopping_intervals(f, lam, beta)))


def stopping_intervals(f: Union[PiecewiseConstant, GridFunction], lam: float,
                       beta) -> List[DyadicInterval]:
    """Maximal beta-dyadic intervals with average above lam.

    Calderon-Zygmund descent from the dyadic cover of the hull: a child is
    emitted when its average first exceeds lam, so every emitted interval
    has average in (lam, 2 lam] and their union is the dyadic superlevel
    set.  Requires the hull average to be at most lam, which guarantees
    maximal intervals exist.
    """
    if isinstance(f, GridFunction):
        f = grid_as_piecewise(f)
    beta = _coerce_beta(beta)
    if lam <= 0:
        raise DomainError("level must be positive")
    a_h, b_h = f.hull
    total = f.total_mass()
    if total <= 0.0:
        return []
    if total / (b_h - a_h) > lam:
        raise NotLocalized(
            "hull average exceeds the level; no maximal intervals exist"
        )
    log_lam = math.log(lam)
    out: List[DyadicInterval] = []
    stack = _roots_over_hull(a_h, b_h, beta)
    while stack:
        iv = stack.pop()
        l, r = iv.to_floats()
        mass = f.integral(l, r)
        if mass <= 0.0:
            continue
        if mass / float(iv.length) > lam:
            out.append(iv)
            continue
        # descend only where some plateau above the level intersects;
        # otherwise no subinterval can average above it
        touches_high = any(
            v > log_lam
            for v, p, q in zip(f.log_values, f.breakpoints, f.breakpoints[1:])
            if q > l and p < r
        )
        if touches_high:
            stack.extend(iv.children())
    out.sort(key=lambda iv: iv.left)
    return out


def _roots_over_hull(a: float, b: float,
                     beta: Fraction) -> List[DyadicInterval]:
    """Intervals of the beta grid, at width >= b - a, covering [a, b).

    At that level at most two intervals meet the hull; starting the
    Calderon-Zygmund descent there keeps every root average at or below the
    hull average (each root is at least as wide as the hull).
    """
    j0 = math.floor(-math.log2(b - a))
    while float(Fraction(2) ** (-j0)) < b - a:
        j0 -= 1
    roots = [DyadicInterval.containing_point(beta, j0, a)]
    while float(roots[-1].right) < b:
        roots.append(DyadicInterval(beta, j0, roots[-1].k + 1))
    return roots


# -- grid paths --------------------------------------------------------------


def hl_maximal(f: Union[GridFunction, PiecewiseConstant]):
    """Hardy-Littlewood maximal function (supremum over all intervals)."""
    if isinstance(f, PiecewiseConstant):
        return _piecewise_refine(f, lambda xs: hl_maximal_at(f, xs))
    vals = hl_maximal_grid(f.abs_values(), default_window_sizes(f.spec.N))
    return f.with_values(vals + 0j, decay_class="rational_decay",
                         label=f"MHL[{f.label}]" if f.label else "")


def dyadic_maximal(f: Union[GridFunction, PiecewiseConstant], beta):
    """Dyadic maximal function over one shifted grid."""
    beta = _coerce_beta(beta)
    if isinstance(f, PiecewiseConstant):
        return _piecewise_refine(f, lambda xs: dyadic_maximal_at(f, beta, xs))
    spec = f.spec
    a = f.abs_values()
    x = spec.nodes()
    h = spec.h
    out = np.zeros(spec.N)
    j_min = -int(math.log2(4.0 * spec.L))
    j_max = int(round(math.log2(1.0 / h)))
    shift_unit = float(beta)
    for j in range(j_min, j_max + 1):
        width = 2.0 ** (-j)
        shift = shift_unit if j % 2 == 0 else -shift_unit
        m = np.floor(x / width - shift).astype(np.int64)
        m -= m.min()
        sums = np.bincount(m, weights=a) * h
        np.maximum(out, sums[m] / width, out)
    return f.with_values(out + 0j, decay_class="rational_decay",
                         label=f"MD[{f.label}]" if f.label else "")


def _piecewise_refine(f: PiecewiseConstant, evaluate) -> PiecewiseConstant:
    """Approximate a maximal function as a step function on a refined grid.

    Maximal functions of step functions have jumps accumulating at the
    breakpoints, so an exact finite representation does not exist; each
    refined cell carries the exact value at its midpoint.  Pointwise exact
    values are available from the *_at evaluators.
    """
    a, b = f.hull
    span = b - a
    margin = span
    edges = np.unique(np.concatenate([
        np.asarray(f.breakpoints),
        np.linspace(a - margin, b + margin, 257),
    ]))
    mids = 0.5 * (edges[:-1] + edges[1:])
    vals = evaluate(mids)
    return PiecewiseConstant.from_values(edges, np.maximum(vals, 0.0))


def radial_maximal(field) -> GridFunction:
    """sup over lattice heights of |F(x + iy)| at each x."""
    vals = np.max(np.abs(field.values), axis=0)
    return GridFunction(field.spec, vals + 0j, "rational_decay", "Mrad")


def nontangential_maximal(field, alpha: float) -> GridFunction:
    """sup of |F| over the cone |x - t| < alpha y at each boundary point t."""
    if alpha < 0:
        raise DomainError("aperture must be nonnegative")
    h = field.spec.h
    out = np.zeros(field.spec.N)
    for i, y in enumerate(field.lattice.heights):
        m = int(math.floor(alpha * y / h * (1.0 - 1e-12)))
        row = np.abs(field.values[i])
        np.maximum(out, centered_window_max(row, m), out)
    return GridFunction(field.spec, out + 0j, "rational_decay",
                        f"Mntg(alpha={alpha})")


# -- the Dini-failure example -------------------------------------------------


@dataclass(frozen=True)
class CounterexampleTerm:
    k: int
    log_t: float          # log t_k
    log_level: float      # log(2^k t_k), the plateau height
    log_a: float          # log a_k, the left endpoint
    log_length: float     # log |I_k|
    modular_term: float   # contribution of f_k to the Phi_1 modular: 2^-k
    log_maximal_lower: float  # log of the Phi_2 modular bound for M_HL(12 f_k)


@dataclass(frozen=True)
class CounterexampleReport:
    phi1: str
    phi2: str
    terms: Tuple[CounterexampleTerm, ...]
    ratio_trend: Tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "phi1": self.phi1,
            "phi2": self.phi2,
            "terms": [
                {
                    "k": t.k,
                    "log10:t": t.log_t / math.log(10),
                    "log10:level": t.log_level / math.log(10),
                    "log10:a": t.log_a / math.log(10),
                    "log10:interval_length": t.log_length / math.log(10),
                    "modular_term": t.modular_term,
                    "log10:maximal_modular_lower": t.log_maximal_lower / math.log(10),
                }
                for t in self.terms
            ],
            "maximal_lower_ratios": list(self.ratio_trend),
            "modular_partial_sum": sum(t.modular_term for t in self.terms),
        }


_LOG_T_CAP = 1.0e6


def _log_dini_to(phi: GrowthFunction, log_upper: float) -> float:
    """log of integral_0^T phi(s)/s^2 ds at T = exp(log_upper)."""
    grid = np.linspace(min(math.log(1e-12), log_upper - 60.0), log_upper, 4096)
    return float(_log_dini_integral(phi, grid)[-1])


def find_term_scale(phi1: GrowthFunction, phi2: GrowthFunction,
                    k: int) -> float:
    """log t_k with t_k integral_0^{T} phi2'(s)/s ds = 2^k phi1(T), T = 2^k t_k.

    The left side is the weak-type modular lower bound for the plateau at
    level T of length 1/(2^k phi1(T)); solving for equality makes the bound
    of term k exactly 2^k, so consecutive terms grow by exactly a factor 2.
    Doubling search in log t followed by bisection; everything stays in the
    log domain because admissible scales grow like exp(2 * 4^k) for the
    t log(1+t) family.
    """
    kln2 = k * math.log(2.0)

    def deficit(log_t: float) -> float:
        # log of the modular lower bound, minus the target k log 2.
        level = kln2 + log_t
        log_int = float(np.logaddexp(phi2.log_eval(level) - level,
                                     _log_dini_to(phi2, level)))
        return (log_t - phi1.log_eval(level) + log_int) - kln2

    lo, hi = 0.0, 8.0
    if deficit(lo) >= 0.0:
        # The bound already exceeds the target at t = 1; bracket downward.
        hi, lo = lo, -8.0
        while deficit(lo) >= 0.0:
            hi, lo = lo, lo * 2.0
            if lo < -_LOG_T_CAP:
                raise SearchOverflow(
                    f"term {k}: admissible scale exceeds the log-domain cap"
                )
    else:
        while deficit(hi) < 0.0:
            lo, hi = hi, hi * 2.0
            if hi > _LOG_T_CAP:
                raise SearchOverflow(
                    f"term {k}: admissible scale exceeds the log-domain cap"
                )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if deficit(mid) >= 0.0:
            hi = mid
        else:
            lo = mid
    return hi


def build_counterexample(phi1: GrowthFunction, phi2: GrowthFunction,
                         terms: int = 3) -> CounterexampleReport:
    """Construct the divergence witness for a failed Dini domination.

    Plateau k (k = 1..terms) has height 2^k t_k on an interval of length
    1/(2^k phi1(2^k t_k)); its Phi_1 modular contribution is exactly 2^-k,
    so the partial sums stay below 1, while the layer-cake/weak-type chain
    bounds the Phi_2 modular of M_HL(12 f_k) from below by
    2^k t_k |I_k| integral_0^{2^k t_k} phi2'(s)/s ds = 2^k, which doubles
    from term to term.
    """
    gate = check_dini_domination(phi1, phi2)
    if gate.satisfied:
        raise GateFailed(
            "Dini domination holds between these growth functions; "
            "the divergence example requires it to fail"
        )
    recs = []
    log_a = -math.inf  # a_0 = 0
    a_lin = 0.0
    for k in range(1, terms + 1):
        log_t = find_term_scale(phi1, phi2, k)
        kln2 = k * math.log(2.0)
        log_level = kln2 + log_t
        log_phi1 = phi1.log_eval(log_level)
        log_len = -(kln2 + log_phi1)
        # lower bound via integral_0^level phi2'(s)/s ds
        #   = phi2(level)/level + integral phi2(s)/s^2 ds
        log_int = float(np.logaddexp(phi2.log_eval(log_level) - log_level,
                                     _log_dini_to(phi2, log_level)))
        log_lower = log_level + log_len + log_int
        log_a = math.log(a_lin) if a_lin > 0.0 else -math.inf
        recs.append(CounterexampleTerm(
            k=k,
            log_t=log_t,
            log_level=log_level,
            log_a=log_a,
            log_length=log_len,
            modular_term=2.0 ** (-k),
            log_maximal_lower=log_lower,
        ))
        a_lin += math.exp(log_len) if log_len > -745.0 else 0.0
    ratios = tuple(
        math.exp(b.log_maximal_lower - a.log_maximal_lower)
        for a, b in zip(recs, recs[1:])
    )
    return CounterexampleReport(
        phi1=phi1.describe(), phi2=phi2.describe(),
        terms=tuple(recs), ratio_trend=ratios,
    )


def counterexample_prefix(report: CounterexampleReport,
                          upto: int = 1) -> PiecewiseConstant:
    """The partial sum sum_{k<=upto} 12 f_k as an explicit step function.

    Only the first couple of terms are float-representable; deeper plateaus
    live at exp(2 * 4^k) and exist only inside the log-domain report.
    """
    bps = [0.0]
    vals = []
    for t in report.terms:
        if t.k > upto:
            break
        length = math.exp(t.log_length)
        level = 12.0 * math.exp(t.log_level)
        if (not (math.isfinite(length) and math.isfinite(level) and length > 0)
                or bps[-1] + length == bps[-1]):
            raise DomainError(
                f"term {t.k} is not representable in linear arithmetic"
            )
        bps.append(bps[-1] + length)
        vals.append(level)
    return PiecewiseConstant.from_values(bps, vals)
