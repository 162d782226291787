"""Uniform grids on [-L, L] and sampled boundary functions.

A :class:`GridFunction` is a complex-valued function sampled on the uniform
grid ``x_j = -L + j*h``, ``h = 2L/N``, together with a declared decay class
used to pick tail-truncation error models in downstream convolutions.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple, Union

import numpy as np

from .errors import ComplexInput, DomainError, NonFinite, SpecMismatch

DECAY_CLASSES = ("compact_support", "rational_decay", "schwartz")

# Decay classes ordered weakest-to-strongest for gating: an operation that
# needs `rational_decay` also accepts the faster-decaying classes.
_DECAY_RANK = {"rational_decay": 0, "compact_support": 1, "schwartz": 2}


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on [-L, L) with N nodes and spacing h = 2L/N."""

    L: float
    N: int

    def __post_init__(self) -> None:
        if self.N < 16:
            raise DomainError(f"grid needs at least 16 points, got {self.N}")
        if self.N & (self.N - 1) != 0:
            raise DomainError(f"grid size must be a power of two, got {self.N}")
        if not (self.L > 0 and math.isfinite(self.L)):
            raise DomainError(f"half-width must be positive and finite, got {self.L}")

    @property
    def h(self) -> float:
        return 2.0 * self.L / self.N

    def nodes(self) -> np.ndarray:
        return -self.L + self.h * np.arange(self.N)

    def to_dict(self) -> dict:
        return {"L": self.L, "N": self.N}


@dataclass(frozen=True)
class GridFunction:
    """Complex samples of a boundary function on a :class:`GridSpec`.

    ``decay_class`` declares how fast the function decays off the grid;
    convolution tail corrections and principal-value quadrature gate on it.
    """

    spec: GridSpec
    values: np.ndarray
    decay_class: str = "rational_decay"
    label: str = ""
    # optional declared tails ((c_left, p_left), (c_right, p_right)) meaning
    # value(x) ~ c |x|^(-p) beyond the grid; overrides the fitted model
    tail_model: Optional[Tuple[Tuple[float, float], Tuple[float, float]]] = None

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=np.complex128)
        if v.shape != (self.spec.N,):
            raise SpecMismatch(
                f"expected {self.spec.N} samples, got shape {v.shape}"
            )
        if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
            raise NonFinite("grid function samples must be finite")
        if self.decay_class not in DECAY_CLASSES:
            raise DomainError(
                f"unknown decay class {self.decay_class!r}; "
                f"expected one of {DECAY_CLASSES}"
            )
        object.__setattr__(self, "values", v)
        if self.decay_class == "compact_support":
            edge = self.spec.N // 10
            outer = np.concatenate([v[:edge], v[-edge:]])
            if np.any(outer != 0):
                raise DomainError(
                    "compact_support functions must vanish on the outer 10% "
                    "of the grid"
                )

    # -- basic queries ------------------------------------------------------

    @property
    def x(self) -> np.ndarray:
        return self.spec.nodes()

    def abs_values(self) -> np.ndarray:
        return np.abs(self.values)

    def real_part(self) -> np.ndarray:
        return self.values.real

    def is_real(self, tol: float = 0.0) -> bool:
        return bool(np.max(np.abs(self.values.imag), initial=0.0) <= tol)

    def require_real(self, what: str) -> np.ndarray:
        if not self.is_real(tol=1e-12 * max(1.0, float(np.max(np.abs(self.values), initial=0.0)))):
            raise ComplexInput(f"{what} requires real-valued input")
        return self.values.real

    def with_values(self, values: np.ndarray, decay_class: Optional[str] = None,
                    label: Optional[str] = None,
                    tail_model=None) -> "GridFunction":
        return GridFunction(
            self.spec,
            np.asarray(values, dtype=np.complex128),
            decay_class if decay_class is not None else self.decay_class,
            label if label is not None else self.label,
            tail_model,
        )

    def decay_at_least(self, needed: str) -> bool:
        return _DECAY_RANK[self.decay_class] >= _DECAY_RANK[needed]

    # -- arithmetic ---------------------------------------------------------

    def _check_same_spec(self, other: "GridFunction") -> None:
        if other.spec != self.spec:
            raise SpecMismatch("grid functions live on different grids")

    def __add__(self, other: "GridFunction") -> "GridFunction":
        self._check_same_spec(other)
        return self.with_values(
            self.values + other.values,
            decay_class=_weaker_decay(self.decay_class, other.decay_class),
            label="",
        )

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        self._check_same_spec(other)
        return self.with_values(
            self.values - other.values,
            decay_class=_weaker_decay(self.decay_class, other.decay_class),
            label="",
        )

    def __mul__(self, c: complex) -> "GridFunction":
        return self.with_values(self.values * c)

    __rmul__ = __mul__

    # -- serialization ------------------------------------------------------

    def to_csv(self, path_or_buf) -> None:
        close = False
        if isinstance(path_or_buf, (str, bytes)):
            fh = open(path_or_buf, "w", newline="")
            close = True
        else:
            fh = path_or_buf
        try:
            w = csv.writer(fh)
            w.writerow(["x", "re", "im"])
            for xj, vj in zip(self.x, self.values):
                w.writerow([repr(float(xj)), repr(float(vj.real)), repr(float(vj.imag))])
        finally:
            if close:
                fh.close()

    @staticmethod
    def from_csv(path_or_buf, decay_class: str = "rational_decay",
                 label: str = "") -> "GridFunction":
        close = False
        if isinstance(path_or_buf, (str, bytes)):
            fh = open(path_or_buf, newline="")
            close = True
        else:
            fh = path_or_buf
        try:
            rd = csv.reader(fh)
            header = next(rd)
            if [c.strip().lower() for c in header] != ["x", "re", "im"]:
                raise SpecMismatch(f"expected header x,re,im, got {header!r}")
            xs, vs = [], []
            for row in rd:
                if not row:
                    continue
                xs.append(float(row[0]))
                vs.append(complex(float(row[1]), float(row[2])))
        finally:
            if close:
                fh.close()
        x = np.asarray(xs)
        n = len(x)
        if n < 2:
            raise SpecMismatch("need at least two rows to infer the grid")
        h = x[1] - x[0]
        if not np.allclose(np.diff(x), h, rtol=0, atol=1e-9 * max(abs(h), 1.0)):
            raise SpecMismatch("grid nodes must be uniformly spaced")
        L = -x[0]
        spec = GridSpec(L=float(L), N=n)
        if not np.allclose(spec.nodes(), x, rtol=0, atol=1e-9 * spec.h):
            raise SpecMismatch("nodes do not match a symmetric uniform grid")
        return GridFunction(spec, np.asarray(vs), decay_class, label)


def tail_fit(f: GridFunction) -> Tuple[Tuple[float, float], Tuple[float, float]]:
    """Power-law tail model ((c_left, p_left), (c_right, p_right)).

    Each side is modeled as value(x) ~ c * |x|^(-p) beyond the grid, fitted
    by log-log least squares on the outer decade of the grid, with the sign
    taken from the edge sample.  Compactly supported and Schwartz-class
    functions return c = 0: their mass beyond the grid is negligible.
    A declared tail_model short-circuits the fit.
    """
    if f.tail_model is not None:
        return f.tail_model
    if f.decay_class in ("compact_support", "schwartz"):
        return (0.0, 1.0), (0.0, 1.0)
    x = f.x
    n_fit = max(f.spec.N // 10, 8)
    out = []
    for side in (0, 1):
        if side == 0:
            xs, vs = -x[:n_fit], f.values[:n_fit].real
        else:
            xs, vs = x[-n_fit:], f.values[-n_fit:].real
        mags = np.abs(vs)
        if np.any(mags == 0) or np.any(xs <= 0):
            out.append((0.0, 1.0))
            continue
        A = np.stack([np.ones_like(xs), -np.log(xs)], axis=1)
        coef, *_ = np.linalg.lstsq(A, np.log(mags), rcond=None)
        logc, p = float(coef[0]), float(coef[1])
        sign = 1.0 if (vs[-1] if side else vs[0]) >= 0 else -1.0
        if p < 0.5:  # not decaying: refuse to extrapolate
            out.append((0.0, 1.0))
        else:
            out.append((sign * math.exp(logc), p))
    return out[0], out[1]


def extended_values(f: GridFunction, pad: int) -> np.ndarray:
    """Samples of f on the grid widened by `pad` nodes per side.

    The extension uses the fitted power-law tail model for real and
    imaginary parts independently; compact/Schwartz tails extend by zero.
    """
    n = f.spec.N
    h = f.spec.h
    ext = np.zeros(n + 2 * pad, dtype=np.complex128)
    ext[pad:pad + n] = f.values
    if f.decay_class != "rational_decay" or pad == 0:
        return ext
    x_left = -(f.spec.L + h * np.arange(pad, 0, -1))
    x_right = f.spec.L + h * np.arange(1, pad + 1)
    for part in ("real", "imag"):
        g = f.with_values(getattr(f.values, part) + 0j,
                          tail_model=f.tail_model if part == "real" else None)
        if not np.any(g.values.real):
            continue
        (cl, pl), (cr, pr) = tail_fit(g)
        tail = np.zeros(n + 2 * pad)
        tail[:pad] = cl * np.abs(x_left) ** (-pl)
        tail[pad + n:] = cr * x_right ** (-pr)
        ext += tail if part == "real" else 1j * tail
    return ext


def quad_tail_product(f: GridFunction, g: GridFunction) -> float:
    """Integral of the modeled tails of Re(f)*Re(g) beyond the grid window.

    Each side contributes c_f c_g T^(1-p_f-p_g)/(p_f+p_g-1) from the fitted
    power-law models; zero whenever either factor has no slow tail.
    """
    T = f.spec.L
    fl, fr = tail_fit(f.with_values(f.values.real + 0j))
    gl, gr = tail_fit(g.with_values(g.values.real + 0j))
    total = 0.0
    for (cf, pf), (cg, pg) in ((fl, gl), (fr, gr)):
        if cf == 0.0 or cg == 0.0:
            continue
        p = pf + pg
        if p <= 1.0 + 1e-9:
            continue  # non-integrable model: leave to the caller's tolerance
        total += cf * cg * T ** (1.0 - p) / (p - 1.0)
    return total


def _weaker_decay(a: str, b: str) -> str:
    """Decay class of a sum: compact only if both are, else the slower rate."""
    if a == b:
        return a
    if "rational_decay" in (a, b):
        return "rational_decay"
    # one compact_support, one schwartz: the sum decays like a Schwartz
    # function but is not compactly supported
    return "schwartz"


# -- standard test-function families ---------------------------------------
#
# Indicators are sampled half-open ([a, b)) so that trapezoid quadrature on
# the grid reproduces their integrals exactly when a, b are grid nodes.


def sample(spec: GridSpec, fn: Callable[[np.ndarray], np.ndarray],
           decay_class: str = "rational_decay", label: str = "") -> GridFunction:
    return GridFunction(spec, np.asarray(fn(spec.nodes()), dtype=np.complex128),
                        decay_class, label)


def gauss(spec: GridSpec, center: float = 0.0, width: float = 1.0,
          amplitude: complex = 1.0) -> GridFunction:
    x = spec.nodes()
    return GridFunction(spec, amplitude * np.exp(-((x - center) / width) ** 2),
                        "schwartz", f"gauss(c={center},w={width})")


def poisson_slice(spec: GridSpec, y: float = 1.0, center: float = 0.0) -> GridFunction:
    """The Poisson kernel P_y(x - center) = (1/pi) y / ((x-center)^2 + y^2)."""
    if y <= 0:
        raise DomainError("height must be positive")
    x = spec.nodes()
    return GridFunction(spec, (y / np.pi) / ((x - center) ** 2 + y ** 2),
                        "rational_decay", f"poisson_slice(y={y},c={center})")


def rect(spec: GridSpec, a: float, b: float, amplitude: complex = 1.0) -> GridFunction:
    """Indicator of the half-open interval [a, b), scaled by amplitude."""
    if not a < b:
        raise DomainError("need a < b")
    x = spec.nodes()
    v = amplitude * ((x >= a) & (x < b)).astype(np.complex128)
    dc = "compact_support" if (a >= -0.9 * spec.L and b <= 0.9 * spec.L - spec.h) \
        else "rational_decay"
    return GridFunction(spec, v, dc, f"rect[{a},{b})")


def tent(spec: GridSpec, center: float = 0.0, half_width: float = 1.0,
         amplitude: complex = 1.0) -> GridFunction:
    x = spec.nodes()
    v = amplitude * np.maximum(0.0, 1.0 - np.abs(x - center) / half_width)
    dc = "compact_support" if (abs(center) + half_width) <= 0.9 * spec.L - spec.h \
        else "rational_decay"
    return GridFunction(spec, v, dc, f"tent(c={center},w={half_width})")


def bump(spec: GridSpec, center: float = 0.0, half_width: float = 1.0,
         amplitude: complex = 1.0) -> GridFunction:
    """Smooth compactly supported bump exp(1 - 1/(1 - u^2)) on |u| < 1."""
    x = spec.nodes()
    u = (x - center) / half_width
    v = np.zeros(spec.N)
    inside = np.abs(u) < 1.0
    v[inside] = np.exp(1.0 - 1.0 / (1.0 - u[inside] ** 2))
    dc = "compact_support" if (abs(center) + half_width) <= 0.9 * spec.L - spec.h \
        else "rational_decay"
    return GridFunction(spec, amplitude * v, dc, f"bump(c={center},w={half_width})")


def constant(spec: GridSpec, value: float = 1.0) -> GridFunction:
    """The constant function, with its level declared as the tail model."""
    v = float(value)
    return GridFunction(spec, np.full(spec.N, v, dtype=np.complex128),
                        "rational_decay", f"const({v})",
                        tail_model=((v, 0.0), (v, 0.0)))


def smooth_rect(spec: GridSpec, a: float, b: float, ramp: float = 0.5,
                amplitude: complex = 1.0) -> GridFunction:
    """Plateau on [a, b] with smooth erf-style edges of scale `ramp`."""
    from scipy.special import erf

    if not a < b:
        raise DomainError("need a < b")
    x = spec.nodes()
    v = 0.5 * (erf((x - a) / ramp) - erf((x - b) / ramp))
    return GridFunction(spec, amplitude * v, "schwartz",
                        f"smooth_rect[{a},{b}],ramp={ramp}")
