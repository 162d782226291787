"""Poisson, conjugate Poisson, and Cauchy extensions to the upper half-plane.

Convolutions use cell-integrated kernel weights: the weight of the sample at
distance d*h is the exact integral of the kernel over the length-h cell
centered there.  This keeps the Poisson weights summing to (almost) exactly
one even when the height is below the grid spacing, where point sampling
would alias the kernel peak.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.signal import fftconvolve

from .errors import DomainError, NonFinite, SpecMismatch
from .grids import GridFunction, GridSpec, extended_values

KINDS = ("poisson", "conjugate", "cauchy", "measure")


class DivergenceFlag:
    """Returned by j_alpha when the defining integral diverges."""

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "DivergenceFlag()"

    def __eq__(self, other) -> bool:
        return isinstance(other, DivergenceFlag)

    def __hash__(self) -> int:
        return hash("DivergenceFlag")


DIVERGENT = DivergenceFlag()


@dataclass(frozen=True)
class HeightLattice:
    """Strictly decreasing positive heights discretizing y > 0."""

    heights: Tuple[float, ...] = tuple(2.0 ** -k for k in range(9))

    def __post_init__(self) -> None:
        h = tuple(float(v) for v in self.heights)
        if len(h) == 0 or any(v <= 0 for v in h):
            raise DomainError("heights must be positive")
        if any(b >= a for a, b in zip(h, h[1:])):
            raise DomainError("heights must be strictly decreasing")
        object.__setattr__(self, "heights", h)

    @staticmethod
    def dyadic(max_exp: int = 0, min_exp: int = -8) -> "HeightLattice":
        if max_exp < min_exp:
            raise DomainError("need max_exp >= min_exp")
        return HeightLattice(tuple(2.0 ** k for k in range(max_exp, min_exp - 1, -1)))

    def __len__(self) -> int:
        return len(self.heights)


@dataclass(frozen=True)
class HalfPlaneField:
    """Samples of a half-plane function on grid x lattice."""

    spec: GridSpec
    lattice: HeightLattice
    values: np.ndarray
    kind: str
    tail_residuals: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=np.complex128)
        if v.shape != (len(self.lattice), self.spec.N):
            raise SpecMismatch(
                f"expected values of shape {(len(self.lattice), self.spec.N)}, "
                f"got {v.shape}"
            )
        if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
            raise NonFinite("field values must be finite")
        if self.kind not in KINDS:
            raise DomainError(f"unknown field kind {self.kind!r}")
        object.__setattr__(self, "values", v)

    def slice_at(self, y: float) -> GridFunction:
        try:
            i = self.lattice.heights.index(float(y))
        except ValueError:
            raise DomainError(f"height {y} is not on the lattice") from None
        return GridFunction(self.spec, self.values[i], "rational_decay",
                            label=f"slice(y={y})")

    def slices(self):
        for y in self.lattice.heights:
            yield y, self.slice_at(y)

    def abs_max(self) -> float:
        return float(np.max(np.abs(self.values)))

    def to_csv(self, path_or_buf) -> None:
        close = False
        if isinstance(path_or_buf, (str, bytes)):
            fh = open(path_or_buf, "w", newline="")
            close = True
        else:
            fh = path_or_buf
        try:
            w = csv.writer(fh)
            w.writerow(["y", "x", "re", "im"])
            x = self.spec.nodes()
            for i, y in enumerate(self.lattice.heights):
                for j in range(self.spec.N):
                    v = self.values[i, j]
                    w.writerow([repr(float(y)), repr(float(x[j])),
                                repr(float(v.real)), repr(float(v.imag))])
        finally:
            if close:
                fh.close()


@dataclass(frozen=True)
class RadonMeasure:
    """Finite atomic part plus an optional density on a grid."""

    atoms: Tuple[Tuple[float, float], ...] = ()
    density: Optional[GridFunction] = None

    def __post_init__(self) -> None:
        atoms = tuple((float(a), float(w)) for a, w in self.atoms)
        if any(not (math.isfinite(a) and math.isfinite(w)) for a, w in atoms):
            raise NonFinite("atoms must be finite")
        object.__setattr__(self, "atoms", atoms)

    @property
    def total_variation(self) -> float:
        tv = sum(abs(w) for _, w in self.atoms)
        if self.density is not None:
            from .norms import quad

            tv += quad(self.density, self.density.abs_values())
        return tv

    @property
    def poisson_integrable_mass(self) -> float:
        """The integral of 1/(1+t^2) against |mu|; finite by construction."""
        m = sum(abs(w) / (1.0 + a * a) for a, w in self.atoms)
        if self.density is not None:
            from .norms import quad

            t = self.density.x
            m += quad(self.density, self.density.abs_values() / (1.0 + t * t))
        return m


# -- kernels ---------------------------------------------------------------


def kernel_eval(kind: str, y: float, x: float, t: float) -> complex:
    """Pointwise kernel value: P_y(x-t), Q_y(x-t) or the Cauchy kernel."""
    if y <= 0:
        raise DomainError("height must be positive")
    u = x - t
    if kind == "poisson":
        return complex(y / (math.pi * (u * u + y * y)))
    if kind == "conjugate":
        return complex(u / (math.pi * (u * u + y * y)))
    if kind == "cauchy":
        return 1.0 / (1j * math.pi) * 1.0 / complex(t - x, -y)
    raise DomainError(f"unknown kernel kind {kind!r}")


def j_alpha(alpha: float, y: float):
    """The kernel moment y^(1-alpha) * integral du/(sqrt(u)(1+u)^(alpha/2)).

    Diverges for alpha <= 1 (returns DIVERGENT); computed by quadrature
    after the substitution u = tan^2(theta), which maps the integral to
    2 * integral of cos^(alpha-2) over a quarter period.
    """
    if y <= 0:
        raise DomainError("height must be positive")
    if alpha <= 1.0:
        return DIVERGENT
    from scipy.integrate import quad as squad

    val, _err = squad(lambda th: 2.0 * math.cos(th) ** (alpha - 2.0),
                      0.0, math.pi / 2.0)
    return y ** (1.0 - alpha) * val


def _cell_weights(kind: str, y: float, h: float, n_half: int) -> np.ndarray:
    """Exact kernel integrals over cells [dh - h/2, dh + h/2], d=-n..n."""
    d = np.arange(-n_half, n_half + 1)
    hi = (d + 0.5) * h
    lo = (d - 0.5) * h
    if kind == "poisson":
        return (np.arctan(hi / y) - np.arctan(lo / y)) / math.pi
    if kind == "conjugate":
        return np.log((hi * hi + y * y) / (lo * lo + y * y)) / (2.0 * math.pi)
    raise DomainError(f"no cell weights for kind {kind!r}")


def _level_tail_correction(f: GridFunction, kind: str, y: float,
                           T: float) -> Optional[np.ndarray]:
    """Closed-form kernel mass against constant-level tails beyond |t| = T.

    Only applies when the declared/fitted tail model is a level (exponent
    near zero), e.g. for the constant function; decaying tails beyond the
    doubled window are below the working tolerances.
    """
    from .grids import tail_fit

    (cl, pl), (cr, pr) = tail_fit(f)
    if not ((cl != 0.0 and pl < 0.25) or (cr != 0.0 and pr < 0.25)):
        return None
    x = f.spec.nodes()
    if kind == "poisson":
        corr = np.zeros(f.spec.N)
        if cr != 0.0 and pr < 0.25:
            corr += cr * (0.5 - np.arctan((T - x) / y) / math.pi)
        if cl != 0.0 and pl < 0.25:
            corr += cl * (0.5 - np.arctan((T + x) / y) / math.pi)
        return corr
    # conjugate kernel: one-sided level tails diverge; only the symmetric
    # combination is integrable
    if abs(cl - cr) > 1e-9 * max(abs(cl), abs(cr), 1.0):
        raise DomainError(
            "conjugate extension needs matching tail levels on both sides"
        )
    c = 0.5 * (cl + cr)
    return c / (2.0 * math.pi) * np.log(
        ((T + x) ** 2 + y * y) / ((T - x) ** 2 + y * y)
    )


def _convolve_height(f: GridFunction, ext: np.ndarray, kind: str,
                     y: float) -> Tuple[np.ndarray, float]:
    n = f.spec.N
    h = f.spec.h
    w = _cell_weights(kind, y, h, n)
    out = fftconvolve(ext.real, w, mode="valid")
    if np.any(ext.imag):
        out = out + 1j * fftconvolve(ext.imag, w, mode="valid")
    T = f.spec.L + n * h
    corr = _level_tail_correction(f, kind, y, T)
    if corr is not None:
        out = out + corr
        return out, 0.0
    # residual: kernel mass beyond the extended window times the edge level
    if kind == "poisson":
        tail_mass = 1.0 - 2.0 * math.atan(T / y) / math.pi
    else:
        tail_mass = 2.0 * y / (math.pi * T)  # |Q_y| ~ 1/(pi u) tail envelope
    edge = float(max(abs(ext[0]), abs(ext[-1])))
    return out, tail_mass * edge


def _extend(f: GridFunction, lattice: HeightLattice, kind: str) -> HalfPlaneField:
    ext = extended_values(f, f.spec.N)
    rows, resid = [], []
    real_in = f.is_real(tol=0.0)
    for y in lattice.heights:
        row, r = _convolve_height(f, ext, kind, y)
        if real_in and kind == "poisson":
            row = row.real + 0j
        rows.append(row)
        resid.append(r)
    return HalfPlaneField(f.spec, lattice, np.stack(rows), kind, tuple(resid))


def poisson_extend(f: GridFunction,
                   lattice: Optional[HeightLattice] = None) -> HalfPlaneField:
    """U_f: the Poisson integral of f on grid x lattice."""
    return _extend(f, lattice or HeightLattice(), "poisson")


def conjugate_extend(f: GridFunction,
                     lattice: Optional[HeightLattice] = None) -> HalfPlaneField:
    """V_f: the conjugate Poisson integral of f."""
    return _extend(f, lattice or HeightLattice(), "conjugate")


def cauchy_transform(f: GridFunction,
                     lattice: Optional[HeightLattice] = None) -> HalfPlaneField:
    """S(f) = U_f + i V_f, the Cauchy integral against (1/(i pi))/(t - z)."""
    lattice = lattice or HeightLattice()
    u = poisson_extend(f, lattice)
    v = conjugate_extend(f, lattice)
    return HalfPlaneField(f.spec, lattice, u.values + 1j * v.values, "cauchy",
                          tuple(a + b for a, b in
                                zip(u.tail_residuals, v.tail_residuals)))


def poisson_extend_measure(mu: RadonMeasure,
                           lattice: Optional[HeightLattice] = None,
                           spec: Optional[GridSpec] = None) -> HalfPlaneField:
    """Poisson integral of an atoms-plus-density measure.

    Atom contributions are closed-form kernel evaluations; the density part
    goes through the grid convolution.
    """
    lattice = lattice or HeightLattice()
    if spec is None:
        if mu.density is None:
            raise DomainError("need a grid spec when the measure has no density")
        spec = mu.density.spec
    x = spec.nodes()
    rows = np.zeros((len(lattice), spec.N), dtype=np.complex128)
    resid: Tuple[float, ...] = (0.0,) * len(lattice)
    # atoms enter as the cell-averaged kernel so that heights below the grid
    # step still pair correctly under trapezoid quadrature
    half = spec.h / 2.0
    for i, y in enumerate(lattice.heights):
        for loc, wgt in mu.atoms:
            d = x - loc
            rows[i] += (wgt / (math.pi * spec.h)
                        * (np.arctan((d + half) / y) - np.arctan((d - half) / y)))
    if mu.density is not None:
        if mu.density.spec != spec:
            raise SpecMismatch("density grid does not match the field grid")
        dens = poisson_extend(mu.density, lattice)
        rows += dens.values
        resid = dens.tail_residuals
    return HalfPlaneField(spec, lattice, rows, "measure", resid)


# -- slow direct-quadrature oracles -----------------------------------------


def extend_direct(f: GridFunction, kind: str, y: float,
                  xs: Optional[np.ndarray] = None) -> np.ndarray:
    """O(N * len(xs)) point-sampled trapezoid quadrature, for cross-checks."""
    if xs is None:
        xs = f.spec.nodes()
    t = f.spec.nodes()
    h = f.spec.h
    w = np.full(f.spec.N, h)
    w[0] = w[-1] = h / 2.0
    out = np.empty(len(xs), dtype=np.complex128)
    for i, xv in enumerate(np.asarray(xs, dtype=float)):
        u = xv - t
        if kind == "poisson":
            k = (y / math.pi) / (u * u + y * y)
        elif kind == "conjugate":
            k = (u / math.pi) / (u * u + y * y)
        elif kind == "cauchy":
            k = 1.0 / (1j * math.pi) / (t - complex(xv, y))
        else:
            raise DomainError(f"unknown kernel kind {kind!r}")
        out[i] = np.sum(w * k * f.values)
    return out


def cauchy_integral(f: GridFunction, z: complex, conjugate: bool = False) -> complex:
    """(1/(i pi)) integral f(t)/(t - z) dt, or against the reflected pole z-bar.

    The reflected-pole integral vanishes exactly on boundary values of
    analytic extensions; its magnitude is the membership residual.
    """
    t = f.spec.nodes()
    h = f.spec.h
    w = np.full(f.spec.N, h)
    w[0] = w[-1] = h / 2.0
    pole = complex(z).conjugate() if conjugate else complex(z)
    return complex(np.sum(w * f.values / (t - pole)) / (1j * math.pi))
