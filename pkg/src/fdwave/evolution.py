"""Evolution of general initial/boundary data for the fractional equation.

Two independent routes to the same field:

* convolution with the fundamental solutions (`solve_cauchy_convolution`,
  `solve_signalling_convolution`), and
* a direct explicit time-marching scheme for the equivalent
  integro-differential form  w = w(0+) + a J^beta (w_xx)
  (`solve_direct_scheme`), with product-trapezoidal memory weights.

Agreement between the two is the package's strongest self-check, since they
share no code beyond the Gamma function.

Initial velocity is fixed to zero for 1 < beta <= 2 (the variant with
nonzero velocity is intentionally not exposed: continuity in beta across
the diffusion/wave boundary requires it to vanish).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._dispatch import direct_march
from .errors import DomainTruncation, InvalidParams, Unstable
from .green import (
    GreenSpec,
    Kind,
    green_cauchy_profile,
    green_signalling_signal,
)

__all__ = [
    "Grid1D",
    "ProblemData",
    "Field2D",
    "solve_cauchy_convolution",
    "solve_signalling_convolution",
    "solve_direct_scheme",
    "stable_dt",
]

_EDGE_TOL = 1e-8


@dataclass(frozen=True)
class Grid1D:
    """Uniform spatial grid [x_min, x_max] with nx nodes, plus output times."""

    x_min: float
    x_max: float
    nx: int
    t_values: np.ndarray

    def __post_init__(self) -> None:
        if not (
            math.isfinite(self.x_min)
            and math.isfinite(self.x_max)
            and self.x_min < self.x_max
        ):
            raise InvalidParams(f"need x_min < x_max, got [{self.x_min}, {self.x_max}]")
        if int(self.nx) < 3:
            raise InvalidParams(f"nx must be >= 3, got {self.nx}")
        t = np.asarray(self.t_values, dtype=float)
        if t.ndim != 1 or t.size == 0:
            raise InvalidParams("t_values must be a non-empty 1-d array")
        if not (np.all(t > 0.0) and np.all(np.diff(t) > 0.0)):
            raise InvalidParams("t_values must be strictly increasing and positive")
        t.flags.writeable = False
        object.__setattr__(self, "nx", int(self.nx))
        object.__setattr__(self, "t_values", t)

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.nx - 1)

    def x_nodes(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.nx)

    def uniform_dt(self) -> float:
        """Time step when t_values is the uniform ladder dt, 2dt, ...; else error."""
        t = self.t_values
        dt = float(t[0])
        k = np.round(t / dt)
        if not np.allclose(t, k * dt, rtol=1e-12, atol=0.0) or not np.array_equal(
            k, np.arange(1, t.size + 1)
        ):
            raise InvalidParams(
                "this operation needs t_values = dt, 2dt, ..., nt*dt (uniform ladder)"
            )
        return dt


@dataclass(frozen=True)
class ProblemData:
    """Input data: initial profile f(x) (Cauchy) or boundary signal h(t)
    (Signalling, with identically zero initial state).

    ``impulse=True`` marks the data as a unit Dirac delta — at node
    ``impulse_index`` for Cauchy, at t = 0 for Signalling — in which case
    ``samples`` is ignored and the solvers return the exact kernel response
    instead of quadrature against a discrete spike.
    """

    kind: Kind
    samples: Optional[np.ndarray] = None
    impulse: bool = False
    impulse_index: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.kind, Kind):
            raise InvalidParams(f"kind must be a Kind, got {self.kind!r}")
        if self.impulse:
            if self.kind is Kind.SIGNALLING and self.impulse_index != 0:
                raise InvalidParams("a Signalling impulse must sit at t = 0")
            return
        if self.samples is None:
            raise InvalidParams("samples are required unless impulse=True")
        arr = np.asarray(self.samples, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise InvalidParams("samples must be a 1-d array with >= 2 entries")
        if not np.all(np.isfinite(arr)):
            raise InvalidParams("samples contain non-finite entries")
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)


@dataclass(frozen=True)
class Field2D:
    """Solution field w[i_t, i_x] on the grid nodes."""

    x: np.ndarray
    t: np.ndarray
    values: np.ndarray

    def mass(self) -> np.ndarray:
        """Trapezoid ∫ w dx at every output time."""
        return np.trapezoid(self.values, x=self.x, axis=1)


def _warn_edges(arr: np.ndarray, dx: float, what: str) -> None:
    scale = max(float(np.max(np.abs(arr))), 1e-300) * dx
    edge = (abs(float(arr[0])) + abs(float(arr[-1]))) * dx
    if edge > _EDGE_TOL * max(1.0, scale):
        warnings.warn(
            f"{what} mass at the domain edge is {edge:.3e}; "
            "the truncated-window answer ignores everything outside",
            DomainTruncation,
            stacklevel=3,
        )


def solve_cauchy_convolution(
    spec: GreenSpec, f: ProblemData, grid: Grid1D
) -> Field2D:
    """w(x,t) = ∫ G_c(x-xi, t) f(xi) dxi on the grid (trapezoid in xi).

    The kernel is evaluated once per output time on the offset grid
    (i-j)*dx and applied by discrete convolution, so the cost is
    O(nt * nx log? nx) kernel evaluations -> O(nt * nx) plus O(nt * nx^2)
    multiply-adds.
    """
    if spec.kind is not Kind.CAUCHY:
        raise InvalidParams("spec.kind must be CAUCHY")
    if f.kind is not Kind.CAUCHY:
        raise InvalidParams("data kind must be CAUCHY")
    x = grid.x_nodes()
    t_out = grid.t_values
    nx = grid.nx
    dx = grid.dx

    if f.impulse:
        if not 0 <= f.impulse_index < nx:
            raise InvalidParams("impulse_index outside the grid")
        x0 = x[f.impulse_index]
        vals = np.empty((t_out.size, nx))
        for k, t in enumerate(t_out):
            vals[k] = green_cauchy_profile(spec, np.abs(x - x0), t)
        return Field2D(x=x, t=t_out, values=vals)

    data = f.samples
    _warn_edges(data, dx, "initial data")
    # trapezoid weights absorb the half-cells at the window edge
    wq = np.full(nx, dx)
    wq[0] = wq[-1] = 0.5 * dx
    fw = data * wq
    offsets = np.arange(nx) * dx  # |offset| values; kernel is even in x
    vals = np.empty((t_out.size, nx))
    for k, t in enumerate(t_out):
        half = green_cauchy_profile(spec, offsets, t)
        kern = np.concatenate((half[:0:-1], half))  # offsets -(nx-1)..(nx-1)
        vals[k] = np.convolve(fw, kern, mode="valid")
    _warn_edges(vals[-1], dx, "final-time solution")
    return Field2D(x=x, t=t_out, values=vals)


def solve_signalling_convolution(
    spec: GreenSpec, h: ProblemData, t_grid: np.ndarray, x: float
) -> np.ndarray:
    """Causal response w(x, t_k) = ∫_0^{t_k} G_s(x, t_k - tau) h(tau) dtau.

    t_grid must be the uniform ladder 0, dt, 2dt, ... (zero-lag kernel value
    is the exact limit 0).  Trapezoid in tau, so second order for smooth h;
    impulse data returns the kernel itself.
    """
    if spec.kind is not Kind.SIGNALLING:
        raise InvalidParams("spec.kind must be SIGNALLING")
    if h.kind is not Kind.SIGNALLING:
        raise InvalidParams("data kind must be SIGNALLING")
    x = float(x)
    if not (x > 0.0 and math.isfinite(x)):
        raise InvalidParams(f"station x must be positive, got {x}")
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 2 or t[0] != 0.0:
        raise InvalidParams("t_grid must start at 0 with at least 2 nodes")
    dt = float(t[1])
    if not np.allclose(t, np.arange(t.size) * dt, rtol=1e-12, atol=0.0):
        raise InvalidParams("t_grid must be uniform starting at 0")

    # G_s(x, u) at lags u = 0, dt, ...; the u=0 value is the (essential) zero limit
    kern = np.empty(t.size)
    kern[0] = 0.0
    kern[1:] = green_signalling_signal(spec, x, t[1:])

    if h.impulse:
        return kern.copy()

    if h.samples is None or h.samples.size != t.size:
        raise InvalidParams("h samples must live on t_grid")
    out = np.empty(t.size)
    out[0] = 0.0
    hs = h.samples
    for k in range(1, t.size):
        seg = kern[k::-1] * hs[: k + 1]
        out[k] = dt * (np.sum(seg) - 0.5 * (seg[0] + seg[k]))
    return out


def stable_dt(spec: GreenSpec, dx: float, safety: float = 0.4) -> float:
    """Empirical explicit-scheme bound dt = (safety * dx^2 / a)^(1/beta)."""
    if not (0.0 < safety <= 1.0):
        raise InvalidParams(f"safety must be in (0, 1], got {safety}")
    return (safety * dx * dx / spec.a) ** (1.0 / spec.order.beta)


def solve_direct_scheme(spec: GreenSpec, data: ProblemData, grid: Grid1D) -> Field2D:
    """March w = w(0+) + a J^beta(w_xx) explicitly (predictor-corrector).

    Second-difference Laplacian, product-trapezoidal memory weights, zero
    Dirichlet at the truncated edges, zero initial velocity.  Needs the
    uniform time ladder and a step below the documented stability bound,
    else the growth guard raises Unstable.  Output includes the t = 0 row.
    """
    if spec.kind is not Kind.CAUCHY or data.kind is not Kind.CAUCHY:
        raise InvalidParams("direct scheme solves the Cauchy problem only")
    if data.impulse:
        raise InvalidParams(
            "direct scheme needs finite initial samples, not an impulse"
        )
    dt = grid.uniform_dt()
    w0 = np.asarray(data.samples, dtype=float)
    if w0.size != grid.nx:
        raise InvalidParams("initial samples must live on the x nodes")
    _warn_edges(w0, grid.dx, "initial data")
    nt = grid.t_values.size
    field, ok = direct_march(
        w0.copy(), grid.dx, dt, spec.a, spec.order.beta, nt
    )
    if not ok:
        raise Unstable(
            f"max|w| grew beyond 10x the initial max "
            f"(dt={dt:.3e}, stability bound {stable_dt(spec, grid.dx):.3e})"
        )
    t_out = np.concatenate(([0.0], grid.t_values))
    return Field2D(x=grid.x_nodes(), t=t_out, values=field)
