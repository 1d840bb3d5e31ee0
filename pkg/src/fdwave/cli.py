"""Command-line surface: figure-reproduction datasets and one-off evaluations.

``fdwave figure {fig1,fig2,b1,b2}`` emits the standard curve families as
CSV/JSON data (never images); distributional members (nu = 1) appear as
annotation rows, never as fake finite spikes.  ``fdwave eval WHAT`` prints a
single value together with the method used and an error estimate.  Output is
deterministic: the same flags always produce byte-identical files.
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import __version__
from ._csvout import format_float, write_dataset
from ._gamma import rgamma
from .errors import FdwaveError, InvalidParams, UnknownFigure
from .fracderiv import FracOpOrder, SampledFunction, caputo_derivative, rl_derivative, rl_integral
from .green import GreenSpec, Kind, green_cauchy, green_cauchy_profile, green_signalling, green_signalling_signal, similarity
from .orders import FractionalOrder
from .special_fn import EvalPolicy, Method, m_wright_info, m_wright_profile
from .stable import ClosedKind, StableParams, stable_pdf_closed, stable_pdf_series
from .visco import gamma_from_q, q_factor

FIGURES = ("fig1", "fig2", "b1", "b2")
EVAL_TARGETS = ("mwright", "green", "stable", "fracderiv", "qfactor")


@dataclass
class RunConfig:
    """Echo of the parsed flags that shape one run (serialized into metadata)."""

    a: float = 1.0
    n: Optional[int] = None
    out: Optional[str] = None
    fmt: str = "csv"
    tol: Optional[float] = None
    method: str = "auto"
    log_scale: bool = False


def _policy(cfg: RunConfig) -> EvalPolicy:
    kw = {}
    if cfg.tol is not None:
        kw["series_tol"] = cfg.tol
    if cfg.method != "auto":
        kw["method_override"] = Method(cfg.method)
    return EvalPolicy(**kw)


def _meta(cfg: RunConfig, **fields) -> dict:
    meta = {"tool": f"fdwave {__version__}"}
    meta.update({k: str(v) for k, v in fields.items()})
    meta["format"] = cfg.fmt
    if cfg.log_scale:
        meta["scale-hint"] = "logarithmic"
    return meta


def _order_cols(nus, prefix="nu_"):
    return [f"{prefix}{format_float(nu) if nu != int(nu) else int(nu)}" for nu in nus]


def cmd_figure(name: str, cfg: RunConfig) -> None:
    """Emit one of the documented curve families as a dataset file."""
    a = cfg.a
    if name == "fig1":
        # fundamental Cauchy solutions versus |x| at t = 1
        n = cfg.n or 201
        x = np.linspace(0.0, 4.0, n)
        nus = (0.25, 0.5, 0.75)
        cols = [x]
        for nu in nus:
            spec = GreenSpec(Kind.CAUCHY, a, FractionalOrder.from_nu(nu))
            cols.append(green_cauchy_profile(spec, x, 1.0))
        write_dataset(
            cfg.out,
            _meta(cfg, figure="fig1", quantity="G_c(x, 1; nu)", a=a, n=n, x_range="[0, 4]"),
            ["x"] + _order_cols(nus),
            np.column_stack(cols),
            fmt=cfg.fmt,
        )
    elif name == "fig2":
        # fundamental Signalling solutions versus t at x = 1
        n = cfg.n or 181
        t = np.linspace(0.0, 3.0, n)
        nus = (0.25, 0.5, 0.75)
        cols = [t]
        for nu in nus:
            spec = GreenSpec(Kind.SIGNALLING, a, FractionalOrder.from_nu(nu))
            vals = np.empty_like(t)
            vals[0] = 0.0  # t -> 0+ limit at x > 0
            vals[1:] = green_signalling_signal(spec, 1.0, t[1:])
            cols.append(vals)
        write_dataset(
            cfg.out,
            _meta(cfg, figure="fig2", quantity="G_s(1, t; nu)", a=a, n=n, t_range="[0, 3]"),
            ["t"] + _order_cols(nus),
            np.column_stack(cols),
            fmt=cfg.fmt,
        )
    elif name == "b1":
        # M_nu profiles, slow-diffusion half 0 <= nu <= 1/2; nu = 0 is e^-|x|
        n = cfg.n or 251
        x = np.linspace(0.0, 5.0, n)
        nus = (0.0, 0.125, 0.25, 0.375, 0.5)
        cols = [x, np.exp(-x)]
        for nu in nus[1:]:
            cols.append(m_wright_profile(nu, x))
        write_dataset(
            cfg.out,
            _meta(cfg, figure="b1", quantity="M_nu(|x|)", n=n, x_range="[0, 5]"),
            ["x"] + _order_cols(nus),
            np.column_stack(cols),
            fmt=cfg.fmt,
        )
    elif name == "b2":
        # M_nu profiles, wave half 1/2 <= nu < 1; the nu = 1 member is a delta
        n = cfg.n or 251
        x = np.linspace(0.0, 5.0, n)
        nus = (0.5, 0.625, 0.75)
        cols = [x]
        for nu in nus:
            cols.append(m_wright_profile(nu, x))
        write_dataset(
            cfg.out,
            _meta(cfg, figure="b2", quantity="M_nu(|x|)", n=n, x_range="[0, 5]"),
            ["x"] + _order_cols(nus),
            np.column_stack(cols),
            annotations=["impulse: nu_1 = delta(|x| - 1), unit impulse at |x| = 1"],
            fmt=cfg.fmt,
        )
    else:
        raise UnknownFigure(f"unknown figure {name!r}; known: {', '.join(FIGURES)}")


def _print_eval(out: Optional[str], lines: list) -> None:
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParams(msg)


def _parse_order(args) -> FractionalOrder:
    given = [k for k in ("nu", "beta", "gamma") if getattr(args, k) is not None]
    _require(len(given) == 1, "give exactly one of --nu / --beta / --gamma")
    k = given[0]
    return getattr(FractionalOrder, f"from_{k}")(getattr(args, k))


def cmd_eval(what: str, args, cfg: RunConfig) -> None:
    lines: list = []
    if what == "mwright":
        _require(args.nu is not None, "--nu is required")
        _require(args.x is not None, "--x is required (the argument r >= 0)")
        val, meth, est = m_wright_info(args.nu, args.x, _policy(cfg))
        lines += [f"value = {format_float(val)}", f"method = {meth}",
                  f"error_estimate = {est:.3e}"]
    elif what == "green":
        order = _parse_order(args)
        _require(args.x is not None and args.t is not None, "--x and --t are required")
        kind = Kind.CAUCHY if args.kind == "cauchy" else Kind.SIGNALLING
        spec = GreenSpec(kind, cfg.a, order)
        if kind is Kind.CAUCHY:
            val = green_cauchy(spec, args.x, args.t)
        else:
            val = green_signalling(spec, args.x, args.t)
        pt = similarity(spec, args.x, args.t)
        mval, meth, m_est = m_wright_info(order.nu, pt.r, _policy(cfg))
        # the prefactor is exact, so the relative error of M carries through
        est = abs(val) * m_est / max(abs(mval), 1e-300)
        lines += [f"value = {format_float(val)}", f"method = {meth}",
                  f"error_estimate = {est:.3e}",
                  f"similarity_r = {format_float(pt.r)}"]
    elif what == "stable":
        _require(args.alpha is not None, "--alpha is required")
        _require(args.x is not None, "--x is required (the argument y)")
        theta = args.theta if args.theta is not None else 0.0
        y = args.x
        if args.alpha == 2.0:
            _require(theta == 0.0, "alpha = 2 forces theta = 0")
            val = stable_pdf_closed(ClosedKind.GAUSS, math.sqrt(2.0), y)
            meth, est = "closed-form gauss", abs(val) * 2.3e-16
        elif args.alpha == 1.0 and theta == 0.0:
            val = stable_pdf_closed(ClosedKind.CAUCHY_LORENTZ, 1.0, y)
            meth, est = "closed-form cauchy-lorentz", abs(val) * 2.3e-16
        else:
            val = stable_pdf_series(StableParams(args.alpha, theta), y, _policy(cfg))
            meth, est = "series (cancellation-certified)", abs(val) * 2e-8
        lines += [f"value = {format_float(val)}", f"method = {meth}",
                  f"error_estimate = {est:.3e}"]
    elif what == "fracderiv":
        _require(args.mu is not None, "--mu is required")
        _require(args.t is not None, "--t is required")
        fn = args.fn
        dt0 = args.dt
        vals = []
        for dt in (dt0, dt0 / 2.0):
            k = int(round(args.t / dt))
            _require(abs(k * dt - args.t) < 1e-9 * dt * max(1, k),
                     "--t must be a multiple of --dt")
            tt = np.arange(k + 1, dtype=float) * dt
            samples, derivs = _EVAL_FUNCTIONS[fn](tt)
            f = SampledFunction(dt, samples, derivs)
            if args.op == "integral":
                vals.append(rl_integral(f, args.mu, args.t))
            elif args.op == "rl":
                vals.append(rl_derivative(f, FracOpOrder(args.mu), args.t))
            else:
                vals.append(caputo_derivative(f, FracOpOrder(args.mu), args.t))
        # product-trapezoid is O(dt^2): Richardson gap over 3 estimates the error
        est = abs(vals[1] - vals[0]) / 3.0
        lines += [f"value = {format_float(vals[1])}",
                  f"method = product-trapezoid ({args.op}, dt={dt0 / 2.0:g})",
                  f"error_estimate = {est:.3e}"]
    elif what == "qfactor":
        if args.gamma is not None:
            val = q_factor(args.gamma)
            lines += [f"value = {format_float(val)}",
                      "method = closed-form tan(gamma*pi/2)",
                      f"error_estimate = {abs(val) * 2.3e-16:.3e}"]
        elif args.q_inv is not None:
            val = gamma_from_q(args.q_inv)
            lines += [f"value = {format_float(val)}",
                      "method = closed-form (2/pi)*arctan(Q^-1)",
                      f"error_estimate = {abs(val) * 2.3e-16:.3e}"]
        else:
            raise InvalidParams("qfactor needs --gamma (forward) or --q-inv (inverse)")
    else:
        raise InvalidParams(f"unknown eval target {what!r}; known: {', '.join(EVAL_TARGETS)}")
    _print_eval(cfg.out, lines)


def _fn_const(t):
    return np.ones_like(t), (np.zeros_like(t),)


def _fn_linear(t):
    return t.copy(), (np.ones_like(t),)


def _fn_quadratic(t):
    return t * t, (2.0 * t, np.full_like(t, 2.0))


def _fn_cubic(t):
    return t**3, (3.0 * t * t, 6.0 * t)


def _fn_decay(t):
    e = np.exp(-t)
    return t * e, ((1.0 - t) * e, (t - 2.0) * e)


_EVAL_FUNCTIONS = {
    "const": _fn_const,
    "linear": _fn_linear,
    "quadratic": _fn_quadratic,
    "cubic": _fn_cubic,
    "t-exp-decay": _fn_decay,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fdwave",
        description="Time-fractional diffusion-wave datasets and evaluations",
    )
    ap.add_argument("--version", action="version", version=f"fdwave {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--a", type=float, default=1.0, help="equation coefficient a > 0")
        p.add_argument("--n", type=int, default=None, help="number of grid points")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
        p.add_argument("--tol", type=float, default=None, help="series truncation tolerance")
        p.add_argument("--method", choices=("auto", "series", "asymptotic", "contour"),
                       default="auto")
        p.add_argument("--log-scale", action="store_true",
                       help="annotate the dataset as intended for log-scale plotting")

    pf = sub.add_parser("figure", help="emit a figure-reproduction dataset")
    pf.add_argument("name", help=f"one of: {', '.join(FIGURES)}")
    common(pf)

    pe = sub.add_parser("eval", help="evaluate one quantity and report method + error")
    pe.add_argument("what", help=f"one of: {', '.join(EVAL_TARGETS)}")
    grp = pe.add_mutually_exclusive_group()
    grp.add_argument("--nu", type=float, help="order nu in (0, 1]")
    grp.add_argument("--beta", type=float, help="order beta in (0, 2]")
    grp.add_argument("--gamma", type=float, help="creep exponent gamma in [0, 2)")
    pe.add_argument("--x", type=float, help="spatial coordinate / function argument")
    pe.add_argument("--t", type=float, help="time coordinate")
    pe.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"),
                    help="grid range for sweeps (reserved)")
    pe.add_argument("--kind", choices=("cauchy", "signalling"), default="cauchy")
    pe.add_argument("--alpha", type=float, help="stable index alpha in (0, 2]")
    pe.add_argument("--theta", type=float, help="stable skewness theta")
    pe.add_argument("--mu", type=float, help="fractional operator order mu > 0")
    pe.add_argument("--op", choices=("integral", "rl", "caputo"), default="caputo")
    pe.add_argument("--fn", choices=tuple(_EVAL_FUNCTIONS), default="linear",
                    help="built-in sample function for fracderiv")
    pe.add_argument("--dt", type=float, default=1.0 / 512.0)
    pe.add_argument("--q-inv", dest="q_inv", type=float, help="inverse quality factor")
    common(pe)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        a=args.a,
        n=args.n,
        out=args.out,
        fmt=args.fmt,
        tol=args.tol,
        method=args.method,
        log_scale=args.log_scale,
    )
    try:
        if args.command == "figure":
            cmd_figure(args.name, cfg)
        else:
            cmd_eval(args.what, args, cfg)
    except FdwaveError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
