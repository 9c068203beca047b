"""Command-line interface: ``kurasync <command> ...``.

Exit codes: 0 success, 1 input error, 2 a marginal (boundary) case where a
decision was demanded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .bounds import coupling_bounds, gamma_max_bounds, phi
from .core import as_phases, project_mean_zero
from .dynamics import default_dt, detect_locking, integrate
from .errors import Degenerate, KuramotoError, Marginal
from .index import index_oracle, kappa_of, tau, unstable_dim
from .lattice import inscribed_radius, omega_max, omega_min
from .montecarlo import chunk_rng, sample_direction, transition_curve
from .region import boundary_distance, is_synchronizable

EXIT_OK, EXIT_INPUT, EXIT_MARGINAL = 0, 1, 2


class InputError(Exception):
    pass


def read_vector(path):
    """Read a vector from a JSON array or newline-separated numbers ('-' is stdin)."""
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            values = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: line {exc.lineno}: invalid JSON ({exc.msg})") from None
        if not isinstance(values, list) or not all(
                isinstance(v, (int, float)) and not isinstance(v, bool) for v in values):
            raise InputError(f"{path}: expected a flat JSON array of numbers")
        out = [float(v) for v in values]
    else:
        out = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                out.append(float(line))
            except ValueError:
                raise InputError(f"{path}: line {lineno}: cannot parse {line!r} as a number") from None
    if len(out) < 2:
        raise InputError(f"{path}: need at least two entries, got {len(out)}")
    if not all(math.isfinite(v) for v in out):
        raise InputError(f"{path}: non-finite entry")
    return np.array(out)


def parse_grid(text):
    """'a,b,c' or 'start:stop:step' (stop inclusive)."""
    try:
        if ":" in text:
            start, stop, step = (float(x) for x in text.split(":"))
            if step <= 0:
                raise ValueError
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            return [round(start + k * step, 12) for k in range(count)]
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"cannot parse grid {text!r}") from None


def parse_int_list(text):
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":"))
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"cannot parse integer list {text!r}") from None


def _fmt(x):
    return repr(float(x))


class _Output:
    def __init__(self, path):
        self.path = path

    def write(self, text):
        if self.path in (None, "-"):
            sys.stdout.write(text)
        else:
            with open(self.path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)


def _csv_text(header, rows):
    buf = io.StringIO()
    buf.write("# " + ",".join(header) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([_fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def _json_text(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _notice(msg):
    print(f"notice: {msg}", file=sys.stderr)


def cmd_index(args):
    theta = as_phases(read_vector(args.theta_file))
    kv = kappa_of(theta)
    oracle = index_oracle(theta)
    report = {
        "n": int(theta.size),
        "kappa": kv.kappa.tolist(),
        "oracle": {"n_plus": oracle.n_plus, "n_zero": oracle.n_zero, "n_minus": oracle.n_minus},
    }
    try:
        report["tau"] = tau(theta).tau
    except KuramotoError:
        report["tau"] = None
    try:
        formula = unstable_dim(theta)
        report["formula"] = {"n_plus": formula.n_plus, "n_zero": formula.n_zero,
                             "n_minus": formula.n_minus}
        report["status"] = "ok"
        report["agree"] = formula.n_plus == oracle.n_plus
    except Degenerate as exc:
        report["formula"] = None
        report["status"] = "marginal"
        report["agree"] = None
        report["detail"] = str(exc)
    _Output(args.out).write(_json_text(report))
    if report["status"] == "marginal":
        return EXIT_MARGINAL
    return EXIT_OK if report["agree"] else EXIT_MARGINAL


def cmd_sync(args):
    raw = read_vector(args.omega_file)
    omega = project_mean_zero(raw)
    shift = float(raw.mean())
    if shift != 0.0:
        _notice(f"subtracted mean {shift!r} to move into the co-rotating frame")
    if not args.gamma > 0:
        raise InputError("--gamma must be positive")
    d = is_synchronizable(omega, args.gamma)
    report = {
        "synchronizable": d.synchronizable,
        "status": d.status,
        "gamma": args.gamma,
        "mean_removed": shift,
        "tau": d.tau,
        "kappa": None if d.kappa is None else d.kappa.kappa.tolist(),
        "S": None if d.kappa is None else d.kappa.s,
        "theta": None if d.theta is None else d.theta.tolist(),
    }
    _Output(args.out).write(_json_text(report))
    return EXIT_MARGINAL if d.marginal else EXIT_OK


def _n3_directions(count):
    e1 = np.array([1.0, 0.0, -1.0]) / math.sqrt(2)
    e2 = np.array([1.0, -2.0, 1.0]) / math.sqrt(6)
    for k in range(count):
        a = 2 * math.pi * k / count
        yield a, math.cos(a) * e1 + math.sin(a) * e2


def boundary_scan(n, directions, tol=1e-9, seed=0):
    """Rows of (angle or index, direction..., s_star). N = 3 uses an even angular grid."""
    rows = []
    if n == 3:
        for a, u in _n3_directions(directions):
            rows.append([a, *u, boundary_distance(u, tol).s_star])
    else:
        rng = chunk_rng(seed, 0)
        for k in range(directions):
            u = sample_direction(n, rng)
            rows.append([k, *u, boundary_distance(u, tol).s_star])
    return rows


def cmd_boundary_scan(args):
    if args.n < 2 or args.directions < 1:
        raise InputError("need --n >= 2 and --directions >= 1")
    rows = boundary_scan(args.n, args.directions, args.tol, args.seed)
    first = "angle_rad" if args.n == 3 else "sample"
    cols = [first] + [f"u{i}" for i in range(args.n)] + ["s_star_rad_per_time"]
    if args.format == "json":
        text = _json_text({"n": args.n, "tol": args.tol, "seed": args.seed,
                           "rows": [{"key": r[0], "direction": [float(x) for x in r[1:-1]],
                                     "s_star": r[-1]} for r in rows]})
    else:
        text = _csv_text(cols, [[int(r[0]) if args.n != 3 else r[0], *r[1:]] for r in rows])
    _Output(args.out).write(text)
    return EXIT_OK


def cmd_transition(args):
    ns = parse_int_list(args.n)
    deltas = parse_grid(args.delta_grid)
    if any(n < 2 for n in ns) or not deltas or min(deltas) <= 0 or args.samples < 1:
        raise InputError("need N >= 2, positive deltas and --samples >= 1")
    rows = []
    for n in ns:
        rows.extend(transition_curve(n, deltas, args.samples, args.seed, threads=args.threads))
    if args.format == "json":
        text = _json_text({"samples": args.samples, "seed": args.seed, "rows": [
            {"n": r.n, "delta": r.delta, "gamma": r.gamma, "p_hat": r.p_hat,
             "std_err": r.std_err, "psync_lower": r.psync_lower, "psync_upper": r.psync_upper}
            for r in rows]})
    else:
        text = _csv_text(
            ["n", "delta", "gamma", "p_hat", "std_err", "psync_lower", "psync_upper"],
            [[r.n, r.delta, r.gamma, r.p_hat, r.std_err, r.psync_lower, r.psync_upper]
             for r in rows])
    _Output(args.out).write(text)
    return EXIT_OK


def extremes_rows(ns):
    rows = []
    for n in ns:
        cb = coupling_bounds(n)
        lo, hi = gamma_max_bounds(n)
        rows.append({
            "n": n,
            "gamma_min": cb.gamma_min,
            "gamma_min_kind": "exact" if cb.gamma_min_exact else "conjecture",
            "gamma_max_lo": lo,
            "gamma_max_hi": hi,
            "gamma_max_conjectured": cb.gamma_max_conjectured,
            "omega_min_norm_sq": float(omega_min(n) @ omega_min(n)),
            "omega_max_norm_sq": float(omega_max(n) @ omega_max(n)),
            "phi": phi(n),
            "inscribed_radius": inscribed_radius(n),
        })
    return rows


def cmd_extremes(args):
    ns = parse_int_list(args.n)
    if any(n < 2 for n in ns):
        raise InputError("need N >= 2")
    rows = extremes_rows(ns)
    if args.format == "json":
        text = _json_text({"rows": rows})
    else:
        cols = list(rows[0])
        text = _csv_text(cols, [[r[c] for c in cols] for r in rows])
    _Output(args.out).write(text)
    return EXIT_OK


def cmd_integrate(args):
    omega = read_vector(args.omega_file)
    theta0 = read_vector(args.theta_file) if args.theta_file else np.zeros_like(omega)
    if theta0.shape != omega.shape:
        raise InputError("theta and omega files have different lengths")
    if not args.gamma > 0:
        raise InputError("--gamma must be positive")
    dt = args.dt if args.dt else default_dt(args.gamma, omega.size)
    traj = integrate(theta0, omega, args.gamma, dt, args.t_end, args.record_every)
    window = min(10.0, 0.5 * args.t_end)
    locked = detect_locking(traj, window)
    _notice(f"locking detected: {locked}")
    if args.format == "json":
        text = _json_text({"gamma": args.gamma, "dt": dt, "locked": locked,
                           "omega": omega.tolist(), "times": traj.times.tolist(),
                           "states": traj.states.tolist()})
    else:
        cols = ["t"] + [f"theta{i}_rad" for i in range(omega.size)]
        text = _csv_text(cols, [[t, *s] for t, s in zip(traj.times, traj.states)])
    _Output(args.out).write(text)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="kurasync", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("--out", default="-", help="output path (default stdout)")
        if fmt:
            sp.add_argument("--format", choices=["csv", "json"], default="csv")

    sp = sub.add_parser("index", help="stability index of a configuration")
    sp.add_argument("theta_file")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("sync", help="decide full synchronizability of a frequency vector")
    sp.add_argument("omega_file")
    sp.add_argument("--gamma", type=float, default=1.0)
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_sync)

    sp = sub.add_parser("boundary-scan", help="distance to the region boundary along directions")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--directions", type=int, default=360)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_boundary_scan)

    sp = sub.add_parser("transition", help="Monte Carlo synchronization probability curve")
    sp.add_argument("--n", required=True, help="N values, e.g. 1000,2000")
    sp.add_argument("--delta-grid", default="0.25:3:0.25")
    sp.add_argument("--samples", type=int, default=500)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=None)
    common(sp)
    sp.set_defaults(func=cmd_transition)

    sp = sub.add_parser("extremes", help="critical couplings and vertex norms per N")
    sp.add_argument("--n", default="2:12", help="N range lo:hi or list")
    common(sp)
    sp.set_defaults(func=cmd_extremes)

    sp = sub.add_parser("integrate", help="integrate the ODE and dump the trajectory")
    sp.add_argument("omega_file")
    sp.add_argument("--theta-file")
    sp.add_argument("--gamma", type=float, default=1.0)
    sp.add_argument("--dt", type=float, default=None)
    sp.add_argument("--t-end", type=float, default=50.0)
    sp.add_argument("--record-every", type=int, default=100)
    common(sp)
    sp.set_defaults(func=cmd_integrate)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Marginal as exc:
        print(f"marginal: {exc}", file=sys.stderr)
        return EXIT_MARGINAL
    except (InputError, OSError, ValueError, KuramotoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
