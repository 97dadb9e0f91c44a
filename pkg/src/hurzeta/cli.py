"""Command-line surface: evaluate zeta(k, b), sweep the generating function,
run validation suites, and emit reproducible machine-readable reports.

Exit codes: 0 success, 2 usage error (bad parameters, excluded domain),
3 numeric failure (a computation raised after validation passed).

Reports are JSON (an envelope with config echo, per-record results, and a
summary), CSV (flattened records, 17-significant-digit floats), or human
text.  Complex numbers serialize as {"re": ..., "im": ...}; rerunning the
echoed config with the same seed reproduces every numeric field bitwise
(timing fields are the only exception, and the only fields excluded from
the determinism contract).
"""

import argparse
import csv
import io
import json
import math
import os
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .errors import HurzetaError, IllConditionedError, UnsupportedParameterError
from .genfun import (
    classify_case,
    genfun_closed,
    genfun_series,
    odd_zeta_integral,
    zeta_from_genfun,
)
from .hurwitz import (
    ZetaParams,
    bracket_kernel,
    bracket_scale,
    hurwitz_series_oracle,
    zeta_auto,
)
from .quadrature import QuadratureSpec
from .validation import (
    hp_limit_scan,
    log_asymptotic_scan,
    theorem1_scan,
    zero_integral_scan,
)

DEFAULT_SEED = 12345
SUITES = ("theorem1", "zero-integral", "log-asymptotic", "oracle-grid",
          "endpoint-identity", "all")
ORACLE_GRID_K = tuple(range(2, 11))
ORACLE_GRID_B = (0.25, 0.5, 1.25, 2.0, 3.75, 1 + 0.5j, 2 + 1j, 0.6 - 0.2j)


@dataclass
class RunConfig:
    command: str
    params: dict
    tolerances: dict = field(default_factory=dict)
    output_format: str = "json"
    output_path: str | None = None
    seed: int = DEFAULT_SEED

    def spec(self) -> QuadratureSpec:
        return QuadratureSpec(**self.tolerances) if self.tolerances else QuadratureSpec()


@dataclass
class ReportEnvelope:
    tool_version: str
    config_echo: dict
    results: list
    summary: dict


class UsageError(Exception):
    """Parameter problems detected after argparse: exit code 2."""


# ---------------------------------------------------------------------------
# Parsing and serialization helpers
# ---------------------------------------------------------------------------

def parse_complex(text: str) -> complex:
    """Accept 're', 're,im', and 're+imi' / 're-imi' spellings."""
    s = text.strip()
    if "," in s:
        parts = s.split(",")
        if len(parts) != 2:
            raise UsageError(f"cannot parse complex number from {text!r}")
        try:
            return complex(float(parts[0]), float(parts[1]))
        except ValueError as exc:
            raise UsageError(f"cannot parse complex number from {text!r}") from exc
    # i notation: normalize bare 'i'/'+i'/'-i' to '1j' forms
    s2 = s.replace("I", "i").replace("i", "j")
    s2 = re.sub(r"(?<![\dj.])j", "1j", s2)
    try:
        return complex(s2.replace(" ", ""))
    except ValueError as exc:
        raise UsageError(f"cannot parse complex number from {text!r}") from exc


def parse_grid(text: str):
    """'start:stop:count' -> evenly spaced floats; a single number -> [value]."""
    s = text.strip()
    if ":" in s:
        parts = s.split(":")
        if len(parts) != 3:
            raise UsageError(f"grid must be start:stop:count, got {text!r}")
        try:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise UsageError(f"grid must be start:stop:count, got {text!r}") from exc
        if count < 1:
            raise UsageError("grid count must be >= 1")
        return [float(v) for v in np.linspace(start, stop, count)]
    try:
        return [float(s)]
    except ValueError as exc:
        raise UsageError(f"cannot parse grid value {text!r}") from exc


def jsonify(obj):
    """Recursively convert to JSON-ready values; complex -> {re, im}."""
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, float) and math.isnan(obj):
        return "nan"
    if isinstance(obj, dict):
        return {str(k): jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonify(v) for v in obj]
    return obj


def _flatten(record: dict, prefix: str = "") -> dict:
    out = {}
    for key, val in record.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            if set(val.keys()) == {"re", "im"}:
                out[name + "_re"] = val["re"]
                out[name + "_im"] = val["im"]
            else:
                out.update(_flatten(val, name + "."))
        elif isinstance(val, list):
            out[name] = json.dumps(val, separators=(",", ":"))
        else:
            out[name] = val
    return out


def _fmt_cell(v):
    if isinstance(v, float):
        return f"{v:.17g}"
    return v


def render_csv(envelope: ReportEnvelope) -> str:
    rows = [_flatten(r) for r in envelope.results]
    headers: list = []
    for row in rows:
        for key in row:
            if key not in headers:
                headers.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=headers, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _fmt_cell(v) for k, v in row.items()})
    return buf.getvalue()


def render_json(envelope: ReportEnvelope) -> str:
    return json.dumps(jsonify(asdict(envelope)), indent=2, sort_keys=True) + "\n"


def _fmt_c(z) -> str:
    if isinstance(z, dict):
        z = complex(z["re"], z["im"])
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:+.15e}"
    return f"{z.real:+.15e} {z.imag:+.15e}i"


def render_human(envelope: ReportEnvelope) -> str:
    lines = [f"hurzeta {envelope.tool_version} :: {envelope.config_echo['command']}"]
    for rec in envelope.results:
        lines.append("-" * 64)
        if "breakdown" in rec and rec["breakdown"] is not None:
            bd = rec["breakdown"]
            lines.append(f"zeta({rec['k']}, {_fmt_c(rec['b'])})")
            lines.append(f"  1/(2 b^k) term        {_fmt_c(bd['term_half_bk'])}")
            lines.append(f"  polylog single term   {_fmt_c(bd['term_polylog_single'])}")
            lines.append(f"  polylog sum term      {_fmt_c(bd['term_polylog_sum'])}")
            lines.append(f"  integral term         {_fmt_c(bd['term_integral'])}")
            lines.append(f"  total                 {_fmt_c(rec['value'])}")
        else:
            for key, val in rec.items():
                if isinstance(val, dict) and set(val.keys()) == {"re", "im"}:
                    lines.append(f"  {key:<20} {_fmt_c(val)}")
                elif isinstance(val, (int, float, str, bool)) or val is None:
                    lines.append(f"  {key:<20} {val}")
    lines.append("-" * 64)
    lines.append(
        "summary: "
        + " ".join(f"{k}={v}" for k, v in sorted(envelope.summary.items()))
    )
    return "\n".join(lines) + "\n"


def emit(envelope: ReportEnvelope, cfg: RunConfig) -> None:
    if cfg.output_format == "json":
        text = render_json(envelope)
    elif cfg.output_format == "csv":
        text = render_csv(envelope)
    else:
        text = render_human(envelope)
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config_echo(cfg: RunConfig) -> dict:
    return jsonify(
        {
            "command": cfg.command,
            "params": cfg.params,
            "tolerances": cfg.tolerances,
            "output_format": cfg.output_format,
            "output_path": cfg.output_path,
            "seed": cfg.seed,
        }
    )


def envelope_signature(envelope_dict: dict) -> str:
    """Canonical JSON of an envelope minus timing (the determinism contract:
    everything but wall-clock must reproduce bitwise under the echoed config)."""

    def strip(obj):
        if isinstance(obj, dict):
            return {
                k: strip(v)
                for k, v in obj.items()
                if k not in ("timing_s", "wall_time_s")
            }
        if isinstance(obj, list):
            return [strip(v) for v in obj]
        return obj

    return json.dumps(strip(envelope_dict), sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# Oracles shared by several commands
# ---------------------------------------------------------------------------

def _oracle_any(k: int, b: complex, tol: float = 1e-13) -> complex:
    """Series oracle extended to Re(b) <= 0 by splitting off the head terms."""
    b = complex(b)
    if b.real > 0.0:
        return hurwitz_series_oracle(k, b, tol=tol)
    m = math.floor(-b.real) + 1
    head = sum((j + b) ** (-k) for j in range(m))
    return head + hurwitz_series_oracle(k, b + m, tol=tol)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_eval(cfg: RunConfig) -> tuple[ReportEnvelope, int]:
    k = cfg.params["k"]
    b = parse_complex(cfg.params["b"])
    if k < 2:
        raise UsageError(f"--k must be >= 2, got {k}")
    if b.imag == 0.0 and float(b.real).is_integer() and b.real < 1.0:
        raise UsageError(
            f"zeta(k, b) has a pole at b = {int(b.real)}: non-positive integer b "
            "is outside the domain"
        )
    spec = cfg.spec()
    t0 = time.perf_counter()
    value, route, br = zeta_auto(k, b, spec)
    oracle = _oracle_any(k, b)
    dt = time.perf_counter() - t0
    disc = abs(value - oracle)
    record = {
        "k": k,
        "b": b,
        "value": value,
        "oracle": oracle,
        "discrepancy_abs": disc,
        "discrepancy_rel": disc / (1.0 + abs(oracle)),
        "route": route,
        "timing_s": dt,
    }
    if route == "series":
        record["notice"] = (
            "integer b routed to direct summation: the combined closed form "
            "has a pole of its phase factor at every integer b"
        )
    if br is not None:
        record["breakdown"] = {
            "term_half_bk": br.term_half_bk,
            "term_polylog_single": br.term_polylog_single,
            "term_polylog_sum": br.term_polylog_sum,
            "term_integral": br.term_integral,
        }
        record["quadrature"] = {
            "error_estimate": br.quadrature.error_estimate,
            "evaluations": br.quadrature.evaluations,
            "converged": br.quadrature.converged,
        }
        record["warnings"] = list(br.warnings)
    ok = disc <= 1e-8 * (1.0 + abs(oracle))
    env = ReportEnvelope(
        tool_version=__version__,
        config_echo=_config_echo(cfg),
        results=[jsonify(record)],
        summary={"pass": int(ok), "fail": int(not ok), "total": 1,
                 "wall_time_s": dt},
    )
    return env, 0


def _genfun_point(x: float, b: complex, spec: QuadratureSpec, series_kmax: int):
    t0 = time.perf_counter()
    try:
        ev = genfun_closed(x, b, spec)
    except UnsupportedParameterError as exc:
        return {
            "x": complex(x), "b": b, "status": "unsupported",
            "message": str(exc), "timing_s": time.perf_counter() - t0,
        }
    except IllConditionedError as exc:
        return {
            "x": complex(x), "b": b, "status": "ill_conditioned",
            "locus": exc.locus, "message": str(exc),
            "timing_s": time.perf_counter() - t0,
        }
    fl = ev.case.proximity_flags
    record = {
        "x": complex(x),
        "b": b,
        "status": "ok",
        "case": ev.case.tag,
        "rational_term": ev.rational_term,
        "trig_term": ev.trig_term,
        "integral_term": ev.integral_term,
        "total": ev.total,
        "proximity": {
            "x_minus_b": fl.x_minus_b,
            "two_b_int": fl.two_b_int,
            "two_xmb_int": fl.two_xmb_int,
            "xmb_int": fl.xmb_int,
            "x_int": fl.x_int,
            "two_x_int": fl.two_x_int,
        },
        "warnings": list(ev.warnings),
    }
    if abs(complex(x) - 2 * b) < 1e-12:
        record["warnings"] = record["warnings"] + [
            "x = 2b: the integral term vanishes identically on this locus"
        ]
    if series_kmax:
        gs = genfun_series(x, b, series_kmax)
        record["series_value"] = gs.value
        record["series_tail_estimate"] = gs.tail_estimate
        record["series_discrepancy"] = abs(gs.value - ev.total)
    record["timing_s"] = time.perf_counter() - t0
    return record


def cmd_genfun(cfg: RunConfig) -> tuple[ReportEnvelope, int]:
    xs = parse_grid(cfg.params["x"])
    b = parse_complex(cfg.params["b"])
    series_kmax = cfg.params.get("series_kmax", 0)
    spec = cfg.spec()
    t0 = time.perf_counter()
    results = [jsonify(_genfun_point(x, b, spec, series_kmax)) for x in xs]
    n_ok = sum(1 for r in results if r.get("status") == "ok")
    env = ReportEnvelope(
        tool_version=__version__,
        config_echo=_config_echo(cfg),
        results=results,
        summary={
            "pass": n_ok,
            "fail": len(results) - n_ok,
            "total": len(results),
            "wall_time_s": time.perf_counter() - t0,
        },
    )
    return env, 0 if n_ok > 0 else 3


def cmd_oddzeta(cfg: RunConfig) -> tuple[ReportEnvelope, int]:
    raw = str(cfg.params["j"])
    if "-" in raw:
        lo, hi = raw.split("-", 1)
        try:
            js = list(range(int(lo), int(hi) + 1))
        except ValueError as exc:
            raise UsageError(f"--j must be N or LO-HI, got {raw!r}") from exc
    else:
        try:
            js = [int(raw)]
        except ValueError as exc:
            raise UsageError(f"--j must be N or LO-HI, got {raw!r}") from exc
    if any(not 1 <= j <= 10 for j in js):
        raise UsageError("--j values must lie in [1, 10]")
    spec = QuadratureSpec(**cfg.tolerances) if cfg.tolerances else None
    t0 = time.perf_counter()
    results = []
    all_ok = True
    for j in js:
        t1 = time.perf_counter()
        val = odd_zeta_integral(j, spec)
        s = 2 * j + 1
        ref = float(np.sum(np.arange(1.0, 200.0) ** (-float(s)))) + (
            199.5 ** (1 - s) / (s - 1)
        )
        rel = abs(val - ref) / ref
        all_ok = all_ok and rel <= 1e-9
        results.append(
            {
                "j": j,
                "zeta_argument": s,
                "value": val,
                "series_reference": ref,
                "relative_discrepancy": rel,
                "timing_s": time.perf_counter() - t1,
            }
        )
    env = ReportEnvelope(
        tool_version=__version__,
        config_echo=_config_echo(cfg),
        results=[jsonify(r) for r in results],
        summary={
            "pass": sum(1 for r in results if r["relative_discrepancy"] <= 1e-9),
            "fail": sum(1 for r in results if r["relative_discrepancy"] > 1e-9),
            "total": len(results),
            "wall_time_s": time.perf_counter() - t0,
        },
    )
    return env, 0 if all_ok else 3


# -- validation suites -------------------------------------------------------

def _report_to_record(report, suite):
    return {
        "suite": suite,
        "parameter": report.parameter,
        "n_values": list(report.n_values),
        "observed": list(report.observed),
        "target": report.target,
        "deviations": list(report.deviations),
        "fitted_rate": report.fitted_rate,
        "verdict": report.verdict,
        "notes": list(report.notes),
    }


def _suite_theorem1(spec, seed):
    ns = [100, 1000, 10000]
    return [_report_to_record(theorem1_scan(k, ns, spec), "theorem1")
            for k in (0, 1, 3)]


def _suite_zero_integral(spec, seed):
    return [_report_to_record(zero_integral_scan([1, 17, 100], spec), "zero-integral")]


def _suite_log_asymptotic(spec, seed):
    ns = [100, 1000, 10000]
    return [_report_to_record(log_asymptotic_scan(float(k), ns, spec), "log-asymptotic")
            for k in (2, 3)]


def _suite_oracle_grid(spec, seed):
    records = []
    for k in ORACLE_GRID_K:
        for b in ORACLE_GRID_B:
            value, route, _ = zeta_auto(k, b, spec)
            oracle = hurwitz_series_oracle(k, b, tol=1e-13)
            rel = abs(value - oracle) / (1.0 + abs(oracle))
            records.append(
                {
                    "suite": "oracle-grid",
                    "k": k,
                    "b": complex(b),
                    "value": complex(value),
                    "oracle": complex(oracle),
                    "relative_error": rel,
                    "route": route,
                    "verdict": "pass" if rel <= 1e-8 else "fail",
                }
            )
    return records


def _suite_endpoint_identity(spec, seed, draws=300):
    # The endpoint identity B(0) = B(1) is algebraic; this suite checks its
    # *transcription* in floats, so draws keep |1 - q| away from the
    # conditioning locus q = 1 (b near a real integer), where any formula
    # measures rounding amplification rather than correctness.
    rng = np.random.default_rng(seed)
    worst = 0.0
    checked = 0
    while checked < draws:
        k = int(rng.integers(2, 13))
        re_b = float(rng.uniform(0.05, 6.0))
        im_b = float(rng.uniform(-2.5, 2.5))
        if rng.uniform() < 0.3:
            im_b = 0.0
        b = complex(re_b, im_b)
        if im_b == 0.0 and abs(re_b - round(re_b)) < 1e-6:
            continue
        q = complex(np.exp(-2j * math.pi * b))
        if abs(1.0 - q) < 0.05:
            continue
        params = ZetaParams.create(k, b)
        g0 = abs(complex(bracket_kernel(params, 0.0)))
        worst = max(worst, g0 / bracket_scale(params))
        checked += 1
    ok = worst <= 1e-11
    return [
        {
            "suite": "endpoint-identity",
            "draws": draws,
            "worst_scaled_endpoint_residual": worst,
            "threshold": 1e-11,
            "verdict": "pass" if ok else "fail",
        }
    ]


def cmd_validate(cfg: RunConfig) -> tuple[ReportEnvelope, int]:
    suite = cfg.params["suite"]
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    spec = cfg.spec()
    runners = {
        "theorem1": _suite_theorem1,
        "zero-integral": _suite_zero_integral,
        "log-asymptotic": _suite_log_asymptotic,
        "oracle-grid": _suite_oracle_grid,
        "endpoint-identity": _suite_endpoint_identity,
    }
    names = list(runners) if suite == "all" else [suite]
    t0 = time.perf_counter()
    results = []
    for name in names:
        results.extend(runners[name](spec, cfg.seed))
    n_pass = sum(1 for r in results if r.get("verdict") == "pass")
    env = ReportEnvelope(
        tool_version=__version__,
        config_echo=_config_echo(cfg),
        results=[jsonify(r) for r in results],
        summary={
            "pass": n_pass,
            "fail": len(results) - n_pass,
            "total": len(results),
            "wall_time_s": time.perf_counter() - t0,
        },
    )
    return env, 0 if n_pass == len(results) else 3


def _max_workers(n_jobs: int) -> int:
    cap = os.environ.get("HURZETA_MAX_THREADS")
    if cap is not None:
        try:
            cap_val = int(cap)
        except ValueError as exc:
            raise UsageError(
                f"HURZETA_MAX_THREADS must be a positive integer, got {cap!r}"
            ) from exc
        if cap_val < 1:
            raise UsageError(
                f"HURZETA_MAX_THREADS must be a positive integer, got {cap!r}"
            )
        return max(1, min(n_jobs, cap_val))
    return max(1, min(n_jobs, os.cpu_count() or 1))


def cmd_sweep(cfg: RunConfig) -> tuple[ReportEnvelope, int]:
    try:
        ks = [int(s) for s in str(cfg.params["k"]).split(",")]
    except ValueError as exc:
        raise UsageError("--k must be comma-separated integers") from exc
    if any(k < 2 for k in ks):
        raise UsageError("--k values must be >= 2")
    bs = parse_grid(cfg.params["b"])
    b_im = cfg.params.get("b_im", 0.0)
    grid = [(k, complex(br, b_im)) for k in ks for br in bs]
    for _, b in grid:
        if b.imag == 0.0 and float(b.real).is_integer() and b.real < 1.0:
            raise UsageError(f"grid touches the pole at b = {b.real:g}")
    spec = cfg.spec()

    def cell(item):
        k, b = item
        t1 = time.perf_counter()
        try:
            value, route, _ = zeta_auto(k, b, spec)
            oracle = _oracle_any(k, b)
            return {
                "k": k, "b": b, "status": "ok", "value": value,
                "oracle": oracle,
                "discrepancy_rel": abs(value - oracle) / (1.0 + abs(oracle)),
                "route": route, "timing_s": time.perf_counter() - t1,
            }
        except HurzetaError as exc:
            return {
                "k": k, "b": b, "status": "error",
                "error_type": type(exc).__name__, "message": str(exc),
                "timing_s": time.perf_counter() - t1,
            }

    t0 = time.perf_counter()
    with ThreadPoolExecutor(max_workers=_max_workers(len(grid))) as pool:
        results = list(pool.map(cell, grid))  # ordered by input index
    n_ok = sum(1 for r in results if r["status"] == "ok")
    env = ReportEnvelope(
        tool_version=__version__,
        config_echo=_config_echo(cfg),
        results=[jsonify(r) for r in results],
        summary={
            "pass": n_ok,
            "fail": len(results) - n_ok,
            "total": len(results),
            "wall_time_s": time.perf_counter() - t0,
        },
    )
    return env, 0 if n_ok == len(results) else 3


# ---------------------------------------------------------------------------
# Argument parsing and entry point
# ---------------------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--format", choices=("json", "csv", "human"), default="json",
                     help="output format (default json)")
    sub.add_argument("--output", default=None, help="write report to this path")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED,
                     help=f"seed for randomized suites (default {DEFAULT_SEED})")
    sub.add_argument("--rel-tol", type=float, default=None,
                     help="quadrature relative tolerance override")
    sub.add_argument("--abs-tol", type=float, default=None,
                     help="quadrature absolute tolerance override")
    sub.add_argument("--max-subdivisions", type=int, default=None,
                     help="quadrature panel budget override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurzeta",
        description="Hurwitz zeta at integer k >= 2 via polylog-and-cotangent "
                    "closed forms, with series oracles and convergence scans.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("eval", help="evaluate zeta(k, b) by formula and oracle")
    p.add_argument("--k", type=int, required=True, help="integer exponent >= 2")
    p.add_argument("--b", required=True, help="complex offset: re[,im] or re+imi")
    _add_common(p)

    p = subs.add_parser("genfun", help="evaluate the generating function f(x, b)")
    p.add_argument("--x", required=True, help="point or grid start:stop:count")
    p.add_argument("--b", required=True, help="complex parameter")
    p.add_argument("--series-kmax", type=int, default=0,
                   help="cross-check each point against the defining series "
                        "summed to this k (0 = off)")
    _add_common(p)

    p = subs.add_parser("oddzeta", help="zeta(2j+1) from the cotangent integral")
    p.add_argument("--j", required=True, help="index in [1,10], or range LO-HI")
    _add_common(p)

    p = subs.add_parser("validate", help="run a validation suite")
    p.add_argument("--suite", required=True,
                   help="one of: " + ", ".join(SUITES))
    _add_common(p)

    p = subs.add_parser("sweep", help="parallel zeta evaluation over a (k, b) grid")
    p.add_argument("--k", required=True, help="comma-separated integer ks")
    p.add_argument("--b", required=True, help="real-part grid start:stop:count")
    p.add_argument("--b-im", type=float, default=0.0,
                   help="imaginary part applied to every grid b (default 0)")
    _add_common(p)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    tolerances = {}
    if args.rel_tol is not None:
        tolerances["rel_tol"] = args.rel_tol
    if args.abs_tol is not None:
        tolerances["abs_tol"] = args.abs_tol
    if args.max_subdivisions is not None:
        tolerances["max_subdivisions"] = args.max_subdivisions
    for key, val in tolerances.items():
        if val <= 0:
            raise UsageError(f"--{key.replace('_', '-')} must be positive, got {val}")
    params = {}
    if args.command == "eval":
        params = {"k": args.k, "b": args.b}
    elif args.command == "genfun":
        params = {"x": args.x, "b": args.b, "series_kmax": args.series_kmax}
    elif args.command == "oddzeta":
        params = {"j": args.j}
    elif args.command == "validate":
        params = {"suite": args.suite}
    elif args.command == "sweep":
        params = {"k": args.k, "b": args.b, "b_im": args.b_im}
    return RunConfig(
        command=args.command,
        params=params,
        tolerances=tolerances,
        output_format=args.format,
        output_path=args.output,
        seed=args.seed,
    )


COMMANDS = {
    "eval": cmd_eval,
    "genfun": cmd_genfun,
    "oddzeta": cmd_oddzeta,
    "validate": cmd_validate,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        envelope, code = COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HurzetaError as exc:
        err_env = ReportEnvelope(
            tool_version=__version__,
            config_echo=_config_echo(config_from_args(args)),
            results=[{"status": "error", "error_type": type(exc).__name__,
                      "message": str(exc)}],
            summary={"pass": 0, "fail": 1, "total": 1},
        )
        sys.stdout.write(render_json(err_env))
        print(f"error: {exc}", file=sys.stderr)
        return 3
    emit(envelope, cfg)
    return code


if __name__ == "__main__":
    sys.exit(main())
