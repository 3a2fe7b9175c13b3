"""fflseries command line: run one job, write a JSON report, exit with a status code.

Exit codes: 0 success, 1 validation error, 2 exact-check failure,
3 reconstruction failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from ..algebra.cyclotomic import GaloisAutomorphism
from ..algebra.series import series_log_derivative
from ..characters import DirichletCharacter
from ..curves import EllipticSurfaceModel
from ..errors import ConfigError, FFLError, PoleAtCenter, ReconstructionFailed
from ..fields import FqPoly, field_create, parse_order
from ..lseries import (
    LSeries,
    assemble_l_series,
    curve_factors,
    curve_l,
    direct_sum_l,
    dirichlet_factors,
    dirichlet_l,
    divisor_coefficients,
    equivariance_check,
    evaluate_leading,
    local_coefficient_tables,
    reconstruct,
    trace_sums,
    twist_factors,
    twist_l,
    zeta_factors,
    zeta_l,
)
from .config import JobConfig, parse_character, parse_curve

EXIT_OK, EXIT_VALIDATION, EXIT_CHECK, EXIT_RECONSTRUCTION = 0, 1, 2, 3


# ---------------------------------------------------------------------------
# building objects from a configuration


def _field(cfg: JobConfig):
    try:
        p, e = parse_order(cfg.q)
    except (TypeError, ValueError) as exc:
        raise ConfigError("q", str(exc)) from None
    try:
        return field_create(p, e)
    except FFLError as exc:
        raise ConfigError("q", str(exc)) from None


def _coeffs(F, values, name: str) -> FqPoly:
    if not isinstance(values, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in values):
        raise ConfigError(name, "expected a list of integer coefficients, lowest degree first")
    if F.k == 1:
        return FqPoly(F, [c % F.p for c in values])
    if any(not 0 <= c < F.order for c in values):
        raise ConfigError(name, f"coefficients over F_{F.order} are element codes in [0, {F.order})")
    return FqPoly(F, values)


def _curve(cfg: JobConfig, F) -> EllipticSurfaceModel | None:
    if cfg.curve is None:
        return None
    return EllipticSurfaceModel(F, _coeffs(F, cfg.curve["A"], "curve.A"), _coeffs(F, cfg.curve["B"], "curve.B"))


def _characters(cfg: JobConfig, F) -> list[DirichletCharacter]:
    out = []
    for i, rec in enumerate(cfg.characters):
        if not isinstance(rec, dict):
            raise ConfigError(f"characters[{i}]", "expected a character record")
        _coeffs(F, rec.get("modulus"), f"characters[{i}].modulus")
        try:
            out.append(DirichletCharacter.from_json(F, rec))
        except ConfigError as exc:
            raise ConfigError(f"characters[{i}].{exc.field.split('.')[-1]}", exc.message) from None
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"characters[{i}]", str(exc)) from None
    return out


def _single_character(chars: list[DirichletCharacter], task: str) -> DirichletCharacter:
    if len(chars) != 1:
        raise ConfigError("characters", f"task {task} takes exactly one character")
    return chars[0]


def _local_factors(cfg: JobConfig, F, E, chars, explicit=False):
    N, inf = cfg.trunc, cfg.include_infinity
    if chars:
        chi = _single_character(chars, cfg.task)
        if E is not None:
            return twist_factors(E, chi, N, inf, explicit)
        return dirichlet_factors(chi, N, inf, explicit)
    if E is not None:
        return curve_factors(E, N, inf, explicit)
    return zeta_factors(F, N, inf, explicit)


# ---------------------------------------------------------------------------
# running a job


def _values_block(L: LSeries, cfg: JobConfig, report: dict) -> int:
    try:
        R = reconstruct(L, cfg.degree_bound_num, cfg.degree_bound_den)
    except ReconstructionFailed as exc:
        report["series"] = L.to_json()
        report["checks"]["reconstruction"] = {"passed": False, "message": str(exc)}
        return EXIT_RECONSTRUCTION
    report["series"] = R.to_json()
    report["bounds"] = R.provenance["bounds"]
    report["checks"]["reconstruction"] = {"passed": True}
    try:
        report["values"] = evaluate_leading(R, cfg.derivatives).to_json()
    except PoleAtCenter as exc:
        report["values"] = {"pole_order": exc.order}
    return EXIT_OK


def _sigmas(cfg: JobConfig, n: int) -> list[GaloisAutomorphism]:
    if cfg.sigma is None:
        return GaloisAutomorphism.all(n)
    out = []
    for a in cfg.sigma:
        if n > 1 and gcd(a, n) != 1:
            raise ConfigError("sigma", f"{a} is not a unit mod {n}")
        out.append(GaloisAutomorphism(n, a))
    return out


def run(cfg: JobConfig) -> tuple[int, dict]:
    """Execute a validated job; returns (exit status, report)."""
    cfg.validate()
    F = _field(cfg)
    E = _curve(cfg, F)
    chars = _characters(cfg, F)
    N, inf = cfg.trunc, cfg.include_infinity
    report: dict = {
        "config": cfg.to_dict(),
        "field": F.to_json(),
        "task": cfg.task,
        "checks": {},
    }
    status = EXIT_OK

    if cfg.task == "zeta":
        status = _values_block(zeta_l(F, N, inf), cfg, report)
    elif cfg.task == "dirichlet":
        parts = [dirichlet_l(chi, N, inf) for chi in chars]
        L = parts[0] if len(parts) == 1 else direct_sum_l(parts)
        L.provenance["default_dnum"] = sum(chi.modulus.degree for chi in chars)
        status = _values_block(L, cfg, report)
    elif cfg.task == "curve":
        status = _values_block(curve_l(E, N, inf), cfg, report)
    elif cfg.task == "twist":
        chi = _single_character(chars, cfg.task)
        status = _values_block(twist_l(E, chi, N, inf), cfg, report)
    elif cfg.task == "equivariance":
        chi = _single_character(chars, cfg.task)
        verdicts = []
        for sigma in _sigmas(cfg, chi.n):
            v = equivariance_check(E, chi, sigma, N, cfg.derivatives, inf, cfg.degree_bound_num, cfg.degree_bound_den)
            verdicts.append(v.to_json())
        report["equivariance"] = verdicts
        passed = all(v["passed"] for v in verdicts)
        report["checks"]["equivariance"] = {"passed": passed}
        if not passed:
            status = EXIT_CHECK
    elif cfg.task == "trace-check":
        local = _local_factors(cfg, F, E, chars)
        L = assemble_l_series(local, N, inf)
        ld = series_log_derivative(L.series)
        first = None
        for n in range(1, N + 1):
            if ld[n] != trace_sums(local, n):
                first = n
                break
        report["series"] = L.to_json()
        report["trace_sums"] = [trace_sums(local, n).to_json() for n in range(1, N + 1)]
        report["checks"]["trace_identity"] = {"passed": first is None, "first_difference": first}
        if first is not None:
            status = EXIT_CHECK
    elif cfg.task == "divisor-check":
        local = _local_factors(cfg, F, E, chars, explicit=True)
        L = assemble_l_series(local, N, inf)
        tables = local_coefficient_tables(local.places, N)
        first = None
        sums = []
        for m in range(N + 1):
            s = divisor_coefficients(tables, m, L.n)
            sums.append(s.to_json())
            if first is None and s != L.series[m]:
                first = m
        report["series"] = L.to_json()
        report["divisor_sums"] = sums
        report["checks"]["rearrangement"] = {"passed": first is None, "first_difference": first}
        if first is not None:
            status = EXIT_CHECK

    report["exit_code"] = status
    report["status"] = {EXIT_OK: "ok", EXIT_CHECK: "check_failed", EXIT_RECONSTRUCTION: "reconstruction_failed"}[status]
    return status, report


def emit_report(report: dict) -> str:
    """Deterministic JSON: sorted keys, exact rationals as 'p/q' strings."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def summary(report: dict) -> str:
    fld = report["field"]
    q = fld["p"] if fld["k"] == 1 else f"{fld['p']}^{fld['k']}"
    lines = [f"task {report['task']} over F_{q}: {report['status']}"]
    series = report.get("series")
    if series:
        lines.append("  coefficients: " + ", ".join(_brief(c) for c in series["coefficients"]))
        if "denominator" in series:
            lines.append("  numerator:    " + ", ".join(_brief(c) for c in series["numerator"]))
            lines.append("  denominator:  " + ", ".join(_brief(c) for c in series["denominator"]))
    values = report.get("values")
    if values:
        if "pole_order" in values:
            lines.append(f"  pole of order {values['pole_order']} at T = 1/q")
        else:
            lines.append("  A_j: " + ", ".join(_brief(c) for c in values["A"]))
    for v in report.get("equivariance", []):
        lines.append(f"  sigma = {v['sigma']} mod {v['n']}: {'pass' if v['passed'] else 'FAIL'}")
    for name, check in sorted(report["checks"].items()):
        lines.append(f"  {name}: {'pass' if check['passed'] else 'FAIL'}")
    return "\n".join(lines)


def _brief(c: dict) -> str:
    coeffs = c["coeffs"]
    if not coeffs:
        return "0"
    if len(coeffs) == 1:
        return coeffs[0]
    return "(" + ", ".join(coeffs) + f")_z{c['n']}"


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fflseries", description="L-series of Artin twists over F_q(t)")
    ap.add_argument("--config", metavar="PATH", help="JSON job configuration (an emitted report also works)")
    ap.add_argument("--task", choices=("zeta", "dirichlet", "curve", "twist", "equivariance", "trace-check", "divisor-check"))
    ap.add_argument("--q", metavar="P[^E]", help="base field order")
    ap.add_argument("--trunc", metavar="N", type=int, help="truncation order")
    ap.add_argument("--degree-bound-num", metavar="D", type=int)
    ap.add_argument("--degree-bound-den", metavar="D", type=int)
    ap.add_argument("--include-infinity", action=argparse.BooleanOptionalAction, default=None)
    ap.add_argument("--derivatives", metavar="K", type=int, help="report A_0..A_K")
    ap.add_argument("--sigma", metavar="A[,A...]", help="automorphisms zeta -> zeta^a to check")
    ap.add_argument("--curve", metavar="A;B", help="coefficients 'a0,a1,...;b0,b1,...'")
    ap.add_argument("--character", metavar="CHAR", action="append", help="'m0,m1,...:n:e1,...[:inf]' (repeatable)")
    ap.add_argument("--out", metavar="PATH", help="write the JSON report here instead of stdout")
    return ap


def config_from_args(args: argparse.Namespace) -> JobConfig:
    cfg = JobConfig.load(args.config) if args.config else JobConfig()
    if args.task is not None:
        cfg.task = args.task
    if args.q is not None:
        cfg.q = args.q
    if args.trunc is not None:
        cfg.trunc = args.trunc
    if args.degree_bound_num is not None:
        cfg.degree_bound_num = args.degree_bound_num
    if args.degree_bound_den is not None:
        cfg.degree_bound_den = args.degree_bound_den
    if args.include_infinity is not None:
        cfg.include_infinity = args.include_infinity
    if args.derivatives is not None:
        cfg.derivatives = args.derivatives
    if args.sigma is not None:
        try:
            cfg.sigma = [int(a) for a in args.sigma.split(",") if a.strip()]
        except ValueError:
            raise ConfigError("sigma", f"expected a comma-separated list of integers, got {args.sigma!r}") from None
    if args.curve is not None:
        cfg.curve = parse_curve(args.curve)
    if args.character:
        cfg.characters = [parse_character(c) for c in args.character]
    if args.out is not None:
        cfg.out = args.out
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        status, report = run(cfg)
    except OSError as exc:
        print(exc, file=sys.stderr)
        return EXIT_VALIDATION
    except ConfigError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except FFLError as exc:
        if isinstance(exc, (ReconstructionFailed, PoleAtCenter)):
            raise
        print(f"validation error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    text = emit_report(report)
    if cfg.out:
        try:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(exc, file=sys.stderr)
            return EXIT_VALIDATION
        print(summary(report))
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
