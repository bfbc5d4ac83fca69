"""``bfc`` command-line front end.

Exit codes: 0 on success (and when every verified statement holds), 1 when a
verification finds a failure, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import census as census_mod
from .algebraic import anf, f2_degree
from .constructions import (
    SubcubeSpec,
    counterexample_n15,
    paper_example_n4,
    random_function,
    random_low_f2_degree,
    subcube,
)
from .core import MAX_DIMENSION, check_dimension, dumps, dumps_support, loads, support
from .errors import BFCError, WitnessNotFound
from .measures import ALL_MEASURES, CERTIFICATE_CAP, DEPTH_CAP, tradeoff_report
from .spectral import wht
from .vc import DESIGN_CHECKS, extract_shattered_from_design, vc_dimension

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class Config:
    transform_cap: int = MAX_DIMENSION
    certificate_cap: int = CERTIFICATE_CAP
    depth_cap: int = DEPTH_CAP
    threads: int = 1
    output: str = "text"
    seed: int = 0

    def __post_init__(self):
        for name in ("transform_cap", "certificate_cap", "depth_cap", "threads"):
            if getattr(self, name) < 1:
                raise BFCError(f"{name} must be at least 1")
        if self.output not in ("text", "json"):
            raise BFCError(f"unknown output mode {self.output!r}")


class UsageError(BFCError):
    pass


def _emit(payload: dict, cfg: Config, text_lines: list[str], out) -> None:
    if cfg.output == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _load(args, cfg: Config):
    source = args.input
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from exc
    f = loads(text, source=source)
    check_dimension(f.n, cfg.transform_cap)
    return f


def cmd_spectrum(args, cfg, out):
    f = _load(args, cfg)
    spec = wht(f)
    rows = [
        (s, int(c)) for s, c in enumerate(spec.coeffs) if c or not args.nonzero
    ]
    lines = [f"n {f.n} scale {spec.scale}"] + [f"{s} {c}" for s, c in rows]
    payload = {"n": f.n, "scale": spec.scale, "coeffs": [[s, c] for s, c in rows]}
    _emit(payload, cfg, lines, out)
    return EXIT_OK


def cmd_anf(args, cfg, out):
    f = _load(args, cfg)
    poly = anf(f)
    if args.degree_only:
        deg = f2_degree(poly)
        _emit({"n": f.n, "degree": deg}, cfg, [str(deg)], out)
        return EXIT_OK
    monos = poly.monomials()
    _emit({"n": f.n, "monomials": monos}, cfg, [str(m) for m in monos], out)
    return EXIT_OK


def _witness_lines(witness) -> list[str]:
    return [f"{u} {member}" for u, member in sorted(witness.realizers.items())]


def cmd_vc(args, cfg, out):
    f = _load(args, cfg)
    d, witness = vc_dimension(support(f))
    payload = {"n": f.n, "vc": d}
    lines = [f"vc {d}"]
    if args.witness:
        payload["witness"] = {
            "t_mask": witness.t_mask,
            "realizers": [[u, m] for u, m in sorted(witness.realizers.items())],
        }
        lines += [f"t_mask {witness.t_mask}"] + _witness_lines(witness)
    _emit(payload, cfg, lines, out)
    return EXIT_OK


def cmd_design_check(args, cfg, out):
    f = _load(args, cfg)
    report = DESIGN_CHECKS[args.condition](support(f), args.d)
    violation = report.violation
    if report.holds:
        line = "holds"
    elif isinstance(violation, tuple):
        line = f"fails S={violation[0]} T={violation[1]}"
        violation = list(violation)
    else:
        line = f"fails {violation}"
    payload = {
        "n": f.n,
        "d": report.d,
        "condition": report.condition,
        "holds": report.holds,
        "violation": violation,
    }
    _emit(payload, cfg, [line], out)
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_extract(args, cfg, out):
    f = _load(args, cfg)
    witness = extract_shattered_from_design(f, args.d)
    payload = {
        "n": f.n,
        "d": args.d,
        "t_mask": witness.t_mask,
        "realizers": [[u, m] for u, m in sorted(witness.realizers.items())],
    }
    _emit(payload, cfg, [f"t_mask {witness.t_mask}"] + _witness_lines(witness), out)
    return EXIT_OK


def cmd_measures(args, cfg, out):
    f = _load(args, cfg)
    which = tuple(x.strip() for x in args.set.split(",") if x.strip())
    unknown = [w for w in which if w not in ALL_MEASURES]
    if unknown:
        raise UsageError(f"unknown measure(s): {', '.join(unknown)}")
    report = tradeoff_report(f, cfg.certificate_cap, cfg.depth_cap, which)
    lines = [f"n {f.n}"]
    lines += [f"{k} {v}" for k, v in report.measures.items()]
    lines += [f"skipped {k}: {v}" for k, v in report.skipped.items()]
    for q in report.inequalities:
        tag = "holds" if q.holds else "FAILS"
        note = "" if q.expected else " (not a theorem)"
        lines.append(f"{q.name} {q.lhs} >= {q.rhs} {tag}{note}")
    _emit(report.to_dict(), cfg, lines, out)
    return EXIT_OK if report.all_expected_hold else EXIT_FAIL


def _parse_fixes(text: Optional[str]) -> tuple:
    if not text:
        return ()
    fixes = []
    for item in text.split(","):
        try:
            j, v = item.split("=")
            fixes.append((int(j), int(v)))
        except ValueError as exc:
            raise UsageError(f"bad --fix item {item!r}; expected j=v") from exc
    return tuple(fixes)


def cmd_construct(args, cfg, out):
    kind = args.kind
    if kind == "subcube":
        f = subcube(SubcubeSpec(args.n, _parse_fixes(args.fix)))
    elif kind == "example-n4":
        f = paper_example_n4()
    elif kind == "counterexample15":
        f = counterexample_n15()
    elif kind == "random":
        f = random_function(args.n, args.p, cfg.seed)
    else:  # low-degree
        f = random_low_f2_degree(args.n, args.d, cfg.seed)
    text = dumps_support(f) if args.format == "supp" else dumps(f)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _census_lines(rows) -> list[str]:
    lines = ["n total deg_equality f2_equality"]
    for r in rows:
        lines.append(f"{r.n} {r.total_functions} {r.deg_equality_count} {r.f2_equality_count}")
        for label, tables in (("deg", r.deg_equalities), ("f2", r.f2_equalities)):
            for t in tables or ():
                lines.append(f"  {label} {t}")
    return lines


def cmd_census(args, cfg, out):
    ns = range(1, census_mod.CENSUS_CAP + 1) if args.n is None else [args.n]
    rows = [census_mod.equality_census(k, cfg.threads, keep=args.list) for k in ns]
    payload = {"rows": [r.to_dict() for r in rows]}
    _emit(payload, cfg, _census_lines(rows), out)
    return EXIT_OK


def cmd_verify(args, cfg, out):
    if args.mode == "exhaustive":
        report = census_mod.verify_exhaustive(args.n, cfg.threads)
    else:
        report = census_mod.verify_sampled(
            args.n, args.trials, cfg.seed, cfg.certificate_cap, cfg.depth_cap
        )
    lines = [f"n {report.n} mode {report.mode} trials {report.trials}"]
    for name, passed in report.passes.items():
        lines.append(f"{name} passed {passed} failed {report.failures[name]}")
    lines += [f"{name} skipped: {why}" for name, why in report.skipped.items()]
    if report.first_failure:
        ff = report.first_failure
        lines.append(f"counterexample {ff['check']} n={ff['n']} table={ff['table']}")
    lines.append("ok" if report.ok else "FAILED")
    _emit(report.to_dict(), cfg, lines, out)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--threads", type=int, default=None, help="worker threads (env BFC_THREADS)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cert-cap", type=int, default=None, help="max n for certificate complexity")
    common.add_argument("--depth-cap", type=int, default=None, help="max n for decision-tree depth")
    common.add_argument("--transform-cap", type=int, default=MAX_DIMENSION)

    parser = argparse.ArgumentParser(prog="bfc", description="Boolean function complexity toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--input", "-i", required=True, help=".bft or support file, '-' for stdin")
        return p

    p = with_input("spectrum", "unnormalised Walsh-Hadamard coefficients")
    p.add_argument("--nonzero", action="store_true", help="only list non-zero coefficients")
    p.set_defaults(func=cmd_spectrum)

    p = with_input("anf", "algebraic normal form over F2")
    p.add_argument("--degree-only", action="store_true")
    p.set_defaults(func=cmd_anf)

    p = with_input("vc", "VC-dimension of the support")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_vc)

    p = with_input("design-check", "F2 null-design parity conditions")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--condition", choices=sorted(DESIGN_CHECKS), default="i")
    p.set_defaults(func=cmd_design_check)

    p = with_input("extract-shattered", "shattered (d+1)-set from a null d-design")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_extract)

    p = with_input("measures", "complexity measures and trade-off inequalities")
    p.add_argument("--set", default=",".join(ALL_MEASURES))
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("construct", parents=[common], help="emit a named or random function")
    p.add_argument("kind", choices=["subcube", "example-n4", "counterexample15", "random", "low-degree"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--fix", default=None, help="subcube fixes, e.g. 1=0,3=1")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--d", type=int, default=None, help="F2-degree bound for low-degree")
    p.add_argument("--format", choices=["bft", "supp"], default="bft")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("census", parents=[common], help="equality census for n <= 4")
    p.add_argument("--n", type=int, default=None, help="dimension; all of 1..4 if omitted")
    p.add_argument("--list", action="store_true", help="also list the equality functions")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", parents=[common], help="exhaustive or sampled verification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_verify)
    return parser


def _config(args) -> Config:
    sampled = getattr(args, "mode", None) == "sampled"
    cert = args.cert_cap or (census_mod.SAMPLED_CERTIFICATE_CAP if sampled else CERTIFICATE_CAP)
    depth = args.depth_cap or (census_mod.SAMPLED_DEPTH_CAP if sampled else DEPTH_CAP)
    return Config(
        transform_cap=args.transform_cap,
        certificate_cap=cert,
        depth_cap=depth,
        threads=census_mod.resolve_threads(args.threads),
        output="json" if args.json else "text",
        seed=args.seed,
    )


def _check_construct_args(args) -> None:
    if args.command != "construct":
        return
    if args.kind in ("subcube", "random", "low-degree") and args.n is None:
        raise UsageError(f"construct {args.kind} requires --n")
    if args.kind == "low-degree" and args.d is None:
        raise UsageError("construct low-degree requires --d")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        _check_construct_args(args)
        cfg = _config(args)
        return args.func(args, cfg, out)
    except WitnessNotFound as exc:
        err.write(f"bfc: internal inconsistency: {exc}\n")
        return EXIT_FAIL
    except (BFCError, ValueError) as exc:
        err.write(f"bfc: error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
