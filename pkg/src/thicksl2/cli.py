"""Command-line entry point: ``thicksl2 verify | lr | canon | hom-rank | schur``."""

from __future__ import annotations

import argparse
import json
import re
import sys

from .config import SuiteConfig
from .errors import UsageError
from .partitions import parse_partition
from .runner import emit_report, run_suite
from .symfun import lr_product, schur, schur_bialternant, schur_dual_giambelli, schur_jacobi_trudy
from .udot import Tag, UdotElement, hom_rank_enumeration, hom_rank_formula, mul, to_canonical

_ELEMENT = re.compile(r"^(EF|FE|E|F|1)(?::(\d+)(?:,(\d+))?)?@(-?\d+)$")


def parse_udot(text: str) -> UdotElement:
    """``EF:a,b@n``, ``FE:a,b@n``, ``E:a@n``, ``F:b@n`` or ``1@n``; a is the E-power, b the F-power."""
    m = _ELEMENT.match(text.replace(" ", ""))
    if not m:
        raise UsageError(f"cannot parse element {text!r}; expected e.g. EF:1,2@0, E:2@-1, 1@3")
    kind, x, y, n = m.group(1), m.group(2), m.group(3), int(m.group(4))
    if kind in ("EF", "FE"):
        if x is None or y is None:
            raise UsageError(f"{kind} needs two powers, e.g. {kind}:1,2@{n}")
        return UdotElement.from_tag(Tag(kind, int(x), int(y)), n)
    if y is not None:
        raise UsageError(f"{kind} takes a single power")
    if kind == "1":
        return UdotElement.from_tag(Tag("EF", 0, 0), n)
    p = int(x) if x is not None else 1
    return UdotElement.from_tag(Tag("EF", p, 0) if kind == "E" else Tag("EF", 0, p), n)


def _udot_json(u: UdotElement) -> dict:
    return {"source": u.n, "target": u.m, "canonical": u.is_canonical_form(), "terms": u.as_json()}


def _add_globals(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "text"], default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--rank-max", type=int, default=None)
    p.add_argument("--weight-cutoff", type=int, default=None)
    p.add_argument("--config", default=None, help="JSON config file (default: $THICKSL2_CONFIG)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thicksl2", description="Exact checks for thick nilHecke calculus and U(sl2).")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default=None, help="arith, symfun, nilhecke, grassmannian, udot or all")
    v.add_argument("--no-timings", action="store_true", help="report ms as 0 so output is byte-stable")
    _add_globals(v)

    lr = sub.add_parser("lr", help="Littlewood-Richardson expansion of pi_alpha pi_beta")
    lr.add_argument("alpha")
    lr.add_argument("beta")
    lr.add_argument("--nvars", type=int, default=None)
    _add_globals(lr)

    c = sub.add_parser("canon", help="products and canonical forms in U(sl2)")
    c.add_argument("action", choices=["mult", "reduce"])
    c.add_argument("elements", nargs="+", help="EF:a,b@n, FE:a,b@n, E:a@n, F:b@n or 1@n")
    _add_globals(c)

    h = sub.add_parser("hom-rank", help="graded rank of HOM(E^(a)F^(b)1_n, ...) by two routes")
    h.add_argument("a", type=int)
    h.add_argument("b", type=int)
    h.add_argument("delta", type=int)
    h.add_argument("n", type=int)
    h.add_argument("--cutoff", type=int, default=20)
    _add_globals(h)

    s = sub.add_parser("schur", help="Schur polynomial by three formulas")
    s.add_argument("alpha")
    s.add_argument("--nvars", type=int, required=True)
    _add_globals(s)
    return parser


def _config(args: argparse.Namespace) -> SuiteConfig:
    cfg = SuiteConfig.from_file(args.config) if args.config else SuiteConfig.default()
    for key in ("format", "seed", "jobs", "rank_max", "weight_cutoff"):
        val = getattr(args, key, None)
        if val is not None:
            setattr(cfg, key, val)
    if getattr(args, "suite", None) is not None:
        cfg.suite = args.suite
    if getattr(args, "no_timings", False):
        cfg.timings = False
    return cfg.validate()


def _emit(obj: dict, fmt: str, text: str) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=1) + "\n" if fmt == "json" else text + "\n")


def _cmd_verify(cfg: SuiteConfig) -> int:
    reports = run_suite(cfg)
    sys.stdout.buffer.write(emit_report(reports, cfg.format, cfg.suite, cfg.seed))
    sys.stdout.flush()
    failed = sum(r.status == "fail" for r in reports)
    if failed:
        print(f"{failed} of {len(reports)} checks failed", file=sys.stderr)
    return 1 if failed else 0


def _cmd_lr(args: argparse.Namespace, cfg: SuiteConfig) -> int:
    al, be = parse_partition(args.alpha), parse_partition(args.beta)
    prod = sorted(lr_product(al, be, args.nvars).items())
    obj = {"alpha": str(al), "beta": str(be), "product": [{"gamma": str(g), "coeff": c} for g, c in prod]}
    text = "\n".join(f"{c:>4}  {g}" for g, c in prod)
    _emit(obj, cfg.format, text)
    return 0


def _cmd_canon(args: argparse.Namespace, cfg: SuiteConfig) -> int:
    elems = [parse_udot(t) for t in args.elements]
    if args.action == "mult":
        if len(elems) < 2:
            raise UsageError("mult needs at least two elements")
        out = elems[-1]
        for u in reversed(elems[:-1]):
            out = mul(u, out)
    else:
        if len(elems) != 1:
            raise UsageError("reduce takes exactly one element")
        out = elems[0]
    out = to_canonical(out)
    _emit(_udot_json(out), cfg.format, str(out))
    return 0


def _cmd_hom_rank(args: argparse.Namespace, cfg: SuiteConfig) -> int:
    r1 = hom_rank_formula(args.a, args.b, args.delta, args.n, args.cutoff)
    r2 = hom_rank_enumeration(args.a, args.b, args.delta, args.n, args.cutoff)
    obj = {
        "a": args.a, "b": args.b, "delta": args.delta, "n": args.n, "cutoff": args.cutoff,
        "formula": r1.as_json(), "enumeration": r2.as_json(), "agree": r1 == r2,
    }
    _emit(obj, cfg.format, f"formula:     {r1}\nenumeration: {r2}\nagree: {r1 == r2}")
    return 0 if r1 == r2 else 1


def _cmd_schur(args: argparse.Namespace, cfg: SuiteConfig) -> int:
    al, a = parse_partition(args.alpha), args.nvars
    if a < 1:
        raise UsageError("nvars must be positive")
    forms = {
        "branching": schur(al, a),
        "bialternant": schur_bialternant(al, a),
        "jacobi_trudy": schur_jacobi_trudy(al, a),
        "dual_giambelli": schur_dual_giambelli(al, a),
    }
    agree = len({str(f) for f in forms.values()}) == 1
    obj = {"alpha": str(al), "nvars": a, "forms": {k: str(v) for k, v in forms.items()}, "agree": agree}
    _emit(obj, cfg.format, f"{forms['branching']}\nagree: {agree}")
    return 0 if agree else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "verify":
            return _cmd_verify(cfg)
        if args.command == "lr":
            return _cmd_lr(args, cfg)
        if args.command == "canon":
            return _cmd_canon(args, cfg)
        if args.command == "hom-rank":
            return _cmd_hom_rank(args, cfg)
        return _cmd_schur(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
