"""Command-line entry point: ``fst <subcommand> [options]``.

Exit status is 0 on success, 1 when a verification finds a failure and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .basis import enumerate_basis, graded_series
from .conditions import enumerate_leading_shapes, satisfies_dc, satisfies_ic, with_imaginary_part
from .core import IndexRangeError, MonomialSyntaxError, format_monomial, parse_monomial, parse_weight
from .decompose import factorize
from .model import DimensionMismatch, build_level1_model, verify_independence
from .relations import graded_relations, relation_to_json, verify_leading_terms


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fst", description="Monomial bases of Feigin-Stoyanovsky type subspaces for C_l^(1).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--ell", type=_positive, required=True, help="rank l of C_l")
        p.add_argument("--weight", required=True, help="k0,k1,...,kl")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--jobs", type=_positive, default=1, help="worker processes for per-degree work")

    p = sub.add_parser("check", help="DC/IC verdict for one monomial")
    common(p)
    p.add_argument("--monomial", required=True)

    p = sub.add_parser("enumerate", help="basis monomials of one degree")
    common(p)
    p.add_argument("--degree", type=_nonneg, required=True)

    p = sub.add_parser("series", help="graded dimensions up to a cutoff")
    common(p)
    p.add_argument("--cutoff", type=_nonneg, required=True)

    p = sub.add_parser("relations", help="truncated relations of one degree")
    common(p)
    p.add_argument("--degree", type=_nonneg, required=True)

    p = sub.add_parser("leading-terms", help="leading-term shapes and their verification")
    common(p)
    p.add_argument("--max-degree", type=_nonneg, required=True)

    p = sub.add_parser("factorize", help="split into level-1 monomials")
    common(p)
    p.add_argument("--monomial", required=True)

    p = sub.add_parser("verify", help="quotient dimensions and tensor independence")
    common(p)
    p.add_argument("--max-degree", type=_nonneg, required=True)
    p.add_argument("--mode", choices=("rational", "prime"), default="prime")
    return parser


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text + ("\n" if text and not text.endswith("\n") else ""))


def _monomial(args):
    try:
        m = parse_monomial(args.monomial, args.ell)
    except (MonomialSyntaxError, IndexRangeError) as exc:
        raise UsageError(str(exc)) from None
    if any(v.depth < 1 for v in m):
        raise UsageError("factors must have depth >= 1")
    return m


def cmd_check(args, w) -> int:
    m = _monomial(args)
    dc = satisfies_dc(m, w.level)
    ic = satisfies_ic(m, w)
    reasons = [name for name, ok in (("DC", dc.satisfied), ("IC", ic)) if not ok]
    witness = dc.witness
    if witness is None and not ic:
        witness = satisfies_dc(with_imaginary_part(m, w), w.level, allow_imaginary=True).witness
    payload = {
        "monomial": format_monomial(m),
        "weight": str(w),
        "level": w.level,
        "satisfied": not reasons,
        "dc": dc.satisfied,
        "ic": ic,
        "reason": "+".join(reasons) or None,
        "witness": None if witness is None else format_monomial(witness),
    }
    text = "true" if not reasons else f"false ({payload['reason']}; witness {payload['witness']})"
    _emit(args, payload, text)
    return 0


def cmd_enumerate(args, w) -> int:
    ms = enumerate_basis(args.ell, w, args.degree)
    payload = {"weight": str(w), "degree": args.degree, "count": len(ms), "monomials": [format_monomial(m) for m in ms]}
    _emit(args, payload, "\n".join(format_monomial(m) or "1" for m in ms))
    return 0


def cmd_series(args, w) -> int:
    s = graded_series(args.ell, w, args.cutoff, jobs=args.jobs)
    _emit(args, s.to_json(), str(s))
    return 0


def cmd_relations(args, w) -> int:
    rels = graded_relations(args.ell, w.level, args.degree)
    payload = [relation_to_json(r) for r in rels]
    lines = []
    for r in payload:
        body = " + ".join(f"({t['coeff']})*{t['monomial']}" for t in r["terms"])
        lines.append(f"{r['multiset']} N={r['degree']}: {body} = 0")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_leading_terms(args, w) -> int:
    k = w.level
    shapes = {
        str(n): [format_monomial(s.monomial()) for s in enumerate_leading_shapes(args.ell, k, n)]
        for n in range(k + 1, args.max_degree + 1)
    }
    report = verify_leading_terms(args.ell, k, args.max_degree)
    lines = [f"N={n}: " + ", ".join(v) for n, v in shapes.items()]
    lines.append(f"checked {report.checked} relations, {len(report.mismatches)} mismatches")
    _emit(args, {"shapes": shapes, "verification": report.to_json()}, "\n".join(lines))
    return 0 if report.ok else 1


def cmd_factorize(args, w) -> int:
    m = _monomial(args)
    fac = factorize(m, w)
    payload = None if fac is None else fac.to_json()
    if fac is None:
        text = "no factorization (DC/IC fails)"
    else:
        text = "\n".join(f"L{r}: {format_monomial(p) or '1'}" for p, r in zip(fac.parts, fac.assignments))
    _emit(args, payload, text)
    return 0


def cmd_verify(args, w) -> int:
    models = {}
    model_entries = []
    ok = True
    for r in sorted(set(w.slots())):
        try:
            models[r] = build_level1_model(args.ell, r, args.max_degree, args.mode, jobs=args.jobs)
            model_entries.append({"r": r, "dims": models[r].dims, "ok": True})
        except DimensionMismatch as exc:
            ok = False
            model_entries.append({"r": r, "error": str(exc), "ok": False})
    payload: dict = {"weight": str(w), "degrees": [], "mode": args.mode}
    if ok:
        report = verify_independence(args.ell, w, args.max_degree, args.mode, models)
        payload = report.to_json()
        ok = report.ok
    payload["models"] = model_entries
    lines = [f"L{e['r']}: dims {e.get('dims', e.get('error'))}" for e in model_entries]
    lines += [
        f"N={d['N']}: count {d['count']} rankBasis {d['rankBasis']} rankAll {d['rankAll']} {'ok' if d['ok'] else 'FAIL'}"
        for d in payload["degrees"]
    ]
    lines.append("ok" if ok else "FAIL")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


COMMANDS = {
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "series": cmd_series,
    "relations": cmd_relations,
    "leading-terms": cmd_leading_terms,
    "factorize": cmd_factorize,
    "verify": cmd_verify,
}


def run(argv: Sequence[str]) -> int:
    """Parse ``argv``, run one subcommand and return its exit status."""
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8", newline="\n")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        try:
            w = parse_weight(args.weight, args.ell)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if w.level < 1:
            raise UsageError("weight must have level >= 1")
        return COMMANDS[args.command](args, w)
    except UsageError as exc:
        sys.stderr.write(f"fst {args.command}: {exc}\n")
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
