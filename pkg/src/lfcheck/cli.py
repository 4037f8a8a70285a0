"""Batch front end.

Subcommands map one-to-one onto the library verifiers:

    verify sos                  square-law identity for the 324-degree product
    verify case <id>            one taxonomy case (--tamper N: soundness probe)
    verify all                  every case
    verify bridge               symmetric-square-of-cube ratio identity
    expand <expr>               normal form + coefficient polynomial
    scan --form1 .. --form2 ..  numeric positivity scan over prime points
    poles <expr> --hyp <file>   pole-order ledger under declared shapes

Exit status: 0 when every verdict is PASS, 1 on any verification failure,
2 on usage errors.  `--json` switches the report to JSON.  Hypothesis
files are `key = value` lines: type_pi and type_pi' (dihedral,
tetrahedral, octahedral, or general), plus optional booleans twist_equiv
and chi_ad_selftwist.  Worker count for the scan comes from --threads or
the LCALC_THREADS environment variable.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .casebook import (
    CASE_IDS,
    CaseError,
    CaseReport,
    run_all,
    verify_case,
    verify_plethysm_bridge,
)
from .dseries import scan_positivity, verify_sos
from .exprlang import ExprError, parse_expr
from .hypotheses import GL2Type, Hypotheses
from .ingest import (
    BoundError,
    IngestError,
    builtin_form,
    load_eigenvalue_file,
    parse_char_spec,
    prepare_scan_points,
)
from .poles import PoleError, pole_order, self_dual_abelian_entries
from .repalg import RepAlgError, decompose_under
from .report import Report, Section, Verdict, digest, render_json, render_text
from .satake import CoefficientError, coeff_poly


class UsageError(ValueError):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lfcheck",
        description="verification engine for the degree-324 positivity product",
    )
    ap.add_argument("--json", action="store_true", help="emit the report as JSON")
    sub = ap.add_subparsers(dest="cmd", required=True)

    pv = sub.add_parser("verify", help="run a named verifier")
    pv.add_argument("what", choices=("sos", "case", "all", "bridge"))
    pv.add_argument("case_id", nargs="?", default=None)
    pv.add_argument(
        "--tamper",
        type=int,
        default=None,
        metavar="N",
        help="perturb the N-th claimed entry first (detection probe)",
    )

    pe = sub.add_parser("expand", help="normal form of a rep expression")
    pe.add_argument("expr")

    ps = sub.add_parser("scan", help="numeric positivity scan")
    ps.add_argument("--form1", required=True, help="delta, 11a, or a TSV path")
    ps.add_argument("--form2", required=True, help="delta, 11a, or a TSV path")
    ps.add_argument(
        "--char", required=True, help="trivial, kronecker:<d>, or a table path"
    )
    ps.add_argument("--xmax", type=int, required=True)
    ps.add_argument("--lmax", type=int, default=3)
    ps.add_argument("--tol", type=float, default=1e-9)
    ps.add_argument("--threads", type=int, default=None)

    pp = sub.add_parser("poles", help="pole-order ledger for an expression")
    pp.add_argument("expr")
    pp.add_argument("--hyp", required=True, help="hypothesis file (key = value)")
    return ap


def _file_digest(path: str) -> str:
    with open(path, "rb") as fh:
        return digest(fh.read().decode(errors="replace"))


_TYPES = {t.name.lower(): t for t in GL2Type}
_BOOLS = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def parse_hyp_file(path: str) -> Hypotheses:
    fields: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, val = (part.strip() for part in line.split("=", 1))
            if key in fields:
                raise UsageError(f"{path}:{lineno}: duplicate key {key!r}")
            fields[key] = val
    for req in ("type_pi", "type_pi'"):
        if req not in fields:
            raise UsageError(f"{path}: missing required key {req!r}")
    kwargs = {}
    for key, dest in (("type_pi", "type_pi"), ("type_pi'", "type_pi2")):
        val = fields.pop(key).lower()
        if val not in _TYPES:
            raise UsageError(
                f"{path}: {key} must be one of {', '.join(_TYPES)}; got {val!r}"
            )
        kwargs[dest] = _TYPES[val]
    for key in ("twist_equiv", "chi_ad_selftwist"):
        if key in fields:
            val = fields.pop(key).lower()
            if val not in _BOOLS:
                raise UsageError(f"{path}: {key} must be a boolean, got {val!r}")
            kwargs[key] = _BOOLS[val]
    if fields:
        raise UsageError(f"{path}: unknown keys: {', '.join(sorted(fields))}")
    try:
        return Hypotheses(**kwargs)
    except ValueError as e:
        raise UsageError(f"{path}: {e}") from None


def _case_section(cr: CaseReport) -> Section:
    return Section(
        heading=f"case {cr.case_id}: {cr.title}",
        subheading=cr.hypotheses,
        verdicts=list(cr.verdicts),
    )


def _cmd_verify(args) -> Report:
    if args.what == "case":
        if args.case_id is None:
            raise UsageError(
                f"verify case needs a case id (one of {', '.join(CASE_IDS)})"
            )
    elif args.case_id is not None:
        raise UsageError(f"verify {args.what} takes no case id")
    if args.tamper is not None and args.what != "case":
        raise UsageError("--tamper applies only to verify case")

    if args.what == "sos":
        rep = Report("verify sos", digest("verify sos", __version__))
        for name, ok, detail in verify_sos():
            rep.verdicts.append(Verdict(name, "PASS" if ok else "FAIL", detail))
        return rep
    if args.what == "bridge":
        rep = Report("verify bridge", digest("verify bridge", __version__))
        rep.sections.append(_case_section(verify_plethysm_bridge()))
        return rep
    if args.what == "all":
        rep = Report("verify all", digest("verify all", __version__))
        for cr in run_all():
            rep.sections.append(_case_section(cr))
        return rep
    cmd = f"verify case {args.case_id}"
    parts = [cmd, __version__]
    if args.tamper is not None:
        cmd += f" --tamper {args.tamper}"
        parts.append(str(args.tamper))
    rep = Report(cmd, digest(*parts))
    rep.sections.append(_case_section(verify_case(args.case_id, args.tamper)))
    return rep


def _cmd_expand(args) -> Report:
    V = parse_expr(args.expr)
    rep = Report(f"expand {args.expr!r}", digest("expand", args.expr))
    form = " (+) ".join(
        f"{k.pretty()}" if m == 1 else f"{m} * {k.pretty()}"
        for k, m in V.entries
    ) or "0"
    rep.verdicts.append(
        Verdict("normal form", "PASS", f"{len(V.entries)} kinds: {form}")
    )
    rep.verdicts.append(Verdict("degree", "PASS", str(V.degree)))
    try:
        poly = coeff_poly(V)
        rep.verdicts.append(
            Verdict("coefficient polynomial", "PASS", poly.pretty())
        )
    except CoefficientError as e:
        rep.verdicts.append(Verdict("coefficient polynomial", "UNKNOWN", str(e)))
    return rep


def _resolve_form(src: str, xmax: int):
    if src in ("delta", "11a"):
        return builtin_form(src, xmax), src
    return load_eigenvalue_file(src), _file_digest(src)


def _cmd_scan(args) -> Report:
    cmd = (
        f"scan --form1 {args.form1} --form2 {args.form2} --char {args.char} "
        f"--xmax {args.xmax} --lmax {args.lmax}"
    )
    rep = Report(cmd, "")
    try:
        form1, d1 = _resolve_form(args.form1, args.xmax)
        form2, d2 = _resolve_form(args.form2, args.xmax)
    except BoundError as e:
        rep.inputs_digest = digest(cmd)
        rep.verdicts.append(Verdict("eigenvalue bound", "FAIL", str(e)))
        return rep
    char = parse_char_spec(args.char)
    rep.inputs_digest = digest(cmd, d1, d2, args.char, str(args.tol))
    points, skipped = prepare_scan_points(form1, form2, char, args.xmax)
    res = scan_positivity(points, args.lmax, args.tol, args.threads)

    skipped_txt = ",".join(map(str, skipped)) if skipped else "none"
    rep.verdicts.append(
        Verdict(
            "points",
            "PASS" if res.checked else "FAIL",
            f"{res.checked} prime-power points over {len(points)} primes "
            f"(ramified skipped: {skipped_txt})",
        )
    )

    def pick(substr: str) -> list[str]:
        return [v for v in res.violations if substr in v]

    neg = pick("negative")
    rep.verdicts.append(
        Verdict(
            "nonnegativity",
            "FAIL" if neg else "PASS",
            neg[0] if neg else f"min coefficient {res.min_value:.6g}",
        )
    )
    imag = pick("not real")
    rep.verdicts.append(
        Verdict(
            "realness",
            "FAIL" if imag else "PASS",
            imag[0]
            if imag
            else f"imaginary parts within {args.tol:g} everywhere",
        )
    )
    mism = pick("mismatch")
    rep.verdicts.append(
        Verdict(
            "square identity",
            "FAIL" if mism else "PASS",
            mism[0] if mism else f"max |direct - square| = {res.max_abs_delta:.3g}",
        )
    )
    return rep


def _cmd_poles(args) -> Report:
    hyp = parse_hyp_file(args.hyp)
    V = parse_expr(args.expr)
    dec = decompose_under(V, hyp)
    iv, reasons = pole_order(dec, hyp)
    rep = Report(
        f"poles {args.expr!r} --hyp {args.hyp}",
        digest("poles", args.expr, _file_digest(args.hyp)),
    )
    rep.verdicts.append(
        Verdict("pole order", "PASS", f"interval {iv} at the edge point")
    )
    rep.verdicts.append(Verdict("factors", "PASS", " | ".join(reasons)))
    obstructions = self_dual_abelian_entries(dec, hyp)
    if obstructions:
        rep.verdicts.append(
            Verdict(
                "self-dual abelian factors",
                "PASS",
                "; ".join(obstructions),
            )
        )
    return rep


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.cmd == "verify":
            rep = _cmd_verify(args)
        elif args.cmd == "expand":
            rep = _cmd_expand(args)
        elif args.cmd == "scan":
            rep = _cmd_scan(args)
        else:
            rep = _cmd_poles(args)
    except (
        UsageError,
        CaseError,
        ExprError,
        IngestError,
        PoleError,
        RepAlgError,
        OSError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    rep.elapsed_s = time.perf_counter() - start
    print(render_json(rep) if args.json else render_text(rep))
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
