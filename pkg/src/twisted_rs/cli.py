"""Command-line front end: ``tgrs <command> ...``.

Exit status is 0 on success, 1 when a requested check fails and 2 on
usage or precondition errors.  Structured output is JSON with integer
field reps; ``--format text`` prints a short human-readable summary.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence, TextIO

from . import constructions, lincode, tgrs, verify
from .errors import OutOfTheoremRange, TgrsError
from .galois import FieldSpec, make_field, parse_field_spec, primitive_element
from .tgrs import TgrsParams

DEFAULT_BUDGET = 1 << 26
PROPERTIES = ("self-orthogonal", "self-dual", "almost-self-dual", "lcd", "non-grs")
FAMILY_CHOICES = ("cda", "cda1", "q1", "q2", "q12", "q13", "pcd1", "pcd2")


class UsageError(TgrsError):
    pass


# ---------------------------------------------------------------------------
# documents
# ---------------------------------------------------------------------------
def field_doc(F: FieldSpec) -> dict:
    return {"p": F.p, "m": F.m, "modulus": list(F.modulus)}


def code_document(p: TgrsParams) -> dict:
    doc: dict[str, Any] = {
        "field": field_doc(p.spec),
        "q": p.spec.q,
        "n": p.n,
        "params": p.to_dict(),
        "generator": tgrs.generator_matrix(p).tolist(),
        "parity_check": tgrs.parity_check_matrix(p).tolist(),
    }
    try:
        doc["classification"] = tgrs.classify(p).to_dict()
    except OutOfTheoremRange:
        doc["classification"] = None
    return doc


def params_from_document(doc: dict) -> TgrsParams:
    try:
        fd, pd = doc["field"], doc["params"]
        F = make_field(int(fd["p"]), int(fd["m"]), fd.get("modulus"))
        return TgrsParams(F, int(pd["k"]), pd["alpha"], pd["v"], int(pd["eta"]))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed code document: {exc}") from None


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _params_from_args(args) -> TgrsParams:
    if args.field is None or args.k is None or args.alpha is None:
        raise UsageError("--field, --k and --alpha are required")
    F = parse_field_spec(args.field)
    alpha = _csv_ints(args.alpha)
    v = _csv_ints(args.v) if args.v is not None else None
    return TgrsParams.make(F, args.k, alpha, v, args.eta)


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------
def _emit(out: TextIO, fmt: str, doc: dict) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    for key, value in doc.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            out.write(f"{key}:\n")
            for row in value:
                out.write("  " + " ".join(f"{x:>3}" for x in row) + "\n")
        elif isinstance(value, dict):
            out.write(f"{key}:\n")
            for k2, v2 in value.items():
                out.write(f"  {k2}: {json.dumps(v2)}\n")
        else:
            out.write(f"{key}: {json.dumps(value)}\n")


def _audit_text(report: verify.AuditReport) -> dict:
    out = {"subject": report.subject}
    for c in report.checks:
        line = c.status.upper()
        if c.status == "fail":
            line += f" expected={json.dumps(c.expected)} observed={json.dumps(c.observed)}"
        if c.notes:
            line += " (" + "; ".join(c.notes) + ")"
        out[c.name] = line
    out["passed"] = report.passed
    return out


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------
def cmd_field(args, out) -> int:
    if args.action != "info":
        raise UsageError(f"unknown field action {args.action!r}")
    if args.field is None:
        raise UsageError("--field is required")
    F = parse_field_spec(args.field)
    doc = {**field_doc(F), "q": F.q,
           "primitive_element": int(primitive_element(F)) if F.q >= 3 else None}
    if F.m > 1 and F.m % 2 == 0:
        doc["subfield"] = [int(x) for x in _subfield(F)]
    _emit(out, args.format, doc)
    return 0


def _subfield(F: FieldSpec):
    from .galois import subfield_elements
    return subfield_elements(F, F.m // 2)


def cmd_build(args, out) -> int:
    _emit(out, args.format, code_document(_params_from_args(args)))
    return 0


def cmd_classify(args, out) -> int:
    p = _params_from_args(args)
    _emit(out, args.format, {"params": p.to_dict(), "classification": tgrs.classify(p).to_dict()})
    return 0


def cmd_weights(args, out) -> int:
    p = _params_from_args(args)
    doc: dict[str, Any] = {"params": p.to_dict(), "method": args.method}
    if args.method in ("closed", "both"):
        closed, closed_dual = tgrs.closed_weight_distribution(p)
        doc["closed"] = {"C": closed.tolist(), "dual": closed_dual.tolist()}
    if args.method in ("brute", "both"):
        C = p.code()
        doc["brute"] = {"C": lincode.brute_weights(C, args.budget).tolist(),
                        "dual": lincode.brute_weights(lincode.dual(C), args.budget).tolist()}
    status = 0
    if args.method == "both":
        doc["match"] = doc["closed"] == doc["brute"]
        status = 0 if doc["match"] else 1
    _emit(out, args.format, doc)
    return status


def cmd_check(args, out) -> int:
    p = _params_from_args(args)
    doc: dict[str, Any] = {"params": p.to_dict(), "property": args.property}
    if args.property == "non-grs":
        cert = tgrs.non_grs_certificate(p)
        doc["certificate"] = cert.to_dict()
        holds = cert.certified
    else:
        status = lincode.orthogonality_status(p.code())
        holds = status.holds(args.property)
        doc["hull_dim"] = status.hull_dim
    doc["holds"] = holds
    _emit(out, args.format, doc)
    return 0 if holds else 1


def _construct(args) -> constructions.ConstructionReport | constructions.NonExistence:
    F = parse_field_spec(args.field)
    fam = args.family
    alpha = _csv_ints(args.alpha) if args.alpha is not None else None
    implied = {"cda": "almost", "cda1": "self_dual", "q12": "almost", "q13": "self_dual",
               "pcd1": "almost", "pcd2": "self_dual"}
    variant = implied.get(fam)
    if args.variant is not None and variant is not None \
            and args.variant.replace("-", "_") != variant:
        raise UsageError(f"family {fam} fixes variant {variant.replace('_', '-')}")
    if fam in ("cda", "cda1"):
        if args.k is None:
            raise UsageError(f"--k is required for family {fam}")
        return constructions.even_q_family(F, args.k, alpha, args.eta, variant)
    if fam == "q1":
        return constructions.odd_q_full_support(F, args.a)
    if fam == "q2":
        return constructions.odd_q_units(F)
    if fam in ("q12", "q13"):
        return constructions.nonsquare_support(F, args.a, variant)
    if args.k is None:
        raise UsageError(f"--k is required for family {fam}")
    return constructions.subfield_family(F, args.k, alpha, args.eta, variant)


def cmd_construct(args, out) -> int:
    if args.field is None:
        raise UsageError("--field is required")
    rep = _construct(args)
    if isinstance(rep, constructions.NonExistence):
        _emit(out, args.format, {"family": rep.family, "q": rep.q, "nonexistence": rep.reason})
        return 1
    if args.lcd_beta is not None:
        rep = constructions.lcd_scale(rep.params, args.lcd_beta)
    doc = code_document(rep.params)
    doc["construction"] = {"family": rep.family, "claimed": rep.claimed,
                           "verified": rep.verified}
    if rep.notes:
        doc["construction"]["notes"] = list(rep.notes)
    status = lincode.orthogonality_status(rep.code)
    doc["properties"] = {"self_orthogonal": status.self_orthogonal, "self_dual": status.self_dual,
                         "almost_self_dual": status.almost_self_dual, "lcd": status.lcd,
                         "hull_dim": status.hull_dim}
    _emit(out, args.format, doc)
    return 0 if rep.verified else 1


def cmd_verify(args, out, stdin: TextIO) -> int:
    doc = None
    if args.doc is not None or args.field is None:
        src = args.doc or "-"
        text = stdin.read() if src == "-" else open(src, encoding="utf-8").read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"cannot parse code document: {exc}") from None
        p = params_from_document(doc)
    else:
        p = _params_from_args(args)
    report = verify.audit(p, verify.parse_checks(args.checks), args.budget)
    if doc is not None:
        # a piped document must match what the parameters rebuild to
        rebuilt = code_document(p)
        same = all(doc.get(key, rebuilt[key]) == rebuilt[key]
                   for key in ("generator", "parity_check"))
        report.checks.append(verify.CheckResult(
            "document", "pass" if same else "fail", "matrices rebuilt from params",
            "match" if same else "mismatch"))
    _emit(out, args.format, report.to_dict() if args.format == "json" else _audit_text(report))
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------
def _common(sp: argparse.ArgumentParser, code_flags: bool = True) -> None:
    sp.add_argument("--field", help="q=<p^m> or q=<p^m>,poly=<c0,...,cm>")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                    help="max codewords enumerated by brute-force paths")
    if code_flags:
        sp.add_argument("--k", type=int)
        sp.add_argument("--alpha", help="comma-separated evaluation point reps")
        sp.add_argument("--v", help="comma-separated column multipliers (default all ones)")
        sp.add_argument("--eta", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tgrs", description="[1,0]-twisted GRS code toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field", help="field information")
    f.add_argument("action", choices=("info",))
    _common(f, code_flags=False)

    for name, help_ in (("build", "generator and parity-check matrices"),
                        ("classify", "MDS / NMDS classification")):
        _common(sub.add_parser(name, help=help_))

    w = sub.add_parser("weights", help="weight distributions of the code and its dual")
    _common(w)
    w.add_argument("--method", choices=("closed", "brute", "both"), default="both")

    c = sub.add_parser("check", help="test an orthogonality or non-GRS property")
    _common(c)
    c.add_argument("--property", choices=PROPERTIES, required=True)

    k = sub.add_parser("construct", help="build a code from a named family")
    _common(k, code_flags=False)
    k.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    k.add_argument("--k", type=int)
    k.add_argument("--alpha")
    k.add_argument("--eta", type=int)
    k.add_argument("--a", type=int)
    k.add_argument("--variant", choices=("almost", "self-dual"))
    k.add_argument("--lcd-beta", type=int)

    v = sub.add_parser("verify", help="brute-force audit of a code")
    _common(v)
    v.add_argument("--checks", default="all", help="comma-separated checks or 'all'")
    v.add_argument("--doc", help="code document to audit ('-' for stdin)")
    return ap


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {"field": cmd_field, "build": cmd_build, "classify": cmd_classify,
                "weights": cmd_weights, "check": cmd_check, "construct": cmd_construct}
    try:
        if args.command == "verify":
            return cmd_verify(args, out, stdin)
        return handlers[args.command](args, out)
    except (TgrsError, OSError) as exc:
        err.write(f"tgrs: error: {exc}\n")
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
