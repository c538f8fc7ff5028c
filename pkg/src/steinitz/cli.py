"""Command-line front end.

    steinitz group    --group metacyclic:7,3,2
    steinitz theta    --group abelian:2 --char regular
    steinitz ag       --group perm:3:(1 2),(1 2 3)
    steinitz sg       --group abelian:2,2 [--classes]
    steinitz bound    --group metacyclic:7,3,2 --kappa full
    steinitz compare-long --group abelian:2,4
    steinitz verify   --group perm:3:(1 2),(1 2 3) [--seed 0 --samples 200]
    steinitz ingest   --table s4.json [--group perm:4:(1 2),(1 2 3 4)]

JSON (the default) is the stable format; ``--format text`` is for people.
Exit status: 0 success, 1 validation failure, 2 usage error.  Failures
print a report carrying a named error code.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bounds import compare_with_long, steinitz_bound
from .characters import (
    CharacterTable,
    TableValidationError,
    VirtualCharacter,
    character_table,
    ingest_table,
    regular_character,
    table_to_json,
    trivial_character,
)
from .galois import parse_kappa
from .group import GroupError, GroupTable, _cycle_string, abelianization, parse_group, sylow2_class
from .stickelberger import (
    AG_basis,
    AG_index,
    det_character,
    in_AG,
    rho_in_AG,
    stickelberger_module,
    theta_bar,
    theta_json,
)
from .verify import run_checks

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    def __init__(self, code: str, message: str, status: int):
        super().__init__(message)
        self.code = code
        self.status = status


def _usage(code: str, message: str) -> CliError:
    return CliError(code, message, EXIT_USAGE)


def _invalid(code: str, message: str) -> CliError:
    return CliError(code, message, EXIT_INVALID)


# -- argument helpers -------------------------------------------------------


def _group(args) -> GroupTable:
    if not args.group:
        raise _usage("missing_group", "--group is required")
    try:
        return parse_group(args.group)
    except GroupError as exc:
        raise _usage("malformed_group_spec", str(exc)) from exc


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise _usage("unreadable_file", f"{path}: {exc}") from exc


def _table(args, G: Optional[GroupTable]) -> CharacterTable:
    try:
        if getattr(args, "table", None):
            return ingest_table(_read_json(args.table), G)
        return character_table(G)
    except TableValidationError as exc:
        raise _invalid("table_validation_failed", str(exc)) from exc
    except LookupError as exc:
        raise _invalid("no_character_table", str(exc)) from exc


def _character(spec: str, T: CharacterTable) -> VirtualCharacter:
    """'regular' | 'trivial' | 'irr:i' | 'a,b,...', optionally prefixed 'k*'."""
    text = spec.replace(" ", "")
    scale = 1
    if "*" in text:
        head, _, text = text.partition("*")
        try:
            scale = int(head)
        except ValueError as exc:
            raise _usage("malformed_character", f"bad multiplier in {spec!r}") from exc
    if text == "regular":
        phi = regular_character(T)
    elif text == "trivial":
        phi = trivial_character(T)
    elif text.startswith("irr:"):
        try:
            i = int(text[4:])
        except ValueError as exc:
            raise _usage("malformed_character", f"bad index in {spec!r}") from exc
        if not 0 <= i < len(T):
            raise _usage("malformed_character", f"irreducible index {i} out of range 0..{len(T) - 1}")
        phi = VirtualCharacter.basis(len(T), i)
    else:
        try:
            coeffs = tuple(int(x) for x in text.split(","))
        except ValueError as exc:
            raise _usage("malformed_character", f"cannot read {spec!r}") from exc
        if len(coeffs) != len(T):
            raise _usage("malformed_character", f"expected {len(T)} coefficients, got {len(coeffs)}")
        phi = VirtualCharacter(coeffs)
    return phi * scale


def element_label(G: GroupTable, x: int) -> str:
    kind = G.origin[0] if G.origin else None
    lab = G.labels[x] if G.labels else x
    if kind == "perm":
        return _cycle_string(lab)
    if kind == "metacyclic":
        i, j = lab
        return f"s^{i} t^{j}"
    if isinstance(lab, tuple):
        return "(" + ",".join(map(str, lab)) + ")"
    return str(lab)


# -- subcommands ------------------------------------------------------------


def cmd_group(args) -> tuple[dict, int]:
    G = _group(args)
    C = G.classes
    classes = [
        {"id": c, "rep": C.reps[c], "label": element_label(G, C.reps[c]), "size": C.sizes[c], "rep_order": C.rep_orders[c]}
        for c in range(len(C))
    ]
    return {
        "group": G.descriptor(),
        "order": G.order,
        "exponent": G.exponent,
        "abelian": G.is_abelian,
        "sylow2": sylow2_class(G).value,
        "rho_in_AG": rho_in_AG(G),
        "abelianization": abelianization(G),
        "classes": classes,
    }, EXIT_OK


def cmd_theta(args) -> tuple[dict, int]:
    G = _group(args)
    T = _table(args, G)
    phi = _character(args.char, T)
    x = theta_bar(T, phi)
    integral = x.is_integral()
    return {
        "group": G.descriptor(),
        "character": list(phi.coeffs),
        "status": "integral" if integral else "not integral",
        "integral": integral,
        "in_AG": in_AG(T, phi),
        "det_trivial": not any(det_character(T, phi)),
        "theta": theta_json(T, x),
    }, EXIT_OK


def cmd_ag(args) -> tuple[dict, int]:
    G = _group(args)
    T = _table(args, G)
    ab = abelianization(G)
    return {
        "group": G.descriptor(),
        "basis": [list(b.coeffs) for b in AG_basis(T)],
        "index": AG_index(T),
        "abelianization": ab,
        "abelianization_order": math.prod(ab),
    }, EXIT_OK


def cmd_sg(args) -> tuple[dict, int]:
    G = _group(args)
    T = _table(args, G)
    return {
        "group": G.descriptor(),
        "coordinates": "classes" if args.classes else "elements",
        "basis": stickelberger_module(T, classes=args.classes),
    }, EXIT_OK


def cmd_bound(args) -> tuple[dict, int]:
    G = _group(args)
    try:
        A = parse_kappa(args.kappa, G.exponent)
    except ValueError as exc:
        raise _usage("kappa_mismatch", str(exc)) from exc
    return steinitz_bound(G, A).to_json(), EXIT_OK


def cmd_compare_long(args) -> tuple[dict, int]:
    G = _group(args)
    if not G.is_abelian:
        raise _usage("not_abelian", f"{G.descriptor()} is not abelian")
    return {"group": G.descriptor(), **compare_with_long(G)}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    G = _group(args)
    T = _table(args, G)
    results = run_checks(G, T, seed=args.seed, samples=args.samples, workers=args.workers)
    ok = all(r.passed for r in results)
    report = {
        "group": G.descriptor(),
        "seed": args.seed,
        "samples": args.samples,
        "passed": ok,
        "checks": [r.to_json() for r in results],
    }
    if not ok:
        report["error"] = {"code": "verification_failed", "message": "one or more checks failed"}
    return report, EXIT_OK if ok else EXIT_INVALID


def cmd_ingest(args) -> tuple[dict, int]:
    if not args.table:
        raise _usage("missing_table", "--table is required")
    G = _group(args) if args.group else None
    T = _table(args, G)
    return {
        "validated": True,
        "order": T.order,
        "classes": len(T.classes),
        "degrees": list(T.degrees),
        "matched_group": G.descriptor() if G is not None else None,
        "table": table_to_json(T),
    }, EXIT_OK


COMMANDS = {
    "group": cmd_group,
    "theta": cmd_theta,
    "ag": cmd_ag,
    "sg": cmd_sg,
    "bound": cmd_bound,
    "compare-long": cmd_compare_long,
    "verify": cmd_verify,
    "ingest": cmd_ingest,
}


# -- rendering --------------------------------------------------------------


def _render_text(command: str, report: dict) -> str:
    if "error" in report and command != "verify":
        e = report["error"]
        return f"error [{e['code']}]: {e['message']}\n"
    lines = []
    if command == "verify":
        for c in report["checks"]:
            lines.append(f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']:28s} {c['detail']}")
        lines.append("all checks passed" if report["passed"] else "verification FAILED")
    elif command == "theta":
        lines.append(f"{report['group']}  phi = {report['character']}  -> {report['status']}")
        for t in report["theta"]:
            lines.append(f"  class rep {t['class_rep']:>4}  order {t['rep_order']:>3}  coeff {t['coeff']}")
    elif command == "bound":
        tag = " (bounds squares of classes)" if report["squared"] else ""
        lines.append(f"{report['group']}  kappa gens {report['kappa']}{tag}")
        for f in report["factors"]:
            fd = f["field"]
            lines.append(f"  N(K(s)/K)^{f['exponent']}  m={f['m']}  degree {fd['degree']}  fixer gens {fd['fixer_gens']}")
    else:
        for key, val in report.items():
            if isinstance(val, list) and val and isinstance(val[0], (dict, list)):
                lines.append(f"{key}:")
                lines.extend(f"  {json.dumps(v, sort_keys=True)}" for v in val)
            else:
                lines.append(f"{key}: {json.dumps(val) if not isinstance(val, str) else val}")
    return "\n".join(lines) + "\n"


def _render(command: str, report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    return _render_text(command, report)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="steinitz", description="Stickelberger maps and Steinitz class bounds.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--group", help="group descriptor, e.g. abelian:2,4 or metacyclic:7,3,2")
        s.add_argument("--format", choices=("json", "text"), default="json")
        s.add_argument("--output", help="write the report here instead of stdout")
        if name in ("theta", "ag", "sg", "verify", "ingest"):
            s.add_argument("--table", help="character table JSON file")
        if name == "theta":
            s.add_argument("--char", default="regular", help="regular | trivial | irr:i | a,b,... (optionally k*...)")
        if name == "sg":
            s.add_argument("--classes", action="store_true", help="class-sum coordinates")
        if name == "bound":
            s.add_argument("--kappa", default="full", help="full | trivial | gens=a,b,...")
        if name == "verify":
            s.add_argument("--seed", type=int, default=0)
            s.add_argument("--samples", type=int, default=200)
            s.add_argument("--workers", type=int, default=1)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, status = COMMANDS[args.command](args)
    except CliError as exc:
        report = {"error": {"code": exc.code, "message": str(exc)}}
        status = exc.status
        print(f"steinitz: {exc.code}: {exc}", file=sys.stderr)
    text = _render(args.command, report, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
