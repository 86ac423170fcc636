"""Command line: ``agclcp examples | check | params``.

Exit status is 0 whenever the input parses; discrepancies and failed
hypotheses are part of the report.  Input errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import codes
from .agcode import check_lcp, evaluation_code
from .catalog import WHICH, run_examples
from .codes import Budgets
from .specio import SpecError, load_pair, pair_to_json

EXIT_INPUT = 2


@dataclass
class RunReport:
    command: str
    entries: list[dict] = field(default_factory=list)
    exit_status: int = 0

    def to_json(self) -> dict:
        return {"command": self.command, "entries": self.entries, "exit_status": self.exit_status}


def cmd_examples(which: str, budgets: Budgets) -> RunReport:
    return RunReport("examples", [e.to_json() for e in run_examples(which, budgets)])


def cmd_check(path: str, budgets: Budgets) -> RunReport:
    pair = load_pair(path)
    specG, specH = pair.specs()
    report = check_lcp(specG, specH, budgets.distance)
    C, E = evaluation_code(specG), evaluation_code(specH)
    entry = {
        "name": str(path),
        "spec": pair_to_json(pair),
        "report": report.to_json(),
        "codes": {
            "C": codes.code_report(C, budgets.distance),
            "D": codes.code_report(E, budgets.distance),
        },
    }
    return RunReport("check", [entry])


def cmd_params(path: str, budgets: Budgets) -> RunReport:
    pair = load_pair(path)
    specG, specH = pair.specs()
    C, E = evaluation_code(specG), evaluation_code(specH)
    table = {
        "C": codes.code_report(C, budgets.distance),
        "D": codes.code_report(E, budgets.distance),
        "C_perp": codes.code_report(codes.dual(C), budgets.distance),
        "D_perp": codes.code_report(codes.dual(E), budgets.distance),
    }
    is_lcp = codes.is_lcp_pair(C, E)
    entry: dict = {"name": str(path), "codes": table, "is_lcp": is_lcp, "security_parameter": None}
    if is_lcp:
        ds = [table[k]["d"] for k in ("C", "D_perp") if table[k]["k"] > 0]
        if any(d is None for d in ds):
            entry["security_parameter_status"] = "distance budget exceeded"
        elif ds:
            entry["security_parameter"] = min(ds)
        else:
            entry["security_parameter_status"] = "undefined: both codes are zero codes"
    else:
        entry["security_parameter_status"] = "undefined: not an LCP pair"
    return RunReport("params", [entry])


# -- text rendering --------------------------------------------------------------------------


def _fmt_code(name: str, rep: dict) -> str:
    d = rep.get("d")
    d_s = "undefined" if d is None else str(d)
    if rep.get("d_status"):
        d_s = "over budget"
    mds = rep.get("mds")
    return f"  {name}: [{rep['n']}, {rep['k']}, {d_s}]  hull={rep['hull_dim']}  mds={mds}"


def render_text(run: RunReport) -> str:
    lines: list[str] = []
    for e in run.entries:
        head = e["name"] + (f"  ({e['label']})" if "label" in e else "")
        lines.append(head)
        r = e.get("report")
        if r is not None:
            lines.append(f"  n={r['n']} k_C={r['k_C']} k_D={r['k_D']} is_lcp={r['is_lcp']} "
                         f"hypotheses_hold={r['hypotheses_hold']} consistent={r['consistent']}")
            for key, ok in r["checklist"].items():
                lines.append(f"    [{'x' if ok else ' '}] {key}")
            lines.append(f"  security parameter: {r['security_parameter']}")
            lines.extend(f"  note: {n}" for n in r["notes"])
            if r["witnesses"].get("a"):
                lines.append(f"  a = ({', '.join(r['witnesses']['a'])})")
        else:
            lines.append(f"  is_lcp={e['is_lcp']} security parameter: {e['security_parameter']}")
        for name, rep in e.get("codes", {}).items():
            lines.append(_fmt_code(name, rep))
        lines.extend(f"  discrepancy: {d}" for d in e.get("discrepancies", []))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="agclcp", description="LCP pairs of algebraic-geometry codes.")
    ap.add_argument("--distance-budget", type=int, default=codes.DISTANCE_BUDGET,
                    help="max codewords enumerated for a distance (default %(default)s)")
    ap.add_argument("--equiv-budget", type=int, default=codes.EQUIV_BUDGET,
                    help="max n!(q-1)^n for an equivalence search (default %(default)s)")
    sub = ap.add_subparsers(dest="command", required=True)
    ex = sub.add_parser("examples", help="reproduce the worked examples")
    ex.add_argument("--which", choices=WHICH + ("all",), default="all")
    ex.add_argument("--format", choices=("text", "json"), default="text")
    for name, help_ in (("check", "run the LCP criterion on a JSON spec"),
                        ("params", "code parameters and security parameter of a JSON spec")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("spec", help="path to a construction spec (JSON)")
        p.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    budgets = Budgets(args.distance_budget, args.equiv_budget)
    try:
        if args.command == "examples":
            run = cmd_examples(args.which, budgets)
        elif args.command == "check":
            run = cmd_check(args.spec, budgets)
        else:
            run = cmd_params(args.spec, budgets)
    except (SpecError, ValueError) as exc:
        print(f"agclcp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps(run.to_json(), indent=2, sort_keys=True))
    else:
        print(render_text(run))
    return run.exit_status


if __name__ == "__main__":
    sys.exit(main())
