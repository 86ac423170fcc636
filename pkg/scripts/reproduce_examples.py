"""Recompute every worked example and write the JSON report.

    python3 scripts/reproduce_examples.py [--out results/examples.json]
"""

import argparse
import json
from pathlib import Path

from agclcp.catalog import run_examples


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results/examples.json")
    ap.add_argument("--which", default="all")
    args = ap.parse_args()
    entries = [e.to_json() for e in run_examples(args.which)]
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(entries, indent=2, sort_keys=True) + "\n")
    for e in entries:
        r = e["report"]
        flag = f"  [{len(e['discrepancies'])} discrepancies]" if e["discrepancies"] else ""
        print(f"{e['name']:<32} {e['label']:<16} is_lcp={r['is_lcp']!s:<5} "
              f"hyp={r['hypotheses_hold']!s:<5} sec={r['security_parameter']}{flag}")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
