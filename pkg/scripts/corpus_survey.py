"""Survey the standard corpus: one row of invariants per member.

Usage:
    python3 scripts/corpus_survey.py
    python3 scripts/corpus_survey.py --corpus my_families.txt --csv out.csv
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from gcurv import (
    classify,
    effective_diameter,
    is_reflective,
    min_edge_curvature,
    parse_family,
    smallest_positive_laplacian_eigenvalue,
    standard_corpus,
)


@dataclass
class SurveyConfig:
    corpus_path: str | None = None
    csv_path: str | None = None
    full_reports: bool = False


def load_members(cfg: SurveyConfig):
    if cfg.corpus_path is None:
        return [(mem.name, mem.graph) for mem in standard_corpus()]
    members = []
    with open(cfg.corpus_path) as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            spec = parse_family(line)
            members.append((spec.label(), spec.build()))
    return members


def survey_row(name: str, g) -> dict:
    mec = min_edge_curvature(g)
    diam_eff = effective_diameter(g)
    sharp = mec.value > 0 and diam_eff * mec.value == g.max_degree()
    return {
        "name": name,
        "n": g.n,
        "m": g.m,
        "kappa_min": str(mec.value),
        "constant": mec.is_constant,
        "diam_eff": str(diam_eff),
        "sharp": sharp,
        "reflective": is_reflective(g).reflective,
        "lambda": round(smallest_positive_laplacian_eigenvalue(g), 6),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corpus", help="file of family expressions, one per line")
    ap.add_argument("--csv", help="also write rows to this CSV file")
    ap.add_argument("--reports", action="store_true",
                    help="print the full classification report per member")
    args = ap.parse_args(argv)
    cfg = SurveyConfig(args.corpus, args.csv, args.reports)

    rows = []
    start = time.monotonic()
    for name, g in load_members(cfg):
        rows.append(survey_row(name, g))
        if cfg.full_reports:
            rep = classify(g)
            verdicts = ", ".join(
                f"{k.split('_')[0]}={'ok' if v.passed else 'FAIL'}"
                for k, v in rep.theorem_verdicts.items()
            )
            print(f"# {name}: factors "
                  f"{[fam for _, fam in rep.prime_factors]}, {verdicts}")

    header = list(rows[0])
    widths = {
        k: max(len(k), *(len(str(r[k])) for r in rows)) for k in header
    }
    print("  ".join(k.ljust(widths[k]) for k in header))
    for r in rows:
        print("  ".join(str(r[k]).ljust(widths[k]) for k in header))
    print(f"# {len(rows)} members, {time.monotonic() - start:.1f}s")

    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=header)
            writer.writeheader()
            writer.writerows(rows)
        print(f"# wrote {cfg.csv_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
