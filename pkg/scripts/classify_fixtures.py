"""Run the structure classification on every shipped subdirect-product fixture."""

import argparse
import json
import time
from dataclasses import dataclass

from gogroups import fixtures
from gogroups.subdirect import Budget, classify_structure


@dataclass
class Config:
    radius: int = 2
    max_cosets: int = 2000


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=int, default=Config.radius)
    ap.add_argument("--max-cosets", type=int, default=Config.max_cosets)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(args.radius, args.max_cosets)
    budget = Budget(max_length=cfg.radius, max_steps=cfg.max_cosets)
    reports = {}
    for name, S in sorted(fixtures.SUBDIRECT.items()):
        t0 = time.perf_counter()
        rep = classify_structure(S, budget)
        reports[name] = rep.to_json(S)
        if not args.json:
            (r1, t1), (r2, t2) = rep.abelianizations
            print(f"{name:22} {rep.bucket:13} fibers {len(rep.fibers[0].found):>2}/{len(rep.fibers[1].found):<2} "
                  f"H1 ({r1},{t1}) ({r2},{t2}) index {rep.index_in_product} [{time.perf_counter() - t0:.2f}s]")
    if args.json:
        print(json.dumps(reports, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
