"""Count homomorphisms from the fixture groups to small symmetric groups.

The counts are the raw material of the finite-quotient side of the membership
semi-decision; a coset enumeration of the mod-2 kernel is included as a check.
"""

import argparse
import time
from dataclasses import dataclass

from gogroups import fixtures
from gogroups.quotients import BUDGET_EXHAUSTED, enumerate_homs, todd_coxeter


@dataclass
class Config:
    max_degree: int = 3
    budget: int = 2_000_000
    groups: tuple[str, ...] = ("Z", "Z2", "F2", "P4", "C4", "TRIANGLE", "BS(2,3)", "BS(2,2)", "P4_SPLITTING")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    args = ap.parse_args()
    cfg = Config(max_degree=args.max_degree)
    print("group".ljust(14) + "".join(f"S{n}".rjust(10) for n in range(1, cfg.max_degree + 1)))
    for name in cfg.groups:
        P = fixtures.presentation_fixture(name)
        cells = []
        for n in range(1, cfg.max_degree + 1):
            t0 = time.perf_counter()
            homs = list(enumerate_homs(P, n, cfg.budget))
            done = not homs or homs[-1] is not BUDGET_EXHAUSTED
            cells.append(f"{len(homs) if done else '>' + str(len(homs) - 1)}".rjust(10))
        print(name.ljust(14) + "".join(cells))
    P = fixtures.presentation_fixture("P4")
    res = todd_coxeter(P, [P.parse(w) for w in fixtures.DROMS_SUBGROUP], max_cosets=100)
    print(f"\nmod-2 kernel of P4: coset enumeration {res.status}, index {res.index}")


if __name__ == "__main__":
    main()
