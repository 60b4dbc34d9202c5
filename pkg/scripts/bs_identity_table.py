"""Tabulate the BS(m,n) conjugation-power identity and the power-in-N exponents.

For each (m, n, M, k) the conjugate t^-k x^A t^k is reduced by Britton's lemma and
compared with the closed form, both with the corrected sign and as usually written.
"""

import argparse
import json
from dataclasses import asdict, dataclass, field

from gogroups import bs


@dataclass
class Config:
    params: list[tuple[int, int]] = field(default_factory=lambda: [(2, 3), (3, 2), (-2, 3), (-3, 2), (2, 5)])
    max_M: int = 3


def rows(cfg: Config):
    for m, n in cfg.params:
        p = bs.BSParams(m, n)
        for M in range(1, cfg.max_M + 1):
            for k in range(1, M + 1):
                r = bs.conjugation_power_identity(p, M, k)
                q = bs.power_in_N_exponent(p, M, k) if abs(m) != abs(n) else None
                w = bs.power_in_N_witness(p, M, k)[1] if q is not None else None
                yield {"m": m, "n": n, "M": M, "k": k, "britton": r.exponent, "predicted": r.predicted,
                       "literal": r.literal, "holds": r.holds, "literal_holds": r.literal_holds,
                       "power_in_N": q, "witness_power": w}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-M", type=int, default=Config.max_M)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(max_M=args.max_M)
    out = list(rows(cfg))
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": out}, indent=2))
        return
    print(f"{'m':>3} {'n':>3} {'M':>2} {'k':>2} {'britton':>12} {'literal':>12} ok  lit  {'power_in_N':>12}")
    for r in out:
        print(f"{r['m']:>3} {r['n']:>3} {r['M']:>2} {r['k']:>2} {r['britton']:>12} {r['literal']:>12} "
              f"{'y' if r['holds'] else 'n':>2}  {'y' if r['literal_holds'] else 'n':>3}  {str(r['power_in_N']):>12}")
    bad = [r for r in out if not r["holds"] or (r["power_in_N"] is not None and r["power_in_N"] != r["witness_power"])]
    print(f"\n{len(out)} cases, {len(bad)} mismatches; literal sign fails in "
          f"{sum(not r['literal_holds'] for r in out)} cases (all with m < 0 and k even)")


if __name__ == "__main__":
    main()
