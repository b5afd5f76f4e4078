#!/usr/bin/env python3
"""Certify a range of primes and print one summary row per prime.

    python scripts/certify_primes.py --max-p 13 --oracle
"""

import argparse
import time

from qupit_clifford.clifford import CliffordCode, certify
from qupit_clifford.cyclotomic import is_prime
from qupit_clifford.oracle import attach, cross_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-p", type=int, default=11)
    ap.add_argument("--oracle", action="store_true")
    args = ap.parse_args()

    print(f"{'p':>3} {'|G|':>6} {'|Z|':>4} {'|N|':>6} {'qk':>4} {'chi(1)^2':>8} {'|N|/|H|':>8}"
          f" {'verdict':>15} {'checks':>7} {'secs':>6}")
    for p in (q for q in range(3, args.max_p + 1) if is_prime(q)):
        t0 = time.perf_counter()
        code = CliffordCode(p)
        r = certify(p, code=code)
        if args.oracle:
            attach(r, cross_check(r, code=code))
        secs = time.perf_counter() - t0
        (c,) = r.candidates
        ok = "ok" if r.passed else "FAIL"
        print(f"{p:>3} {r.orders['G']:>6} {r.orders['ZG']:>4} {r.orders['N']:>6}"
              f" {r.quasikernel_order:>4} {c.chi1_sq:>8} {c.N_over_H:>8} {r.verdict:>15}"
              f" {ok:>7} {secs:>6.1f}")


if __name__ == "__main__":
    main()
