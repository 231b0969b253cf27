#!/usr/bin/env python3
"""Brute-force counts of admissible systems and filtrations on finite chains.

Primes are 0..k-1. A system is a set of pairwise disjoint intervals [p,q]
with p idempotent; on a finite chain every such set is complete. A
filtration on a window of length L is a chain X_1 <= ... <= X_L in the
nesting order (each member of X_i lies inside a member of X_{i+1}).

Usage: brute_counts.py            print the counts as JSON
       brute_counts.py --check F  compare against frozen file F
"""
import itertools
import json
import sys


def systems(idem):
    k = len(idem)
    ivs = [(p, q) for p in range(k) for q in range(p, k) if idem[p]]
    out = []
    for r in range(len(ivs) + 1):
        for combo in itertools.combinations(ivs, r):
            pts = [x for p, q in combo for x in range(p, q + 1)]
            if len(pts) == len(set(pts)):
                out.append(frozenset(combo))
    return out


def nested(a, b):
    return all(any(p2 <= p and q <= q2 for p2, q2 in b) for p, q in a)


def chains(sys_list, length):
    count = 0
    for seq in itertools.product(sys_list, repeat=length):
        if all(nested(seq[i], seq[i + 1]) for i in range(length - 1)):
            count += 1
    return count


def pattern_key(idem):
    return "".join("1" if f else "0" for f in idem)


def compute():
    out = {"systems": {}, "filtrations": {}}
    for k in range(1, 5):
        for rest in itertools.product([True, False], repeat=k - 1):
            idem = (True,) + rest
            out["systems"][pattern_key(idem)] = len(systems(idem))
    for k in (2, 3):
        for rest in itertools.product([True, False], repeat=k - 1):
            idem = (True,) + rest
            sl = systems(idem)
            for length in (1, 2, 3):
                out["filtrations"][pattern_key(idem) + ":" + str(length)] = chains(sl, length)
    return out


def main():
    got = compute()
    if len(sys.argv) == 3 and sys.argv[1] == "--check":
        with open(sys.argv[2]) as fh:
            frozen = json.load(fh)
        if frozen != got:
            print("mismatch against frozen counts")
            print(json.dumps(got, indent=1, sort_keys=True))
            return 1
        print("frozen counts reproduced")
        return 0
    print(json.dumps(got, indent=1, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
