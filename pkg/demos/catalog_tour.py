"""Tour of the five rule families.

Builds one small instance of every family, prints its nodes and weights
on the periodic unit grid, and points out the structural features that
distinguish the families: period length, endpoint nodes, and the broken
reflection symmetry of the C0 even rules.

Run:  python3 demos/catalog_tour.py
"""

from splinequad import Family, build_rule, rule_id

PICKS = [
    (Family.C0_ODD, 3),
    (Family.C0_EVEN, 3),
    (Family.C1_ODD_ENDPOINT, 3),
    (Family.C1_ODD_INTERIOR, 3),
    (Family.C1_EVEN, 3),
]

NOTES = {
    Family.C0_ODD: "period two: n nodes on one interval, n-1 on the next",
    Family.C0_EVEN: "one interval per period; note the asymmetric nodes",
    Family.C1_ODD_ENDPOINT: "one node pinned to the interval start",
    Family.C1_ODD_INTERIOR: "same degree, all nodes strictly interior",
    Family.C1_EVEN: "period two; second interval mirrors the first",
}


def main():
    for family, n in PICKS:
        rule = build_rule(family, n)
        print(f"{rule_id(family, n)}  ({family.name}, n={n}, "
              f"exact through degree {rule.degree})")
        print(f"  {NOTES[family]}")
        for k, iv in enumerate(rule.intervals):
            for x, w in zip(iv.nodes, iv.weights):
                print(f"    interval {k}:  x = {x:19.16f}   w = {w:19.16f}")
        total = sum(w for iv in rule.intervals for w in iv.weights)
        print(f"  weight sum {total:.15f} over a period of "
              f"{rule.period_intervals} unit interval(s)\n")


if __name__ == "__main__":
    main()
