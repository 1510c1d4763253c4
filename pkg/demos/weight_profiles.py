"""Weight profiles of the two C1 odd-degree variants.

For odd degrees there are two distinct rules of the same exactness
degree: one with a node pinned to the interval endpoint and one with all
nodes interior.  As the degree grows their free nodes approach each
other.  This script writes an overlay stem chart for a high degree plus
a small table of the distance between the two node sets.

Run:  python3 demos/weight_profiles.py
Output: weight_profile_d41.svg and weight_profile_d41.csv
"""

from splinequad import Family, build_rule
from splinequad.cli import main as cli_main


def hausdorff(a, b):
    return max(
        max(min(abs(x - y) for y in b) for x in a),
        max(min(abs(x - y) for y in a) for x in b),
    )


def main():
    print("distance between endpoint-variant and interior-variant nodes:")
    for n in (3, 5, 10, 20, 40):
        ep = build_rule(Family.C1_ODD_ENDPOINT, n).intervals[0]
        inr = build_rule(Family.C1_ODD_INTERIOR, n).intervals[0]
        free = [x for x in ep.nodes if x != 0.0]
        print(f"  degree {2 * n + 1:3d}: "
              f"{hausdorff(free, list(inr.nodes)):.4e}")

    out = "weight_profile_d41.svg"
    rc = cli_main(["plot", "--class", "c1", "--degree", "41",
                   "--variant", "both", "--output", out])
    if rc == 0:
        print(f"\nwrote {out} (endpoint variant in black, interior in red)")
        print(f"wrote {out.replace('.svg', '.csv')}")


if __name__ == "__main__":
    main()
