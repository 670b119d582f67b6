"""Tabulate the abstract Γ_{k,r}^a hypergraphs: sizes, collapse, and which residues are isomorphic.

Isomorphism classes come from exhaustive search, so keep r <= 8.
"""

import argparse
from math import comb

from hyperpart import are_isomorphic, betti, gamma_abstract, greedy_collapse


def residue_classes(k, r):
    classes = []
    for a in range(r):
        g = gamma_abstract(k, r, a)
        for cls in classes:
            if are_isomorphic(gamma_abstract(k, r, cls[0]), g) is not None:
                cls.append(a)
                break
        else:
            classes.append([a])
    return classes


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-r", type=int, default=7)
    args = ap.parse_args()
    print(f"{'r':>3} {'k':>3} {'|E|':>5} {'C(r-1,k-1)':>10} {'collapse':>9} {'b_k-1':>6}  iso classes of a")
    for r in range(1, args.max_r + 1):
        for k in range(1, r + 1):
            g = gamma_abstract(k, r, 0)
            ok = all(greedy_collapse(gamma_abstract(k, r, a)).complete for a in range(r))
            top = max(betti(gamma_abstract(k, r, a), "exact")[k - 1] for a in range(r))
            print(f"{r:>3} {k:>3} {len(g):>5} {comb(r - 1, k - 1):>10} {str(ok):>9} {top:>6}  "
                  f"{residue_classes(k, r)}")


if __name__ == "__main__":
    main()
