"""Closed-form rank predictions versus computed boundary ranks.

For each isomorphism class of 3-dimensional algebras there are binomial
closed forms predicting the rank of the boundary map in each degree.  The
computed exact ranks are authoritative; this script runs the comparison
over a sweep of weights and reports where the formulas hold and where the
d3 class is known to overcount (overlapping monomial families make a few
of its predicted generators linearly dependent).

Also shown: the n = 3 chain-dimension formula, which does match counting
in every degree and weight tested.
"""

from formchains import catalog, chain_dim, chain_dim_formula_n3, rank_formula_check

FAMILIES = ["d3", "d2y", "d2n", "d1y", "d1n"]


def main():
    print("rank formulas, weights -1 .. -10:")
    for label in FAMILIES:
        spec = catalog(label)
        bad = []
        for w in range(-1, -11, -1):
            rep = rank_formula_check(spec, w, name=label)
            bad.extend((w, m, c, p) for m, c, p in rep.mismatches)
        if not bad:
            print(f"  {label}: all degrees match")
        else:
            spots = ", ".join(f"w={w} m={m} ({c} vs {p})"
                              for w, m, c, p in bad)
            print(f"  {label}: computed vs formula differ at {spots}")
    print()

    print("n = 3 dimension formula vs enumeration, weights -1 .. -12:")
    bad = [(m, w)
           for w in range(-1, -13, -1)
           for m in range(1, -w + 1)
           if chain_dim_formula_n3(m, w) != chain_dim(3, m, w)]
    print("  all match" if not bad else f"  MISMATCH at {bad}")


if __name__ == "__main__":
    main()
