"""Relations that carry a truth value on every edge.

Over the cost chain, a relation is a matrix of prices: composition is
min-plus matrix product and transitive closure is all-pairs cheapest
walk. The same code runs over any bundled algebra; the Boolean case
degenerates to ordinary reachability.
"""

from flpdl import (XRelation, cost_chain, identity_relation, path_value,
                   refl_trans_closure, rel_compose, rel_union,
                   transitive_closure)


def pretty(rel: XRelation, label: str) -> None:
    print(f"{label}:")
    for row in rel.values:
        print("   ", list(row))


def main() -> None:
    c3 = cost_chain(3)

    # three sites; entry (s, t) is the toll for one hop
    hop = XRelation.from_rows(c3, [[2, 0, 2],
                                   [2, 2, 0],
                                   [2, 2, 2]])
    pretty(hop, "one hop (2 = no road)")

    two_hops = rel_compose(hop, hop)
    pretty(two_hops, "two hops")
    print("cheapest 0->2 walk through 1:", path_value(hop, 0, (1,), 2))

    plus = transitive_closure(hop)
    pretty(plus, "any positive number of hops")
    assert plus.values[0][2] == 0  # the free detour 0 -> 1 -> 2

    star = refl_trans_closure(hop)
    pretty(star, "allowing standing still")
    assert all(star.values[s][s] == c3.one for s in range(3))

    shortcut = XRelation.from_rows(c3, [[2, 2, 1],
                                        [2, 2, 2],
                                        [2, 2, 2]])
    with_shortcut = transitive_closure(rel_union(hop, shortcut))
    pretty(with_shortcut, "after adding a direct 0->2 toll road")
    # the toll road cannot beat the free detour
    assert with_shortcut.values[0][2] == 0

    ident = identity_relation(c3, 3)
    assert rel_compose(ident, hop).values == hop.values
    print("identity relation is neutral for composition: ok")


if __name__ == "__main__":
    main()
