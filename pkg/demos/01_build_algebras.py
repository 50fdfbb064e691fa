"""Truth values beyond true and false.

Formulas here take values in a finite residuated lattice instead of a
two-point Boolean algebra. This script builds the bundled algebras,
shows the derived implication of each, and demonstrates what the
validator rejects.
"""

from flpdl import (algebra_to_json, bool2, build_algebra,
                   check_algebra_properties, cost_chain, load_algebra,
                   product, InvalidAlgebra)


def show(alg, label: str) -> None:
    print(f"\n{label}: {alg.size} elements, one={alg.one}, "
          f"top={alg.top}, bottom={alg.bottom}")
    print("  implication table (rows: antecedent):")
    for a in range(alg.size):
        print("   ", [alg.imp(a, b) for b in range(alg.size)])


def main() -> None:
    show(bool2(), "bool2, the classical case")

    # cost chains order by expense: 0 is free (and designated), n-1 is
    # unaffordable; fusion adds costs with saturation
    c3 = cost_chain(3)
    show(c3, "cost:3")
    print("  fusion(1, 1) =", c3.fuse(1, 1), " capped:", c3.fuse(2, 2))
    print("  a => b is truncated subtraction:", c3.imp(1, 2), "= max(2-1, 0)")

    show(product(bool2(), cost_chain(3)), "product(bool2, cost:3)")

    report = check_algebra_properties(c3)
    print("\nevery arithmetic law holds on cost:3:", report.all_passed)

    # break associativity-adjacent structure: bump one fusion entry
    tables = algebra_to_json(c3)
    broken = [list(row) for row in c3.fusion_table]
    broken[1][1] = 0  # doing the action twice becomes free: not monotone-safe
    try:
        build_algebra(3, c3.meet_table, c3.join_table, broken,
                      c3.one, c3.zero)
    except InvalidAlgebra as exc:
        print("perturbed table rejected:", exc)

    again = load_algebra(tables)
    print("JSON round trip preserves the tables:", again.same_tables(c3))


if __name__ == "__main__":
    main()
