"""Collapsing a model without changing any answer that matters.

Filtration quotients a model by the values of a closed formula set: two
states merge when no formula in the set can tell them apart. The class
count is bounded by |algebra| ** |set|, independent of the model, which
is the engine behind deciding validity by checking finitely many models.
"""

import random

from flpdl import (closure_of, cost_chain, filtrate, format_formula,
                   parse_formula, phi_partition)
from flpdl.generators import random_model


def main() -> None:
    c3 = cost_chain(3)
    seed = parse_formula("[a0+]p0", c3)
    phis = closure_of([seed])
    print("closure of [a0+]p0:")
    for f in phis:
        print("   ", format_formula(f))
    bound = c3.size ** len(phis)
    print("class bound:", bound)

    rng = random.Random(2024)
    for size in (6, 12, 25, 60):
        model = random_model(c3, size, rng)
        part = phi_partition(model, phis)
        small = filtrate(model, phis, part)
        # every closure formula keeps its value through the quotient
        preserved = all(
            model.values(f)[s] == small.values(f)[part.class_of[s]]
            for f in phis for s in range(size))
        print(f"{size:3} states -> {part.class_count:2} classes"
              f"   preserved={preserved}   within bound={part.class_count <= bound}")

    # merged states really were indistinguishable
    model = random_model(c3, 40, rng)
    part = phi_partition(model, phis)
    members = part.members()
    cls = max(members, key=len)
    s, t = cls[0], cls[-1]
    print(f"\nlargest class has {len(cls)} states; "
          f"states {s} and {t} agree on all {len(phis)} formulas:",
          all(model.values(f)[s] == model.values(f)[t] for f in phis))


if __name__ == "__main__":
    main()
