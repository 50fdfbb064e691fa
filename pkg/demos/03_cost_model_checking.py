"""Evaluating programs against graded specifications.

A model is a frame (weighted relations, one per atomic action) plus a
valuation of propositional variables. The box [A]f reads: however A
runs, f holds afterwards, discounted by the cost of getting there.
Validity asks the designated element to sit below the formula's value
at every state.
"""

from flpdl import (Frame, Model, XRelation, cost_chain, evaluate,
                   load_model, model_to_json, parse_formula, valid_in_model)


def main() -> None:
    c3 = cost_chain(3)

    # a tiny job system: states idle(0), working(1), done(2)
    # action a0 = "step", a1 = "abort"
    step = XRelation.from_rows(c3, [[2, 0, 2],
                                    [2, 1, 0],
                                    [2, 2, 0]])
    abort = XRelation.from_rows(c3, [[0, 2, 2],
                                     [1, 2, 2],
                                     [2, 2, 0]])
    frame = Frame(c3, 3, relations={0: step, 1: abort},
                  state_names=("idle", "working", "done"))
    # p0 = "job finished", graded by how complete it is
    model = Model(frame, valuation={0: (2, 1, 0)})

    for text in ["p0", "[a0]p0", "[a0][a0]p0", "[a0+]p0", "<a0>p0",
                 "[a0 u a1]p0", "[a0*]p0"]:
        f = parse_formula(text, c3)
        print(f"{text:12}", [evaluate(model, f, s) for s in range(3)])

    # "two steps always finish the job" holds everywhere
    spec = parse_formula("[a0 ; a0]p0", c3)
    ok, _, _ = valid_in_model(model, spec)
    print("two-step spec valid:", ok)

    # "any number of steps finishes the job" fails: one step from idle
    # lands at working, where the job is only half done
    bad = parse_formula("[a0+]p0", c3)
    ok, state, value = valid_in_model(model, bad)
    print(f"unbounded spec fails at state {state} with value {value}")

    # models serialize to a small JSON document
    doc = model_to_json(model)
    print("round trip ok:", model_to_json(load_model(doc)) == doc)


if __name__ == "__main__":
    main()
