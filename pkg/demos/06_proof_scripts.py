"""Checking Hilbert-style proofs line by line.

A proof script is a list of formulas, each justified by an axiom scheme
instance, by finite-algebra consequence from earlier lines, or by one of
the two box rules (monotonicity and iteration). The checker is exact:
consequence is decided by enumerating assignments to the propositional
and boxed atoms over the chosen algebra.
"""

import json
from importlib import resources

from flpdl import (ByAxiom, ByLog, ByRMon, ByRPlus, ProofLine, ProofScript,
                   check_proof, cost_chain, format_formula, load_proof,
                   parse_formula)
from flpdl.algebra_search import find_non_commutative


def main() -> None:
    c3 = cost_chain(3)

    def line(text: str, by) -> ProofLine:
        return ProofLine(parse_formula(text, c3), by)

    script = ProofScript((
        line("[a0+]p0 <-> [a0](p0 & [a0+]p0)", ByAxiom("A-plus")),
        line("[a0+]p0 -> [a0](p0 & [a0+]p0)", ByLog((0,))),
        line("(p0 & [a0+]p0) -> p0", ByLog(())),
        line("[a0](p0 & [a0+]p0) -> [a0]p0", ByRMon(2)),
        line("[a0+]p0 -> [a0]p0", ByLog((1, 3))),
    ))
    verdict = check_proof(script, c3)
    print("derived:", format_formula(script.conclusion))
    print("accepted:", verdict.accepted)

    # corrupt one line: cite the wrong premise
    broken = ProofScript(script.lines[:4] + (
        ProofLine(script.lines[4].formula, ByLog((0,))),))
    verdict = check_proof(broken, c3)
    print(f"\ncorrupted copy rejected at line {verdict.failed_line}: "
          f"{verdict.reason}")

    # proofs serialize to JSON; the package bundles a worked corpus
    corpus = resources.files("flpdl") / "data" / "proofs"
    names = sorted(p.name for p in corpus.iterdir())
    print(f"\nbundled proof scripts: {len(names)}")
    doc = json.loads((corpus / "diamond_monotone.json").read_text())
    script = load_proof(doc)
    for i, pl in enumerate(script.lines):
        print(f"  {i}: {format_formula(pl.formula)}")
    print("accepted:", check_proof(script, c3).accepted)

    # on a non-commutative algebra the checker still answers, but warns
    nc = find_non_commutative(max_size=4)
    one_liner = ProofScript((ProofLine(parse_formula("[a0]#one", nc),
                                       ByAxiom("A-1")),))
    verdict = check_proof(one_liner, nc)
    print("\nnon-commutative algebra warnings:")
    for w in verdict.warnings:
        print("   ", w)


if __name__ == "__main__":
    main()
