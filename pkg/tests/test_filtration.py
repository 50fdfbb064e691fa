"""Quotients of models through formula closures."""

import pytest

from flpdl.errors import NotClosed
from flpdl.filtration import Partition, filtrate, phi_partition
from flpdl.generators import random_formula, random_model
from flpdl.parser import parse_formula
from flpdl.relations import XRelation
from flpdl.semantics import Frame, Model
from flpdl.syntax import closure_of, Var


@pytest.fixture()
def m4(C3):
    # states 2 and 3 agree on every closure formula of [a0+]p0
    fr = Frame(C3, 4, relations={0: XRelation.from_rows(C3, [
        [0, 1, 2, 2], [2, 0, 1, 1], [2, 2, 0, 0], [2, 2, 0, 0]])})
    return Model(fr, valuation={0: (0, 1, 2, 2)})


def test_partition_pin(m4, C3):
    phis = closure_of([parse_formula("[a0+]p0", C3)])
    part = phi_partition(m4, phis)
    assert part.class_of == (0, 1, 2, 2)
    assert part.representatives == (0, 1, 2)
    assert part.class_count == 3


def test_partition_members(m4, C3):
    phis = closure_of([parse_formula("[a0+]p0", C3)])
    part = phi_partition(m4, phis)
    assert part.members() == ((0,), (1,), (2, 3))


def test_filtrate_pin(m4, C3):
    phis = closure_of([parse_formula("[a0+]p0", C3)])
    small = filtrate(m4, phis)
    assert small.frame.size == 3
    assert small.frame.state_names == ("[0]", "[1]", "[2]")
    assert small.frame.atomic[0].values == ((0, 1, 2), (2, 0, 1), (2, 2, 0))
    assert small.var_row(0) == (0, 1, 2)


def test_filtrate_relation_is_classwise_join(m4, C3):
    phis = closure_of([parse_formula("[a0+]p0", C3)])
    part = phi_partition(m4, phis)
    small = filtrate(m4, phis, part)
    big = m4.frame.atomic[0]
    members = part.members()
    for cs in range(part.class_count):
        for ct in range(part.class_count):
            acc = C3.bottom
            for s in members[cs]:
                for t in members[ct]:
                    acc = C3.join(acc, big.values[s][t])
            assert small.frame.atomic[0].values[cs][ct] == acc


def test_closure_values_survive_the_quotient(m4, C3):
    phis = closure_of([parse_formula("[a0+]p0", C3)])
    part = phi_partition(m4, phis)
    small = filtrate(m4, phis, part)
    for f in phis:
        big_row = m4.values(f)
        small_row = small.values(f)
        for s in range(4):
            assert big_row[s] == small_row[part.class_of[s]]


def test_preservation_on_random_models(builtins, rng):
    checked = 0
    for alg in builtins.values():
        for _ in range(25):
            m = random_model(alg, rng.randint(2, 5), rng)
            seed = random_formula(rng, alg, depth=3)
            phis = closure_of([seed])
            part = phi_partition(m, phis)
            small = filtrate(m, phis, part)
            assert part.class_count <= alg.size ** len(phis)
            for f in phis:
                big_row = m.values(f)
                small_row = small.values(f)
                for s in range(m.frame.size):
                    assert big_row[s] == small_row[part.class_of[s]]
                    checked += 1
    assert checked > 1000


def test_variables_outside_the_closure_default(m4, C3):
    phis = closure_of([parse_formula("[a0+]p0", C3)])
    small = filtrate(m4, phis)
    assert small.var_row(7) == (C3.zero,) * 3


def test_requires_closed_list(m4, C3):
    # partitioning groups by values over any list; only the quotient
    # construction depends on closedness
    f = parse_formula("[a0]p0", C3)
    with pytest.raises(NotClosed):
        filtrate(m4, [f])
    assert phi_partition(m4, [f]).class_count >= 1


def test_all_states_distinct_is_isomorphic(C3):
    fr = Frame(C3, 3, relations={0: XRelation.from_rows(C3, [
        [0, 1, 2], [2, 0, 1], [1, 2, 0]])})
    m = Model(fr, valuation={0: (0, 1, 2)})
    phis = closure_of([parse_formula("p0", C3)])
    small = filtrate(m, phis)
    assert small.frame.size == 3
    assert small.var_row(0) == m.var_row(0)


def test_filtration_is_stable(m4, C3):
    # filtrating a filtrated model splits nothing further
    phis = closure_of([parse_formula("[a0+]p0", C3)])
    small = filtrate(m4, phis)
    again = filtrate(small, phis)
    assert again.frame.size == small.frame.size
    assert again.frame.atomic[0].values == small.frame.atomic[0].values


def test_partition_respects_explicit_argument(m4, C3):
    # identity partition keeps the model size even with duplicate states
    phis = closure_of([parse_formula("[a0+]p0", C3)])
    ident = Partition(class_of=(0, 1, 2, 3), representatives=(0, 1, 2, 3))
    small = filtrate(m4, phis, ident)
    assert small.frame.size == 4


def test_class_bound_pin(m4, C3):
    phis = closure_of([parse_formula("[a0+]p0", C3)])
    part = phi_partition(m4, phis)
    assert part.class_count <= 3 ** 4
