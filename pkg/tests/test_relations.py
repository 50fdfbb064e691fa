"""Weighted relations: union, composition, closures, walk values."""

import random

import pytest

from flpdl.algebra_search import find_non_integral
from flpdl.errors import DimensionMismatch
from flpdl.generators import random_relation
from flpdl.oracles import cost_walk_join_fast
from flpdl.relations import (XRelation, bottom_relation, identity_relation,
                             path_value, refl_trans_closure, rel_compose,
                             rel_union, transitive_closure)


def test_from_rows_rejects_ragged(C3):
    with pytest.raises(DimensionMismatch):
        XRelation.from_rows(C3, [[0, 1], [0, 1, 2]])


def test_from_rows_rejects_out_of_range(C3):
    with pytest.raises(DimensionMismatch):
        XRelation.from_rows(C3, [[0, 3], [0, 0]])


def test_compose_pins(C3):
    r = XRelation.from_rows(C3, [[0, 1, 2], [2, 2, 1], [1, 2, 0]])
    q = XRelation.from_rows(C3, [[2, 0, 2], [1, 1, 2], [2, 2, 1]])
    assert rel_compose(r, q).values == ((2, 0, 2), (2, 2, 2), (2, 1, 1))
    assert rel_compose(q, r).values == ((2, 2, 1), (1, 2, 2), (2, 2, 1))
    assert rel_union(r, q).values == ((0, 0, 2), (1, 1, 1), (1, 2, 0))


def test_compose_cost_reading(C3):
    # over the cost chain, composition is min-plus matrix product
    r = XRelation.from_rows(C3, [[2, 1, 2], [0, 2, 1], [2, 2, 0]])
    q = XRelation.from_rows(C3, [[1, 2, 0], [2, 0, 2], [1, 1, 2]])
    out = rel_compose(r, q)
    for s in range(3):
        for t in range(3):
            expect = min(min(r.values[s][x] + q.values[x][t], 2)
                         for x in range(3))
            assert out.values[s][t] == expect


def test_identity_is_neutral(C3, rng):
    ident = identity_relation(C3, 4)
    for _ in range(20):
        r = random_relation(C3, 4, rng)
        assert rel_compose(ident, r).values == r.values
        assert rel_compose(r, ident).values == r.values


def test_bottom_annihilates(C3, rng):
    bot = bottom_relation(C3, 3)
    r = random_relation(C3, 3, rng)
    assert rel_compose(bot, r).values == bot.values
    assert rel_compose(r, bot).values == bot.values


def test_union_is_join_semilattice(C3, rng):
    for _ in range(20):
        r = random_relation(C3, 3, rng)
        q = random_relation(C3, 3, rng)
        assert rel_union(r, q).values == rel_union(q, r).values
        assert rel_union(r, r).values == r.values


def test_transitive_closure_pin(C3):
    s = XRelation.from_rows(C3, [[2, 0, 2], [2, 2, 0], [2, 2, 2]])
    assert transitive_closure(s).values == ((2, 0, 0), (2, 2, 0), (2, 2, 2))
    assert refl_trans_closure(s).values == ((0, 0, 0), (2, 0, 0), (2, 2, 0))


def test_transitive_closure_bool_pin(B):
    r = XRelation.from_rows(B, [[0, 1], [0, 0]])
    assert transitive_closure(r).values == ((0, 1), (0, 0))
    assert refl_trans_closure(r).values == ((1, 1), (0, 1))


def test_closure_is_transitive_and_extends(C3, rng):
    fuse, leq = C3.fuse, C3.leq
    for _ in range(50):
        r = random_relation(C3, 3, rng)
        p = transitive_closure(r)
        for s in range(3):
            for t in range(3):
                assert leq(r.values[s][t], p.values[s][t])
                for x in range(3):
                    assert leq(fuse(p.values[s][x], p.values[x][t]),
                               p.values[s][t])


def test_closure_is_idempotent(C3, rng):
    for _ in range(30):
        r = random_relation(C3, 3, rng)
        p = transitive_closure(r)
        assert transitive_closure(p).values == p.values


def test_closure_is_monotone(C3, rng):
    for _ in range(30):
        r = random_relation(C3, 3, rng)
        q = random_relation(C3, 3, rng)
        upper = rel_union(r, q)
        pr, pu = transitive_closure(r), transitive_closure(upper)
        for s in range(3):
            for t in range(3):
                assert C3.leq(pr.values[s][t], pu.values[s][t])


def test_closure_matches_capped_walk_oracle(C3, rng):
    # independent min-plus check: closure entry = best walk cost, capped
    for _ in range(25):
        r = random_relation(C3, 3, rng)
        p = transitive_closure(r)
        oracle = cost_walk_join_fast(r, cap=2)
        assert p.values == tuple(map(tuple, oracle.tolist()))


def test_star_forces_one_on_diagonal(C3, rng):
    for _ in range(20):
        r = random_relation(C3, 3, rng)
        star = refl_trans_closure(r)
        plus = transitive_closure(r)
        for s in range(3):
            assert star.values[s][s] == C3.one
            for t in range(3):
                if s != t:
                    assert star.values[s][t] == plus.values[s][t]


def test_non_integral_star_exceeds_identity_union():
    """Boundary pin: with one strictly below top, forcing the diagonal to
    one can land strictly below the diagonal of id-union-plus."""
    alg = find_non_integral(max_size=3)
    r = XRelation.from_rows(alg, [[2]])
    star = refl_trans_closure(r)
    assert star.values == ((1,),)
    plus = transitive_closure(r)
    joined = rel_union(identity_relation(alg, 1), plus)
    assert joined.values == ((2,),)
    assert star.values != joined.values


def test_path_value_pins(C3):
    s = XRelation.from_rows(C3, [[2, 1, 2], [2, 2, 1], [1, 2, 2]])
    assert path_value(s, 0, (), 2) == 2
    assert path_value(s, 0, (1,), 2) == 2
    assert path_value(s, 0, (1, 2), 0) == 2


def test_closure_dominates_every_short_walk(C3, rng):
    import itertools
    for _ in range(10):
        r = random_relation(C3, 3, rng)
        p = transitive_closure(r)
        for s in range(3):
            for t in range(3):
                best = r.values[s][t]
                for length in (1, 2, 3):
                    for mid in itertools.product(range(3), repeat=length):
                        best = C3.join(best, path_value(r, s, mid, t))
                assert best == p.values[s][t]


def test_dimension_mismatch_across_sizes(C3):
    r = XRelation.from_rows(C3, [[0]])
    q = XRelation.from_rows(C3, [[0, 0], [0, 0]])
    with pytest.raises(DimensionMismatch):
        rel_compose(r, q)


def test_dimension_mismatch_across_algebras(B, C3):
    r = XRelation.from_rows(B, [[0, 1], [1, 0]])
    q = XRelation.from_rows(C3, [[0, 1], [1, 0]])
    with pytest.raises(DimensionMismatch):
        rel_union(r, q)
