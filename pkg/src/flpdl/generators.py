"""Seeded random instances: relations, models, actions, formulas.

Everything takes an explicit random.Random so callers control
reproducibility; no module-level state.
"""

from __future__ import annotations

import random
from typing import Sequence

from .algebra import FLAlgebra
from .relations import XRelation
from .semantics import Frame, Model
from .syntax import (ActionExp, And, Atom, Box, Choice, Const, Formula, Fuse,
                     LDiv, Or, Plus, RDiv, Seq, Var)


def random_relation(algebra: FLAlgebra, size: int, rng: random.Random) -> XRelation:
    rows = tuple(tuple(rng.randrange(algebra.size) for _ in range(size))
                 for _ in range(size))
    return XRelation(algebra, rows)


def random_model(algebra: FLAlgebra, size: int, rng: random.Random,
                 atoms: Sequence[int] = (0,), variables: Sequence[int] = (0,),
                 ) -> Model:
    relations = {a: random_relation(algebra, size, rng) for a in atoms}
    valuation = {p: tuple(rng.randrange(algebra.size) for _ in range(size))
                 for p in variables}
    return Model(Frame(algebra, size, relations), valuation)


def random_action(rng: random.Random, depth: int,
                  atoms: Sequence[int] = (0, 1)) -> ActionExp:
    if depth <= 0 or rng.random() < 0.4:
        return Atom(rng.choice(list(atoms)))
    kind = rng.randrange(3)
    if kind == 0:
        return Choice(random_action(rng, depth - 1, atoms),
                      random_action(rng, depth - 1, atoms))
    if kind == 1:
        return Seq(random_action(rng, depth - 1, atoms),
                   random_action(rng, depth - 1, atoms))
    return Plus(random_action(rng, depth - 1, atoms))


def random_formula(rng: random.Random, algebra: FLAlgebra, depth: int,
                   variables: Sequence[int] = (0, 1),
                   atoms: Sequence[int] = (0, 1)) -> Formula:
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.75:
            return Var(rng.choice(list(variables)))
        return Const(rng.randrange(algebra.size))
    kind = rng.randrange(6)
    if kind == 5:
        return Box(random_action(rng, depth - 1, atoms),
                   random_formula(rng, algebra, depth - 1, variables, atoms))
    cls = (And, Or, Fuse, LDiv, RDiv)[kind]
    return cls(random_formula(rng, algebra, depth - 1, variables, atoms),
               random_formula(rng, algebra, depth - 1, variables, atoms))
