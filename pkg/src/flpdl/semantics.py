"""Frames, models, and algebra-valued evaluation.

A frame fixes the algebra, the state count and one relation per action
atom; action atoms the frame does not map default to the bottom relation
(strict mode turns that into an error). A model adds a valuation; variable
values a model does not map default to the algebra's zero element.

evaluate computes the value of a formula per state:

    constants are themselves; &, |, *, \\, -> apply the algebra's meet,
    join, fusion, left division and implication pointwise; and
    [A]f at s is the meet over t of  R_A(s,t) => f-value at t,

with => the right division. Composite actions get their relation from the
atoms by union / composition / transitive closure, memoized per frame.

Evaluation is deterministic and side-effect free apart from caches whose
entries are only ever written with the one value they can take, so
concurrent evaluate calls agree.
"""

from __future__ import annotations

import re
from typing import Mapping, Sequence

from .algebra import FLAlgebra, algebra_to_json, load_algebra
from .errors import DimensionMismatch, UnknownAtom
from .relations import XRelation, bottom_relation, rel_compose, rel_union, transitive_closure
from .syntax import (ActionExp, And, Atom, Box, Choice, Const, Formula, Fuse,
                     LDiv, Or, Plus, RDiv, Seq, Var, action_atoms)


class Frame:
    def __init__(self, algebra: FLAlgebra, size: int,
                 relations: Mapping[int, XRelation] | None = None,
                 state_names: Sequence[str] | None = None):
        if size < 1:
            raise DimensionMismatch("a frame needs at least one state")
        self.algebra = algebra
        self.size = size
        self.atomic: dict[int, XRelation] = {}
        for idx, rel in (relations or {}).items():
            if rel.size != size:
                raise DimensionMismatch(f"relation for a{idx} has {rel.size} states, frame has {size}")
            if rel.algebra is not algebra and not rel.algebra.same_tables(algebra):
                raise DimensionMismatch(f"relation for a{idx} lives over a different algebra")
            self.atomic[int(idx)] = rel
        self.state_names = tuple(state_names) if state_names is not None else None
        self._derived: dict[ActionExp, XRelation] = {}

    def atom_relation(self, index: int, strict: bool = False) -> XRelation:
        rel = self.atomic.get(index)
        if rel is None:
            if strict:
                raise UnknownAtom(f"frame maps no relation for action atom a{index}")
            rel = bottom_relation(self.algebra, self.size)
        return rel

    def relation(self, action: ActionExp, strict: bool = False) -> XRelation:
        """Relation for a composite action, memoized on the action tree."""
        if strict:
            # checked before the memo so a prior lenient call cannot mask it
            for idx in _atoms_of(action):
                if idx not in self.atomic:
                    raise UnknownAtom(f"frame maps no relation for action atom a{idx}")
        cached = self._derived.get(action)
        if cached is not None:
            return cached
        if isinstance(action, Atom):
            rel = self.atom_relation(action.index, strict)
        elif isinstance(action, Choice):
            rel = rel_union(self.relation(action.left, strict), self.relation(action.right, strict))
        elif isinstance(action, Seq):
            rel = rel_compose(self.relation(action.left, strict), self.relation(action.right, strict))
        elif isinstance(action, Plus):
            rel = transitive_closure(self.relation(action.body, strict))
        else:
            raise TypeError(f"not an action expression: {action!r}")
        self._derived[action] = rel
        return rel


def _atoms_of(action: ActionExp):
    if isinstance(action, Atom):
        yield action.index
    elif isinstance(action, Plus):
        yield from _atoms_of(action.body)
    elif isinstance(action, (Choice, Seq)):
        yield from _atoms_of(action.left)
        yield from _atoms_of(action.right)
    else:
        raise TypeError(f"not an action expression: {action!r}")


def derived_relation(frame: Frame, action: ActionExp) -> XRelation:
    return frame.relation(action)


class Model:
    """A frame plus a valuation (variable index -> one value per state)."""

    def __init__(self, frame: Frame, valuation: Mapping[int, Sequence[int]] | None = None,
                 strict: bool = False):
        self.frame = frame
        self.strict = strict
        self.valuation: dict[int, tuple[int, ...]] = {}
        for var, row in (valuation or {}).items():
            row = tuple(int(v) for v in row)
            if len(row) != frame.size:
                raise DimensionMismatch(f"valuation for p{var} must list {frame.size} values")
            for v in row:
                if not (0 <= v < frame.algebra.size):
                    raise DimensionMismatch(f"valuation entry {v} is no element index")
            self.valuation[int(var)] = row
        self._values: dict[Formula, tuple[int, ...]] = {}

    @property
    def algebra(self) -> FLAlgebra:
        return self.frame.algebra

    def var_row(self, index: int) -> tuple[int, ...]:
        row = self.valuation.get(index)
        if row is None:
            row = (self.algebra.zero,) * self.frame.size
        return row

    def values(self, formula: Formula) -> tuple[int, ...]:
        """Value of the formula at every state."""
        cached = self._values.get(formula)
        if cached is not None:
            return cached
        A = self.algebra
        n = self.frame.size
        if isinstance(formula, Var):
            row = self.var_row(formula.index)
        elif isinstance(formula, Const):
            if not (0 <= formula.index < A.size):
                raise DimensionMismatch(f"constant #{formula.index} is no element index")
            row = (formula.index,) * n
        elif isinstance(formula, Box):
            rel = self.frame.relation(formula.action, self.strict)
            body = self.values(formula.body)
            row = tuple(_box_at(A, rel.values[s], body) for s in range(n))
        else:
            left = self.values(formula.left)
            right = self.values(formula.right)
            if isinstance(formula, And):
                op = A.meet
            elif isinstance(formula, Or):
                op = A.join
            elif isinstance(formula, Fuse):
                op = A.fuse
            elif isinstance(formula, LDiv):
                op = A.ldiv
            elif isinstance(formula, RDiv):
                op = lambda a, b: A.imp(a, b)
            else:
                raise TypeError(f"not a formula: {formula!r}")
            row = tuple(op(a, b) for a, b in zip(left, right))
        self._values[formula] = row
        return row


def _box_at(A: FLAlgebra, rel_row: tuple[int, ...], body: tuple[int, ...]) -> int:
    acc = A.top
    for r, v in zip(rel_row, body):
        acc = A.meet(acc, A.imp(r, v))
    return acc


def evaluate(model: Model, formula: Formula, state: int) -> int:
    """Value of the formula at one state."""
    return model.values(formula)[state]


def valid_in_model(model: Model, formula: Formula) -> tuple[bool, int | None, int | None]:
    """Is one <= value at every state? Returns (verdict, witness state, value).

    The witness is the first state refuting validity, with its value.
    """
    A = model.algebra
    for s, v in enumerate(model.values(formula)):
        if not A.leq(A.one, v):
            return False, s, v
    return True, None, None


# -- JSON form ---------------------------------------------------------------

_ATOM_KEY = re.compile(r"^a(\d+)$")
_VAR_KEY = re.compile(r"^p(\d+)$")


def load_model(source, algebra: FLAlgebra | None = None, strict: bool = False) -> Model:
    """Build a model from a dict or JSON file.

    Fields: "algebra" (inline dict or builtin: URI; optional when the
    algebra argument is given, which always wins), "states" (count or list
    of names), "relations" (map "aK" -> n x n matrix of element indices),
    "valuation" (map "pK" -> per-state element indices).
    """
    import json
    import os

    if isinstance(source, str):
        if not os.path.exists(source):
            raise ValueError(f"no such model file: {source}")
        with open(source) as fh:
            source = json.load(fh)
    if not isinstance(source, dict):
        raise ValueError("model source must be a dict or a file path")

    if algebra is None:
        if "algebra" not in source:
            raise ValueError("model gives no algebra and none was supplied")
        algebra = load_algebra(source["algebra"])

    states = source.get("states")
    if isinstance(states, int):
        size, names = states, None
    elif isinstance(states, list):
        size, names = len(states), [str(s) for s in states]
    else:
        raise ValueError('model field "states" must be a count or a list of names')

    relations = {}
    for key, matrix in (source.get("relations") or {}).items():
        m = _ATOM_KEY.match(str(key))
        if not m:
            raise ValueError(f'relation key {key!r} is not of the form "aK"')
        relations[int(m.group(1))] = XRelation.from_rows(algebra, matrix)

    valuation = {}
    for key, row in (source.get("valuation") or {}).items():
        m = _VAR_KEY.match(str(key))
        if not m:
            raise ValueError(f'valuation key {key!r} is not of the form "pK"')
        valuation[int(m.group(1))] = row

    frame = Frame(algebra, size, relations, state_names=names)
    return Model(frame, valuation, strict=strict)


def model_to_json(model: Model) -> dict:
    frame = model.frame
    out = {
        "algebra": frame.algebra.uri or algebra_to_json(frame.algebra),
        "states": list(frame.state_names) if frame.state_names else frame.size,
        "relations": {f"a{idx}": [list(row) for row in rel.values]
                      for idx, rel in sorted(frame.atomic.items())},
        "valuation": {f"p{idx}": list(row)
                      for idx, row in sorted(model.valuation.items())},
    }
    return out


def model_atoms_cover(model: Model, formula: Formula) -> bool:
    """Do the frame's relations cover every atom the formula mentions?"""
    return all(idx in model.frame.atomic for idx in action_atoms(formula))
