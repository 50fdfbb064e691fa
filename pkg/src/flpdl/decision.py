"""Bounded countermodel search by exhaustive enumeration or sampling.

Candidate models over the atoms and variables a formula mentions are laid
out in one canonical order: state count ascending; within a state count,
the relation matrices in lexicographic element order row by row (first
atom most significant), then the valuations (first variable most
significant, its state 0 entry before state 1). The first countermodel in
this order is the reported one, so outcomes are reproducible; any
partitioning of the index space across workers must still report the
canonically first hit.

Enumeration is vectorized: candidates are decoded from their index in
blocks and evaluated with table lookups, and every hit is re-verified by
the scalar evaluator before being returned.

Exhausting every frame up to the class-count bound |algebra| ** |closure|
proves validity; anything less only reports the bound reached. Sampling
mode draws frames and valuations uniformly at random and can never prove
validity, so its no-hit outcome is capped at the same report.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .algebra import FLAlgebra
from .errors import BudgetExceeded
from .relations import XRelation
from .semantics import Frame, Model, valid_in_model
from .syntax import (ActionExp, And, Atom, Box, Choice, Const, Formula, Fuse,
                     LDiv, Or, Plus, RDiv, Seq, Var, action_atoms, closure_of,
                     variables)

DEFAULT_BUDGET = 10 ** 6
_CHUNK = 1 << 14


def default_budget() -> int:
    """Budget used when none is given; FLPDL_BUDGET overrides the built-in."""
    raw = os.environ.get("FLPDL_BUDGET")
    if raw:
        try:
            value = int(raw)
        except ValueError as exc:
            raise ValueError(f"FLPDL_BUDGET must be an integer, got {raw!r}") from exc
        if value < 1:
            raise ValueError("FLPDL_BUDGET must be positive")
        return value
    return DEFAULT_BUDGET


def theoretical_bound(formula: Formula, algebra: FLAlgebra) -> int:
    """State-count bound sufficient for exhaustive validity checking.

    Equals |algebra| ** |closure of the formula|; arbitrary precision, so
    it is often far beyond anything enumerable.
    """
    return algebra.size ** len(closure_of([formula]))


@dataclass(frozen=True)
class Countermodel:
    """A model and state where the formula's value is not above one."""

    model: Model
    witness_state: int
    value: int
    models_checked: int


@dataclass(frozen=True)
class NoCountermodelUpTo:
    """No hit within the searched space; proves nothing beyond it."""

    max_states: int
    models_checked: int
    exhaustive: bool


@dataclass(frozen=True)
class ValidByExhaustion:
    """Every model up to the sufficient bound was checked; the formula is valid."""

    bound: int
    models_checked: int


DecisionOutcome = Countermodel | NoCountermodelUpTo | ValidByExhaustion


# -- batch evaluation over candidate blocks ----------------------------------

def _candidate_count(size: int, n: int, n_atoms: int, n_vars: int) -> int:
    return size ** (n_atoms * n * n + n_vars * n)


def _decode(indices: np.ndarray, size: int, n: int,
            atoms: tuple[int, ...], vars_: tuple[int, ...]):
    """Mixed-radix decode of candidate indices into relation and valuation digits."""
    digits_total = len(atoms) * n * n + len(vars_) * n
    block = len(indices)
    digits = np.empty((digits_total, block), dtype=np.int64)
    rem = indices.astype(np.int64, copy=True)
    for d in range(digits_total - 1, -1, -1):
        rem, digits[d] = np.divmod(rem, size)
    rels: dict[int, np.ndarray] = {}
    pos = 0
    for a in atoms:
        rels[a] = digits[pos:pos + n * n].T.reshape(block, n, n)
        pos += n * n
    vals: dict[int, np.ndarray] = {}
    for p in vars_:
        vals[p] = digits[pos:pos + n].T
        pos += n
    return rels, vals


def _compose_batch(arrs, r: np.ndarray, q: np.ndarray) -> np.ndarray:
    n = r.shape[1]
    out = None
    for x in range(n):
        term = arrs.fuse[r[:, :, x][:, :, None], q[:, x, :][:, None, :]]
        out = term if out is None else arrs.join[out, term]
    return out


def _closure_batch(arrs, r: np.ndarray, size: int) -> np.ndarray:
    n = r.shape[1]
    t = r
    for _ in range(n * n * size + 1):
        t2 = arrs.join[r, _compose_batch(arrs, t, r)]
        if np.array_equal(t2, t):
            return t
        t = t2
    raise AssertionError("transitive closure failed to stabilize")


def _action_batch(action: ActionExp, rels: dict[int, np.ndarray], arrs,
                  size: int, bottom: int, block: int, n: int,
                  memo: dict[ActionExp, np.ndarray]) -> np.ndarray:
    hit = memo.get(action)
    if hit is not None:
        return hit
    if isinstance(action, Atom):
        out = rels.get(action.index)
        if out is None:
            out = np.full((block, n, n), bottom, dtype=np.int64)
    elif isinstance(action, Choice):
        out = arrs.join[_action_batch(action.left, rels, arrs, size, bottom, block, n, memo),
                        _action_batch(action.right, rels, arrs, size, bottom, block, n, memo)]
    elif isinstance(action, Seq):
        out = _compose_batch(arrs,
                             _action_batch(action.left, rels, arrs, size, bottom, block, n, memo),
                             _action_batch(action.right, rels, arrs, size, bottom, block, n, memo))
    elif isinstance(action, Plus):
        out = _closure_batch(arrs, _action_batch(action.body, rels, arrs, size, bottom, block, n, memo), size)
    else:
        raise TypeError(f"not an action expression: {action!r}")
    memo[action] = out
    return out


def _eval_batch(formula: Formula, algebra: FLAlgebra,
                rels: dict[int, np.ndarray], vals: dict[int, np.ndarray],
                block: int, n: int,
                fmemo: dict[Formula, np.ndarray],
                amemo: dict[ActionExp, np.ndarray]) -> np.ndarray:
    """Formula value per candidate and state, shape (block, n)."""
    hit = fmemo.get(formula)
    if hit is not None:
        return hit
    arrs = algebra.arrays
    if isinstance(formula, Var):
        out = vals.get(formula.index)
        if out is None:
            out = np.full((block, n), algebra.zero, dtype=np.int64)
    elif isinstance(formula, Const):
        out = np.full((block, n), formula.index, dtype=np.int64)
    elif isinstance(formula, Box):
        rel = _action_batch(formula.action, rels, arrs, algebra.size,
                            algebra.bottom, block, n, amemo)
        body = _eval_batch(formula.body, algebra, rels, vals, block, n, fmemo, amemo)
        out = np.full((block, n), algebra.top, dtype=np.int64)
        for t in range(n):
            out = arrs.meet[out, arrs.imp[rel[:, :, t], body[:, t][:, None]]]
    else:
        left = _eval_batch(formula.left, algebra, rels, vals, block, n, fmemo, amemo)
        right = _eval_batch(formula.right, algebra, rels, vals, block, n, fmemo, amemo)
        table = {And: arrs.meet, Or: arrs.join, Fuse: arrs.fuse,
                 LDiv: arrs.ldiv}.get(type(formula))
        if table is not None:
            out = table[left, right]
        elif isinstance(formula, RDiv):
            out = arrs.imp[left, right]
        else:
            raise TypeError(f"not a formula: {formula!r}")
    fmemo[formula] = out
    return out


def _scan_block(formula: Formula, algebra: FLAlgebra, n: int,
                atoms: tuple[int, ...], vars_: tuple[int, ...],
                indices: np.ndarray):
    """Evaluate one block of candidates; return (hit position or None, per-state values)."""
    block = len(indices)
    rels, vals = _decode(indices, algebra.size, n, atoms, vars_)
    values = _eval_batch(formula, algebra, rels, vals, block, n, {}, {})
    ok = algebra.arrays.leq[algebra.one, values].all(axis=1)
    if ok.all():
        return None, None, None
    pos = int(np.argmin(ok))
    return pos, rels, vals


def _materialize(algebra: FLAlgebra, n: int, atoms, vars_, rels, vals, pos: int) -> Model:
    relations = {a: XRelation.from_rows(algebra, rels[a][pos].tolist()) for a in atoms}
    valuation = {p: tuple(int(v) for v in vals[p][pos]) for p in vars_}
    return Model(Frame(algebra, n, relations), valuation)


def _verify_hit(model: Model, formula: Formula, checked: int) -> Countermodel:
    ok, witness, value = valid_in_model(model, formula)
    if ok:
        raise AssertionError("batch scan reported a countermodel the scalar evaluator rejects")
    return Countermodel(model, witness, value, checked)


def decide_bounded(formula: Formula, algebra: FLAlgebra, max_states: int,
                   budget: int | None = None, mode: str = "exhaustive",
                   seed: int = 0) -> DecisionOutcome:
    """Search models with 1..max_states states for one refuting the formula.

    Only the action atoms and variables the formula mentions vary; that
    loses no countermodels because evaluation never looks at anything
    else. The budget counts candidate models; running out of it raises
    BudgetExceeded whose frontier records how far the scan got. Sampling
    mode instead draws `budget` random candidates (state count uniform on
    1..max_states, entries uniform) and cannot prove validity.
    """
    if max_states < 1:
        raise ValueError("max_states must be at least 1")
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"unknown mode {mode!r}")
    if budget is None:
        budget = default_budget()
    if budget < 1:
        raise ValueError("budget must be positive")

    atoms = action_atoms(formula)
    vars_ = variables(formula)
    size = algebra.size
    checked = 0

    if mode == "sample":
        rng = np.random.default_rng(seed)
        while checked < budget:
            block = min(_CHUNK, budget - checked)
            ns = rng.integers(1, max_states + 1, size=block)
            best = None
            for n in sorted(set(int(v) for v in ns)):
                sel = np.where(ns == n)[0]
                g = len(sel)
                rels = {a: rng.integers(0, size, size=(g, n, n), dtype=np.int64)
                        for a in atoms}
                vals = {p: rng.integers(0, size, size=(g, n), dtype=np.int64)
                        for p in vars_}
                values = _eval_batch(formula, algebra, rels, vals, g, n, {}, {})
                ok = algebra.arrays.leq[algebra.one, values].all(axis=1)
                if not ok.all():
                    pos = int(np.argmin(ok))
                    stream = int(sel[pos])
                    if best is None or stream < best[0]:
                        best = (stream, n, rels, vals, pos)
            if best is not None:
                stream, n, rels, vals, pos = best
                checked += stream + 1
                model = _materialize(algebra, n, atoms, vars_, rels, vals, pos)
                return _verify_hit(model, formula, checked)
            checked += block
        return NoCountermodelUpTo(max_states, checked, exhaustive=False)

    for n in range(1, max_states + 1):
        total = _candidate_count(size, n, len(atoms), len(vars_))
        start = 0
        while start < total:
            if checked >= budget:
                raise BudgetExceeded(
                    "candidate budget exhausted before the search space",
                    frontier={"states": n, "next_index": start,
                              "models_checked": checked, "max_states": max_states})
            block = min(_CHUNK, total - start, budget - checked)
            indices = np.arange(start, start + block, dtype=np.int64)
            pos, rels, vals = _scan_block(formula, algebra, n, atoms, vars_, indices)
            if pos is not None:
                checked += pos + 1
                model = _materialize(algebra, n, atoms, vars_, rels, vals, pos)
                return _verify_hit(model, formula, checked)
            checked += block
            start += block

    bound = theoretical_bound(formula, algebra)
    if max_states >= bound:
        return ValidByExhaustion(bound, checked)
    return NoCountermodelUpTo(max_states, checked, exhaustive=True)
