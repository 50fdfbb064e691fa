"""Independent reference implementations used only to cross-check results.

Nothing here shares code with the main evaluation path: the classical
checker works on sets, the closure oracles work by brute-force candidate
enumeration and by explicit walk enumeration with plain capped addition.
Slow on purpose; correctness over speed.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import FLAlgebra
from .relations import XRelation
from .semantics import Model
from .syntax import (ActionExp, And, Atom, Box, Choice, Const, Formula, Fuse,
                     LDiv, Or, Plus, RDiv, Seq, Var)


# -- two-valued reference checker ---------------------------------------------

class ClassicalModel:
    """Set-based Kripke model: relations are sets of pairs, valuation sets of states."""

    def __init__(self, size: int, relations: dict[int, set[tuple[int, int]]],
                 valuation: dict[int, set[int]]):
        self.size = size
        self.relations = relations
        self.valuation = valuation

    @classmethod
    def from_model(cls, model: Model) -> "ClassicalModel":
        if model.algebra.size != 2:
            raise ValueError("classical reading needs the two-element algebra")
        rels = {idx: {(s, t) for s in range(rel.size) for t in range(rel.size)
                      if rel.get(s, t) == 1}
                for idx, rel in model.frame.atomic.items()}
        vals = {p: {s for s, v in enumerate(row) if v == 1}
                for p, row in model.valuation.items()}
        return cls(model.frame.size, rels, vals)


def _classical_relation(m: ClassicalModel, action: ActionExp) -> set[tuple[int, int]]:
    if isinstance(action, Atom):
        return m.relations.get(action.index, set())
    if isinstance(action, Choice):
        return _classical_relation(m, action.left) | _classical_relation(m, action.right)
    if isinstance(action, Seq):
        left = _classical_relation(m, action.left)
        right = _classical_relation(m, action.right)
        return {(s, u) for (s, t) in left for (t2, u) in right if t == t2}
    if isinstance(action, Plus):
        rel = set(_classical_relation(m, action.body))
        while True:
            step = {(s, u) for (s, t) in rel for (t2, u) in rel if t == t2}
            if step <= rel:
                return rel
            rel |= step
    raise TypeError(f"not an action expression: {action!r}")


def classical_states(m: ClassicalModel, formula: Formula) -> set[int]:
    """States where the formula is classically true."""
    everything = set(range(m.size))
    if isinstance(formula, Var):
        return set(m.valuation.get(formula.index, set()))
    if isinstance(formula, Const):
        return everything if formula.index == 1 else set()
    if isinstance(formula, (And, Fuse)):
        return classical_states(m, formula.left) & classical_states(m, formula.right)
    if isinstance(formula, Or):
        return classical_states(m, formula.left) | classical_states(m, formula.right)
    if isinstance(formula, (LDiv, RDiv)):
        left = classical_states(m, formula.left)
        right = classical_states(m, formula.right)
        return (everything - left) | right
    if isinstance(formula, Box):
        rel = _classical_relation(m, formula.action)
        body = classical_states(m, formula.body)
        return {s for s in everything
                if all(t in body for (s2, t) in rel if s2 == s)}
    raise TypeError(f"not a formula: {formula!r}")


def classical_reachable(m: ClassicalModel, action: ActionExp, start: int) -> set[int]:
    """Start state plus everything reachable through the action's relation."""
    rel = _classical_relation(m, action)
    seen = {start}
    frontier = [start]
    while frontier:
        s = frontier.pop()
        for (s2, t) in rel:
            if s2 == s and t not in seen:
                seen.add(t)
                frontier.append(t)
    return seen


# -- brute-force closure oracles ------------------------------------------------

def all_relation_tables(size: int, states: int) -> np.ndarray:
    """Every states x states table over element indices, in lexicographic order."""
    count = size ** (states * states)
    indices = np.arange(count, dtype=np.int64)
    digits = np.empty((states * states, count), dtype=np.int64)
    rem = indices
    for d in range(states * states - 1, -1, -1):
        rem, digits[d] = np.divmod(rem, size)
    return digits.T.reshape(count, states, states)


def transitive_mask(algebra: FLAlgebra, tables: np.ndarray) -> np.ndarray:
    """Which candidate tables satisfy fuse(Q(s,t), Q(t,u)) below Q(s,u) everywhere."""
    arrs = algebra.arrays
    two_step = arrs.fuse[tables[:, :, :, None], tables[:, None, :, :]]
    return arrs.leq[two_step, tables[:, :, None, :]].all(axis=(1, 2, 3))


def least_transitive_extension(algebra: FLAlgebra, rel: XRelation,
                               transitive_tables: np.ndarray) -> np.ndarray | None:
    """The unique transitive extension below all others, or None if absent.

    transitive_tables must be the full candidate set already filtered by
    transitive_mask for this state count.
    """
    arrs = algebra.arrays
    r = np.array(rel.values, dtype=np.int64)
    ext = transitive_tables[arrs.leq[r[None], transitive_tables].all(axis=(1, 2))]
    if len(ext) == 0:
        return None
    for i in range(len(ext)):
        cand = ext[i]
        if arrs.leq[cand[None], ext].all():
            return cand
    return None


def cost_walk_join(rel: XRelation, cap: int) -> np.ndarray:
    """Transitive closure of a cost-chain relation by explicit walk enumeration.

    Works with plain numbers only: edge weights add (capped), a walk's
    value is its total, and the best value per state pair is the minimum
    over every walk with fewer than states * (cap + 1) intermediate stops.
    The main code path's join and fusion tables are never consulted.
    """
    n = rel.size
    weights = np.array(rel.values, dtype=np.int64)
    best = np.full((n, n), cap, dtype=np.int64)
    max_mid = n * (cap + 1)
    for mid in range(max_mid):
        for walk in itertools.product(range(n), repeat=mid + 2):
            total = 0
            for a, b in zip(walk, walk[1:]):
                total = min(total + int(weights[a, b]), cap)
            s, t = walk[0], walk[-1]
            if total < best[s, t]:
                best[s, t] = total
    return best


def cost_walk_join_fast(rel: XRelation, cap: int) -> np.ndarray:
    """Same result as cost_walk_join, with the walks enumerated as arrays."""
    n = rel.size
    weights = np.array(rel.values, dtype=np.int64)
    best = np.full((n, n), cap, dtype=np.int64)
    max_mid = n * (cap + 1)
    for mid in range(max_mid):
        length = mid + 2
        walks = np.indices((n,) * length, dtype=np.int64).reshape(length, -1)
        totals = np.zeros(walks.shape[1], dtype=np.int64)
        for step in range(length - 1):
            totals = np.minimum(totals + weights[walks[step], walks[step + 1]], cap)
        flat = walks[0] * n + walks[-1]
        np.minimum.at(best.reshape(-1), flat, totals)
    return best
