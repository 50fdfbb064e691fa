"""Algebra-valued relations over a finite state set, with the three
closure-flavoured operations the box semantics needs: union, composition
and transitive closure.

Relations are immutable. All operations require both arguments to share
the same algebra object and state count; DimensionMismatch otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import FLAlgebra
from .errors import DimensionMismatch


@dataclass(frozen=True)
class XRelation:
    """An n x n matrix of algebra elements."""

    algebra: FLAlgebra
    values: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.values)

    def get(self, s: int, t: int) -> int:
        return self.values[s][t]

    @classmethod
    def from_rows(cls, algebra: FLAlgebra, rows: Sequence[Sequence[int]]) -> "XRelation":
        n = len(rows)
        vals = []
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch("relation matrix must be square")
            for v in row:
                if not (0 <= int(v) < algebra.size):
                    raise DimensionMismatch(f"relation entry {v!r} is no element index")
            vals.append(tuple(int(v) for v in row))
        return cls(algebra, tuple(vals))

    @classmethod
    def constant(cls, algebra: FLAlgebra, n: int, value: int) -> "XRelation":
        return cls(algebra, tuple(tuple(value for _ in range(n)) for _ in range(n)))


def bottom_relation(algebra: FLAlgebra, n: int) -> XRelation:
    return XRelation.constant(algebra, n, algebra.bottom)


def identity_relation(algebra: FLAlgebra, n: int) -> XRelation:
    """one on the diagonal, bottom elsewhere."""
    return XRelation(algebra, tuple(
        tuple(algebra.one if s == t else algebra.bottom for t in range(n))
        for s in range(n)))


def _check_compatible(r: XRelation, q: XRelation) -> None:
    if r.algebra is not q.algebra and not r.algebra.same_tables(q.algebra):
        raise DimensionMismatch("relations live over different algebras")
    if r.size != q.size:
        raise DimensionMismatch(f"relation sizes differ: {r.size} vs {q.size}")


def rel_union(r: XRelation, q: XRelation) -> XRelation:
    """Pointwise join."""
    _check_compatible(r, q)
    join = r.algebra.join_table
    return XRelation(r.algebra, tuple(
        tuple(join[a][b] for a, b in zip(ra, qa)) for ra, qa in zip(r.values, q.values)))


def rel_compose(r: XRelation, q: XRelation) -> XRelation:
    """(r;q)(s,t) = join over x of r(s,x)*q(x,t)."""
    _check_compatible(r, q)
    A = r.algebra
    n = r.size
    fuse, join = A.fusion_table, A.join_table
    rows = []
    for s in range(n):
        row = []
        for t in range(n):
            acc = A.bottom
            for x in range(n):
                acc = join[acc][fuse[r.values[s][x]][q.values[x][t]]]
            row.append(acc)
        rows.append(tuple(row))
    return XRelation(A, tuple(rows))


def transitive_closure(r: XRelation) -> XRelation:
    """Least transitive relation extending r.

    Computed as the least fixpoint of T |-> r union (T;r) starting from r;
    entries only climb in the finite lattice, so the iteration stabilizes.
    """
    t = r
    # each of the n^2 entries can strictly climb at most |X|-1 times
    for _ in range(r.size * r.size * r.algebra.size + 1):
        nxt = rel_union(r, rel_compose(t, r))
        if nxt.values == t.values:
            return t
        t = nxt
    raise AssertionError("transitive closure failed to stabilize")


def refl_trans_closure(r: XRelation) -> XRelation:
    """r*(s,t) is one when s = t and the transitive-closure value otherwise."""
    plus = transitive_closure(r)
    A = r.algebra
    return XRelation(A, tuple(
        tuple(A.one if s == t else plus.values[s][t] for t in range(r.size))
        for s in range(r.size)))


def path_value(r: XRelation, s: int, path: Sequence[int], t: int) -> int:
    """Fused value of one walk s -> path[0] -> ... -> path[-1] -> t.

    The empty path is the single step from s to t. Kept as a primitive so
    closures can be checked against explicit walk enumeration.
    """
    A = r.algebra
    if not path:
        return r.values[s][t]
    acc = r.values[s][path[0]]
    for u, v in zip(path, path[1:]):
        acc = A.fuse(acc, r.values[u][v])
    return A.fuse(acc, r.values[path[-1]][t])
