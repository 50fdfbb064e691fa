"""Quotient a model by value-equivalence over a closed formula set.

Two states are equivalent when every formula of the set takes the same
value at both. The filtrated model has one state per class; each atomic
relation entry is the join of the original entries across the two classes,
and each variable of the set keeps its value (read off any member, they
all agree). Variables outside the set get the zero element.

Formulas of the set keep their value: the value at a state equals the
value at its class in the quotient. That and the class-count bound
|algebra| ** |set| make the quotient a finite certificate for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotClosed
from .relations import XRelation
from .semantics import Frame, Model
from .syntax import Formula, Var, is_closed


@dataclass(frozen=True)
class Partition:
    """class_of[s] is the class index of state s; representatives[c] its first member."""

    class_of: tuple[int, ...]
    representatives: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def members(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.representatives]
        for s, c in enumerate(self.class_of):
            out[c].append(s)
        return tuple(tuple(m) for m in out)


def phi_partition(model: Model, phis: Iterable[Formula]) -> Partition:
    """Group states by their value vector over the given formulas.

    Classes are numbered by first occurrence, so state 0 is always in
    class 0 and representatives are the least members.
    """
    phis = list(dict.fromkeys(phis))
    rows = [model.values(f) for f in phis]
    seen: dict[tuple[int, ...], int] = {}
    class_of: list[int] = []
    reps: list[int] = []
    for s in range(model.frame.size):
        key = tuple(row[s] for row in rows)
        c = seen.get(key)
        if c is None:
            c = len(reps)
            seen[key] = c
            reps.append(s)
        class_of.append(c)
    return Partition(tuple(class_of), tuple(reps))


def filtrate(model: Model, phis: Sequence[Formula],
             partition: Partition | None = None) -> Model:
    """Smallest filtration of the model through a closed formula set.

    Raises NotClosed when the set is not saturated under subformulas and
    box unfolding. Pass a precomputed partition to skip regrouping; it
    must come from phi_partition on the same arguments.
    """
    phis = list(dict.fromkeys(phis))
    if not is_closed(phis):
        raise NotClosed("filtration needs a closed formula set")
    part = partition if partition is not None else phi_partition(model, phis)
    A = model.algebra
    members = part.members()
    k = part.class_count

    relations: dict[int, XRelation] = {}
    for idx, rel in model.frame.atomic.items():
        rows = []
        for cs in members:
            row = []
            for ct in members:
                acc = A.bottom
                for u in cs:
                    for v in ct:
                        acc = A.join(acc, rel.get(u, v))
                row.append(acc)
            rows.append(tuple(row))
        relations[idx] = XRelation(A, tuple(rows))

    valuation = {
        f.index: tuple(model.values(f)[rep] for rep in part.representatives)
        for f in phis if isinstance(f, Var)
    }
    frame = Frame(A, k, relations,
                  state_names=tuple(f"[{rep}]" for rep in part.representatives))
    return Model(frame, valuation, strict=model.strict)
