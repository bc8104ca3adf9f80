"""Structure analysis: derived subobject, perfectness, stabilizers, and the
chain of quotients annihilating the weak stabilizer."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    ElementSet,
    FiniteGwaObject,
    derived_subobject,
    is_perfect,
    quotient_map,
    subobject_closure,
)
from .errors import UnsupportedInputError, WorkbenchError
from .pentactions import DEFAULT_BUDGET, enumerate_pentactions

__all__ = [
    "derived_subobject",
    "is_perfect",
    "stabilizer",
    "weak_stabilizer",
    "NoetherChain",
    "noether_quotient",
    "analysis_report",
]


def stabilizer(obj: FiniteGwaObject) -> ElementSet:
    """Exponents fixing every element: {s : a^s = a for all a}."""
    members = tuple(
        s
        for s in range(obj.order)
        if all(obj.act[a][s] == a for a in range(obj.order))
    )
    return ElementSet(obj, members)


def weak_stabilizer(obj: FiniteGwaObject, budget: int = DEFAULT_BUDGET) -> ElementSet:
    """The raw (not closed-up) set of the three obstruction families

        p.pow(q.pow(a)),
        p.pow(q.up(a)) - p.pow(a),
        up-of-(p+q) at a minus up-of-(q+p) at a,

    ranging over all pentactions p, q and all carrier elements a.  Soundness
    of a "zero weak stabilizer" claim needs the full pentaction set, so this
    always enumerates exhaustively within the budget.
    """
    pents = enumerate_pentactions(obj, budget=budget)
    up = np.asarray([p.up for p in pents], dtype=np.int64)
    pw = np.asarray([p.pow for p in pents], dtype=np.int64)
    add = np.asarray(obj.add, dtype=np.int64)
    neg = np.asarray(obj.neg, dtype=np.int64)
    diff = add[:, neg]  # diff[x, y] = x - y

    family1 = pw[:, pw]  # [p, q, a] = p.pow(q.pow(a))
    family2 = diff[pw[:, up], pw[:, None, :]]
    compose = up[:, up]  # [x, y, a] = x.up(y.up(a))
    family3 = diff[compose.swapaxes(0, 1), compose]
    members = set(np.unique(family1))
    members.update(np.unique(family2))
    members.update(np.unique(family3))
    return ElementSet(obj, tuple(int(v) for v in sorted(members)))


@dataclass(frozen=True)
class NoetherChain:
    """Strictly increasing subgroups W_1 < W_2 < ... of the base carrier and
    the final quotient C = A/W_n with weak stabilizer contained in {0}.

    An empty chain means the base object already had zero weak stabilizer.
    """

    base: FiniteGwaObject
    subgroups: tuple[ElementSet, ...]
    quotient: FiniteGwaObject


def noether_quotient(obj: FiniteGwaObject, budget: int = DEFAULT_BUDGET) -> NoetherChain:
    """Iteratively quotient out the subgroup generated by the weak stabilizer
    until it vanishes.

    Each round pulls the current quotient's weak stabilizer back along the
    projection, enlarges the subgroup it generates, and re-quotients the
    original carrier.  Strict growth of the subgroups bounds the rounds by
    the carrier order.
    """
    if not (obj.is_abelian and obj.has_trivial_action):
        raise UnsupportedInputError(
            f"the quotient chain is only computed for abelian trivial-action "
            f"carriers; {obj.name!r} is not one"
        )
    chain: list[ElementSet] = []
    current = obj
    projection = tuple(range(obj.order))
    w_members: tuple[int, ...] = ()
    for _ in range(obj.order + 1):
        wst = weak_stabilizer(current, budget=budget)
        if wst.is_zero():
            return NoetherChain(obj, tuple(chain), current)
        pullback = {x for x in range(obj.order) if projection[x] in wst}
        w_next = subobject_closure(obj, pullback | set(w_members))
        if len(w_next) <= len(w_members):
            raise WorkbenchError(
                f"quotient chain for {obj.name!r} failed to grow; this cannot "
                f"happen for a finite carrier"
            )
        chain.append(w_next)
        w_members = w_next.members
        tau = quotient_map(obj, w_next)
        current = tau.target
        projection = tau.map
    raise WorkbenchError(f"quotient chain for {obj.name!r} did not terminate")


def analysis_report(obj: FiniteGwaObject, budget: int = DEFAULT_BUDGET) -> dict:
    """JSON-ready structure summary; the chain entry is null for carriers
    where the quotient procedure is out of scope."""
    wst = weak_stabilizer(obj, budget=budget)
    out = {
        "perfect": is_perfect(obj),
        "stabilizer": list(stabilizer(obj).members),
        "weak_stabilizer": list(wst.members),
        "noether_chain": None,
    }
    if obj.is_abelian and obj.has_trivial_action:
        chain = noether_quotient(obj, budget=budget)
        out["noether_chain"] = {
            "subgroup_orders": [len(w) for w in chain.subgroups],
            "quotient_order": chain.quotient.order,
        }
    return out
