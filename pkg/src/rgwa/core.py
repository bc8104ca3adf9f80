"""Finite groups-with-action as dense operation tables.

Elements of an object are the indices 0..n-1, index 0 is the additive zero.
``add[x][y]`` stores x+y and ``act[x][y]`` stores x^y.  The group operation
is written additively but is not assumed commutative.

Axiom ids reported by ``check_axioms``:

  group.assoc      (x+y)+z = x+(y+z)
  group.identity   0+x = x = x+0
  group.inverse    every x has a two-sided inverse
  action.add       (g+g')^h = g^h + g'^h
  action.compose   g^(h+h') = (g^h)^h'
  action.zero      g^0 = g
  reduced.central  x^y + z = z + x^y          (y != 0)
  reduced.collapse x^(y^z) = x^y

The last two are the conditions cutting out the reduced subcategory; they
are checked only when ``require_reduced`` is set.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import InputError, UnsupportedInputError, ValidationError
from .report import CheckReport, Violation

Table = tuple[tuple[int, ...], ...]


def as_index(value) -> int:
    """Coerce to an element index, rejecting floats, strings and the like."""
    try:
        return operator.index(value)
    except TypeError:
        raise InputError(f"table entry {value!r} is not an integer") from None


def _freeze_table(table) -> Table:
    return tuple(tuple(as_index(v) for v in row) for row in table)


def _check_table(order: int, table, what: str) -> Table:
    frozen = _freeze_table(table)
    if len(frozen) != order:
        raise InputError(f"{what} table has {len(frozen)} rows, expected {order}")
    for x, row in enumerate(frozen):
        if len(row) != order:
            raise InputError(f"{what} table row {x} has {len(row)} entries, expected {order}")
        for y, v in enumerate(row):
            if not 0 <= v < order:
                raise InputError(f"{what}[{x}][{y}] = {v} is out of range 0..{order - 1}")
    return frozen


def check_axioms(order: int, add, act, require_reduced: bool = False) -> CheckReport:
    """Scan the full group, action and (optionally) reduced axioms.

    Returns one lexicographically minimal witness per violated axiom.
    Malformed tables raise InputError instead of reporting a violation.
    """
    if order < 1:
        raise InputError(f"order must be positive, got {order}")
    add = _check_table(order, add, "add")
    act = _check_table(order, act, "act")
    rng = range(order)
    violations: list[Violation] = []

    def record(condition: str, witness: tuple[int, ...]) -> None:
        violations.append(Violation(condition, witness))

    for x, y, z in product(rng, rng, rng):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            record("group.assoc", (x, y, z))
            break
    for x in rng:
        if add[0][x] != x or add[x][0] != x:
            record("group.identity", (x,))
            break
    for x in rng:
        if not any(add[x][y] == 0 == add[y][x] for y in rng):
            record("group.inverse", (x,))
            break
    for g, g2, h in product(rng, rng, rng):
        if act[add[g][g2]][h] != add[act[g][h]][act[g2][h]]:
            record("action.add", (g, g2, h))
            break
    for g, h, h2 in product(rng, rng, rng):
        if act[g][add[h][h2]] != act[act[g][h]][h2]:
            record("action.compose", (g, h, h2))
            break
    for g in rng:
        if act[g][0] != g:
            record("action.zero", (g,))
            break
    if require_reduced:
        done = False
        for x, y in product(rng, rng):
            if y == 0:
                continue
            for z in rng:
                if add[act[x][y]][z] != add[z][act[x][y]]:
                    record("reduced.central", (x, y, z))
                    done = True
                    break
            if done:
                break
        for x, y, z in product(rng, rng, rng):
            if act[x][act[y][z]] != act[x][y]:
                record("reduced.collapse", (x, y, z))
                break
    return CheckReport(tuple(violations))


@dataclass(frozen=True)
class FiniteGwaObject:
    """Validated finite group with action.

    Instances are immutable; construct through :func:`make_object` so the
    axiom gate runs.  ``reduced`` records whether the reduced conditions were
    part of the validation.
    """

    name: str = field(compare=False)
    order: int
    add: Table
    act: Table
    reduced: bool = field(default=True, compare=False)

    @cached_property
    def neg(self) -> tuple[int, ...]:
        """Additive inverse of each element, derived from the add table."""
        out = [0] * self.order
        for x in range(self.order):
            for y in range(self.order):
                if self.add[x][y] == 0 == self.add[y][x]:
                    out[x] = y
                    break
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.add[x][y] == self.add[y][x]
            for x in range(self.order)
            for y in range(self.order)
        )

    @cached_property
    def has_trivial_action(self) -> bool:
        return all(
            self.act[x][y] == x for x in range(self.order) for y in range(self.order)
        )

    @property
    def elements(self) -> range:
        return range(self.order)

    def sub(self, x: int, y: int) -> int:
        """x - y in the additive group."""
        return self.add[x][self.neg[y]]

    def table_equal(self, other: "FiniteGwaObject") -> bool:
        """Same order and bit-identical operation tables (relabeling-free)."""
        return (
            self.order == other.order
            and self.add == other.add
            and self.act == other.act
        )


def make_object(name: str, order: int, add, act, require_reduced: bool = True) -> FiniteGwaObject:
    """Validate tables and build an object, or raise with the failing report."""
    report = check_axioms(order, add, act, require_reduced=require_reduced)
    if not report.passed:
        raise ValidationError(
            f"{name!r} violates {', '.join(report.conditions())}", report
        )
    return FiniteGwaObject(
        name=name,
        order=order,
        add=_freeze_table(add),
        act=_freeze_table(act),
        reduced=require_reduced,
    )


@dataclass(frozen=True)
class GwaMorphism:
    """Map between objects, given as a target-index sequence over the source."""

    source: FiniteGwaObject
    target: FiniteGwaObject
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]


def identity_morphism(obj: FiniteGwaObject) -> GwaMorphism:
    return GwaMorphism(obj, obj, tuple(range(obj.order)))


def is_morphism(f: GwaMorphism) -> CheckReport:
    """Check the two preservation laws; ids "hom.add" and "hom.act".

    f(0)=0 is not checked separately: it is forced by hom.add at (0,0).
    """
    if len(f.map) != f.source.order:
        raise InputError(
            f"map has length {len(f.map)}, expected {f.source.order}"
        )
    for x, v in enumerate(f.map):
        if not 0 <= v < f.target.order:
            raise InputError(f"map[{x}] = {v} is out of range for the target")
    violations = []
    src, tgt, m = f.source, f.target, f.map
    for x, y in product(range(src.order), range(src.order)):
        if m[src.add[x][y]] != tgt.add[m[x]][m[y]]:
            violations.append(Violation("hom.add", (x, y)))
            break
    for x, y in product(range(src.order), range(src.order)):
        if m[src.act[x][y]] != tgt.act[m[x]][m[y]]:
            violations.append(Violation("hom.act", (x, y)))
            break
    return CheckReport(tuple(violations))


def make_morphism(source: FiniteGwaObject, target: FiniteGwaObject, mapping) -> GwaMorphism:
    f = GwaMorphism(source, target, tuple(as_index(v) for v in mapping))
    report = is_morphism(f)
    if not report.passed:
        raise ValidationError(
            f"map violates {', '.join(report.conditions())}", report
        )
    return f


@dataclass(frozen=True)
class ElementSet:
    """Sorted duplicate-free subset of an object's carrier."""

    parent: FiniteGwaObject
    members: tuple[int, ...]

    def __post_init__(self):
        normalized = tuple(sorted({int(v) for v in self.members}))
        object.__setattr__(self, "members", normalized)
        if normalized and not (0 <= normalized[0] and normalized[-1] < self.parent.order):
            raise InputError("member out of range for the parent carrier")

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def is_zero(self) -> bool:
        """True when the set is contained in {0}."""
        return self.members in ((), (0,))


def subobject_closure(obj: FiniteGwaObject, seeds: Iterable[int]) -> ElementSet:
    """Smallest subset containing 0 and the seeds, closed under addition,
    additive inverse, and the action with both arguments inside the subset.
    """
    current = {0}
    for s in seeds:
        if not 0 <= s < obj.order:
            raise InputError(f"seed {s} out of range")
        current.add(s)
    while True:
        new = set(current)
        for x in current:
            new.add(obj.neg[x])
            for y in current:
                new.add(obj.add[x][y])
                new.add(obj.act[x][y])
        if new == current:
            return ElementSet(obj, tuple(sorted(current)))
        current = new


def additive_closure(obj: FiniteGwaObject, seeds: Iterable[int]) -> set[int]:
    """Subgroup of (carrier, +) generated by the seeds (no action closure)."""
    current = {0} | set(seeds)
    while True:
        new = set(current)
        for x in current:
            new.add(obj.neg[x])
            for y in current:
                new.add(obj.add[x][y])
        if new == current:
            return current
        current = new


def derived_subobject(obj: FiniteGwaObject) -> ElementSet:
    """Subobject generated by the action values x^y with nonzero exponent.

    Exponent 0 is excluded: x^0 = x would make the generated subobject the
    whole carrier for every object and void the perfectness notion.
    """
    gens = {
        obj.act[x][y]
        for x in range(obj.order)
        for y in range(1, obj.order)
    }
    return subobject_closure(obj, gens)


def is_perfect(obj: FiniteGwaObject) -> bool:
    """True when the derived subobject is the whole carrier."""
    return len(derived_subobject(obj)) == obj.order


# ---------------------------------------------------------------------------
# Generator machinery: greedy generating sets plus BFS words, used to extend
# maps that are determined by their values on additive generators.
# ---------------------------------------------------------------------------

# Each step is (element, parent, generator_position, sign): the element is
# first reached from parent by adding the generator (sign +1) or its inverse
# (sign -1) on the right.
Step = tuple[int, int, int, int]


@lru_cache(maxsize=64)
def generating_words(obj: FiniteGwaObject) -> tuple[tuple[int, ...], tuple[Step, ...]]:
    """Greedy additive generating set and a BFS step list covering the carrier."""
    gens: list[int] = []
    closure = {0}
    while len(closure) < obj.order:
        gens.append(min(x for x in range(obj.order) if x not in closure))
        closure = additive_closure(obj, gens)
    steps: list[Step] = []
    seen = {0}
    frontier = [0]
    while frontier:
        nxt: list[int] = []
        for x in frontier:
            for gi, g in enumerate(gens):
                for sign, h in ((1, g), (-1, obj.neg[g])):
                    y = obj.add[x][h]
                    if y not in seen:
                        seen.add(y)
                        steps.append((y, x, gi, sign))
                        nxt.append(y)
        frontier = nxt
    return tuple(gens), tuple(steps)


def extend_additive(
    obj: FiniteGwaObject,
    gens: Sequence[int],
    steps: Sequence[Step],
    images: Sequence[int],
) -> tuple[int, ...]:
    """Value table of the additive extension of gens -> images (unverified)."""
    out = [0] * obj.order
    for elem, parent, gi, sign in steps:
        img = images[gi] if sign > 0 else obj.neg[images[gi]]
        out[elem] = obj.add[out[parent]][img]
    return tuple(out)


def extend_crossed_map(
    obj: FiniteGwaObject,
    gens: Sequence[int],
    steps: Sequence[Step],
    images: Sequence[int],
) -> tuple[int, ...]:
    """Extend generator values along f(x+y) = f(x)^y + f(y) (unverified).

    This is the shape shared by the fifth pentaction component and the
    b^(-) table of a derived action; the rule determines f from its values
    on additive generators.
    """
    add, act, neg = obj.add, obj.act, obj.neg
    out = [0] * obj.order
    for elem, parent, gi, sign in steps:
        g, img = gens[gi], images[gi]
        if sign > 0:
            out[elem] = add[act[out[parent]][g]][img]
        else:
            out[elem] = act[add[out[parent]][neg[img]]][neg[g]]
    return tuple(out)


def _is_additive(obj: FiniteGwaObject, f: Sequence[int]) -> bool:
    add = obj.add
    return all(
        f[add[x][y]] == add[f[x]][f[y]]
        for x in range(obj.order)
        for y in range(obj.order)
    )


@lru_cache(maxsize=64)
def _additive_bijections_cached(obj: FiniteGwaObject) -> tuple[tuple[int, ...], ...]:
    gens, steps = generating_words(obj)
    found = set()
    for images in product(range(obj.order), repeat=len(gens)):
        f = extend_additive(obj, gens, steps, images)
        if len(set(f)) == obj.order and _is_additive(obj, f):
            found.add(f)
    return tuple(sorted(found))


def additive_bijections(obj: FiniteGwaObject) -> list[tuple[int, ...]]:
    """All additive self-bijections, sorted by value table."""
    return list(_additive_bijections_cached(obj))


def invert_map(f: Sequence[int]) -> tuple[int, ...]:
    """Inverse of a bijective value table."""
    out = [0] * len(f)
    for i, v in enumerate(f):
        out[v] = i
    return tuple(out)


# ---------------------------------------------------------------------------
# Quotients (abelian trivial-action carriers only).
# ---------------------------------------------------------------------------


def _require_abelian_trivial(obj: FiniteGwaObject, operation: str) -> None:
    if not (obj.is_abelian and obj.has_trivial_action):
        raise UnsupportedInputError(
            f"{operation} is only supported for abelian carriers with trivial "
            f"action; {obj.name!r} is not one"
        )


def _quotient_with_map(obj: FiniteGwaObject, subgroup: ElementSet):
    _require_abelian_trivial(obj, "quotient")
    if subgroup.parent is not obj and not subgroup.parent.table_equal(obj):
        raise InputError("subgroup belongs to a different carrier")
    if subobject_closure(obj, subgroup.members).members != subgroup.members:
        raise InputError("the given set is not a subgroup (not closed)")
    w = set(subgroup.members)
    # Coset of x = {x + w}; canonical label is the minimal representative.
    coset_min = [min(obj.add[x][v] for v in w) for x in range(obj.order)]
    reps = sorted(set(coset_min))
    index_of = {rep: k for k, rep in enumerate(reps)}
    m = len(reps)
    add = [[index_of[coset_min[obj.add[x][y]]] for y in reps] for x in reps]
    act = [[k for _ in range(m)] for k in range(m)]
    members = ",".join(str(v) for v in subgroup.members)
    quotient = make_object(f"{obj.name}/{{{members}}}", m, add, act, require_reduced=True)
    projection = GwaMorphism(obj, quotient, tuple(index_of[coset_min[x]] for x in range(obj.order)))
    return quotient, projection


def quotient_by_subgroup(obj: FiniteGwaObject, subgroup: ElementSet) -> FiniteGwaObject:
    """A/W with induced addition and trivial action.

    Cosets are labeled by minimal representative and relabeled 0..m-1 in
    representative order, so the coset of 0 sits at index 0.
    """
    return _quotient_with_map(obj, subgroup)[0]


def quotient_map(obj: FiniteGwaObject, subgroup: ElementSet) -> GwaMorphism:
    """The canonical projection onto quotient_by_subgroup(obj, subgroup)."""
    return _quotient_with_map(obj, subgroup)[1]
