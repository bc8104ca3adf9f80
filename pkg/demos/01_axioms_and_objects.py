"""Objects, the axiom gate, and what a violation report looks like.

A finite group-with-action is a pair of n x n tables over indices 0..n-1:
add[x][y] = x + y and act[x][y] = x ^ y, with 0 the additive zero.  The
checker scans the group axioms, the three action axioms, and the two
"reduced" conditions that carve out the subcategory everything else in this
package lives in.
"""

import rgwa

# Any abelian group with trivial action is a reduced object.
z6 = rgwa.cyclic_trivial(6)
report = rgwa.check_axioms(z6.order, z6.add, z6.act, require_reduced=True)
print(f"z6 with trivial action: passed={report.passed}")

# A group acting on itself by conjugation satisfies the group and action
# axioms but is *not* reduced: conjugates of transpositions in S3 are not
# central, and conjugation by a conjugate differs from plain conjugation.
add, act = rgwa.s3_conjugation_tables()
gwa_report = rgwa.check_axioms(6, add, act, require_reduced=False)
reduced_report = rgwa.check_axioms(6, add, act, require_reduced=True)
print(f"\nS3 with conjugation, group+action axioms only: passed={gwa_report.passed}")
print("the reduced checks fail with minimal witnesses:")
for violation in reduced_report.violations:
    print(f"  {violation.condition}  witness={violation.witness}")

x, y, z = reduced_report.violations[0].witness
lhs, rhs = add[act[x][y]][z], add[z][act[x][y]]
print(f"  check: ({x}^{y}) + {z} = {lhs}  but  {z} + ({x}^{y}) = {rhs}")

# make_object is the validating constructor; invalid tables are rejected
# with the report attached.
try:
    rgwa.make_object("s3conj", 6, add, act, require_reduced=True)
except rgwa.ValidationError as exc:
    print(f"\nmake_object rejects the conjugation tables: {exc}")

# Reduced objects with nontrivial action do exist: Z/4 where odd exponents
# negate.  Negated values are still central (the group is abelian) and
# exponent collapse holds because negation composed with itself is trivial.
n = 4
neg_add = [[(a + b) % n for b in range(n)] for a in range(n)]
neg_act = [[(a if b % 2 == 0 else (-a) % n) for b in range(n)] for a in range(n)]
z4neg = rgwa.make_object("z4neg", n, neg_add, neg_act)
print(f"\nz4neg: trivial action? {z4neg.has_trivial_action}  (1)^(1) = {z4neg.act[1][1]}")

# Morphisms preserve both operations; failures come with witnesses too.
z2, z4 = rgwa.cyclic_trivial(2), rgwa.cyclic_trivial(4)
bad = rgwa.is_morphism(rgwa.GwaMorphism(z2, z4, (0, 1)))
good = rgwa.is_morphism(rgwa.GwaMorphism(z2, z4, (0, 2)))
print(f"\n1 -> 1 from z2 to z4: {bad.violations[0].condition} at {bad.violations[0].witness}")
print(f"1 -> 2 from z2 to z4: passed={good.passed}")

# Subobject closure and quotients (abelian trivial-action carriers).
z12 = rgwa.cyclic_trivial(12)
w = rgwa.subobject_closure(z12, {8})
print(f"\nsubobject of z12 generated by 8: {w.members}")
q = rgwa.quotient_by_subgroup(z12, w)
print(f"z12 / {w.members} has order {q.order} (isomorphic to z4: {q.table_equal(z4)})")
