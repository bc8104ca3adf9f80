"""Pentaction conditions, operations, and the two enumerators."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import rgwa
from rgwa.pentactions import CONDITION_IDS, check_pentactions_batch


def ident(n):
    return tuple(range(n))


def pent(obj, dotL=None, dotR=None, up=None, upL=None, pw=None):
    n = obj.order
    return rgwa.Pentaction(
        obj,
        tuple(dotL) if dotL else ident(n),
        tuple(dotR) if dotR else ident(n),
        tuple(up) if up else ident(n),
        tuple(upL) if upL else ident(n),
        tuple(pw) if pw else (0,) * n,
    )


class TestCheckPentaction:
    def test_zero_pentaction_passes_everywhere(self, corpus, z4neg, k4swap, z6neg):
        for obj in list(corpus) + [z4neg, k4swap, z6neg]:
            report = rgwa.check_pentaction(rgwa.zero_pentaction(obj))
            assert report.passed, (obj.name, report.conditions())

    def test_identity_candidates_on_z2(self):
        z2 = rgwa.cyclic_trivial(2)
        assert rgwa.check_pentaction(pent(z2)).passed
        assert rgwa.check_pentaction(pent(z2, pw=(0, 1))).passed

    def test_constant_dot_fails_invertibility(self):
        z2 = rgwa.cyclic_trivial(2)
        report = rgwa.check_pentaction(pent(z2, dotL=(0, 0)))
        assert "p11" in report.conditions()

    def test_non_additive_up_fails_p2(self):
        z3 = rgwa.cyclic_trivial(3)
        report = rgwa.check_pentaction(pent(z3, up=(1, 2, 0), upL=(2, 0, 1)))
        assert "p2" in report.conditions()
        violation = next(v for v in report.violations if v.condition == "p2")
        a, a2 = violation.witness
        up = (1, 2, 0)
        assert up[(a + a2) % 3] != (up[a] + up[a2]) % 3

    def test_pow_must_vanish_at_zero(self):
        z3 = rgwa.cyclic_trivial(3)
        report = rgwa.check_pentaction(pent(z3, pw=(1, 1, 1)))
        assert "p4" in report.conditions()

    def test_noncentral_image_without_movement_passes_p8(self, corpus):
        # up = identity leaves the p8 hypothesis false on every carrier
        for obj in corpus:
            assert rgwa.check_pentaction(rgwa.zero_pentaction(obj)).passed

    def test_shape_errors(self):
        z2 = rgwa.cyclic_trivial(2)
        with pytest.raises(rgwa.InputError):
            rgwa.check_pentaction(rgwa.Pentaction(z2, (0,), (0, 1), (0, 1), (0, 1), (0, 0)))
        with pytest.raises(rgwa.InputError):
            rgwa.check_pentaction(pent(z2, pw=(0, 7)))

    def test_condition_ids_are_canonical(self):
        assert CONDITION_IDS == (
            "p1", "p1d", "p2", "p2d", "p3", "p3d", "p4", "p5", "p5d", "p6",
            "p6d", "p7", "p8", "p8d", "p9", "p9d", "p10", "p11", "p12",
        )

    @given(st.data())
    @settings(max_examples=150, deadline=None)
    def test_batch_agrees_with_scalar(self, data):
        from conftest import negation_cyclic

        objs = [rgwa.cyclic_trivial(3), negation_cyclic(4)]
        obj = objs[data.draw(st.integers(0, 1))]
        n = obj.order
        tables = [
            tuple(data.draw(st.integers(0, n - 1)) for _ in range(n))
            for _ in range(5)
        ]
        cand = rgwa.Pentaction(obj, *tables)
        assert (
            rgwa.check_pentaction(cand).passed
            == bool(check_pentactions_batch([cand])[0])
        )


class TestZeroPentaction:
    def test_zero_object(self):
        p = rgwa.zero_pentaction(rgwa.cyclic_trivial(1))
        assert p.tables() == {k: (0,) for k in ("dotL", "dotR", "up", "upL", "pow")}

    def test_z3_tables(self):
        p = rgwa.zero_pentaction(rgwa.cyclic_trivial(3))
        assert p.dotL == (0, 1, 2) and p.pow == (0, 0, 0)

    def test_refused_on_non_reduced_objects(self):
        add, act = rgwa.s3_conjugation_tables()
        s3 = rgwa.make_object("s3conj", 6, add, act, require_reduced=False)
        with pytest.raises(rgwa.UnsupportedInputError):
            rgwa.zero_pentaction(s3)


class TestOperations:
    def test_add_zero_laws(self, corpus, z4neg):
        for obj in [corpus[1], corpus[2], z4neg]:
            zero = rgwa.zero_pentaction(obj)
            for p in rgwa.enumerate_pentactions(obj):
                assert rgwa.pent_add(p, zero) == p
                assert rgwa.pent_add(zero, p) == p

    def test_add_composes_exponents_on_z3(self):
        z3 = rgwa.cyclic_trivial(3)
        doubling, back = (0, 2, 1), (0, 2, 1)
        p = pent(z3, up=doubling, upL=back, pw=(0, 1, 2))
        q = pent(z3, up=doubling, upL=back, pw=(0, 2, 4 % 3))
        s = rgwa.pent_add(p, q)
        # up of the sum composes q.up after p.up; pow adds pointwise here
        assert s.up == tuple(q.up[p.up[a]] for a in range(3)) == (0, 1, 2)
        assert s.pow == tuple((p.pow[a] + q.pow[a]) % 3 for a in range(3))

    def test_add_is_associative_on_enumerated_sets(self, z4neg):
        for obj in [rgwa.cyclic_trivial(2), rgwa.cyclic_trivial(3), z4neg]:
            pents = rgwa.enumerate_pentactions(obj)
            for p in pents:
                for q in pents:
                    pq = rgwa.pent_add(p, q)
                    for r in pents:
                        assert rgwa.pent_add(pq, r) == rgwa.pent_add(p, rgwa.pent_add(q, r))

    def test_add_rejects_mismatched_parents(self):
        p = rgwa.zero_pentaction(rgwa.cyclic_trivial(2))
        q = rgwa.zero_pentaction(rgwa.cyclic_trivial(3))
        with pytest.raises(rgwa.InputError):
            rgwa.pent_add(p, q)

    def test_neg_fixes_zero(self, corpus):
        for obj in corpus:
            zero = rgwa.zero_pentaction(obj)
            assert rgwa.pent_neg(zero) == zero

    def test_neg_inverts_the_exponent_map(self):
        z5 = rgwa.cyclic_trivial(5)
        doubling = tuple((2 * x) % 5 for x in range(5))
        tripling = tuple((3 * x) % 5 for x in range(5))  # inverse of doubling
        p = pent(z5, up=doubling, upL=tripling)
        assert rgwa.pent_neg(p).up == tripling

    def test_double_negation(self, z4neg):
        for obj in [rgwa.cyclic_trivial(2), rgwa.cyclic_trivial(3), z4neg]:
            for p in rgwa.enumerate_pentactions(obj):
                assert rgwa.pent_neg(rgwa.pent_neg(p)) == p

    def test_neg_is_the_additive_inverse(self, z4neg):
        for obj in [rgwa.cyclic_trivial(2), rgwa.cyclic_trivial(3), z4neg]:
            zero = rgwa.zero_pentaction(obj)
            for p in rgwa.enumerate_pentactions(obj):
                assert rgwa.pent_add(p, rgwa.pent_neg(p)) == zero
                assert rgwa.pent_add(rgwa.pent_neg(p), p) == zero

    def test_pow_by_zero_is_identity_on_perfect_carriers(self, z4neg):
        for obj in [rgwa.cyclic_trivial(3), z4neg]:
            zero = rgwa.zero_pentaction(obj)
            for p in rgwa.enumerate_pentactions(obj):
                assert rgwa.pent_pow(p, zero) == p

    def test_zero_pow_anything_has_zero_pow_table(self, z4neg):
        for obj in [rgwa.cyclic_trivial(3), z4neg]:
            zero = rgwa.zero_pentaction(obj)
            for q in rgwa.enumerate_pentactions(obj):
                assert rgwa.pent_pow(zero, q).pow == (0,) * obj.order

    def test_power_exchange_identity(self, z4neg, k4swap):
        # (p^q).pow agrees with q.up applied after p.pow on perfect carriers
        for obj in [rgwa.cyclic_trivial(3), z4neg, k4swap]:
            pents = rgwa.enumerate_pentactions(obj)
            for p in pents:
                for q in pents:
                    got = rgwa.pent_pow(p, q).pow
                    assert got == tuple(q.up[p.pow[a]] for a in range(obj.order))


class TestEnumeration:
    def test_zero_object_has_one_pentaction(self):
        assert len(rgwa.enumerate_pentactions(rgwa.cyclic_trivial(1))) == 1

    def test_z2_has_exactly_two(self):
        pents = rgwa.enumerate_pentactions(rgwa.cyclic_trivial(2))
        assert [p.tables() for p in pents] == [
            {"dotL": (0, 1), "dotR": (0, 1), "up": (0, 1), "upL": (0, 1), "pow": (0, 0)},
            {"dotL": (0, 1), "dotR": (0, 1), "up": (0, 1), "upL": (0, 1), "pow": (0, 1)},
        ]

    def test_z3_has_six_with_the_expected_shape(self):
        pents = rgwa.enumerate_pentactions(rgwa.cyclic_trivial(3))
        assert len(pents) == 6
        assert all(p.dotL == (0, 1, 2) == p.dotR for p in pents)
        assert {p.up for p in pents} == {(0, 1, 2), (0, 2, 1)}
        assert {p.pow for p in pents} == {(0, 0, 0), (0, 1, 2), (0, 2, 1)}

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_oracle_equivalence_on_cyclic(self, n):
        obj = rgwa.cyclic_trivial(n)
        pruned = rgwa.enumerate_pentactions(obj)
        brute = rgwa.enumerate_pentactions_bruteforce(obj)
        assert [p.key() for p in pruned] == [p.key() for p in brute]

    def test_enumeration_is_sorted_canonically(self, corpus):
        for obj in corpus[:6]:
            keys = [p.key() for p in rgwa.enumerate_pentactions(obj)]
            assert keys == sorted(keys)

    def test_every_enumerated_value_passes_the_checker(self, corpus, z4neg, k4swap):
        for obj in list(corpus) + [z4neg, k4swap]:
            pents = rgwa.enumerate_pentactions(obj)
            assert all(rgwa.check_pentaction(p).passed for p in pents)

    def test_derived_vanishing_consequences(self, corpus, z4neg):
        for obj in list(corpus) + [z4neg]:
            for p in rgwa.enumerate_pentactions(obj):
                assert p.up[0] == 0 and p.upL[0] == 0 and p.pow[0] == 0

    def test_perfect_carriers_force_identity_dots(self, corpus, z4neg, k4swap):
        for obj in list(corpus) + [z4neg, k4swap]:
            assert rgwa.is_perfect(obj)
            for p in rgwa.enumerate_pentactions(obj):
                assert p.dotL == ident(obj.order) == p.dotR

    def test_closure_under_add_and_pow(self, z4neg, k4swap):
        for obj in [rgwa.cyclic_trivial(2), rgwa.cyclic_trivial(3), z4neg, k4swap]:
            pents = rgwa.enumerate_pentactions(obj)
            sums = [rgwa.pent_add(p, q) for p in pents for q in pents]
            powers = [rgwa.pent_pow(p, q) for p in pents for q in pents]
            assert check_pentactions_batch(sums).all()
            assert check_pentactions_batch(powers).all()

    def test_counts_on_nontrivial_actions(self, z4neg, k4swap, z6neg):
        # regression values from the first verified run of the pruned
        # enumerator (no independent oracle exists above order 3)
        assert len(rgwa.enumerate_pentactions(z4neg)) == 4
        assert len(rgwa.enumerate_pentactions(k4swap)) == 4
        assert len(rgwa.enumerate_pentactions(z6neg)) == 6

    def test_census_regressions_on_larger_corpus_members(self, corpus):
        # automorphism count times endomorphism count on trivial carriers
        by_name = {o.name: o for o in corpus}
        assert len(rgwa.enumerate_pentactions(by_name["z8"])) == 32
        assert len(rgwa.enumerate_pentactions(by_name["klein4"])) == 96
        assert len(rgwa.enumerate_pentactions(by_name["z2xz4"])) == 256

    def test_shear_carrier_census_and_closure(self, shear16):
        pents = rgwa.enumerate_pentactions(shear16)
        assert len(pents) == 16  # regression from the first verified run
        assert all(rgwa.check_pentaction(p).passed for p in pents)
        sums = [rgwa.pent_add(p, q) for p in pents for q in pents]
        powers = [rgwa.pent_pow(p, q) for p in pents for q in pents]
        assert check_pentactions_batch(sums).all()
        assert check_pentactions_batch(powers).all()

    def test_budget_is_enforced(self):
        with pytest.raises(rgwa.BudgetExceededError):
            rgwa.enumerate_pentactions(rgwa.cyclic_trivial(3), budget=2)

    def test_bruteforce_refuses_order_four(self):
        with pytest.raises(rgwa.InputError):
            rgwa.enumerate_pentactions_bruteforce(rgwa.cyclic_trivial(4))

    def test_refused_on_non_reduced_objects(self):
        add, act = rgwa.s3_conjugation_tables()
        s3 = rgwa.make_object("s3conj", 6, add, act, require_reduced=False)
        with pytest.raises(rgwa.UnsupportedInputError):
            rgwa.enumerate_pentactions(s3)
