import random
from fractions import Fraction

import pytest

from haarcp import builders
from haarcp.corpus import builtin_corpus
from haarcp.cp import (
    commutation_matrix,
    cp_class_count,
    cp_coset_formula,
    cp_fc_reduction,
    cp_pair_count,
    format_rational,
    parse_rational,
)
from haarcp.errors import CenterMismatch, CenterNotContained
from haarcp.groups import (
    Transversal,
    center,
    direct_product,
    generated_subgroup,
    left_transversal,
    whole_subgroup,
)


class TestPairCount:
    def test_trivial_group(self):
        assert cp_pair_count(builders.trivial()) == 1

    def test_s3(self, s3):
        # 18 commuting pairs of 36
        assert cp_pair_count(s3) == Fraction(1, 2)

    def test_q8(self, q8):
        # 40 commuting pairs of 64
        assert cp_pair_count(q8) == Fraction(5, 8)

    def test_abelian_is_one(self):
        assert cp_pair_count(builders.cyclic(17)) == 1


class TestClassCount:
    def test_abelian(self):
        assert cp_class_count(builders.cyclic(9)) == 1

    def test_a5(self, a5):
        assert cp_class_count(a5) == Fraction(1, 12)

    def test_s4(self, s4):
        assert cp_class_count(s4) == Fraction(5, 24)


class TestCommutationMatrix:
    def test_abelian_all_ones(self):
        G = builders.cyclic(5)
        Z = center(G)
        M = commutation_matrix(G, Z, left_transversal(G, Z))
        assert M.dimension == 1
        assert M.total() == 1

    def test_s3_row_sums(self, s3):
        Z = center(s3)
        M = commutation_matrix(s3, Z, left_transversal(s3, Z))
        assert M.dimension == 6
        assert sorted(sum(row) for row in M.entries) == [2, 2, 2, 3, 3, 6]
        assert M.total() == 18

    def test_q8_total(self, q8):
        Z = center(q8)
        M = commutation_matrix(q8, Z, left_transversal(q8, Z))
        assert M.dimension == 4
        assert M.total() == 10

    def test_symmetry_and_diagonal(self, d4):
        Z = center(d4)
        M = commutation_matrix(d4, Z, left_transversal(d4, Z))
        for i in range(M.dimension):
            assert M.entries[i][i] == 1
            for j in range(M.dimension):
                assert M.entries[i][j] == M.entries[j][i]

    def test_center_mismatch_rejected(self, s3):
        not_center = whole_subgroup(s3)
        with pytest.raises(CenterMismatch):
            commutation_matrix(s3, not_center, left_transversal(s3, not_center))

    def test_serialization(self, q8):
        Z = center(q8)
        M = commutation_matrix(q8, Z, left_transversal(q8, Z))
        lines = M.serialize().splitlines()
        assert lines[0] == "4"
        assert len(lines) == 5
        assert all(set(row) <= {"0", "1"} for row in lines[1:])


class TestCosetFormula:
    def test_abelian(self):
        assert cp_coset_formula(builders.cyclic(6)) == 1

    def test_s3(self, s3):
        assert cp_coset_formula(s3) == Fraction(1, 2)

    def test_a5_sum_is_300(self, a5):
        Z = center(a5)
        M = commutation_matrix(a5, Z, left_transversal(a5, Z))
        assert M.total() == 300
        assert cp_coset_formula(a5) == Fraction(300, 3600) == Fraction(1, 12)

    def test_transversal_independence(self, q8):
        rng = random.Random(5)
        Z = center(q8)
        base = left_transversal(q8, Z)
        for _ in range(10):
            reps = tuple(
                q8.mul(r, rng.choice(Z.members)) for r in base.reps
            )
            value = cp_coset_formula(q8, Transversal(Z, reps))
            assert value == Fraction(5, 8)


class TestThreeWayAgreement:
    def test_corpus_agreement(self):
        for name, G in builtin_corpus(32):
            pair = cp_pair_count(G)
            assert pair == cp_class_count(G), name
            assert pair == cp_coset_formula(G), name
            assert pair.denominator <= G.order**2
            assert (pair == 1) == G.is_abelian(), name

    def test_multiplicativity(self, s3, q8):
        for G, H in [(s3, q8), (q8, q8), (s3, builders.cyclic(4))]:
            P = direct_product(G, H)
            assert cp_pair_count(P) == cp_pair_count(G) * cp_pair_count(H)

    def test_nonabelian_bound(self):
        bound = Fraction(5, 8)
        for name, G in builtin_corpus(32):
            if not G.is_abelian():
                assert cp_pair_count(G) <= bound, name


class TestFcReduction:
    def test_whole_group(self, s3):
        assert cp_fc_reduction(s3, whole_subgroup(s3)) == Fraction(1, 2)

    def test_formula_fails_for_non_fc_subgroup(self):
        # D6 (order 12) with its cyclic subgroup of order 6: the reduction
        # formula gives cp(C6)/4 = 1/4, but cp(D6) = 1/2.  The equality is a
        # theorem about FC-centers, not arbitrary central-containing subgroups.
        d6 = builders.dihedral(6)
        rotation = next(g for g in range(12) if d6.element_order(g) == 6)
        c6 = generated_subgroup(d6, [rotation])
        assert center(d6).member_set <= c6.member_set
        reduced = cp_fc_reduction(d6, c6)
        assert reduced == Fraction(1, 4)
        assert cp_pair_count(d6) == Fraction(1, 2)
        assert reduced != cp_pair_count(d6)

    def test_center_must_be_contained(self, d4):
        reflection = next(
            g for g in range(8)
            if d4.element_order(g) == 2 and g not in center(d4)
        )
        H = generated_subgroup(d4, [reflection])
        with pytest.raises(CenterNotContained):
            cp_fc_reduction(d4, H)


class TestRationalFormat:
    def test_round_trip(self):
        for text in ["3/40", "5/8", "1", "0", "7/3"]:
            assert format_rational(parse_rational(text)) == text

    def test_integer_form(self):
        assert format_rational(Fraction(4, 4)) == "1"

    def test_decimals_rejected(self):
        with pytest.raises(ValueError):
            parse_rational("0.075")
