from fractions import Fraction

import pytest

from haarcp import builders
from haarcp.corpus import builtin_corpus
from haarcp.errors import SearchCapExceeded, WitnessInvalid
from haarcp.groups import center, derived_subgroup, direct_product
from haarcp.isoclinism import (
    IsoclinismWitness,
    cp_isoclinism_invariance_check,
    find_isoclinism,
    find_stem_group,
    identity_witness,
    is_stem_group,
    verify_isoclinism,
)


class TestVerify:
    def test_identity_witness(self, q8):
        w = identity_witness(q8)
        assert verify_isoclinism(q8, q8, w)

    def test_d4_q8_witness(self, d4, q8):
        w = find_isoclinism(d4, q8)
        assert w is not None
        assert verify_isoclinism(d4, q8, w)

    def test_tampered_witness_fails(self, d4, q8):
        w = find_isoclinism(d4, q8)
        alpha = list(w.alpha)
        # sending the identity coset elsewhere cannot be a homomorphism
        alpha[0], alpha[1] = alpha[1], alpha[0]
        tampered = IsoclinismWitness(
            w.G, w.H, w.g_quotient, w.h_quotient, w.g_proj, w.h_proj,
            tuple(alpha), w.g_derived, w.h_derived, w.beta,
        )
        assert not verify_isoclinism(d4, q8, tampered)

    def test_c2_c4_trivially_isoclinic(self):
        # abelian groups all lie in one isoclinism family
        w = find_isoclinism(builders.cyclic(2), builders.cyclic(4))
        assert w is not None
        assert w.g_quotient.order == 1


class TestFind:
    def test_abelian_pair(self):
        w = find_isoclinism(builders.cyclic(6), builders.klein4())
        assert w is not None

    def test_s3_c6_not_isoclinic(self, s3):
        assert find_isoclinism(s3, builders.cyclic(6)) is None

    def test_extraspecial_27(self):
        e3 = builders.extraspecial27_exponent3()
        e9 = builders.extraspecial27_exponent9()
        w = find_isoclinism(e3, e9)
        assert w is not None
        assert verify_isoclinism(e3, e9, w)

    def test_witness_symmetric(self, d4, q8):
        assert (find_isoclinism(d4, q8) is None) == (find_isoclinism(q8, d4) is None)

    def test_cap(self, a5):
        big = direct_product(a5, builders.cyclic(6))
        with pytest.raises(SearchCapExceeded):
            find_isoclinism(big, big, cap=16)

    def test_isoclinic_implies_equal_cp(self):
        # spot-check across the small corpus: whenever a witness is found,
        # cp agrees exactly
        from haarcp.cp import cp_pair_count

        groups = [G for _n, G in builtin_corpus(16)]
        for i, G in enumerate(groups):
            for H in groups[i + 1:]:
                w = find_isoclinism(G, H)
                if w is not None:
                    assert cp_pair_count(G) == cp_pair_count(H), (G.name, H.name)


class TestInvariance:
    def test_d4_q8_sums_and_cp(self, d4, q8):
        w = find_isoclinism(d4, q8)
        report = cp_isoclinism_invariance_check(d4, q8, w)
        assert report.sum_g == report.sum_h == 10
        assert report.cp_g == report.cp_h == Fraction(5, 8)

    def test_extraspecial_27_cp(self):
        e3 = builders.extraspecial27_exponent3()
        e9 = builders.extraspecial27_exponent9()
        w = find_isoclinism(e3, e9)
        report = cp_isoclinism_invariance_check(e3, e9, w)
        assert report.sums_equal
        assert report.cp_g == report.cp_h == Fraction(11, 27)

    def test_invalid_witness_raises(self, d4, q8):
        w = find_isoclinism(d4, q8)
        beta = dict(w.beta)
        ks = sorted(beta)
        beta[ks[0]], beta[ks[1]] = beta[ks[1]], beta[ks[0]]
        broken = IsoclinismWitness(
            w.G, w.H, w.g_quotient, w.h_quotient, w.g_proj, w.h_proj,
            w.alpha, w.g_derived, w.h_derived, beta,
        )
        with pytest.raises(WitnessInvalid):
            cp_isoclinism_invariance_check(d4, q8, broken)


class TestStemGroups:
    def test_abelian_has_trivial_stem(self):
        corpus = [G for _n, G in builtin_corpus(16)]
        found = find_stem_group(builders.cyclic(12), corpus)
        assert found is not None
        H, w = found
        assert H.order == 1

    def test_d4_x_c2(self, d4):
        corpus = [G for _n, G in builtin_corpus(16)]
        F = direct_product(d4, builders.cyclic(2))
        found = find_stem_group(F, corpus)
        assert found is not None
        H, w = found
        assert H.order == 8  # D4 or Q8, the stems of the family
        assert is_stem_group(H)
        from haarcp.cp import cp_pair_count
        assert cp_pair_count(F) == cp_pair_count(H)

    def test_a5_x_c6(self, a5):
        corpus = [G for _n, G in builtin_corpus(64)]
        F = direct_product(a5, builders.cyclic(6))
        found = find_stem_group(F, corpus)
        assert found is not None
        H, _w = found
        assert H.order == 60
        assert is_stem_group(H)

    def test_returned_stem_satisfies_condition(self):
        corpus = [G for _n, G in builtin_corpus(16)]
        for F in (builders.dihedral(4), builders.quaternion8(), builders.cyclic(5)):
            found = find_stem_group(F, corpus)
            assert found is not None
            H, w = found
            assert center(H).member_set <= derived_subgroup(H).member_set
            assert verify_isoclinism(F, H, w)
