import pytest

from haarcp import builders
from haarcp.corpus import builtin_corpus
from haarcp.errors import SearchCapExceeded
from haarcp.groups import direct_product
from haarcp.isomorphism import find_isomorphism, iter_isomorphisms


def _is_isomorphism(G, H, phi):
    return sorted(phi) == list(range(H.order)) and all(
        phi[G.mul(a, b)] == H.mul(phi[a], phi[b])
        for a in range(G.order)
        for b in range(G.order)
    )


def test_c4_vs_klein_distinct():
    assert find_isomorphism(builders.cyclic(4), builders.klein4()) is None


def test_identity_isomorphism(s3):
    phi = find_isomorphism(s3, s3)
    assert phi is not None
    assert _is_isomorphism(s3, s3, phi)


def test_d4_q8_not_isomorphic(d4, q8):
    # different counts of order-2 elements (5 vs 1)
    assert sum(1 for g in range(8) if d4.element_order(g) == 2) == 5
    assert sum(1 for g in range(8) if q8.element_order(g) == 2) == 1
    assert find_isomorphism(d4, q8) is None


def test_same_group_different_presentation():
    c6 = builders.cyclic(6)
    c2xc3 = direct_product(builders.cyclic(2), builders.cyclic(3))
    phi = find_isomorphism(c6, c2xc3)
    assert phi is not None
    assert _is_isomorphism(c6, c2xc3, phi)


def test_dihedral_vs_symmetric_3(s3):
    phi = find_isomorphism(builders.dihedral(3), s3)
    assert phi is not None
    assert _is_isomorphism(builders.dihedral(3), s3, phi)


def test_symmetry_of_search():
    pairs = [
        (builders.cyclic(8), builders.dihedral(4)),
        (builders.dihedral(6), direct_product(builders.dihedral(3), builders.cyclic(2))),
        (builders.quaternion8(), builders.dihedral(4)),
    ]
    for G, H in pairs:
        assert (find_isomorphism(G, H) is None) == (find_isomorphism(H, G) is None)


def test_cap_enforced(a5):
    big = direct_product(a5, builders.cyclic(6))
    with pytest.raises(SearchCapExceeded):
        find_isomorphism(big, big, cap=256)


def test_all_automorphisms_of_klein4():
    V = builders.klein4()
    autos = list(iter_isomorphisms(V, V))
    assert len(autos) == 6  # GL(2, 2)


def test_corpus_self_isomorphism():
    for name, G in builtin_corpus(16):
        phi = find_isomorphism(G, G)
        assert phi is not None, name
        assert _is_isomorphism(G, G, phi), name
