"""Hall isoclinism: witnesses, verification, search, and stem-group lookup.

Two groups are isoclinic when their central quotients and derived subgroups
are isomorphic by a pair of maps compatible with the commutator map.  The
search enumerates isomorphisms of the central quotients; the derived-side
map is then forced by the commutator correspondence and extended
multiplicatively, so a candidate either determines a full witness or dies
on a well-definedness conflict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cp import cp_pair_count
from .errors import DomainMismatch, SearchCapExceeded, WitnessInvalid
from .groups import (
    FiniteGroup,
    Subgroup,
    center,
    derived_subgroup,
    left_transversal,
    quotient,
)
from .isomorphism import DEFAULT_ISO_CAP, iter_isomorphisms


@dataclass(frozen=True)
class IsoclinismWitness:
    """The pair (alpha, beta) realizing an isoclinism G ~ H.

    alpha maps coset indices of G/Z(G) to coset indices of H/Z(H); beta maps
    element indices of G' (as G-elements) to element indices of H' (as
    H-elements).  The quotients, projections and derived subgroups the maps
    refer to are carried along so the witness is self-contained.
    """

    G: FiniteGroup
    H: FiniteGroup
    g_quotient: FiniteGroup
    h_quotient: FiniteGroup
    g_proj: tuple[int, ...]
    h_proj: tuple[int, ...]
    alpha: tuple[int, ...]
    g_derived: Subgroup
    h_derived: Subgroup
    beta: dict[int, int]

    def serialize(self) -> str:
        lines = ["quotient-map"]
        lines += [f"{c} -> {self.alpha[c]}" for c in range(len(self.alpha))]
        lines.append("derived-map")
        lines += [f"{g} -> {self.beta[g]}" for g in sorted(self.beta)]
        return "\n".join(lines)


def _central_data(G: FiniteGroup):
    Z = center(G)
    Q, proj = quotient(G, Z)
    reps = left_transversal(G, Z).reps
    # representative per coset index (transversal reps hit every coset once)
    pre = [0] * Q.order
    for r in reps:
        pre[proj[r]] = r
    return Z, Q, tuple(proj), tuple(pre)


def _beta_from_alpha(
    G: FiniteGroup,
    H: FiniteGroup,
    alpha: list[int] | tuple[int, ...],
    g_pre: tuple[int, ...],
    h_pre: tuple[int, ...],
    g_derived: Subgroup,
    h_derived: Subgroup,
) -> dict[int, int] | None:
    """Derived-subgroup map forced by alpha, or None if it is inconsistent."""
    m = len(alpha)
    beta: dict[int, int] = {}
    for c1 in range(m):
        for c2 in range(m):
            u = G.commutator(g_pre[c1], g_pre[c2])
            v = H.commutator(h_pre[alpha[c1]], h_pre[alpha[c2]])
            if beta.setdefault(u, v) != v:
                return None
    # extend multiplicatively from commutators to all of G'
    used = set(beta.values())
    if len(used) != len(beta):
        return None
    queue = list(beta)
    while queue:
        x = queue.pop()
        for a in list(beta):
            for p, q in ((a, x), (x, a)):
                prod = G.mul(p, q)
                img = H.mul(beta[p], beta[q])
                known = beta.get(prod)
                if known is not None:
                    if known != img:
                        return None
                elif img in used:
                    return None
                else:
                    beta[prod] = img
                    used.add(img)
                    queue.append(prod)
    if set(beta) != g_derived.member_set or used != h_derived.member_set:
        return None
    return beta


def find_isoclinism(
    G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_ISO_CAP
) -> IsoclinismWitness | None:
    """Search for an isoclinism witness; None if the groups are not isoclinic."""
    Zg, Qg, g_proj, g_pre = _central_data(G)
    Zh, Qh, h_proj, h_pre = _central_data(H)
    if max(Qg.order, Qh.order) > cap:
        raise SearchCapExceeded(
            f"central quotient order exceeds search cap {cap}"
        )
    Dg = derived_subgroup(G)
    Dh = derived_subgroup(H)
    if Qg.order != Qh.order or Dg.order != Dh.order:
        return None
    for alpha in iter_isomorphisms(Qg, Qh, cap=cap):
        beta = _beta_from_alpha(G, H, alpha, g_pre, h_pre, Dg, Dh)
        if beta is None:
            continue
        return IsoclinismWitness(
            G, H, Qg, Qh, g_proj, h_proj, tuple(alpha), Dg, Dh, beta
        )
    return None


def verify_isoclinism(
    G: FiniteGroup,
    H: FiniteGroup,
    w: IsoclinismWitness,
    random_rechecks: int = 32,
    seed: int = 0,
) -> bool:
    """Check a witness exhaustively: both maps are isomorphisms and the
    commutator square commutes for every coset pair (canonical preimages,
    plus randomized preimage re-checks)."""
    Qg, Qh = w.g_quotient, w.h_quotient
    if Qg.order != Qh.order or len(w.alpha) != Qg.order:
        raise DomainMismatch("alpha does not map G/Z(G) onto H/Z(H)")
    if sorted(w.alpha) != list(range(Qh.order)):
        return False
    if set(w.beta) != w.g_derived.member_set:
        raise DomainMismatch("beta is not defined on exactly G'")
    if set(w.beta.values()) != w.h_derived.member_set:
        return False
    # alpha is a homomorphism of the quotients
    for a in range(Qg.order):
        for b in range(Qg.order):
            if w.alpha[Qg.mul(a, b)] != Qh.mul(w.alpha[a], w.alpha[b]):
                return False
    # beta is a homomorphism of the derived subgroups
    for a in w.g_derived.members:
        for b in w.g_derived.members:
            if w.beta[G.mul(a, b)] != H.mul(w.beta[a], w.beta[b]):
                return False
    # commutator compatibility over all coset pairs
    g_pre = _coset_preimages(G, w.g_proj, Qg.order)
    h_pre = _coset_preimages(H, w.h_proj, Qh.order)
    for c1 in range(Qg.order):
        for c2 in range(Qg.order):
            u = G.commutator(g_pre[c1][0], g_pre[c2][0])
            v = H.commutator(h_pre[w.alpha[c1]][0], h_pre[w.alpha[c2]][0])
            if w.beta[u] != v:
                return False
    rng = random.Random(seed)
    for _ in range(random_rechecks):
        c1 = rng.randrange(Qg.order)
        c2 = rng.randrange(Qg.order)
        x = rng.choice(g_pre[c1])
        y = rng.choice(g_pre[c2])
        xp = rng.choice(h_pre[w.alpha[c1]])
        yp = rng.choice(h_pre[w.alpha[c2]])
        if w.beta[G.commutator(x, y)] != H.commutator(xp, yp):
            return False
    return True


def _coset_preimages(G: FiniteGroup, proj: tuple[int, ...], k: int) -> list[list[int]]:
    pre: list[list[int]] = [[] for _ in range(k)]
    for g in range(G.order):
        pre[proj[g]].append(g)
    return pre


def identity_witness(G: FiniteGroup) -> IsoclinismWitness:
    Z, Q, proj, _pre = _central_data(G)
    D = derived_subgroup(G)
    return IsoclinismWitness(
        G, G, Q, Q, proj, proj,
        tuple(range(Q.order)), D, D, {g: g for g in D.members},
    )


def is_stem_group(G: FiniteGroup) -> bool:
    """True iff Z(G) <= G' (the stem condition)."""
    return center(G).member_set <= derived_subgroup(G).member_set


def find_stem_group(
    F: FiniteGroup,
    corpus: list[FiniteGroup],
    cap: int = DEFAULT_ISO_CAP,
) -> tuple[FiniteGroup, IsoclinismWitness] | None:
    """First corpus group (order-ascending) that is a stem group isoclinic to F.

    Every isoclinism family contains a stem group, but the corpus may not;
    None means "not found here", never "does not exist".
    """
    for H in sorted(corpus, key=lambda g: (g.order, g.name)):
        if not is_stem_group(H):
            continue
        w = find_isoclinism(F, H, cap=cap)
        if w is not None:
            return H, w
    return None


@dataclass(frozen=True)
class InvarianceReport:
    """Commutation-sum and cp comparison across an isoclinism."""

    sum_g: int
    sum_h: int
    cp_g: Fraction
    cp_h: Fraction

    @property
    def sums_equal(self) -> bool:
        return self.sum_g == self.sum_h

    @property
    def cp_equal(self) -> bool:
        return self.cp_g == self.cp_h


def cp_isoclinism_invariance_check(
    G: FiniteGroup, H: FiniteGroup, w: IsoclinismWitness
) -> InvarianceReport:
    """Verify the witness, then compare commutation sums and cp values."""
    from .cp import commutation_matrix

    if not verify_isoclinism(G, H, w):
        raise WitnessInvalid("witness failed verification")
    Zg = center(G)
    Zh = center(H)
    Mg = commutation_matrix(G, Zg, left_transversal(G, Zg))
    Mh = commutation_matrix(H, Zh, left_transversal(H, Zh))
    return InvarianceReport(Mg.total(), Mh.total(), cp_pair_count(G), cp_pair_count(H))
