"""Finite-by-torus compact groups: (T^d x| Q) x L with Q acting by integer matrices.

The commuting probability of such a model is exactly computable.  Two
independent routes are exposed:

  * cp_semianalytic: decompose the commuting-pair measure over the finite
    parts and evaluate the torus contribution exactly.  Two elements
    (a, q) and (b, r) of T^d x| Q commute iff qr = rq and
    (I - M_r) a = (I - M_q) b on the torus; the solution set carries Haar
    measure 1 when both matrices vanish and 0 otherwise (a nonzero integer
    matrix maps the torus onto a positive-dimensional subtorus, so the
    constraint cuts a proper closed subgroup of measure 0).  Hence
    cp = cp(L) * #{(q, r) in K^2 : qr = rq} / |Q|^2 with K the action kernel.

  * cp_theorem1: reduce to the finite shadow of the FC-center and divide by
    the square of its index.

Their exact agreement on every model is the machine-checkable content of
the coset-reduction theorem for this family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .builders import trivial
from .errors import NotAHomomorphism, NotUnimodular, RankMismatch, ZeroSamples
from .groups import (
    FiniteGroup,
    direct_product,
    subgroup_as_group,
    subgroup_from_members,
)
from .cp import cp_pair_count

Matrix = tuple[tuple[int, ...], ...]


def identity_matrix(d: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d))
        for i in range(d)
    )


def mat_det(a: Matrix) -> int:
    d = len(a)
    if d == 0:
        return 1
    if d == 1:
        return a[0][0]
    det = 0
    for j in range(d):
        minor = tuple(row[:j] + row[j + 1:] for row in a[1:])
        det += (-1) ** j * a[0][j] * mat_det(minor)
    return det


@dataclass(frozen=True)
class CompactModel:
    """(T^torus_rank x| acting_group) x extra_factor, with the full action table."""

    torus_rank: int
    acting_group: FiniteGroup
    action: tuple[Matrix, ...]  # one matrix per element of acting_group
    extra_factor: FiniteGroup
    name: str = "model"

    @property
    def is_finite(self) -> bool:
        return self.torus_rank == 0


@dataclass(frozen=True)
class FcDescription:
    """FC-center of a model: the action kernel K times the finite factor."""

    kernel: tuple[int, ...]  # element indices of Q with M_q = I
    finite_shadow: FiniteGroup  # a group isomorphic to K x L
    index: int  # |Q : K|


def build_model(
    torus_rank: int,
    acting_group: FiniteGroup,
    generator_matrices: Mapping[int, Sequence[Sequence[int]]] | None = None,
    extra_factor: FiniteGroup | None = None,
    name: str = "model",
) -> CompactModel:
    """Validate and complete a model description.

    Matrices may be given for a generating set only; the rest of the action
    is filled in by multiplying along the Cayley table, and the homomorphism
    law is then verified exhaustively over Q x Q.  An empty matrix map means
    the trivial action.
    """
    Q = acting_group
    L = extra_factor if extra_factor is not None else trivial()
    d = torus_rank
    if d < 0:
        raise RankMismatch("torus rank must be >= 0")
    ident = identity_matrix(d)

    given: dict[int, Matrix] = {}
    for g, raw in (generator_matrices or {}).items():
        if not 0 <= g < Q.order:
            raise RankMismatch(f"generator index {g} out of range for |Q| = {Q.order}")
        m = tuple(tuple(int(v) for v in row) for row in raw)
        if len(m) != d or any(len(row) != d for row in m):
            raise RankMismatch(f"matrix for element {g} is not {d}x{d}")
        if mat_det(m) not in (1, -1):
            raise NotUnimodular(f"matrix for element {g} has determinant {mat_det(m)}")
        given[g] = m

    action: dict[int, Matrix] = {Q.identity: ident}
    if Q.identity in given and given[Q.identity] != ident:
        raise NotAHomomorphism("identity element must act by the identity matrix")
    gens = [g for g in given if g != Q.identity]
    frontier = [Q.identity]
    while frontier:
        nxt = []
        for q in frontier:
            for g in gens:
                r = Q.mul(q, g)
                m = mat_mul(action[q], given[g])
                if r in action:
                    if action[r] != m:
                        raise NotAHomomorphism(
                            f"conflicting matrices reached for element {r}"
                        )
                else:
                    action[r] = m
                    nxt.append(r)
        frontier = nxt
    if len(action) < Q.order:
        if not gens:
            # no matrices given: trivial action on every element
            action = {q: ident for q in range(Q.order)}
        else:
            raise NotAHomomorphism(
                "matrix-bearing elements do not generate the acting group"
            )
    full = tuple(action[q] for q in range(Q.order))
    for q in range(Q.order):
        for r in range(Q.order):
            if full[Q.mul(q, r)] != mat_mul(full[q], full[r]):
                raise NotAHomomorphism(
                    f"action is not a homomorphism at elements ({q}, {r})"
                )
    return CompactModel(d, Q, full, L, name=name)


def fc_center(model: CompactModel) -> FcDescription:
    """Elements with finite conjugacy class: kernel of the action, times L.

    The class of (a, q, l) sweeps (a + (I - M_q) b, q', l') over torus
    elements b, which is finite iff (I - M_q) kills the torus, i.e. M_q = I.
    The torus itself is central in the FC-part and drops out of cp, so the
    finite shadow K x L carries all the structure downstream code needs.
    """
    Q = model.acting_group
    ident = identity_matrix(model.torus_rank)
    kernel = tuple(q for q in range(Q.order) if model.action[q] == ident)
    ksub = subgroup_from_members(Q, kernel)
    kgrp, _ = subgroup_as_group(ksub, name=f"ker({model.name})")
    shadow = direct_product(kgrp, model.extra_factor, name=f"fc({model.name})")
    return FcDescription(kernel, shadow, Q.order // len(kernel))


def cp_semianalytic(model: CompactModel) -> Fraction:
    """Exact cp by direct measure decomposition; independent of cp_theorem1."""
    Q = model.acting_group
    ident = identity_matrix(model.torus_rank)
    kernel = [q for q in range(Q.order) if model.action[q] == ident]
    surviving = sum(
        1 for q in kernel for r in kernel if Q.commutes(q, r)
    )
    return cp_pair_count(model.extra_factor) * Fraction(surviving, Q.order**2)


def cp_theorem1(model: CompactModel) -> Fraction:
    """cp(finite shadow of the FC-center) / index^2.

    An infinite FC-index (where the convention 1/inf = 0 would apply) cannot
    occur in this family: the index always divides |Q|.
    """
    fc = fc_center(model)
    return cp_pair_count(fc.finite_shadow) / (fc.index**2)


# -- Monte Carlo -----------------------------------------------------------

_SM_GAMMA = 0x9E3779B97F4A7C15
_SM_M1 = 0xBF58476D1CE4E5B9
_SM_M2 = 0x94D049BB133111EB


def splitmix64_stream(seed: int, count: int):
    """Words i=1..count of the splitmix64 stream for `seed`, as uint64 array.

    Counter-based, so the whole stream vectorizes: word i mixes
    seed + i * golden-gamma.  Same seed gives the same stream everywhere.
    """
    import numpy as np

    idx = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + idx * np.uint64(_SM_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_SM_M1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_SM_M2)
        z = z ^ (z >> np.uint64(31))
    return z


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    stderr: float
    samples: int
    seed: int
    hits: int


def cp_monte_carlo(model: CompactModel, samples: int, seed: int) -> MonteCarloEstimate:
    """Estimate cp by sampling Haar pairs; deterministic for a fixed seed.

    Each of the two elements of a pair consumes d + 2 stream words: d torus
    coordinates (53-bit fractions, drawn to honor the stream layout even
    though a continuous sample never lands on the measure-zero commuting
    sets), then the Q index, then the L index.  A pair commutes iff the Q
    parts commute, both act trivially on the torus, and the L parts commute.
    """
    if samples < 1:
        raise ZeroSamples("need at least one sample")
    import numpy as np

    Q = model.acting_group
    L = model.extra_factor
    d = model.torus_rank
    ident = identity_matrix(d)

    words = splitmix64_stream(seed, samples * 2 * (d + 2)).reshape(samples, 2, d + 2)
    q0 = (words[:, 0, d] % np.uint64(Q.order)).astype(np.int64)
    l0 = (words[:, 0, d + 1] % np.uint64(L.order)).astype(np.int64)
    q1 = (words[:, 1, d] % np.uint64(Q.order)).astype(np.int64)
    l1 = (words[:, 1, d + 1] % np.uint64(L.order)).astype(np.int64)

    q_comm = np.array(
        [[Q.commutes(a, b) for b in range(Q.order)] for a in range(Q.order)],
        dtype=bool,
    )
    l_comm = np.array(
        [[L.commutes(a, b) for b in range(L.order)] for a in range(L.order)],
        dtype=bool,
    )
    in_kernel = np.array([model.action[q] == ident for q in range(Q.order)], dtype=bool)

    hit = q_comm[q0, q1] & in_kernel[q0] & in_kernel[q1] & l_comm[l0, l1]
    hits = int(hit.sum())
    p = hits / samples
    stderr = (p * (1.0 - p) / samples) ** 0.5
    return MonteCarloEstimate(p, stderr, samples, seed, hits)


# -- standard test battery -------------------------------------------------

ROT90 = ((0, -1), (1, 0))


def standard_model_battery(include_a5: bool = True) -> list[CompactModel]:
    """Curated models covering every action/factor combination the theorems need.

    Cartesian product of a fixed action list (trivial, sign, swap, rotation
    and reflection actions of C2, C3, C4, S3, D4 on tori of rank <= 3) with
    the finite factors {1, C2, S3, Q8, A5}.
    """
    from . import builders

    c2, c3, c4 = builders.cyclic(2), builders.cyclic(3), builders.cyclic(4)
    s3, d4 = builders.symmetric(3), builders.dihedral(4)
    # (label, torus rank, acting group, generator matrices)
    actions = [
        ("o2", 1, c2, {1: ((-1,),)}),
        ("t2-sign", 2, c2, {1: ((-1, 0), (0, -1))}),
        ("t2-swap", 2, c2, {1: ((0, 1), (1, 0))}),
        ("t2-c3", 2, c3, {1: ((0, -1), (1, -1))}),
        ("t2-c4", 2, c4, {1: ROT90}),
        ("t2-s3", 2, s3, {2: ((0, 1), (1, 0)), 3: ((0, -1), (1, -1))}),
        ("t2-d4", 2, d4, {1: ROT90, 4: ((1, 0), (0, -1))}),
        ("t3-sign", 3, c2, {1: ((-1, 0, 0), (0, -1, 0), (0, 0, -1))}),
        ("t3-c4", 3, c4, {1: ((0, -1, 0), (1, 0, 0), (0, 0, 1))}),
        ("finite-c2", 0, c2, {}),
        ("trivial-s3", 2, s3, {}),
    ]
    factors = [
        ("1", builders.trivial()),
        ("c2", c2),
        ("s3", builders.symmetric(3)),
        ("q8", builders.quaternion8()),
    ]
    if include_a5:
        factors.append(("a5", builders.alternating(5)))
    models = []
    for alabel, d, Q, mats in actions:
        for flabel, L in factors:
            models.append(
                build_model(d, Q, mats, L, name=f"{alabel} x {flabel}")
            )
    return models
