"""Certificate checking for domination-type sets and 2-packings.

Each verifier enumerates the vertices of K(n,r) in colex order (or the
member pairs, for 2-packings) and reports the first violation it finds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    CapacityError,
    DefinabilityError,
    ParameterError,
    Vertex,
    VertexFamily,
    distance_at_most_2,
    popcount,
)


class InvariantKind(Enum):
    K_DOMINATION = "gamma_k"
    K_TUPLE = "gamma_xk"
    K_TUPLE_TOTAL = "gamma_xkt"
    TWO_PACKING = "rho2"


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    kind: InvariantKind
    k: int
    witness_violation: Vertex | tuple[Vertex, Vertex] | None
    checked_count: int

    def __post_init__(self) -> None:
        assert self.valid == (self.witness_violation is None)


def _check_k(k: int) -> None:
    if k < 1:
        raise ParameterError(f"k must be a positive integer, got {k}")


def verify_k_dominating(
    D: VertexFamily, k: int, ceiling: int | None = None
) -> VerificationReport:
    """Every vertex outside D must have at least k neighbors in D."""
    _check_k(k)
    D.params.check_capacity(ceiling)
    member_set = set(D.member_masks())
    masks = D.member_masks()
    checked = 0
    for u in D.params.vertex_masks():
        if u in member_set:
            continue
        checked += 1
        hits = 0
        for m in masks:
            if (u & m) == 0:
                hits += 1
                if hits >= k:
                    break
        if hits < k:
            return VerificationReport(
                False, InvariantKind.K_DOMINATION, k, Vertex(u), checked
            )
    return VerificationReport(True, InvariantKind.K_DOMINATION, k, None, checked)


def verify_k_tuple_dominating(
    D: VertexFamily, k: int, ceiling: int | None = None
) -> VerificationReport:
    """Every closed neighborhood must contain at least k members of D."""
    _check_k(k)
    if D.params.min_degree < k - 1:
        raise DefinabilityError(
            f"{k}-tuple domination undefined on K({D.params.n},{D.params.r}): "
            f"minimum degree {D.params.min_degree} < k-1"
        )
    D.params.check_capacity(ceiling)
    member_set = set(D.member_masks())
    masks = D.member_masks()
    checked = 0
    for u in D.params.vertex_masks():
        checked += 1
        hits = 1 if u in member_set else 0
        if hits < k:
            for m in masks:
                if (u & m) == 0:
                    hits += 1
                    if hits >= k:
                        break
        if hits < k:
            return VerificationReport(
                False, InvariantKind.K_TUPLE, k, Vertex(u), checked
            )
    return VerificationReport(True, InvariantKind.K_TUPLE, k, None, checked)


def verify_k_tuple_total_dominating(
    D: VertexFamily, k: int, ceiling: int | None = None
) -> VerificationReport:
    """Every open neighborhood must contain at least k members of D."""
    _check_k(k)
    if D.params.min_degree < k:
        raise DefinabilityError(
            f"{k}-tuple total domination undefined on "
            f"K({D.params.n},{D.params.r}): minimum degree "
            f"{D.params.min_degree} < k"
        )
    D.params.check_capacity(ceiling)
    masks = D.member_masks()
    checked = 0
    for u in D.params.vertex_masks():
        checked += 1
        hits = 0
        for m in masks:
            if (u & m) == 0:
                hits += 1
                if hits >= k:
                    break
        if hits < k:
            return VerificationReport(
                False, InvariantKind.K_TUPLE_TOTAL, k, Vertex(u), checked
            )
    return VerificationReport(True, InvariantKind.K_TUPLE_TOTAL, k, None, checked)


def verify_2_packing(S: VertexFamily) -> VerificationReport:
    """All distinct member pairs must be at distance >= 3.

    For 2r+1 <= n <= 3r-2 this is the pairwise-intersection test
    1 <= |u ∩ v| <= 3r-1-n; outside that band the general common-neighbor
    test is used. Families with at most one member are trivially valid.
    """
    n, r = S.params.n, S.params.r
    use_intersection_test = 2 * r + 1 <= n <= 3 * r - 2
    cap = 3 * r - 1 - n
    members = S.members
    checked = 0
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            u, v = members[i], members[j]
            checked += 1
            if use_intersection_test:
                inter = popcount(u.mask & v.mask)
                bad = not (1 <= inter <= cap)
            else:
                bad = distance_at_most_2(u, v, S.params)
            if bad:
                return VerificationReport(
                    False, InvariantKind.TWO_PACKING, 0, (u, v), checked
                )
    return VerificationReport(True, InvariantKind.TWO_PACKING, 0, None, checked)


_DOMINATION_VERIFIERS = {
    InvariantKind.K_DOMINATION: verify_k_dominating,
    InvariantKind.K_TUPLE: verify_k_tuple_dominating,
    InvariantKind.K_TUPLE_TOTAL: verify_k_tuple_total_dominating,
}


def verify(
    family: VertexFamily,
    kind: InvariantKind,
    k: int = 0,
    ceiling: int | None = None,
) -> VerificationReport:
    """Dispatch to the verifier for the given invariant kind."""
    if kind is InvariantKind.TWO_PACKING:
        return verify_2_packing(family)
    return _DOMINATION_VERIFIERS[kind](family, k, ceiling)
