"""Shared builders for the test suite: block packings and seeded perturbations."""

from __future__ import annotations

import random
from itertools import combinations

from kneserdom import KneserParams, VertexFamily, verify_2_packing


def block_packing(r: int, t: int, size: int) -> VertexFamily:
    """A 2-packing of `size` vertices of K(3r-t, r) with all intersections t-1.

    Generalizes the four-vertex block witness: one shared block per member
    pair and one private block per member, laid out consecutively on [n].
    """
    assert size in (4, 5)
    n = 3 * r - t
    pair_block = t - 1
    private = r - (size - 1) * pair_block
    assert private >= 0, f"r={r} too small for t={t}, size={size}"
    used = size * (size - 1) // 2 * pair_block + size * private
    assert used <= n, f"blocks need {used} elements, only {n} available"

    pos = 1
    pair_elems: dict[tuple[int, int], list[int]] = {}
    for pair in combinations(range(size), 2):
        pair_elems[pair] = list(range(pos, pos + pair_block))
        pos += pair_block
    sets = []
    for i in range(size):
        members = []
        for pair, elems in pair_elems.items():
            if i in pair:
                members.extend(elems)
        members.extend(range(pos, pos + private))
        pos += private
        sets.append(sorted(members))
    family = VertexFamily.from_sets(KneserParams(n, r), sets)
    assert verify_2_packing(family).valid
    return family


def perturb_packing(
    family: VertexFamily, rng: random.Random, rounds: int = 1
) -> VertexFamily:
    """Make `rounds` elements occur three times while staying a 2-packing.

    Each round picks three members and a fresh element x, adds x to all
    three, and removes one pair-exclusive shared element per member pair so
    that every pairwise intersection cardinality is unchanged.
    """
    members = [set(v.elements) for v in family.members]
    n = family.params.n

    for _ in range(rounds):
        for _attempt in range(200):
            occ = {x: sum(x in m for m in members) for x in range(1, n + 1)}
            fresh = [x for x in range(1, n + 1) if occ[x] == 0]
            if not fresh:
                raise AssertionError("no unused element left to inject")
            x = rng.choice(fresh)
            trio = sorted(rng.sample(range(len(members)), 3))
            pairs = [(trio[0], trio[1]), (trio[1], trio[2]), (trio[0], trio[2])]
            owners = [trio[0], trio[1], trio[2]]  # who gives up an element
            removals = []
            for (i, j), owner in zip(pairs, owners):
                exclusive = [
                    e for e in members[i] & members[j]
                    if occ[e] == 2 and e not in (rem for _, rem in removals)
                ]
                if not exclusive:
                    break
                removals.append((owner, rng.choice(exclusive)))
            if len(removals) < 3:
                continue
            for owner, elem in removals:
                members[owner].discard(elem)
                members[owner].add(x)
            break
        else:
            raise AssertionError("could not find a valid perturbation")

    out = VertexFamily.from_sets(family.params, [sorted(m) for m in members])
    assert verify_2_packing(out).valid
    assert max(out.occurrences) >= 3
    return out


def pairwise_intersections(family: VertexFamily) -> dict[tuple[int, int], int]:
    return {
        (i, j): family.members[i].intersection_size(family.members[j])
        for i, j in combinations(range(len(family)), 2)
    }
