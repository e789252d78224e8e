"""Named permutation representations: regular and coset actions, direct and wreath
products, SL2(p) on nonzero vectors, the order-27 exponent-3 group on 9 points,
and the index-domination check between two representations of one group."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .groups import DEFAULT_CAP, EnumerationCapError, PermGroup
from .perms import Perm


class InconsistentDualRep(ValueError):
    """The two generator lists do not present the same abstract group."""


def cyclic_natural(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """Cyclic group of order n acting on n points (regular for n >= 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return PermGroup(1, [Perm.identity(1)], cap)
    return PermGroup(n, [Perm([(i + 1) % n for i in range(n)])], cap)


def symmetric_natural(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """Symmetric group on n points in its natural action."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return PermGroup(1, [Perm.identity(1)], cap)
    transposition = Perm([1, 0] + list(range(2, n)))
    if n == 2:
        return PermGroup(2, [transposition], cap)
    full_cycle = Perm([(i + 1) % n for i in range(n)])
    return PermGroup(n, [transposition, full_cycle], cap)


def alternating_natural(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """Alternating group on n points in its natural action."""
    if n < 3:
        # A1 and A2 are trivial.
        if n < 1:
            raise ValueError("n must be positive")
        return PermGroup(n, [Perm.identity(n)], cap)
    three_cycle = Perm([1, 2, 0] + list(range(3, n)))
    if n == 3:
        return PermGroup(3, [three_cycle], cap)
    if n % 2 == 1:
        big = Perm([(i + 1) % n for i in range(n)])
    else:
        big = Perm([0] + [1 + (i + 1) % (n - 1) for i in range(n - 1)])
    return PermGroup(n, [three_cycle, big], cap)


def dihedral_natural(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """Dihedral group of order 2n acting on the vertices of an n-gon."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rotation = Perm([(i + 1) % n for i in range(n)])
    reflection = Perm([(n - i) % n for i in range(n)])
    return PermGroup(n, [rotation, reflection], cap)


def coset_action(
    group: PermGroup, subgroup_gens: Sequence[Perm], cap: Optional[int] = None
) -> tuple[PermGroup, bool]:
    """Action of the group on the left cosets of the subgroup the given elements generate.

    Cosets are labelled by first occurrence in the group's element enumeration,
    so ``coset_action(G, [identity])`` reproduces ``regular_rep(G)`` exactly.
    Returns the degree-[G:H] group and whether the action is faithful.
    """
    cap = group.cap if cap is None else cap
    elements = group.elements()
    element_set = set(elements)
    subgroup_gens = list(subgroup_gens)
    for s in subgroup_gens:
        if s not in element_set:
            raise ValueError(f"subgroup generator {s} is not in the group")
    if not subgroup_gens:
        subgroup_gens = [group.identity()]
    subgroup = PermGroup(group.degree, subgroup_gens, cap).elements()

    def coset_key(x: Perm) -> frozenset[Perm]:
        return frozenset(x * h for h in subgroup)

    labels: dict[frozenset[Perm], int] = {}
    reps: list[Perm] = []
    for x in elements:
        key = coset_key(x)
        if key not in labels:
            labels[key] = len(reps)
            reps.append(x)
    index = len(reps)

    new_gens = []
    for g in group.generators:
        images = [labels[coset_key(g * rep)] for rep in reps]
        new_gens.append(Perm(images))
    action = PermGroup(index, new_gens, cap)
    faithful = action.order() == len(elements)
    return action, faithful


def regular_rep(group: PermGroup, cap: Optional[int] = None) -> PermGroup:
    """Left-translation action of the group on its own enumerated element list."""
    action, faithful = coset_action(group, [group.identity()], cap)
    assert faithful
    return action


def direct_product(h: PermGroup, z: PermGroup, cap: Optional[int] = None) -> PermGroup:
    """Product action on the (i, j) grid, flattened as i * deg(z) + j.

    Generators are h's (acting on i) followed by z's (acting on j).
    """
    cap = max(h.cap, z.cap) if cap is None else cap
    n, m = h.degree, z.degree
    gens = []
    for g in h.generators:
        gens.append(Perm(g(i) * m + j for i in range(n) for j in range(m)))
    for g in z.generators:
        gens.append(Perm(i * m + g(j) for i in range(n) for j in range(m)))
    return PermGroup(n * m, gens, cap)


def wreath(a: PermGroup, h: PermGroup, cap: Optional[int] = None) -> PermGroup:
    """Imprimitive wreath action on deg(a) * deg(h) points in deg(h) blocks.

    One copy of each a-generator acts in block 0; h-generators permute the
    blocks rigidly.  The result's order is verified to equal |a|^deg(h) * |h|
    by enumeration.
    """
    cap = max(a.cap, h.cap) if cap is None else cap
    block, nblocks = a.degree, h.degree
    degree = block * nblocks
    gens = []
    for g in a.generators:
        images = list(range(degree))
        for t in range(block):
            images[t] = g(t)
        gens.append(Perm(images))
    for g in h.generators:
        gens.append(Perm(g(b) * block + t for b in range(nblocks) for t in range(block)))
    result = PermGroup(degree, gens, cap)
    expected = a.order() ** nblocks * h.order()
    if expected > cap:
        raise EnumerationCapError(f"wreath product order {expected} exceeds cap {cap}")
    got = result.order()
    if got != expected:
        raise AssertionError(f"wreath order check failed: {got} != {expected}")
    return result


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def sl2_natural(p: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """SL2 over the p-element field acting on the p^2 - 1 nonzero column vectors.

    Generated by the two standard unipotent matrices; vectors are ordered
    lexicographically so the output is reproducible.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    vectors = [(x, y) for x in range(p) for y in range(p) if (x, y) != (0, 0)]
    position = {v: i for i, v in enumerate(vectors)}

    def matrix_perm(m) -> Perm:
        (a, b), (c, d) = m
        return Perm(
            position[((a * x + b * y) % p, (c * x + d * y) % p)] for x, y in vectors
        )

    upper = matrix_perm(((1, 1), (0, 1)))
    lower = matrix_perm(((1, 0), (1, 1)))
    return PermGroup(p * p - 1, [upper, lower], cap)


def heisenberg_mod3(cap: int = DEFAULT_CAP) -> PermGroup:
    """The nonabelian group of order 27 and exponent 3, acting on 9 points.

    Built as the group of upper unitriangular 3x3 matrices over the field with
    3 elements -- triples (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b',
    c+c'+ab') -- then taken in its coset action on the non-central subgroup
    generated by (1, 0, 0).  The construction is verified before returning.
    """
    triples = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    position = {t: i for i, t in enumerate(triples)}

    def left_translation(t) -> Perm:
        a, b, c = t
        return Perm(
            position[((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3)]
            for (a2, b2, c2) in triples
        )

    x = left_translation((1, 0, 0))
    y = left_translation((0, 1, 0))
    regular = PermGroup(27, [x, y], cap)
    action, faithful = coset_action(regular, [x])

    if not (
        action.degree == 9
        and faithful
        and action.order() == 27
        and action.is_transitive()
        and all(e.order() == 3 for e in action.elements()[1:])
        and any(g * h != h * g for g in action.elements() for h in action.elements())
    ):
        raise AssertionError("order-27 exponent-3 construction failed verification")
    return action


@dataclass(frozen=True)
class DualRep:
    """One abstract group realized in two degrees via aligned generator images."""

    gens1: tuple[Perm, ...]
    gens2: tuple[Perm, ...]

    def __post_init__(self):
        if len(self.gens1) != len(self.gens2) or not self.gens1:
            raise InconsistentDualRep("generator lists must be nonempty and of equal length")
        for gens in (self.gens1, self.gens2):
            if len({g.degree for g in gens}) != 1:
                raise InconsistentDualRep("generators within one representation must share a degree")


@dataclass(frozen=True)
class DominationWitness:
    word: tuple[int, ...]  # generator indices, applied left to right
    ind1: int
    ind2: int
    a1: Fraction
    a2: Fraction


@dataclass(frozen=True)
class DominationReport:
    holds: bool
    witness: Optional[DominationWitness]


def dual_regular_pair(group: PermGroup, cap: Optional[int] = None) -> DualRep:
    """Pair a group's regular representation (first) with the group itself (second)."""
    reg = regular_rep(group, cap)
    return DualRep(tuple(reg.generators), tuple(group.generators))


def check_index_domination(dual: DualRep, cap: int = DEFAULT_CAP) -> DominationReport:
    """Check a2 * ind2(s) >= a1 * ind1(s) for every element s, in exact rationals.

    A parallel BFS enumerates each abstract element once as a pair of images;
    the pairing must be a bijection between the two element sets (otherwise the
    generator lists do not present one group and InconsistentDualRep is raised).
    On failure the first violating element in BFS order is reported as a word
    in the generators.
    """
    id1 = Perm.identity(dual.gens1[0].degree)
    id2 = Perm.identity(dual.gens2[0].degree)
    start = (id1, id2)
    words: dict[tuple[Perm, Perm], tuple[int, ...]] = {start: ()}
    order: list[tuple[Perm, Perm]] = [start]
    forward: dict[Perm, Perm] = {id1: id2}
    backward: dict[Perm, Perm] = {id2: id1}
    queue = deque([start])
    while queue:
        p1, p2 = queue.popleft()
        base_word = words[(p1, p2)]
        for j, (g1, g2) in enumerate(zip(dual.gens1, dual.gens2)):
            q = (p1 * g1, p2 * g2)
            if q in words:
                continue
            q1, q2 = q
            if forward.get(q1, q2) != q2 or backward.get(q2, q1) != q1:
                raise InconsistentDualRep(
                    "a word acts as the identity in one representation but not the other"
                )
            forward[q1] = q2
            backward[q2] = q1
            words[q] = base_word + (j,)
            order.append(q)
            if len(order) > cap:
                raise EnumerationCapError(f"group order exceeds cap {cap}")
            queue.append(q)

    def a_value(perms) -> Fraction:
        min_ind = min((p.ind() for p in perms if not p.is_identity), default=0)
        return Fraction(0) if min_ind == 0 else Fraction(1, min_ind)

    a1 = a_value(p for p, _ in order)
    a2 = a_value(p for _, p in order)
    for p1, p2 in order:
        i1, i2 = p1.ind(), p2.ind()
        if a2 * i2 < a1 * i1:
            return DominationReport(
                holds=False,
                witness=DominationWitness(words[(p1, p2)], i1, i2, a1, a2),
            )
    return DominationReport(holds=True, witness=None)
