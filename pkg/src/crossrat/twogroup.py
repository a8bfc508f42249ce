"""2-Sylow subgroups, Frattini subgroups of 2-groups, index-2 overgroups.

``sylow_2`` works structurally where it can: an intransitive group is split
along its orbits (Sylow of the image on one orbit, pull back, repeat on the
rest), and a transitive symmetric or alternating group gets the explicit
iterated-wreath Sylow subgroup.  Everything else falls back to growing a
2-subgroup inside its normalizer over the full element list, which is
subject to the element cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PreconditionError
from .group import PermGroup, StabChain
from .perm import Permutation, _identity, _inv, _mul, format_cycles


def two_part(n: int) -> int:
    """Largest power of 2 dividing ``n``."""
    return n & -n


def is_2group(g: PermGroup) -> bool:
    n = g.order()
    return n == two_part(n)


def fixed_points(g: PermGroup) -> list[int]:
    """Points fixed by every generator, in ascending order."""
    return g.fixed_points()


@dataclass(frozen=True)
class SylowWitness:
    sylow: PermGroup
    index: int
    parent_order: int

    def validate(self, parent: PermGroup) -> bool:
        order = self.sylow.order()
        return (
            parent.order() == self.parent_order
            and order == two_part(self.parent_order)
            and self.index * order == self.parent_order
            and self.index % 2 == 1
            and self.sylow.is_subgroup_of(parent)
        )

    def to_json(self) -> dict:
        return {"sylow": self.sylow.to_json(), "order": self.sylow.order(), "index": self.index}


@dataclass(frozen=True)
class Index2Witness:
    """An index-2 subgroup ``H`` of a 2-group ``P`` containing a given stabilizer."""

    degree: int
    stabilizer_gens: tuple[Permutation, ...]
    subgroup_gens: tuple[Permutation, ...]
    parent_order: int
    point: int | None = None

    @property
    def subgroup(self) -> PermGroup:
        return PermGroup(self.degree, self.subgroup_gens)

    def validate(self, p: PermGroup) -> bool:
        """Recheck index, containment and normality by membership tests only."""
        h = self.subgroup
        if p.order() != self.parent_order or p.order() != 2 * h.order():
            return False
        if not h.is_subgroup_of(p):
            return False
        if not all(h.contains(s) for s in self.stabilizer_gens):
            return False
        return all(
            h.contains(a * x * a.inverse()) for a in p.generators for x in self.subgroup_gens
        )

    def to_json(self) -> dict:
        out = {
            "stabilizer": [format_cycles(g) for g in self.stabilizer_gens],
            "H": [format_cycles(g) for g in self.subgroup_gens],
            "index": 2,
            "normal": True,
        }
        if self.point is not None:
            out = {"point": self.point, **out}
        return out


# -- helpers on raw (0-indexed) tuples -------------------------------------


def _prune(n: int, gens) -> list[tuple]:
    """Drop generators already generated by the earlier ones."""
    chain = StabChain(n, [])
    kept = []
    for g in gens:
        if not chain.contains(g):
            kept.append(g)
            chain._insert(g, 0)
    return kept


def _closure(n: int, gens, base: set | None = None) -> set:
    """Element set of the group generated by ``gens`` (and ``base``)."""
    elems = set(base) if base else {_identity(n)}
    gens = list(gens)
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = _mul(g, x)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return elems


def _symmetric_sylow_gens(points: list[int], n: int) -> list[tuple]:
    """Iterated wreath product generators on binary blocks of ``points``."""
    gens = []
    start = 0
    remaining = len(points)
    for k in reversed(range(remaining.bit_length())):
        size = 1 << k
        if not remaining & size:
            continue
        block = points[start:start + size]
        for j in range(k):
            half = 1 << j
            for off in range(0, size, 2 * half):
                a = list(range(n))
                for i in range(half):
                    x, y = block[off + i], block[off + half + i]
                    a[x], a[y] = y, x
                gens.append(tuple(a))
        start += size
    return gens


def _even_part_gens(n: int, gens: list[tuple]) -> list[tuple]:
    """Schreier generators of the even permutations in ``<gens>``."""

    def odd(a):
        return Permutation._raw(a).sign() < 0

    t = next((g for g in gens if odd(g)), None)
    if t is None:
        return list(gens)
    t_inv = _inv(t)
    out = []
    for s in gens:
        if odd(s):
            out.append(_mul(s, t_inv))
            out.append(_mul(t, s))
        else:
            out.append(s)
            out.append(_mul(_mul(t, s), t_inv))
    return [g for g in out if g != _identity(n)]


def _sylow_by_normalizer(g: PermGroup, cap: int | None) -> PermGroup:
    n = g.degree
    target = two_part(g.order())
    elements = g.raw_elements(cap)
    p_set = {_identity(n)}
    p_gens: list[tuple] = []
    while len(p_set) < target:
        for x in elements:
            if x in p_set or _mul(x, x) not in p_set:
                continue
            x_inv = _inv(x)
            if all(_mul(_mul(x, y), x_inv) in p_set for y in p_gens):
                p_gens.append(x)
                p_set |= {_mul(x, y) for y in p_set}
                break
        else:  # pragma: no cover - Sylow's theorem guarantees a candidate
            raise AssertionError("no 2-element normalizes a non-Sylow 2-subgroup")
    return PermGroup._from_raw(n, p_gens)


def _sylow(g: PermGroup, cap: int | None) -> PermGroup:
    n = g.degree
    size = g.order()
    if size == two_part(size):
        return g
    moved = [orb for orb in g._raw_orbits() if len(orb) > 1]
    if len(moved) > 1:
        first = [x + 1 for x in moved[0]]
        rest = sorted(x + 1 for orb in moved[1:] for x in orb)
        h = g.preimage_of_restriction(first, _sylow(g.restriction(first), cap))
        return h.preimage_of_restriction(rest, _sylow(h.restriction(rest), cap))
    support = moved[0]
    if len(support) < n:
        pts = [x + 1 for x in support]
        return g.preimage_of_restriction(pts, _sylow(g.restriction(pts), cap))
    if size == math.factorial(n):
        return PermGroup._from_raw(n, _symmetric_sylow_gens(list(range(n)), n))
    if size == math.factorial(n) // 2:
        gens = _symmetric_sylow_gens(list(range(n)), n)
        return PermGroup._from_raw(n, _even_part_gens(n, gens))
    return _sylow_by_normalizer(g, cap)


def sylow_2(g: PermGroup, cap: int | None = None) -> SylowWitness:
    """A 2-Sylow subgroup of ``g`` together with its (odd) index."""
    p = _sylow(g, cap)
    p = PermGroup._from_raw(g.degree, _prune(g.degree, p._raw_gens()))
    size = g.order()
    if p.order() != two_part(size):  # pragma: no cover - internal consistency
        raise AssertionError(f"Sylow order {p.order()} != 2-part of {size}")
    return SylowWitness(p, size // p.order(), size)


def frattini_2group(p: PermGroup, cap: int | None = None) -> PermGroup:
    """Frattini subgroup of a 2-group: generated by squares and commutators.

    Squares are taken over every element; for a 2-group they already
    generate everything, commutators of the generators are added anyway.
    """
    if not is_2group(p):
        raise PreconditionError(f"group of order {p.order()} is not a 2-group")
    n = p.degree
    gens = set()
    for x in p.raw_elements(cap):
        gens.add(_mul(x, x))
    raw = p._raw_gens()
    for a in raw:
        for b in raw:
            gens.add(_mul(_mul(_inv(a), _inv(b)), _mul(a, b)))
    gens.discard(_identity(n))
    return PermGroup._from_raw(n, _prune(n, sorted(gens)))


def _quotient_vectors(p: PermGroup, phi: set, cap: int | None):
    """Map each element of ``p`` to its coordinates in ``p / phi`` over GF(2)."""
    n = p.degree
    basis = []
    span = set(phi)
    for g in sorted(p._raw_gens()):
        if g not in span:
            basis.append(g)
            span |= {_mul(g, y) for y in span}
    vec = {}
    for mask in range(1 << len(basis)):
        rep = _identity(n)
        for i, b in enumerate(basis):
            if mask >> i & 1:
                rep = _mul(rep, b)
        for y in phi:
            vec[_mul(rep, y)] = mask
    if len(vec) != p.order():  # pragma: no cover
        raise AssertionError("quotient coordinates do not cover the group")
    return basis, vec


def index2_over(p: PermGroup, s: PermGroup, cap: int | None = None) -> Index2Witness:
    """A normal index-2 subgroup ``H`` of the 2-group ``p`` with ``s <= H``.

    Index-2 subgroups are the hyperplanes of ``p / Phi(p)``; among those
    containing the image of ``s``, the one with the lexicographically least
    sorted element list is returned.
    """
    if p.degree != s.degree:
        raise PreconditionError("degree mismatch")
    if p.is_trivial() or not is_2group(p):
        raise PreconditionError("p must be a nontrivial 2-group")
    if not s.is_subgroup_of(p):
        raise PreconditionError("s is not a subgroup of p")
    if s.order() >= p.order():
        raise PreconditionError("s is not a proper subgroup of p, so no index-2 overgroup exists")
    n = p.degree
    phi = set(frattini_2group(p, cap).raw_elements(cap))
    basis, vec = _quotient_vectors(p, phi, cap)
    s_vectors = [vec[g] for g in s._raw_gens()]
    elements = sorted(vec)
    best = None
    for f in range(1, 1 << len(basis)):
        if any((f & w).bit_count() % 2 for w in s_vectors):
            continue
        h = [x for x in elements if (f & vec[x]).bit_count() % 2 == 0]
        if best is None or h < best:
            best = h
    # s is proper, so its image spans a proper subspace and some hyperplane exists
    gens = _prune(n, best)
    return Index2Witness(
        degree=n,
        stabilizer_gens=s.generators,
        subgroup_gens=tuple(Permutation._raw(g) for g in gens),
        parent_order=p.order(),
    )
