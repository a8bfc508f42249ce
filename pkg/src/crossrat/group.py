"""Permutation groups given by generators.

Order and membership go through a deterministic Schreier-Sims stabilizer
chain.  Anything that needs the full element list (conjugacy tests, the
desk-scale Sylow and Frattini routines) is guarded by an element cap so it
fails loudly instead of grinding.
"""

from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, PreconditionError
from .perm import Permutation, _identity, _inv, _mul, format_cycles, parse_cycles

DEFAULT_ELEMENT_CAP = 10**6
CAP_ENV_VAR = "CROSSRAT_ELEMENT_CAP"


def element_cap() -> int:
    """Current enumeration cap; the environment variable overrides the default."""
    value = os.environ.get(CAP_ENV_VAR)
    if value:
        return int(value)
    return DEFAULT_ELEMENT_CAP


class _Level:
    __slots__ = ("base", "gens", "trans")

    def __init__(self, base: int, n: int):
        self.base = base
        self.gens: list[tuple] = []
        self.trans: dict[int, tuple] = {base: _identity(n)}


class StabChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    ``base_prefix`` (0-indexed points) is placed at the front of the base, so
    the stabilizer of those points is read off the deeper levels.  Level ``k``
    holds the strong generators fixing the first ``k`` base points and a
    transversal ``point -> u`` with ``u[base[k]] == point``.
    """

    def __init__(self, n: int, gens: Iterable[tuple], base_prefix: Sequence[int] = ()):
        self.n = n
        self._id = _identity(n)
        self.levels: list[_Level] = [_Level(b, n) for b in base_prefix]
        for g in gens:
            self._insert(g, 0)

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self.levels]

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for k in range(start, len(self.levels)):
            lv = self.levels[k]
            t = lv.trans.get(g[lv.base])
            if t is None:
                return g, k
            g = _mul(_inv(t), g)
        return g, len(self.levels)

    def _insert(self, g: tuple, start: int) -> None:
        residue, k = self.sift(g, start)
        if residue == self._id:
            return
        if k == len(self.levels):
            moved = next(i for i, x in enumerate(residue) if i != x)
            self.levels.append(_Level(moved, self.n))
        # the residue fixes the base points of levels start..k-1, so it is a
        # strong generator for each of them
        for level in range(k, start - 1, -1):
            self._add(level, residue)

    def _add(self, k: int, g: tuple) -> None:
        lv = self.levels[k]
        lv.gens.append(g)
        stack = [_mul(g, t) for t in lv.trans.values()]
        while stack:
            h = stack.pop()
            p = h[lv.base]
            t = lv.trans.get(p)
            if t is None:
                lv.trans[p] = h
                stack.extend(_mul(s, h) for s in lv.gens)
            else:
                y = _mul(_inv(t), h)
                if y != self._id:
                    self._insert(y, k + 1)

    def order(self) -> int:
        return math.prod(len(lv.trans) for lv in self.levels)

    def contains(self, g: tuple) -> bool:
        return self.sift(g)[0] == self._id

    def strong_generators(self, from_level: int = 0) -> list[tuple]:
        out = {}
        for lv in self.levels[from_level:]:
            out.update(dict.fromkeys(lv.gens))
        return list(out)

    def iter_elements(self) -> Iterator[tuple]:
        elems = [self._id]
        for lv in reversed(self.levels):
            elems = [_mul(t, e) for t in lv.trans.values() for e in elems]
        return iter(elems)


@dataclass(frozen=True)
class Orbit:
    representative: int
    members: tuple[int, ...]
    stabilizer_generators: tuple[Permutation, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OrbitDecomposition:
    degree: int
    orbits: tuple[Orbit, ...]

    @property
    def sizes(self) -> list[int]:
        return [o.size for o in self.orbits]

    def orbit_of(self, point: int) -> Orbit:
        for o in self.orbits:
            if point in o.members:
                return o
        raise ValueError(f"point {point} out of range 1..{self.degree}")


class PermGroup:
    """Subgroup of the symmetric group on {1, ..., degree}.

    Immutable apart from the lazily built stabilizer chain, which is guarded
    by a lock so instances can be shared between threads.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Permutation):
                raise TypeError(f"generator {g!r} is not a Permutation")
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = gens
        self._lock = threading.Lock()
        self._chain: StabChain | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_cycles(cls, degree: int, cycle_strings: Iterable[str]) -> "PermGroup":
        return cls(degree, [parse_cycles(s, degree) for s in cycle_strings])

    @classmethod
    def _from_raw(cls, degree: int, gens: Iterable[tuple]) -> "PermGroup":
        idn = _identity(degree)
        return cls(degree, [Permutation._raw(g) for g in gens if g != idn])

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        if n == 1:
            return cls(1)
        gens = [Permutation.from_cycles([(1, 2)], n)]
        if n > 2:
            gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
        return cls(n, gens)

    @classmethod
    def alternating(cls, n: int) -> "PermGroup":
        gens = [Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)]
        return cls(n, gens)

    @classmethod
    def from_json(cls, data: dict) -> "PermGroup":
        if "degree" not in data or "generators" not in data:
            raise PreconditionError("group JSON needs 'degree' and 'generators'")
        return cls.from_cycles(int(data["degree"]), data["generators"])

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [format_cycles(g) for g in self.generators]}

    def __repr__(self):
        gens = ", ".join(format_cycles(g) for g in self.generators)
        return f"PermGroup({self.degree}, <{gens}>)"

    # -- chain-backed queries ----------------------------------------------

    def _raw_gens(self) -> list[tuple]:
        return [g._a for g in self.generators]

    def chain(self, base_prefix: Sequence[int] = ()) -> StabChain:
        """Stabilizer chain; the default one (no prefix) is cached."""
        if base_prefix:
            return StabChain(self.degree, self._raw_gens(), base_prefix)
        with self._lock:
            if self._chain is None:
                self._chain = StabChain(self.degree, self._raw_gens())
            return self._chain

    def order(self) -> int:
        return self.chain().order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} != {self.degree}")
        return self.chain().contains(p._a)

    __contains__ = contains

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def same_group(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def elements(self, cap: int | None = None) -> list[Permutation]:
        """Every element once, sorted lexicographically by image table."""
        return [Permutation._raw(a) for a in self.raw_elements(cap)]

    def raw_elements(self, cap: int | None = None) -> list[tuple]:
        cap = element_cap() if cap is None else cap
        size = self.order()
        if size > cap:
            raise CapExceeded(f"group of order {size} exceeds the enumeration cap {cap}")
        return sorted(self.chain().iter_elements())

    # -- orbits and stabilizers --------------------------------------------

    def _raw_orbits(self) -> list[list[int]]:
        gens = self._raw_gens()
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            seen[start] = True
            orbit = [start]
            for x in orbit:
                for g in gens:
                    y = g[x]
                    if not seen[y]:
                        seen[y] = True
                        orbit.append(y)
            out.append(sorted(orbit))
        return out

    def orbit(self, point: int) -> list[int]:
        self._check_point(point)
        for orb in self._raw_orbits():
            if point - 1 in orb:
                return [x + 1 for x in orb]
        raise AssertionError("unreachable")

    def orbits(self) -> OrbitDecomposition:
        decomposition = []
        for orb in self._raw_orbits():
            rep = orb[0] + 1
            stab = self.stabilizer(rep)
            decomposition.append(Orbit(rep, tuple(x + 1 for x in orb), stab.generators))
        return OrbitDecomposition(self.degree, tuple(decomposition))

    def stabilizer(self, point: int) -> "PermGroup":
        self._check_point(point)
        chain = self.chain(base_prefix=[point - 1])
        return PermGroup._from_raw(self.degree, chain.strong_generators(1))

    def fixed_points(self) -> list[int]:
        return [orb[0] + 1 for orb in self._raw_orbits() if len(orb) == 1]

    def _check_point(self, point: int) -> None:
        if not 1 <= point <= self.degree:
            raise PreconditionError(f"point {point} out of range 1..{self.degree}")

    # -- restriction to invariant point sets ---------------------------------

    def restriction(self, points: Sequence[int]) -> "PermGroup":
        """Action on an invariant set of (1-indexed) points, relabelled 1..m."""
        idx = _relabel(points, self.degree)
        gens = []
        for g in self._raw_gens():
            try:
                gens.append(tuple(idx[g[p]] for p in idx))
            except KeyError:
                raise PreconditionError("point set is not invariant under the group") from None
        return PermGroup._from_raw(len(idx), gens)

    def preimage_of_restriction(self, points: Sequence[int], sub: "PermGroup") -> "PermGroup":
        """Elements whose restriction to ``points`` lies in ``sub``.

        ``sub`` acts on the relabelled points 1..m as in :meth:`restriction`.
        """
        idx = _relabel(points, self.degree)
        pts = list(idx)
        chain = self.chain(base_prefix=pts)
        gens = chain.strong_generators(len(pts))  # kernel of the restriction
        for q in sub._raw_gens():
            target = {pts[i]: pts[q[i]] for i in range(len(pts))}
            lift = chain._id
            for k in range(len(pts)):
                lv = chain.levels[k]
                t = lv.trans.get(target[lv.base])
                if t is None:
                    raise PreconditionError("subgroup is not inside the restricted group")
                t_inv = _inv(t)
                target = {x: t_inv[y] for x, y in target.items()}
                lift = _mul(lift, t)
            if any(x != y for x, y in target.items()):
                raise PreconditionError("subgroup is not inside the restricted group")
            gens.append(lift)
        return PermGroup._from_raw(self.degree, gens)


def _relabel(points: Sequence[int], degree: int) -> dict[int, int]:
    pts = sorted(set(points))
    if not pts or pts[0] < 1 or pts[-1] > degree:
        raise PreconditionError(f"points must be a nonempty subset of 1..{degree}")
    return {p - 1: i for i, p in enumerate(pts)}


# -- module-level operations ------------------------------------------------


def orbits(g: PermGroup) -> OrbitDecomposition:
    return g.orbits()


def stabilizer(g: PermGroup, point: int) -> PermGroup:
    return g.stabilizer(point)


def order(g: PermGroup) -> int:
    return g.order()


def contains(g: PermGroup, p: Permutation) -> bool:
    return g.contains(p)


def elements(g: PermGroup, cap: int | None = None) -> list[Permutation]:
    return g.elements(cap)


def is_conjugate_subgroup(
    ambient: PermGroup, h1: PermGroup, h2: PermGroup, cap: int | None = None
) -> bool:
    """Whether ``g h1 g^-1 == h2`` for some ``g`` in ``ambient`` (brute force)."""
    for h in (h1, h2):
        if not h.is_subgroup_of(ambient):
            raise PreconditionError(f"{h} is not a subgroup of the ambient group")
    if h1.order() != h2.order():
        return False
    chain2 = h2.chain()
    gens = h1._raw_gens()
    for g in ambient.raw_elements(cap):
        g_inv = _inv(g)
        if all(chain2.contains(_mul(_mul(g, h), g_inv)) for h in gens):
            return True
    return False


def dump_group(g: PermGroup) -> str:
    return json.dumps(g.to_json())
