"""Subgroups of small symmetric groups up to conjugacy, with verdicts.

Classes are found by cyclic extension: starting from the trivial group,
each class representative H is extended by one element g per right coset
of H, and every new subgroup is registered together with its whole
conjugacy class.  Since every nontrivial subgroup is generated by a
maximal subgroup and one more element, this reaches every class.

:func:`brute_force_subgroups` is the independent oracle: it closes the set
of all subgroups under adjoining single elements, with no conjugacy logic.
"""

from __future__ import annotations

import csv
import functools
import io
import itertools
import json
from dataclasses import dataclass

from .errors import CapExceeded
from .group import PermGroup
from .perm import _identity, _inv, _mul, format_cycles
from .rationality import MIN_DEGREE, decide, reduce_to_sylow
from .twogroup import _prune

DEFAULT_MAX_DEGREE = 6
OUT_OF_SCOPE = "out-of-scope"
CSV_COLUMNS = [
    "class_id",
    "generators",
    "order",
    "orbit_sizes",
    "sylow_order",
    "sylow_fixed_points",
    "verdict",
]


def _check_degree(n: int, max_degree: int) -> None:
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > max_degree:
        raise CapExceeded(f"degree {n} exceeds the classification cap {max_degree}")


def _all_perms(n: int) -> list[tuple]:
    return list(itertools.permutations(range(n)))


def _extend(h: frozenset, h_gens: list[tuple], g: tuple) -> frozenset:
    """Element set of <h, g>, built as a union of right cosets of h."""
    if g in h:
        return h
    elems = set(h)
    gens = h_gens + [g]
    reps = [_identity(len(g))]
    for r in reps:
        for s in gens:
            x = _mul(r, s)
            if x not in elems:
                elems.update(_mul(y, x) for y in h)
                reps.append(x)
    return frozenset(elems)


def _conjugate(x: tuple, elems) -> frozenset:
    x_inv = _inv(x)
    return frozenset(_mul(_mul(x, y), x_inv) for y in elems)


@dataclass(frozen=True)
class SubgroupClass:
    degree: int
    elements: tuple[tuple, ...]  # sorted, canonical (least) member of the class
    class_size: int

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def group(self) -> PermGroup:
        return PermGroup._from_raw(self.degree, _prune(self.degree, self.elements))


def enumerate_subgroup_classes(n: int, max_degree: int = DEFAULT_MAX_DEGREE) -> list[SubgroupClass]:
    """Conjugacy classes of subgroups of Sym(n), sorted by (order, elements)."""
    _check_degree(n, max_degree)
    return list(_classes(n))


@functools.lru_cache(maxsize=None)
def _classes(n: int) -> tuple[SubgroupClass, ...]:
    ambient = _all_perms(n)
    trivial = frozenset([_identity(n)])
    known: dict[frozenset, int] = {}
    classes: list[tuple[frozenset, int]] = []  # (canonical elements, class size)
    pending: list[frozenset] = []

    def register(k: frozenset) -> None:
        conjugates = {_conjugate(x, k) for x in ambient}
        for c in conjugates:
            known[c] = len(classes)
        canonical = min(conjugates, key=sorted)
        classes.append((canonical, len(conjugates)))
        pending.append(k)

    register(trivial)
    while pending:
        h = pending.pop()
        h_gens = _prune(n, sorted(h))
        covered = set(h)
        for g in ambient:
            if g in covered:
                continue
            covered.update(_mul(y, g) for y in h)
            k = _extend(h, h_gens, g)
            if k not in known:
                register(k)

    out = [SubgroupClass(n, tuple(sorted(k)), size) for k, size in classes]
    out.sort(key=lambda c: (c.order, c.elements))
    return tuple(out)


def enumerate_subgroups(n: int, max_degree: int = DEFAULT_MAX_DEGREE) -> list[PermGroup]:
    """One representative per conjugacy class of subgroups of Sym(n)."""
    return [c.group for c in enumerate_subgroup_classes(n, max_degree)]


def brute_force_subgroups(n: int, max_degree: int = DEFAULT_MAX_DEGREE) -> set[frozenset]:
    """Every subgroup of Sym(n) as an element set, by exhaustive closure."""
    _check_degree(n, max_degree)
    ambient = _all_perms(n)

    def close(gens):
        elems = {_identity(n)}
        frontier = list(elems)
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = _mul(s, x)
                if y not in elems:
                    elems.add(y)
                    frontier.append(y)
        return frozenset(elems)

    trivial = close([])
    found = {trivial: []}
    frontier = [trivial]
    while frontier:
        h = frontier.pop()
        gens = found[h]
        for g in ambient:
            if g not in h:
                k = close(gens + [g])
                if k not in found:
                    found[k] = gens + [g]
                    frontier.append(k)
    return set(found)


def normalizer_order(n: int, elements) -> int:
    """Size of the normalizer in Sym(n) of the subgroup with these elements."""
    k = frozenset(elements)
    return sum(_conjugate(x, k) == k for x in _all_perms(n))


@dataclass(frozen=True)
class ClassRow:
    class_id: int
    degree: int
    representative_generators: tuple[str, ...]
    group_order: int
    orbit_sizes: tuple[int, ...]
    sylow_order: int
    sylow_fixed_points: int
    verdict: str

    def check(self) -> None:
        if sum(self.orbit_sizes) != self.degree:
            raise AssertionError(f"class {self.class_id}: orbit sizes do not sum to {self.degree}")
        has_odd = any(s % 2 for s in self.orbit_sizes)
        if has_odd != (self.sylow_fixed_points > 0):
            raise AssertionError(f"class {self.class_id}: odd orbit / Sylow fixed point mismatch")
        if self.verdict != OUT_OF_SCOPE and has_odd != (self.verdict == "Rational"):
            raise AssertionError(f"class {self.class_id}: verdict disagrees with orbit parity")

    def to_record(self) -> dict:
        return {
            "class_id": self.class_id,
            "generators": list(self.representative_generators),
            "order": self.group_order,
            "orbit_sizes": list(self.orbit_sizes),
            "sylow_order": self.sylow_order,
            "sylow_fixed_points": self.sylow_fixed_points,
            "verdict": self.verdict,
        }


def _row(class_id: int, group: PermGroup) -> ClassRow:
    n = group.degree
    sylow, _ = reduce_to_sylow(group)
    if n >= MIN_DEGREE:
        verdict = decide(group).kind.value
    else:
        verdict = OUT_OF_SCOPE
    row = ClassRow(
        class_id=class_id,
        degree=n,
        representative_generators=tuple(format_cycles(g) for g in group.generators) or ("()",),
        group_order=group.order(),
        orbit_sizes=tuple(sorted(group.orbits().sizes)),
        sylow_order=sylow.sylow.order(),
        sylow_fixed_points=len(sylow.sylow.fixed_points()),
        verdict=verdict,
    )
    row.check()
    return row


def tabulate(n: int, max_degree: int = DEFAULT_MAX_DEGREE) -> list[ClassRow]:
    """One verified row per conjugacy class of subgroups of Sym(n)."""
    return [_row(i + 1, g) for i, g in enumerate(enumerate_subgroups(n, max_degree))]


def rows_to_csv(rows: list[ClassRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([
            r.class_id,
            "; ".join(r.representative_generators),
            r.group_order,
            " ".join(map(str, r.orbit_sizes)),
            r.sylow_order,
            r.sylow_fixed_points,
            r.verdict,
        ])
    return buf.getvalue()


def rows_to_json(rows: list[ClassRow]) -> str:
    return json.dumps([r.to_record() for r in rows], indent=2)
