"""Permutations of {1, ..., n} and cycle notation.

Points are 1-indexed at every public surface.  Internally a permutation is a
0-indexed image tuple, which is what the group algorithms operate on.

Composition is fixed as "right factor acts first": ``compose(p, q)`` maps
``i`` to ``p(q(i))``, and ``p * q`` means the same thing.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import CycleParseError

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(\S))")


def _mul(a: tuple, b: tuple) -> tuple:
    """0-indexed ``a o b`` (apply ``b`` first)."""
    return tuple([a[x] for x in b])


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _identity(n: int) -> tuple:
    return tuple(range(n))


class Permutation:
    """A bijection of {1, ..., n}, stored as an image table."""

    __slots__ = ("_a",)

    def __init__(self, images: Sequence[int]):
        a = tuple(int(x) - 1 for x in images)
        if not a:
            raise ValueError("degree must be at least 1")
        if sorted(a) != list(range(len(a))):
            raise ValueError(f"not a permutation of 1..{len(a)}: {list(images)}")
        self._a = a

    @classmethod
    def _raw(cls, a: tuple) -> "Permutation":
        p = cls.__new__(cls)
        p._a = a
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1:
            raise ValueError("degree must be at least 1")
        return cls._raw(_identity(n))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """Product of cycles, leftmost cycle applied last."""
        a = _identity(n)
        for cyc in cycles:
            a = _mul(a, _cycle_array(list(cyc), n))
        return cls._raw(a)

    @property
    def degree(self) -> int:
        return len(self._a)

    @property
    def images(self) -> tuple:
        return tuple(x + 1 for x in self._a)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self._a):
            raise ValueError(f"point {point} out of range 1..{len(self._a)}")
        return self._a[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = _identity(self.degree)
        a = base._a
        while k:
            if k & 1:
                result = _mul(result, a)
            a = _mul(a, a)
            k >>= 1
        return Permutation._raw(result)

    def inverse(self) -> "Permutation":
        return Permutation._raw(_inv(self._a))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._a))

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles()), 1)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial disjoint cycles, each starting at its least point."""
        seen = set()
        out = []
        for i in range(len(self._a)):
            if i in seen or self._a[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self._a[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self._a[j]
            out.append(tuple(x + 1 for x in cyc))
        return out

    def support(self) -> list[int]:
        return [i + 1 for i, x in enumerate(self._a) if i != x]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._a == other._a

    def __lt__(self, other: "Permutation") -> bool:
        return self._a < other._a

    def __hash__(self):
        return hash(self._a)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, n={self.degree})"

    def __str__(self):
        return format_cycles(self)


def _cycle_array(cyc: list[int], n: int) -> tuple:
    a = list(range(n))
    for k, x in enumerate(cyc):
        a[x - 1] = cyc[(k + 1) % len(cyc)] - 1
    return tuple(a)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation ``i -> p(q(i))``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return Permutation._raw(_mul(p._a, q._a))


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1 2)(3 4 5)"`` into a permutation.

    Juxtaposed cycles are multiplied left to right, so the rightmost cycle
    acts first.  ``"()"`` and the empty string both denote the identity.
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    cycles = []
    current = None
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        pos = m.end()
        opening, closing, number, junk = m.groups()
        if junk is not None:
            raise CycleParseError(f"unexpected token {junk!r} in {text!r}", junk)
        if opening:
            if current is not None:
                raise CycleParseError(f"nested '(' in {text!r}", "(")
            current = []
        elif closing:
            if current is None:
                raise CycleParseError(f"unmatched ')' in {text!r}", ")")
            cycles.append(current)
            current = None
        else:
            if current is None:
                raise CycleParseError(f"point {number} outside parentheses in {text!r}", number)
            x = int(number)
            if not 1 <= x <= n:
                raise CycleParseError(f"point {x} out of range 1..{n}", number)
            if x in current:
                raise CycleParseError(f"point {x} repeated within one cycle", number)
            current.append(x)
    if current is not None:
        raise CycleParseError(f"unclosed '(' in {text!r}", "(")
    return Permutation.from_cycles(cycles, n)
