"""Exact cross-ratio arithmetic on the projective line over Q.

Points are homogeneous integer pairs ``(num : den)`` in canonical form, so
infinity is ``(1 : 0)`` and equality is plain tuple equality.  Differences
of points are 2x2 determinants of their homogeneous coordinates, which is
why nothing below special-cases infinity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import PreconditionError
from .perm import Permutation


@dataclass(frozen=True, order=True)
class ProjPoint:
    num: int
    den: int

    def __post_init__(self):
        num, den = int(self.num), int(self.den)
        if num == 0 and den == 0:
            raise ValueError("(0 : 0) is not a point of the projective line")
        g = gcd(num, den)
        num, den = num // g, den // g
        if den < 0 or (den == 0 and num < 0):
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value) -> "ProjPoint":
        """From an int, a Fraction, or a ``"num/den"`` / ``"inf"`` string."""
        if isinstance(value, ProjPoint):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        q = Fraction(value)
        return cls(q.numerator, q.denominator)

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        text = text.strip()
        if text.lower() in ("inf", "infinity", "oo"):
            return INF
        try:
            q = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a projective point: {text!r}") from None
        return cls(q.numerator, q.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinity has no affine value")
        return Fraction(self.num, self.den)

    def __str__(self):
        if self.is_infinite:
            return "inf"
        return f"{self.num}/{self.den}"


INF = ProjPoint(1, 0)


def _det(p: ProjPoint, q: ProjPoint) -> int:
    """Homogeneous form of ``p - q`` (up to the scale ``p.den * q.den``)."""
    return p.num * q.den - q.num * p.den


class Mobius:
    """Fractional linear map ``x -> (a x + b) / (c x + d)``, an element of PGL2(Q)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = (Fraction(v) for v in (a, b, c, d))
        if a * d - b * c == 0:
            raise ValueError("matrix is singular")
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def scaled(self, lam) -> "Mobius":
        lam = Fraction(lam)
        return Mobius(*(lam * v for v in self.entries()))

    def __matmul__(self, other: "Mobius") -> "Mobius":
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Mobius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return mobius_apply(self, p)

    def __eq__(self, other):
        if not isinstance(other, Mobius):
            return NotImplemented
        # equal in PGL2 iff the entry vectors are proportional
        u, v = self.entries(), other.entries()
        return all(u[i] * v[j] == u[j] * v[i] for i in range(4) for j in range(i + 1, 4))

    def __hash__(self):
        pivot = next(x for x in self.entries() if x != 0)
        return hash(tuple(x / pivot for x in self.entries()))

    def __repr__(self):
        return "Mobius({}, {}, {}, {})".format(*map(str, self.entries()))


def mobius_apply(m: Mobius, p: ProjPoint) -> ProjPoint:
    num = m.a * p.num + m.b * p.den
    den = m.c * p.num + m.d * p.den
    scale = lcm(num.denominator, den.denominator)
    return ProjPoint(int(num * scale), int(den * scale))


def cross_ratio(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, p4: ProjPoint) -> ProjPoint:
    """``[p1, p2, p3, p4] = (p4 - p1)(p3 - p2) / ((p4 - p2)(p3 - p1))``."""
    pts = (p1, p2, p3, p4)
    if len(set(pts)) < 4:
        raise PreconditionError(f"points are not pairwise distinct: {[str(p) for p in pts]}")
    return ProjPoint(_det(p4, p1) * _det(p3, p2), _det(p4, p2) * _det(p3, p1))


@dataclass(frozen=True)
class CrossRatioTuple:
    degree: int
    values: tuple[ProjPoint, ...]

    def to_json(self) -> list[str]:
        return [str(v) for v in self.values]


def kn_coordinates(points: Sequence[ProjPoint]) -> CrossRatioTuple:
    """The cross-ratios ``[x1, x2, x3, xi]`` for ``i = 4..n``."""
    points = [ProjPoint.of(p) for p in points]
    if len(points) < 4:
        raise PreconditionError(f"need at least 4 points, got {len(points)}")
    if len(set(points)) != len(points):
        raise PreconditionError("configuration has repeated points")
    x1, x2, x3 = points[:3]
    return CrossRatioTuple(len(points), tuple(cross_ratio(x1, x2, x3, x) for x in points[3:]))


def frame_mobius(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> Mobius:
    """The Mobius map sending ``p1, p2, p3`` to ``0, inf, 1``.

    This is the normalisation under which ``x -> [p1, p2, p3, x]``.
    """
    if len({p1, p2, p3}) < 3:
        raise PreconditionError("frame points are not distinct")
    # linear forms vanishing at p1 (numerator) and p2 (denominator)
    top = (p1.den, -p1.num)
    bottom = (p2.den, -p2.num)
    # rescale so that p3 goes to 1
    top_at_p3 = top[0] * p3.num + top[1] * p3.den
    bottom_at_p3 = bottom[0] * p3.num + bottom[1] * p3.den
    return Mobius(
        bottom_at_p3 * top[0], bottom_at_p3 * top[1], top_at_p3 * bottom[0], top_at_p3 * bottom[1]
    )


def check_invariance(points: Sequence[ProjPoint], m: Mobius) -> bool:
    moved = [mobius_apply(m, p) for p in points]
    return kn_coordinates(points) == kn_coordinates(moved)


def permute_configuration(points: Sequence[ProjPoint], sigma: Permutation) -> list[ProjPoint]:
    """Point ``i`` of the result is point ``sigma(i)`` of ``points``."""
    if sigma.degree != len(points):
        raise PreconditionError(f"permutation degree {sigma.degree} != {len(points)} points")
    return [points[sigma(i) - 1] for i in range(1, len(points) + 1)]


def check_descended_action(
    points_a: Sequence[ProjPoint], points_b: Sequence[ProjPoint], sigma: Permutation
) -> bool:
    """Equal coordinates before permuting must stay equal after permuting."""
    if kn_coordinates(points_a) != kn_coordinates(points_b):
        return True
    return kn_coordinates(permute_configuration(points_a, sigma)) == kn_coordinates(
        permute_configuration(points_b, sigma)
    )


# -- seeded random configurations -------------------------------------------


def random_point(rng: random.Random, bound: int = 50, max_den: int = 20, p_inf: float = 0.05) -> ProjPoint:
    if rng.random() < p_inf:
        return INF
    return ProjPoint(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_configuration(
    rng: random.Random, n: int, bound: int = 50, max_den: int = 20
) -> list[ProjPoint]:
    """``n`` distinct points; collisions are rejected and redrawn."""
    seen: list[ProjPoint] = []
    while len(seen) < n:
        p = random_point(rng, bound, max_den)
        if p not in seen:
            seen.append(p)
    return seen


def random_mobius(rng: random.Random, bound: int = 10) -> Mobius:
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if a * d - b * c:
            return Mobius(a, b, c, d)


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


@dataclass
class SweepReport:
    seed: int
    trials: int
    points: int
    invariance_passed: int = 0
    descended_passed: int = 0

    @property
    def ok(self) -> bool:
        return self.invariance_passed == self.trials and self.descended_passed == self.trials

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "points": self.points,
            "invariance": {"passed": self.invariance_passed, "failed": self.trials - self.invariance_passed},
            "descended_action": {"passed": self.descended_passed, "failed": self.trials - self.descended_passed},
            "ok": self.ok,
        }


def crossratio_sweep(seed: int, trials: int = 1000, n: int = 5) -> SweepReport:
    """Randomised invariance and descended-action checks, reproducible per seed."""
    rng = random.Random(seed)
    report = SweepReport(seed, trials, n)
    for _ in range(trials):
        pts = random_configuration(rng, n)
        m = random_mobius(rng)
        report.invariance_passed += check_invariance(pts, m)
        sigma = random_permutation(rng, n)
        moved = [mobius_apply(m, p) for p in pts]
        report.descended_passed += check_descended_action(pts, moved, sigma)
    return report
