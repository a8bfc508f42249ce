"""Orbit-parity decision procedure with checkable certificates.

For a subgroup S of the symmetric group on n >= 5 points, the extension
L_n^S / K_n^S is rational exactly when S has an orbit of odd size, and is
not even unirational otherwise.  A positive verdict carries the odd orbit;
a negative one carries a fixed-point-free 2-Sylow subgroup P and, for every
orbit of P, an index-2 subgroup of P containing the point stabilizer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import PreconditionError
from .group import PermGroup
from .twogroup import Index2Witness, SylowWitness, index2_over, is_2group, sylow_2

MIN_DEGREE = 5


class VerdictKind(str, Enum):
    RATIONAL = "Rational"
    NOT_UNIRATIONAL = "NotUnirational"


@dataclass(frozen=True)
class OddOrbitCertificate:
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {"orbit": list(self.members), "size": self.size}


@dataclass(frozen=True)
class NonRationalCertificate:
    sylow: SylowWitness
    witnesses: tuple[Index2Witness, ...]

    def to_json(self) -> dict:
        return {
            **self.sylow.to_json(),
            "fixed_points": [],
            "witnesses": [w.to_json() for w in self.witnesses],
        }


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    certificate: OddOrbitCertificate | NonRationalCertificate
    group: PermGroup = field(repr=False)

    @property
    def rational(self) -> bool:
        return self.kind is VerdictKind.RATIONAL

    def validate(self) -> bool:
        """Recheck the certificate from scratch with membership and order tests."""
        s = self.group
        cert = self.certificate
        if self.kind is VerdictKind.RATIONAL:
            if cert.size % 2 == 0:
                return False
            return list(cert.members) == s.orbit(cert.members[0])
        p = cert.sylow.sylow
        if not cert.sylow.validate(s) or p.fixed_points():
            return False
        orbits = p.orbits().orbits
        if len(cert.witnesses) != len(orbits):
            return False
        for orbit, w in zip(orbits, cert.witnesses):
            stab = PermGroup(s.degree, w.stabilizer_gens)
            if not stab.same_group(p.stabilizer(orbit.representative)):
                return False
            if not w.validate(p):
                return False
        return True

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "certificate": self.certificate.to_json()}


def _require_degree(n: int) -> None:
    if n < MIN_DEGREE:
        raise PreconditionError(
            f"degree {n} < {MIN_DEGREE}: the orbit-parity criterion is only "
            f"established for n >= {MIN_DEGREE}"
        )


def reduce_to_sylow(s: PermGroup, cap: int | None = None) -> tuple[SylowWitness, bool]:
    """2-Sylow witness and whether (odd orbit in S) == (fixed point of P)."""
    w = sylow_2(s, cap)
    has_odd = any(size % 2 for size in s.orbits().sizes)
    return w, has_odd == bool(w.sylow.fixed_points())


def witness_nonrational(p: PermGroup, cap: int | None = None) -> list[Index2Witness]:
    """One index-2 witness per orbit of a fixed-point-free 2-group."""
    _require_degree(p.degree)
    if not is_2group(p):
        raise PreconditionError(f"group of order {p.order()} is not a 2-group")
    fixed = p.fixed_points()
    if fixed:
        raise PreconditionError(
            f"point {fixed[0]} is fixed, so its stabilizer is the whole group "
            "and no proper index-2 overgroup exists"
        )
    out = []
    for orbit in p.orbits().orbits:
        stab = PermGroup(p.degree, orbit.stabilizer_generators)
        w = index2_over(p, stab, cap)
        out.append(
            Index2Witness(
                degree=w.degree,
                stabilizer_gens=w.stabilizer_gens,
                subgroup_gens=w.subgroup_gens,
                parent_order=w.parent_order,
                point=orbit.representative,
            )
        )
    return out


def decide(s: PermGroup, cap: int | None = None) -> Verdict:
    _require_degree(s.degree)
    for orbit in s.orbits().orbits:
        if orbit.size % 2:
            return Verdict(VerdictKind.RATIONAL, OddOrbitCertificate(orbit.members), s)
    sylow, agree = reduce_to_sylow(s, cap)
    if not agree:  # pragma: no cover - would contradict the Sylow reduction
        raise AssertionError("2-Sylow subgroup has a fixed point but S has no odd orbit")
    witnesses = witness_nonrational(sylow.sylow, cap)
    return Verdict(
        VerdictKind.NOT_UNIRATIONAL, NonRationalCertificate(sylow, tuple(witnesses)), s
    )
