import random

import pytest

from crossrat.errors import PreconditionError
from crossrat.group import PermGroup
from crossrat.perm import Permutation
from crossrat.rationality import VerdictKind, decide, reduce_to_sylow, witness_nonrational

from conftest import group_closure, random_group


def G(n, *gens):
    return PermGroup.from_cycles(n, gens)


def test_decide_examples():
    v = decide(PermGroup.symmetric(5))
    assert v.kind is VerdictKind.RATIONAL
    assert v.certificate.members == (1, 2, 3, 4, 5)

    v = decide(G(6, "(1 2)", "(3 4)", "(5 6)"))
    assert v.kind is VerdictKind.NOT_UNIRATIONAL
    assert len(v.certificate.witnesses) == 3
    assert v.validate()

    v = decide(G(5, "(1 2)(3 4)"))
    assert v.kind is VerdictKind.RATIONAL
    assert v.certificate.members == (5,) and v.certificate.size == 1


def test_decide_refuses_small_degree():
    for n in range(1, 5):
        with pytest.raises(PreconditionError, match="n >= 5"):
            decide(PermGroup.symmetric(n))


def test_trivial_group_is_rational():
    v = decide(PermGroup(7))
    assert v.rational and v.certificate.members == (1,)


def test_symmetric_groups():
    for n in range(5, 11):
        assert decide(PermGroup.symmetric(n)).rational == (n % 2 == 1)


def test_reduce_to_sylow_examples():
    w, agree = reduce_to_sylow(PermGroup.symmetric(5))
    assert agree and w.sylow.order() == 8 and len(w.sylow.fixed_points()) == 1

    c2 = G(5, "(1 2)")
    w, agree = reduce_to_sylow(c2)
    assert agree and w.index == 1 and w.sylow.same_group(c2)

    p = G(6, "(1 2)", "(3 4)", "(5 6)")
    w, agree = reduce_to_sylow(p)
    assert agree and w.sylow.same_group(p) and w.sylow.fixed_points() == []


def test_witness_examples():
    p = G(6, "(1 2)", "(3 4)", "(5 6)")
    ws = witness_nonrational(p)
    assert [w.point for w in ws] == [1, 3, 5]
    for w in ws:
        assert w.subgroup.order() == 4
        assert PermGroup(6, w.stabilizer_gens).order() == 4
        assert w.validate(p)
    # stabilizer of 1 is <(3 4), (5 6)>, which is itself index 2
    assert ws[0].subgroup.same_group(G(6, "(3 4)", "(5 6)"))

    q = G(6, "(1 2)(3 4)(5 6)", "(1 3)(2 4)")
    assert q.fixed_points() == []
    ws = witness_nonrational(q)
    assert len(ws) == 2
    assert all(w.validate(q) and 2 * w.subgroup.order() == q.order() for w in ws)


def test_witness_errors():
    with pytest.raises(PreconditionError, match="fixed"):
        witness_nonrational(G(5, "(1 2)"))
    with pytest.raises(PreconditionError, match="2-group"):
        witness_nonrational(G(6, "(1 2 3)(4 5 6)"))
    with pytest.raises(PreconditionError):
        witness_nonrational(G(4, "(1 2)(3 4)"))


def test_json_schema():
    out = decide(G(6, "(1 2)", "(3 4)", "(5 6)")).to_json()
    assert out["kind"] == "NotUnirational"
    cert = out["certificate"]
    assert cert["index"] == 1 and cert["fixed_points"] == []
    assert {tuple(w) for w in [sorted(x) for x in cert["witnesses"]]} == {
        ("H", "index", "normal", "point", "stabilizer")
    }
    assert decide(PermGroup.symmetric(5)).to_json() == {
        "kind": "Rational",
        "certificate": {"orbit": [1, 2, 3, 4, 5], "size": 5},
    }


def test_validate_rejects_tampered_certificate():
    v = decide(G(6, "(1 2)", "(3 4)", "(5 6)"))
    bad = v.certificate.witnesses[0]
    object.__setattr__(bad, "subgroup_gens", (Permutation.from_cycles([(1, 2)], 6),))
    assert not v.validate()


def test_random_verdicts_match_orbit_parity():
    rng = random.Random(99)
    for _ in range(500):
        n = rng.randint(5, 10)
        s = random_group(rng, n)
        v = decide(s)
        has_odd = any(size % 2 for size in s.orbits().sizes)
        w, agree = reduce_to_sylow(s)
        assert agree
        assert v.rational == has_odd == bool(w.sylow.fixed_points())
        assert v.validate()


def test_adding_a_fixed_point_gives_rational():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(4, 9)
        s = random_group(rng, n)
        lifted = PermGroup(n + 1, [Permutation(g.images + (n + 1,)) for g in s.generators])
        v = decide(lifted)
        assert v.rational


def test_certificates_hold_against_brute_force():
    rng = random.Random(11)
    checked = 0
    while checked < 25:
        s = random_group(rng, rng.randint(5, 8))
        if s.order() > 5000:
            continue
        v = decide(s)
        if v.rational:
            continue
        p = v.certificate.sylow.sylow
        p_set = group_closure(p)
        assert p_set <= group_closure(s)
        for w in v.certificate.witnesses:
            assert 2 * len(group_closure(w.subgroup)) == len(p_set)
        checked += 1
