import random
import threading

import pytest
from hypothesis import given, settings

from crossrat.errors import CapExceeded, PreconditionError
from crossrat.group import (
    CAP_ENV_VAR,
    PermGroup,
    contains,
    elements,
    is_conjugate_subgroup,
    orbits,
    order,
    stabilizer,
)
from crossrat.perm import Permutation, parse_cycles

from conftest import group_closure, random_group, small_groups


def G(n, *gens):
    return PermGroup.from_cycles(n, gens)


def test_orbits_examples():
    dec = orbits(G(5, "(1 2)(3 4)"))
    assert [o.members for o in dec.orbits] == [(1, 2), (3, 4), (5,)]
    assert [o.representative for o in dec.orbits] == [1, 3, 5]
    assert dec.sizes == [2, 2, 1]

    assert orbits(PermGroup(4)).sizes == [1, 1, 1, 1]
    assert orbits(G(5, "(1 2)", "(1 2 3 4 5)")).orbits[0].members == (1, 2, 3, 4, 5)


def test_orbit_stabilizer_generators_fix_representative():
    dec = orbits(G(6, "(1 2 3)", "(4 5)", "(1 2)"))
    for o in dec.orbits:
        assert all(g(o.representative) == o.representative for g in o.stabilizer_generators)


def test_stabilizer_examples():
    s3 = G(3, "(1 2)", "(1 2 3)")
    st = stabilizer(s3, 3)
    assert st.order() == 2
    assert st.contains(parse_cycles("(1 2)", 3))
    # brute force: elements of S3 fixing 3
    fixing = sorted(e.images for e in s3.elements() if e(3) == 3)
    assert fixing == sorted(e.images for e in st.elements())

    assert stabilizer(PermGroup(4), 2).order() == 1
    assert stabilizer(G(4, "(1 2 3 4)"), 1).order() == 1
    with pytest.raises(PreconditionError):
        stabilizer(s3, 4)


def test_order_examples():
    assert order(G(5, "(1 2)", "(1 2 3 4 5)")) == 120
    assert order(PermGroup(7)) == 1
    assert order(G(4, "(1 2)(3 4)", "(1 3)(2 4)")) == 4
    # brute-force closure counts
    assert len(group_closure(G(5, "(1 2)", "(1 2 3 4 5)"))) == 120
    assert len(group_closure(G(4, "(1 2)(3 4)", "(1 3)(2 4)"))) == 4


def test_contains_examples():
    c3 = G(3, "(1 2 3)")
    assert contains(c3, parse_cycles("(1 3 2)", 3))
    assert not contains(c3, parse_cycles("(1 2)", 3))
    assert contains(c3, Permutation.identity(3))
    assert contains(PermGroup(3), Permutation.identity(3))
    with pytest.raises(ValueError):
        contains(c3, Permutation.identity(4))


def test_elements_examples():
    assert elements(PermGroup(3)) == [Permutation.identity(3)]
    assert [str(e) for e in elements(G(3, "(1 2)"))] == ["()", "(1 2)"]
    els = elements(G(3, "(1 2)", "(1 2 3)"))
    assert len(els) == 6
    assert els == sorted(els)


def test_elements_cap(monkeypatch):
    s6 = PermGroup.symmetric(6)
    with pytest.raises(CapExceeded):
        s6.elements(cap=100)
    monkeypatch.setenv(CAP_ENV_VAR, "500")
    with pytest.raises(CapExceeded):
        s6.elements()
    monkeypatch.setenv(CAP_ENV_VAR, "720")
    assert len(s6.elements()) == 720


def test_conjugate_subgroups():
    s3 = PermGroup.symmetric(3)
    a, b, c = G(3, "(1 2)"), G(3, "(2 3)"), G(3, "(1 2 3)")
    assert is_conjugate_subgroup(s3, a, b)
    assert not is_conjugate_subgroup(s3, a, c)
    assert is_conjugate_subgroup(s3, c, c)
    v4 = G(4, "(1 2)(3 4)", "(1 3)(2 4)")
    with pytest.raises(PreconditionError):
        is_conjugate_subgroup(v4, G(4, "(1 2)"), v4)


def test_conjugacy_depends_on_ambient():
    # <(1 2)(3 4)> and <(1 3)(2 4)> are conjugate in S4 but not inside V4
    v4 = G(4, "(1 2)(3 4)", "(1 3)(2 4)")
    h1, h2 = G(4, "(1 2)(3 4)"), G(4, "(1 3)(2 4)")
    assert is_conjugate_subgroup(PermGroup.symmetric(4), h1, h2)
    assert not is_conjugate_subgroup(v4, h1, h2)


def test_symmetric_and_alternating_orders():
    import math

    for n in range(1, 11):
        assert PermGroup.symmetric(n).order() == math.factorial(n)
    for n in range(3, 11):
        assert PermGroup.alternating(n).order() == math.factorial(n) // 2


def test_json_round_trip():
    g = G(6, "(1 2)(3 4)", "(5 6)")
    assert PermGroup.from_json(g.to_json()).same_group(g)
    with pytest.raises(PreconditionError):
        PermGroup.from_json({"degree": 3})


def test_restriction_and_preimage():
    g = G(6, "(1 2 3)(4 5)", "(1 2)")
    r = g.restriction([1, 2, 3])
    assert r.degree == 3 and r.order() == 6
    assert g.restriction([4, 5]).order() == 2
    with pytest.raises(PreconditionError):
        g.restriction([1, 4])
    sub = PermGroup.from_cycles(3, ["(1 2 3)"])
    pre = g.preimage_of_restriction([1, 2, 3], sub)
    closure = group_closure(g)
    expected = {e for e in closure if e[:3] in {(1, 2, 3), (2, 3, 1), (3, 1, 2)}}
    assert group_closure(pre) == expected


@settings(max_examples=150, deadline=None)
@given(small_groups())
def test_chain_agrees_with_closure(g):
    closure = group_closure(g)
    assert g.order() == len(closure)
    assert sorted(e.images for e in g.elements()) == sorted(closure)
    rng = random.Random(len(closure))
    for _ in range(10):
        images = list(range(1, g.degree + 1))
        rng.shuffle(images)
        assert g.contains(Permutation(images)) == (tuple(images) in closure)


@settings(max_examples=100, deadline=None)
@given(small_groups())
def test_orbit_partition_and_orbit_stabilizer(g):
    dec = g.orbits()
    members = [x for o in dec.orbits for x in o.members]
    assert sorted(members) == list(range(1, g.degree + 1))
    reps = [o.representative for o in dec.orbits]
    assert reps == sorted(reps)
    for o in dec.orbits:
        assert o.representative == min(o.members)
        stab = PermGroup(g.degree, o.stabilizer_generators)
        assert o.size * stab.order() == g.order()
        for x in o.members:
            assert len(g.orbit(x)) * g.stabilizer(x).order() == g.order()


def test_lazy_chain_is_shared_between_threads():
    g = random_group(random.Random(3), 9)
    results = []

    def work():
        results.append((g.order(), id(g.chain())))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1
