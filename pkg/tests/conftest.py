import random

import pytest
from hypothesis import strategies as st

from crossrat.group import PermGroup
from crossrat.perm import Permutation

_ACCEPTANCE = []


def brute_closure(gens, n):
    """All elements generated by ``gens`` (1-indexed image tuples), by BFS."""
    identity = tuple(range(1, n + 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for g in gens:
            # g o x: apply x first
            y = tuple(g[x[i] - 1] for i in range(n))
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def group_closure(g: PermGroup):
    return brute_closure([p.images for p in g.generators], g.degree)


def random_partial_perm(rng, n):
    """A random permutation moving a random subset of the points."""
    support = rng.sample(range(1, n + 1), rng.randint(2, n))
    shuffled = support[:]
    rng.shuffle(shuffled)
    images = list(range(1, n + 1))
    for src, dst in zip(support, shuffled):
        images[src - 1] = dst
    return Permutation(images)


def random_group(rng, n, max_gens=3):
    k = rng.randint(1, max_gens)
    return PermGroup(n, [random_partial_perm(rng, n) for _ in range(k)])


@st.composite
def permutations(draw, n):
    return Permutation(draw(st.permutations(list(range(1, n + 1)))))


@st.composite
def small_groups(draw, min_degree=2, max_degree=7):
    n = draw(st.integers(min_degree, max_degree))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_group(random.Random(seed), n)


@pytest.fixture
def acceptance():
    def record(criterion, passed, detail=""):
        _ACCEPTANCE.append((criterion, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in _ACCEPTANCE:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {criterion}  {detail}")
