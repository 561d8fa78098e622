"""Independent oracles shared by the test modules.

None of these call into the package's arithmetic: fractions come from the
convergent recurrence, determinants from the Leibniz expansion and inertia
from leading principal minors.
"""

import itertools
import random
from fractions import Fraction

import pytest
import sympy


def convergent_fraction(entries):
    """p/q of [b1,...,bk] from the convergent recurrence p_k = b_k p_{k-1} + p_{k-2}."""
    p_prev, p = 1, entries[0]
    q_prev, q = 0, 1
    for b in entries[1:]:
        p_prev, p = p, b * p + p_prev
        q_prev, q = q, b * q + q_prev
    return Fraction(p, q)


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
            if not term:
                break
        total += term
    return total


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def transpose(a):
    return [list(r) for r in zip(*a)]


def congruent(m, u):
    return matmul(matmul(transpose(u), m), u)


def random_unimodular(rng, n, steps=None, spread=2):
    """Product of random elementary integer matrices (det +-1)."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        if n == 1 and rng.random() < 0.5:
            u[0][0] = -1
        return u
    for _ in range(steps or 3 * n):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-spread, spread)
        for row in u:
            row[j] += k * row[i]
        if rng.random() < 0.2:
            for row in u:
                row[i], row[j] = row[j], row[i]
    return u


def random_symmetric(rng, n, lo=-4, hi=4):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return m


def inertia_oracle(m, rng=None, attempts=500):
    """(n_plus, n_minus, n_zero) by sign changes of leading minors after a unimodular congruence.

    With r = rank, a congruence making D_1..D_r nonzero leaves a nondegenerate
    r x r block whose Schur complement vanishes, so Jacobi's sign rule on
    1, D_1, ..., D_r gives the inertia.
    """
    rng = rng or random.Random(0)
    n = len(m)
    r = sympy.Matrix(m).rank() if n else 0
    for attempt in range(attempts):
        a = m if attempt == 0 else congruent(m, random_unimodular(rng, n))
        minors = [leibniz_det([row[:k] for row in a[:k]]) for k in range(1, r + 1)]
        if all(minors):
            seq = [1] + minors
            neg = sum(1 for x, y in zip(seq, seq[1:]) if (x > 0) != (y > 0))
            return (r - neg, neg, n - r)
    raise RuntimeError("no congruence with nonzero leading minors found")


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
