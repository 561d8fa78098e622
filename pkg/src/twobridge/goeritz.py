"""Goeritz matrices and exact signature/determinant.

Matrices are plain lists of integer rows; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braidkit import ConwayNotation
from .diagram import ColoredDiagram, WHITE, crossing_eta, crossing_stats
from .errors import ConventionError


@dataclass(frozen=True)
class GoeritzMatrix:
    rows: tuple[tuple[int, ...], ...]
    faces: tuple[int, ...] = ()  # face ids of X_1..X_n

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class SignatureResult:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def dimension(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


def goeritz_matrix(cd: ColoredDiagram) -> GoeritzMatrix:
    whites = cd.white_faces
    index = {f: i for i, f in enumerate(whites)}
    n = len(whites)
    full = [[0] * n for _ in range(n)]
    d = cd.diagram
    for v in d.crossing_ids:
        k = 0 if cd.corner_color(v, 0) == WHITE else 1
        a, b = index[d.face_of[(v, k)]], index[d.face_of[(v, k + 2)]]
        if a == b:
            continue
        eta = crossing_eta(cd, v)
        full[a][b] -= eta
        full[b][a] -= eta
    for i in range(n):
        full[i][i] = -sum(full[i][k] for k in range(n) if k != i)
    rows = tuple(tuple(r[1:]) for r in full[1:])
    return GoeritzMatrix(rows, whites[1:])


def _check_square(m):
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    return n


def signature(m) -> SignatureResult:
    """Inertia of a symmetric integer matrix by symmetric congruence elimination.

    A zero pivot with a nonzero entry in its row is handled as a 2x2
    hyperbolic block, contributing one positive and one negative square.
    """
    if isinstance(m, GoeritzMatrix):
        m = m.rows
    n = _check_square(m)
    a = [[Fraction(x) for x in row] for row in m]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    plus = minus = zero = 0
    live = list(range(n))
    while live:
        p = next((i for i in live if a[i][i] != 0), None)
        if p is not None:
            piv = a[p][p]
            if piv > 0:
                plus += 1
            else:
                minus += 1
            live.remove(p)
            for i in live:
                f = a[i][p] / piv
                if f:
                    for j in live:
                        a[i][j] -= f * a[p][j]
            continue
        # all remaining diagonal entries vanish
        pair = next(((i, j) for i in live for j in live if j > i and a[i][j] != 0), None)
        if pair is None:
            zero += len(live)
            break
        i, j = pair
        c = a[i][j]
        plus += 1
        minus += 1
        live.remove(i)
        live.remove(j)
        # Schur complement against [[0, c], [c, 0]], whose inverse is the swap scaled by 1/c
        coef = {k: (a[k][j] / c, a[k][i] / c) for k in live}
        for k in live:
            fi, fj = coef[k]
            if fi or fj:
                for l in live:
                    a[k][l] -= fi * a[i][l] + fj * a[j][l]
    return SignatureResult(plus, minus, zero)


def determinant(m) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    if isinstance(m, GoeritzMatrix):
        m = m.rows
    n = _check_square(m)
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def gl_signature(cd: ColoredDiagram) -> int:
    """Knot signature as sign(G) - mu_II for an oriented, colored diagram."""
    g = goeritz_matrix(cd)
    sigma = signature(g).signature - crossing_stats(cd).mu_II
    if sigma % 2:
        raise ConventionError(f"odd knot signature {sigma}: crossing conventions are inconsistent")
    return sigma


def conway_closed_form_sign(c: ConwayNotation) -> int:
    """Goeritz signature of the Conway-form diagram from its even-indexed entries."""
    even = sum(abs(b) for b in c.entries[1::2])
    return -c.sign * (even + 1)


def format_matrix(m) -> str:
    if isinstance(m, GoeritzMatrix):
        m = m.rows
    lines = [str(len(m))] + [" ".join(str(x) for x in row) for row in m]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> list[list[int]]:
    tokens = text.split()
    if not tokens:
        raise ValueError("empty matrix text")
    n = int(tokens[0])
    vals = [int(t) for t in tokens[1:]]
    if len(vals) != n * n:
        raise ValueError(f"expected {n * n} entries, got {len(vals)}")
    return [vals[i * n:(i + 1) * n] for i in range(n)]
