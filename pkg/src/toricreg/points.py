"""The projective point set parameterized by a multigraph over GF(q).

Every vertex gets a nonzero field value g**e_v; edge i = {u, w} gets the
coordinate g**(e_u + e_w).  All coordinates are nonzero, so the point
lies in the projective torus and we can fix the canonical representative
whose first coordinate is g**0.  Points are stored as exponent vectors:
field arithmetic only enters when a monomial is evaluated.
"""

from __future__ import annotations

import numpy as np

from . import caps
from .errors import ConsistencyError, TooLargeError
from .field import Field, FieldElem
from .graph import Multigraph, GraphStats, graph_stats

_CHUNK = 1 << 18


class PointSet:
    """Canonical exponent vectors of the point set, deduplicated and in
    lexicographic order."""

    __slots__ = ("q", "s", "points")

    def __init__(self, q: int, s: int, points: np.ndarray):
        self.q = q
        self.s = s
        self.points = points

    @property
    def size(self) -> int:
        return self.points.shape[0]

    def as_tuples(self):
        return [tuple(int(x) for x in row) for row in self.points]

    def __repr__(self):
        return f"PointSet(q={self.q}, s={self.s}, size={self.size})"


def degree_formula(stats: GraphStats, q: int) -> int:
    """Closed-form cardinality of the point set.

    gamma >= 1, q odd:  (1/2)**(gamma-1) * (q-1)**(n-m+gamma-1)
    gamma >= 1, q even: (q-1)**(n-m+gamma-1)
    gamma == 0:         (q-1)**(n-m-1)
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    n, m, gamma = stats.n, stats.m, stats.gamma
    if gamma == 0:
        return (q - 1) ** (n - m - 1)
    power = (q - 1) ** (n - m + gamma - 1)
    if q % 2 == 0:
        return power
    div = 2 ** (gamma - 1)
    if power % div:
        raise AssertionError("degree formula produced a non-integer")
    return power // div


def enumerate_points(g: Multigraph, q: int, cap=None) -> PointSet:
    """All points of the set parameterized by g, as canonical exponent
    vectors.  Work is (q-1)**n and guarded by the state cap."""
    limit = caps.state_cap(cap)
    qm1 = q - 1
    total = qm1**g.n
    if total > limit:
        raise TooLargeError(
            f"(q-1)**n = {total} exceeds the state cap {limit}"
        )
    us = np.array([e[0] for e in g.edges])
    ws = np.array([e[1] for e in g.edges])
    dtype = np.int16 if qm1 < 127 else np.int64
    radix = qm1 ** np.arange(g.n, dtype=np.int64)
    chunks = []
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        verts = ((idx[:, None] // radix[None, :]) % qm1).astype(dtype)
        E = (verts[:, us] + verts[:, ws]) % qm1
        E = (E - E[:, :1]) % qm1
        chunks.append(np.unique(E, axis=0))
    pts = np.unique(np.concatenate(chunks, axis=0), axis=0)
    ps = PointSet(q, g.s, pts)
    expected = degree_formula(graph_stats(g), q)
    if ps.size != expected:
        raise ConsistencyError(
            f"enumerated {ps.size} points but the degree formula gives {expected}"
        )
    return ps


def evaluate_monomial(point, a, field: Field) -> FieldElem:
    """Value of the monomial with exponent vector a at a torus point given
    by its exponent vector; never the field zero."""
    if len(point) != len(a):
        raise ValueError(
            f"length mismatch: point has {len(point)}, exponent has {len(a)}"
        )
    acc = 0
    for c, e in zip(point, a):
        acc += int(c) * int(e)
    return acc % (field.q - 1)
