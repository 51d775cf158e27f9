"""Graphs as bitset adjacency rows, and their adjacency spectra.

Eigenvalues come from a cyclic Jacobi sweep (deterministic, accumulates the
orthogonal basis) driven until the off-diagonal norm drops below 1e-11; the
graphs handled here stay comfortably below ~120 vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .chebyshev import v_eval
from .errors import DisconnectedGraph, NotRegular

_OFF_TOL = 1e-11
_SPECTRUM_TOL = 1e-9


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; rows[u] has bit v set iff u ~ v."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("rows length must equal n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits beyond vertex {self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def neighbors(self, u: int) -> Iterator[int]:
        row = self.rows[u]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u in range(self.n):
            for v in self.neighbors(u):
                a[u, v] = 1.0
        return a


@dataclass(frozen=True)
class Spectrum:
    """Adjacency eigenvalues in descending order, with the solver tolerance."""

    values: tuple[float, ...]
    tol: float

    def grouped(self, gap: float = 1e-6) -> tuple[tuple[float, int], ...]:
        """Collapse eigenvalues closer than gap into (value, multiplicity)."""
        groups: list[list[float]] = []
        for v in self.values:
            if groups and abs(groups[-1][-1] - v) < gap:
                groups[-1].append(v)
            else:
                groups.append([v])
        return tuple((sum(g) / len(g), len(g)) for g in groups)


def _jacobi(a: np.ndarray, off_tol: float = _OFF_TOL, max_sweeps: int = 100):
    n = a.shape[0]
    work = np.array(a, dtype=float)
    basis = np.eye(n)
    if n == 1:
        return work.diagonal().copy(), basis
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(np.tril(work, -1) ** 2)))
        if off < off_tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if apq == 0.0:
                    continue
                tau = (work[q, q] - work[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (
                    abs(tau) + math.sqrt(tau * tau + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = work[:, p].copy(), work[:, q].copy()
                work[:, p] = c * col_p - s * col_q
                work[:, q] = s * col_p + c * col_q
                row_p, row_q = work[p, :].copy(), work[q, :].copy()
                work[p, :] = c * row_p - s * row_q
                work[q, :] = s * row_p + c * row_q
                work[p, q] = 0.0
                work[q, p] = 0.0
                qp, qq = basis[:, p].copy(), basis[:, q].copy()
                basis[:, p] = c * qp - s * qq
                basis[:, q] = s * qp + c * qq
    else:
        raise ArithmeticError("Jacobi iteration failed to converge")
    w = work.diagonal().copy()
    order = np.argsort(-w, kind="stable")
    return w[order], basis[:, order]


def adjacency_eigensystem(g: Graph) -> tuple[Spectrum, np.ndarray]:
    """Spectrum plus the accumulated orthogonal basis (columns aligned)."""
    w, q = _jacobi(g.adjacency_matrix())
    return Spectrum(tuple(float(v) for v in w), _SPECTRUM_TOL), q


def adjacency_spectrum(g: Graph) -> Spectrum:
    return adjacency_eigensystem(g)[0]


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        rest = frontier
        while rest:
            low = rest & -rest
            reach |= g.rows[low.bit_length() - 1]
            rest ^= low
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_regular(g: Graph) -> int | None:
    """Common degree if the graph is regular, else None."""
    degs = {g.degree(u) for u in range(g.n)}
    if len(degs) == 1:
        return degs.pop()
    return None


def mu1(g: Graph) -> float:
    """Second largest adjacency eigenvalue of a connected graph."""
    if g.n < 2:
        raise ValueError("mu1 needs at least two vertices")
    if not is_connected(g):
        raise DisconnectedGraph("mu1 is only meaningful for connected graphs")
    return adjacency_spectrum(g).values[1]


def _require_connected_regular(g: Graph) -> int:
    k = is_regular(g)
    if k is None:
        raise NotRegular("graph is not regular")
    if k < 2:
        raise NotRegular("degree must be at least 2")
    if not is_connected(g):
        raise DisconnectedGraph("graph is not connected")
    return k


def trace_formula_check(g: Graph, m_max: int) -> list[float]:
    """Moment sums S_m = (k-1)^{m/2} sum_j V_m(mu_j / sqrt(k-1)), m <= m_max.

    Every S_m counts closed non-backtracking structure and is nonnegative up
    to eigenvalue rounding.
    """
    k = _require_connected_regular(g)
    rt = math.sqrt(k - 1.0)
    scaled = [v / rt for v in adjacency_spectrum(g).values]
    out = []
    for m in range(m_max + 1):
        total = sum(v_eval(m, x) for x in scaled)
        out.append(rt**m * total)
    return out


def spectral_measure_moments(g: Graph, m_max: int) -> list[float]:
    """V_m moments of the uniform measure on the rescaled eigenvalues."""
    k = _require_connected_regular(g)
    rt = math.sqrt(k - 1.0)
    scaled = [v / rt for v in adjacency_spectrum(g).values]
    return [
        sum(v_eval(m, x) for x in scaled) / g.n for m in range(m_max + 1)
    ]
