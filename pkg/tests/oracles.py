"""Independent brute-force oracles used to freeze expected test values.

Everything here deliberately avoids the production code paths it checks:
canonical forms come from exhaustive permutation minimization, polynomial
maxima from dense sampling, and labeled-graph enumeration from the
symmetry-free search mode.
"""

from itertools import permutations

import numpy as np

from specgap import CanonicalForm, Graph
from specgap.enumeration import _pack_columns


def naive_canonical(g: Graph) -> CanonicalForm:
    """Minimum over all n! orderings of the column-major triangle bits."""
    best = None
    for perm in permutations(range(g.n)):
        cols = []
        for j in range(1, g.n):
            c = 0
            for i in range(j):
                c = c << 1 | (g.rows[perm[j]] >> perm[i] & 1)
            cols.append(c)
        if best is None or cols < best:
            best = cols
    return CanonicalForm(g.n, _pack_columns(g.n, best or []))


def all_graphs_on(n: int):
    """Every labeled simple graph on n vertices (2^(n(n-1)/2) of them)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def dense_max(coeffs, a: float, b: float, samples: int = 20000) -> float:
    """Sampling lower bound for the maximum of a monomial polynomial."""
    xs = np.linspace(a, b, samples)
    acc = np.zeros_like(xs)
    for c in reversed(coeffs):
        acc = acc * xs + c
    return float(acc.max())


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))
