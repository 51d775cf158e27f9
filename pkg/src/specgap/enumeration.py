"""Exhaustive enumeration of connected regular graphs and classification.

Isomorphism is decided through an explicit canonical form: the
lexicographically minimal upper-triangle adjacency bitstring (column-major,
the same bit order graph6 uses) over all vertex orderings, found by
branch-and-bound over partial orderings.  The generator restricts the labeled
search space with a symmetry rule that provably keeps at least one labeling
per isomorphism class, then deduplicates by canonical form, so its output is
exactly one representative per class in ascending canonical order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .bounds import linear_bound, machine_bound, two_term_bound
from .errors import BudgetExceeded
from .graph6 import encode as graph6_encode
from .spectra import Graph, is_connected, mu1

DEFAULT_BUDGET = 10
_MU1_SLACK = 1e-9
_BORDERLINE = 1e-7


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Minimal column-major upper-triangle bitstring over all relabelings."""

    n: int
    bits: bytes

    def to_graph(self) -> Graph:
        rows = [0] * self.n
        idx = 0
        for j in range(1, self.n):
            for i in range(j):
                byte = self.bits[idx // 8]
                if byte >> (7 - idx % 8) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                idx += 1
        return Graph(self.n, tuple(rows))


def _pack_columns(n: int, cols: list[int]) -> bytes:
    bits = bytearray((n * (n - 1) // 2 + 7) // 8)
    idx = 0
    for j, col in enumerate(cols, start=1):
        for shift in range(j - 1, -1, -1):
            if col >> shift & 1:
                bits[idx // 8] |= 1 << (7 - idx % 8)
            idx += 1
    return bytes(bits)


def canonical_form(g: Graph, max_n: int = 32) -> CanonicalForm:
    """Canonical form of g; two graphs share it iff they are isomorphic.

    Exhaustive by definition (minimum over all orderings); the search prunes
    any partial ordering whose column prefix already exceeds the best known
    complete ordering, which leaves correctness untouched.
    """
    n = g.n
    if n > max_n:
        raise ValueError(f"canonical_form supports n <= {max_n}, got {n}")
    if n == 1:
        return CanonicalForm(1, b"")
    rows = g.rows
    best: list[int] | None = None
    placed: list[int] = []
    cols: list[int] = []
    used = [False] * n
    # status[p]: does the current prefix of p placed vertices match best?
    EQ, UNKNOWN = 0, 1
    status = [UNKNOWN] * (n + 1)

    def rec() -> None:
        nonlocal best
        p = len(placed)
        if p == n:
            if best is None or cols < best:
                best = cols.copy()
                for d in range(n + 1):
                    status[d] = EQ  # current path is the new best
            return
        items = []
        for v in range(n):
            if used[v]:
                continue
            col = 0
            rv = rows[v]
            for u in placed:
                col = col << 1 | (rv >> u & 1)
            items.append((col, v))
        items.sort()
        tried: list[tuple[int, int]] = []
        for col, v in items:
            # a transposition twin of an already-tried candidate explores an
            # identical subtree; skipping it keeps complete multipartite
            # graphs from costing n! orderings
            if any(
                col == tcol
                and rows[v] & ~(1 << v | 1 << w) == rows[w] & ~(1 << v | 1 << w)
                for tcol, w in tried
            ):
                continue
            tried.append((col, v))
            if p >= 1 and best is not None and status[p] == EQ:
                ref = best[p - 1]
                if col > ref:
                    break  # ascending order: everything after is worse
                status[p + 1] = EQ if col == ref else UNKNOWN
            else:
                status[p + 1] = status[p] if best is not None else UNKNOWN
            placed.append(v)
            used[v] = True
            if p >= 1:
                cols.append(col)
            rec()
            placed.pop()
            used[v] = False
            if p >= 1:
                cols.pop()

    rec()
    assert best is not None
    return CanonicalForm(n, _pack_columns(n, best))


def _search_regular(k: int, n: int, symmetry: bool) -> Iterator[Graph]:
    """Backtracking over adjacency rows in vertex order.

    Processing vertex u fixes all of u's edges to later vertices, so after
    step u every vertex <= u has final degree k.  With symmetry=True, edges
    from u into so-far isolated vertices must go to the lowest-indexed block
    of them; isolated vertices are interchangeable at that moment, so every
    isomorphism class keeps at least one labeling.  symmetry=False walks every
    labeled graph exactly once (the oracle mode).
    """
    rows = [0] * n
    deg = [0] * n

    def feasible(u: int) -> bool:
        rem = [k - deg[v] for v in range(u + 1, n)]
        if sum(rem) % 2:
            return False
        open_count = sum(1 for r in rem if r > 0)
        return all(r <= open_count - 1 for r in rem if r > 0)

    def place(u: int) -> Iterator[Graph]:
        if u == n:
            g = Graph(n, tuple(rows))
            if is_connected(g):
                yield g
            return
        need = k - deg[u]
        cands = [v for v in range(u + 1, n) if deg[v] < k]
        if need < 0 or need > len(cands):
            return
        if need == 0:
            if feasible(u):
                yield from place(u + 1)
            return
        fresh = [v for v in cands if deg[v] == 0]
        busy = [v for v in cands if deg[v] > 0]
        if symmetry:
            choices = (
                tuple(fresh[:t]) + pick
                for t in range(min(need, len(fresh)) + 1)
                for pick in combinations(busy, need - t)
            )
        else:
            choices = combinations(cands, need)
        for group in choices:
            for v in group:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
            if feasible(u):
                yield from place(u + 1)
            for v in group:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
                deg[u] -= 1
                deg[v] -= 1

    yield from place(0)


def enumerate_regular(k: int, n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected k-regular graphs
    on n vertices, in ascending canonical-form order."""
    if (n * k) % 2:
        raise ValueError(f"no {k}-regular graph on {n} vertices: n*k is odd")
    if n <= k:
        raise ValueError(f"need n > k, got n={n}, k={k}")
    forms: set[CanonicalForm] = set()
    for g in _search_regular(k, n, symmetry=True):
        forms.add(canonical_form(g))
    for cf in sorted(forms):
        yield cf.to_graph()


def enumerate_labeled(k: int, n: int) -> Iterator[Graph]:
    """Every labeled connected k-regular graph exactly once (oracle mode)."""
    if (n * k) % 2:
        raise ValueError(f"no {k}-regular graph on {n} vertices: n*k is odd")
    yield from _search_regular(k, n, symmetry=False)


@dataclass(frozen=True)
class Survivor:
    graph6: str
    n: int
    mu1: float
    atlas_name: str | None
    borderline: bool


@dataclass
class ClassificationReport:
    k: int
    z: float
    n_max: int
    budget: int
    derived_bound: int | None
    capped: bool
    counts: dict[int, int] = field(default_factory=dict)
    survivors: list[Survivor] = field(default_factory=list)

    @property
    def realized_max(self) -> int | None:
        if not self.survivors:
            return None
        return max(s.n for s in self.survivors)

    @property
    def survivor_names(self) -> set[str | None]:
        return {s.atlas_name for s in self.survivors}


def _cheap_vertex_bound(k: int, z: float) -> int:
    """Best closed-form or machine vertex bound, used for the default n_max."""
    best = None
    for attempt in (
        lambda: linear_bound(k, z),
        lambda: two_term_bound(k, z),
        lambda: machine_bound(k, z),
    ):
        try:
            cert = attempt()
        except Exception:
            continue
        if best is None or cert.vertex_bound_int < best:
            best = cert.vertex_bound_int
    if best is None:
        raise ValueError(f"no vertex bound available at k={k}, z={z}")
    return best


def classify(
    k: int,
    z: float,
    n_max: int | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
    cap: bool = False,
) -> ClassificationReport:
    """All isomorphism classes of connected k-regular graphs with mu1 <= z
    among n <= n_max vertices, matched against the atlas by canonical form.

    n_max defaults to the best available vertex bound.  A required n_max above
    the budget raises BudgetExceeded unless cap=True, which truncates the scan
    to the budget and flags the report as capped (the survivor list is then
    exhaustive only up to the budget).
    """
    if k < 3:
        raise ValueError("degree k must be at least 3")
    if not z < 2.0 * math.sqrt(k - 1.0):
        raise ValueError("classification needs z < 2*sqrt(k-1)")
    derived = None
    if n_max is None:
        derived = _cheap_vertex_bound(k, z)
        n_max = derived
    capped = False
    if n_max > budget:
        if not cap:
            raise BudgetExceeded(required=n_max, budget=budget)
        n_max = budget
        capped = True

    from .atlas import atlas_all  # deferred: atlas builds Graphs from here

    atlas_forms = {
        canonical_form(entry.graph): entry.name
        for entry in atlas_all()
        if entry.graph.n <= n_max
    }
    report = ClassificationReport(
        k=k,
        z=z,
        n_max=n_max,
        budget=budget,
        derived_bound=derived,
        capped=capped,
    )
    for n in range(k + 1, n_max + 1):
        if (n * k) % 2:
            report.counts[n] = 0
            continue
        count = 0
        for g in enumerate_regular(k, n):
            count += 1
            value = mu1(g)
            if value <= z + _MU1_SLACK:
                name = atlas_forms.get(canonical_form(g))
                report.survivors.append(
                    Survivor(
                        graph6=graph6_encode(g),
                        n=n,
                        mu1=value,
                        atlas_name=name,
                        borderline=abs(value - z) < _BORDERLINE,
                    )
                )
        report.counts[n] = count
    return report
