"""Constructors and spectral fixtures for the named graphs used in tests.

The thirteen fixed entries are the six cubic graphs with mu1 <= 1 and the
seven quartic graphs with mu1 <= 1, each carrying its known spectrum.
Irrational eigenvalues are recorded through their minimal polynomials rather
than decimal literals, so fixture checks are residual checks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable

from . import graph6
from .errors import UnknownName
from .spectra import Graph

CUBIC_GROUP = "cubic_mu1_le_1"
QUARTIC_GROUP = "quartic_mu1_le_1"
FAMILY_GROUP = "family"


@dataclass(frozen=True)
class RootOf:
    """An eigenvalue known only as a root of the given monic polynomial."""

    coeffs: tuple[float, ...]  # monomial basis, ascending powers

    def residual(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return abs(acc)


SpectrumSpec = tuple[tuple[float | RootOf, int], ...]


@dataclass(frozen=True)
class AtlasEntry:
    name: str
    graph: Graph
    expected_mu1: float | RootOf
    expected_spectrum: SpectrumSpec
    group: str

    @property
    def graph6(self) -> str:
        return graph6.encode(self.graph)


def _from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    # 1-indexed edge pairs, matching the reference drawings
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in pairs])


def complete(n: int) -> AtlasEntry:
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    return AtlasEntry(
        name=f"K{n}",
        graph=g,
        expected_mu1=-1.0,
        expected_spectrum=((float(n - 1), 1), (-1.0, n - 1)),
        group=FAMILY_GROUP,
    )


def complete_bipartite(n: int) -> AtlasEntry:
    g = Graph.from_edges(2 * n, [(u, n + v) for u in range(n) for v in range(n)])
    return AtlasEntry(
        name=f"K{n},{n}",
        graph=g,
        expected_mu1=0.0,
        expected_spectrum=((float(n), 1), (0.0, 2 * n - 2), (float(-n), 1)),
        group=FAMILY_GROUP,
    )


def circulant(n: int, steps: Iterable[int]) -> Graph:
    """Vertex i adjacent to i +- s mod n for each step s."""
    edges = []
    for i in range(n):
        for s in steps:
            j = (i + s) % n
            if i != j:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def _k4() -> AtlasEntry:
    entry = complete(4)
    return AtlasEntry("K4", entry.graph, -1.0, entry.expected_spectrum, CUBIC_GROUP)


def _k33() -> AtlasEntry:
    entry = complete_bipartite(3)
    return AtlasEntry("K33", entry.graph, 0.0, entry.expected_spectrum, CUBIC_GROUP)


def _y2_prism() -> AtlasEntry:
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
    return AtlasEntry(
        name="Y2_prism",
        graph=_from_pairs(6, pairs),
        expected_mu1=1.0,
        expected_spectrum=((3.0, 1), (1.0, 1), (0.0, 2), (-2.0, 2)),
        group=CUBIC_GROUP,
    )


def _cube() -> AtlasEntry:
    pairs = [
        (1, 2), (1, 3), (1, 5), (2, 4), (2, 6), (3, 4),
        (3, 7), (4, 8), (5, 6), (5, 7), (6, 8), (7, 8),
    ]
    # bipartite, so the spectrum is symmetric and ends at -3
    return AtlasEntry(
        name="cube",
        graph=_from_pairs(8, pairs),
        expected_mu1=1.0,
        expected_spectrum=((3.0, 1), (1.0, 3), (-1.0, 3), (-3.0, 1)),
        group=CUBIC_GROUP,
    )


def _wagner() -> AtlasEntry:
    pairs = [
        (1, 2), (1, 8), (1, 5), (2, 3), (2, 6), (3, 4),
        (3, 7), (4, 5), (4, 8), (5, 6), (6, 7), (7, 8),
    ]
    # the four irrational eigenvalues are the roots of x^2 + 2x - 1, two each;
    # the multiset {3, 1, 1, sqrt2-1 x2, -1, -1-sqrt2 x2} has trace zero
    return AtlasEntry(
        name="wagner",
        graph=_from_pairs(8, pairs),
        expected_mu1=1.0,
        expected_spectrum=(
            (3.0, 1),
            (1.0, 2),
            (-1.0, 1),
            (RootOf((-1.0, 2.0, 1.0)), 4),
        ),
        group=CUBIC_GROUP,
    )


def _petersen() -> AtlasEntry:
    pairs = [
        (1, 2), (1, 5), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8), (4, 5),
        (4, 9), (5, 10), (6, 8), (6, 9), (7, 9), (7, 10), (8, 10),
    ]
    return AtlasEntry(
        name="petersen",
        graph=_from_pairs(10, pairs),
        expected_mu1=1.0,
        expected_spectrum=((3.0, 1), (1.0, 5), (-2.0, 4)),
        group=CUBIC_GROUP,
    )


def _k5() -> AtlasEntry:
    entry = complete(5)
    return AtlasEntry("K5", entry.graph, -1.0, entry.expected_spectrum, QUARTIC_GROUP)


def _octahedron() -> AtlasEntry:
    pairs = [
        (1, 2), (1, 3), (1, 5), (1, 6), (2, 3), (2, 4),
        (2, 6), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6),
    ]
    return AtlasEntry(
        name="octahedron",
        graph=_from_pairs(6, pairs),
        expected_mu1=0.0,
        expected_spectrum=((4.0, 1), (0.0, 3), (-2.0, 2)),
        group=QUARTIC_GROUP,
    )


def _c7_12() -> AtlasEntry:
    cubic = RootOf((-1.0, -1.0, 2.0, 1.0))  # x^3 + 2x^2 - x - 1
    return AtlasEntry(
        name="C7_12",
        graph=circulant(7, (1, 2)),
        expected_mu1=cubic,
        expected_spectrum=((4.0, 1), (cubic, 6)),
        group=QUARTIC_GROUP,
    )


def _g7() -> AtlasEntry:
    pairs = [
        (1, 2), (1, 5), (1, 6), (1, 7), (2, 3), (2, 4), (2, 6),
        (3, 4), (3, 5), (3, 7), (4, 7), (4, 5), (5, 6), (6, 7),
    ]
    return AtlasEntry(
        name="G7",
        graph=_from_pairs(7, pairs),
        expected_mu1=1.0,
        expected_spectrum=((4.0, 1), (1.0, 1), (0.0, 2), (-1.0, 2), (-3.0, 1)),
        group=QUARTIC_GROUP,
    )


def _k44() -> AtlasEntry:
    entry = complete_bipartite(4)
    return AtlasEntry("K44", entry.graph, 0.0, entry.expected_spectrum, QUARTIC_GROUP)


# The two source drawings on nine vertices are swapped relative to their
# stated spectra; each edge list below is assigned to the name whose spectrum
# it matches (4-regularity plus the spectrum pins the graph at this size).


def _g9() -> AtlasEntry:
    pairs = [
        (1, 2), (1, 7), (1, 8), (1, 9), (2, 3), (2, 4), (2, 6),
        (3, 4), (3, 8), (3, 9), (4, 5), (4, 7), (5, 6), (5, 8),
        (5, 9), (6, 7), (6, 9), (7, 8),
    ]
    cubic = RootOf((-1.0, 0.0, 3.0, 1.0))  # x^3 + 3x^2 - 1
    return AtlasEntry(
        name="G9",
        graph=_from_pairs(9, pairs),
        expected_mu1=1.0,
        expected_spectrum=((4.0, 1), (1.0, 2), (cubic, 6)),
        group=QUARTIC_GROUP,
    )


def _paley9() -> AtlasEntry:
    pairs = [
        (1, 2), (1, 6), (1, 7), (1, 9), (2, 3), (2, 8), (2, 9),
        (3, 4), (3, 7), (3, 8), (4, 5), (4, 7), (4, 9), (5, 6),
        (5, 8), (5, 9), (6, 7), (6, 8),
    ]
    return AtlasEntry(
        name="paley9",
        graph=_from_pairs(9, pairs),
        expected_mu1=1.0,
        expected_spectrum=((4.0, 1), (1.0, 4), (-2.0, 4)),
        group=QUARTIC_GROUP,
    )


_FIXED: dict[str, Callable[[], AtlasEntry]] = {
    "K4": _k4,
    "K33": _k33,
    "Y2_prism": _y2_prism,
    "cube": _cube,
    "wagner": _wagner,
    "petersen": _petersen,
    "K5": _k5,
    "octahedron": _octahedron,
    "C7_12": _c7_12,
    "G7": _g7,
    "K44": _k44,
    "G9": _g9,
    "paley9": _paley9,
}

_COMPLETE_RE = re.compile(r"^K(\d+)$")
_BIPARTITE_RE = re.compile(r"^K(\d+),(\d+)$")
_CIRCULANT_RE = re.compile(r"^C(\d+);([\d,]+)$")


def atlas_graph(name: str) -> AtlasEntry:
    """Entry by name: a fixed entry, or Kn / Kn,n / Cn;s1,s2,... patterns."""
    if name in _FIXED:
        return _FIXED[name]()
    m = _COMPLETE_RE.match(name)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise UnknownName(f"complete graph needs n >= 2, got {name}")
        return complete(n)
    m = _BIPARTITE_RE.match(name)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if a != b or a < 1:
            raise UnknownName(f"only balanced bipartite Kn,n supported, got {name}")
        return complete_bipartite(a)
    m = _CIRCULANT_RE.match(name)
    if m:
        n = int(m.group(1))
        steps = tuple(int(s) for s in m.group(2).split(","))
        g = circulant(n, steps)
        from .spectra import adjacency_spectrum, mu1  # deferred: avoids cycle

        spec = adjacency_spectrum(g)
        entry_mu1 = mu1(g)
        return AtlasEntry(
            name=name,
            graph=g,
            expected_mu1=entry_mu1,
            expected_spectrum=tuple((v, c) for v, c in spec.grouped()),
            group=FAMILY_GROUP,
        )
    raise UnknownName(f"no atlas entry named {name!r}")


def atlas_all(k: int | None = None) -> list[AtlasEntry]:
    """All fixed entries, optionally restricted to one degree."""
    entries = [build() for build in _FIXED.values()]
    if k is None:
        return entries
    groups = {3: CUBIC_GROUP, 4: QUARTIC_GROUP}
    if k not in groups:
        return []
    return [e for e in entries if e.group == groups[k]]
