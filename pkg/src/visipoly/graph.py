"""Simple undirected graphs, standard families, corona products and distances.

Vertices are the integers ``0..n-1``.  Vertex sets cross the public API as
``frozenset[int]``; internally most algorithms work on ``int`` bitmasks where
bit ``v`` stands for vertex ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

VertexSet = frozenset  # frozenset[int]


class GraphError(ValueError):
    """Invalid graph construction or argument."""


class DisconnectedGraphError(GraphError):
    """A distance-dependent operation was given a disconnected graph."""

    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(
            f"graph is disconnected: vertices {u} and {v} lie in different components"
        )


class ResourceLimitError(RuntimeError):
    """An exponential computation was asked to exceed its configured cap."""


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph given by per-vertex neighbour sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency sets, got {len(self.adj)}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if v not in self.adj[w]:
                    raise GraphError(f"adjacency not symmetric on edge {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_complete(self) -> bool:
        return all(len(s) == self.n - 1 for s in self.adj)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(s) for s in self.adj)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs hop distances; raises DisconnectedGraphError if needed."""
        return all_pairs_distances(self)

    def check_vertices(self, vertices: Iterable[int]) -> frozenset[int]:
        vs = frozenset(vertices)
        for v in vs:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} not in graph of order {self.n}")
        return vs


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


_BUILDERS = {"path": path_graph, "cycle": cycle_graph, "complete": complete_graph}


def standard_graph(kind: str, n: int) -> Graph:
    """Build P_n, C_n or K_n by name (``"path"``, ``"cycle"``, ``"complete"``)."""
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    if n < 1:
        raise GraphError(f"order must be positive, got {n}")
    return builder(n)


@dataclass(frozen=True)
class CoronaLabeling:
    """Index layout of G⊙H: base vertices first, then one block per copy of H."""

    m: int
    n_h: int

    @property
    def order(self) -> int:
        return self.m * (1 + self.n_h)

    def base(self, w: int) -> int:
        if not 0 <= w < self.m:
            raise GraphError(f"base vertex {w} out of range")
        return w

    def copy(self, w: int, j: int) -> int:
        if not (0 <= w < self.m and 0 <= j < self.n_h):
            raise GraphError(f"copy vertex ({w}, {j}) out of range")
        return self.m + w * self.n_h + j

    def copies(self, w: int) -> range:
        start = self.m + w * self.n_h
        return range(start, start + self.n_h)

    def locate(self, x: int) -> tuple[int, int | None]:
        """Inverse map: ``(w, None)`` for a base vertex, ``(w, j)`` for a copy."""
        if not 0 <= x < self.order:
            raise GraphError(f"vertex {x} out of range")
        if x < self.m:
            return x, None
        w, j = divmod(x - self.m, self.n_h)
        return w, j

    def is_base(self, x: int) -> bool:
        return x < self.m


def corona(g: Graph, h: Graph) -> tuple[Graph, CoronaLabeling]:
    """Corona product G⊙H with the fixed base-then-copies labeling."""
    lab = CoronaLabeling(g.n, h.n)
    edges = list(g.edges())
    for w in range(g.n):
        edges.extend((lab.copy(w, i), lab.copy(w, j)) for i, j in h.edges())
        edges.extend((w, x) for x in lab.copies(w))
    return Graph.from_edges(lab.order, edges), lab


def bfs_distances(g: Graph, source: int, banned: int = 0) -> list[int]:
    """Hop distances from ``source`` avoiding vertices in the ``banned`` mask; -1 if unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0 and not banned >> w & 1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return -1 not in bfs_distances(g, 0)


def all_pairs_distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    rows = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if -1 in dist:
            raise DisconnectedGraphError(s, dist.index(-1))
        rows.append(tuple(dist))
    return tuple(rows)


def induced_diameter(g: Graph, dm, x: Iterable[int]) -> int:
    """Largest distance in ``g`` between two members of ``x``."""
    xs = sorted(g.check_vertices(x))
    if not xs:
        raise GraphError("diameter of an empty vertex set is undefined")
    if dm is None:
        dm = g.distances
    return max((dm[u][v] for u, v in combinations(xs, 2)), default=0)


def diameter(g: Graph) -> int:
    return max(max(row) for row in g.distances)
