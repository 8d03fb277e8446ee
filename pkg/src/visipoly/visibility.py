"""Mutual-visibility predicates and exhaustive enumeration.

Two vertices ``u, v`` are *X-visible* when some shortest ``u``-``v`` path has
no internal vertex in ``X``.  A set ``S`` is a mutual-visibility set when all
of its pairs are ``S``-visible.  That family is closed under taking subsets,
which is what lets :func:`iter_mv_sets` prune whole branches of the subset
lattice.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .graph import (
    Graph,
    GraphError,
    ResourceLimitError,
    from_mask,
    iter_bits,
    to_mask,
)
from .poly import Polynomial

DEFAULT_MAX_N = 24


def max_enumeration_order() -> int:
    """Vertex cap for exponential enumeration (env ``VISIPOLY_MAX_N`` overrides)."""
    raw = os.environ.get("VISIPOLY_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"VISIPOLY_MAX_N must be an integer, got {raw!r}") from None


def check_order(g: Graph, max_n: int | None = None, what: str = "enumeration") -> None:
    cap = max_enumeration_order() if max_n is None else max_n
    if g.n > cap:
        raise ResourceLimitError(
            f"{what} refused: graph has {g.n} vertices, cap is {cap} "
            "(raise it with VISIPOLY_MAX_N)"
        )


class Geodesics:
    """Per-pair geodesic intervals, split into distance layers.

    ``layers(u, v)[i-1]`` is the mask of vertices ``w`` with ``d(u, w) = i``
    and ``d(w, v) = d(u, v) - i``, i.e. the possible ``i``-th vertex of a
    shortest ``u``-``v`` path.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.dist = g.distances
        n = g.n
        ecc = max(max(row) for row in self.dist)
        self.rings = [[0] * (ecc + 1) for _ in range(n)]
        for u in range(n):
            for w, d in enumerate(self.dist[u]):
                self.rings[u][d] |= 1 << w
        self._layers: dict[tuple[int, int], tuple[int, ...]] = {}

    def layers(self, u: int, v: int) -> tuple[int, ...]:
        key = (u, v)
        got = self._layers.get(key)
        if got is None:
            d = self.dist[u][v]
            ru, rv = self.rings[u], self.rings[v]
            got = tuple(ru[i] & rv[d - i] for i in range(1, d))
            self._layers[key] = got
        return got

    def interior(self, u: int, v: int) -> int:
        """Mask of vertices lying strictly inside some shortest u-v path."""
        mask = 0
        for layer in self.layers(u, v):
            mask |= layer
        return mask

    def visible(self, u: int, v: int, x_mask: int) -> bool:
        """BFS from ``u`` restricted to the u-v interval with ``x_mask`` deleted.

        ``v`` is reached at distance ``d(u, v)`` iff every layer of the sweep
        keeps a vertex reachable from the previous one.
        """
        layers = self.layers(u, v)
        if not layers:
            return True
        adj = self.g.adj_masks
        frontier = 1 << u
        for layer in layers:
            allowed = layer & ~x_mask
            reached = 0
            for w in iter_bits(allowed):
                if adj[w] & frontier:
                    reached |= 1 << w
            if not reached:
                return False
            frontier = reached
        return True


@lru_cache(maxsize=512)
def geodesics(g: Graph) -> Geodesics:
    return Geodesics(g)


def mask_is_mv(geo: Geodesics, mask: int) -> bool:
    members = list(iter_bits(mask))
    return all(geo.visible(a, b, mask) for a, b in combinations(members, 2))


def is_pair_x_visible(g: Graph, u: int, v: int, x: Iterable[int]) -> bool:
    """True iff some shortest u-v path has no internal vertex in ``x``."""
    if u == v:
        raise GraphError("pair visibility needs two distinct vertices")
    xs = g.check_vertices(x)
    g.check_vertices((u, v))
    return geodesics(g).visible(u, v, to_mask(xs))


def is_vertex_x_visible(g: Graph, u: int, x: Iterable[int]) -> bool:
    xs = g.check_vertices(x)
    if u in xs:
        raise GraphError(f"vertex {u} belongs to X")
    geo = geodesics(g)
    xm = to_mask(xs)
    return all(geo.visible(u, v, xm) for v in xs)


def is_mv_set(g: Graph, s: Iterable[int]) -> bool:
    return mask_is_mv(geodesics(g), to_mask(g.check_vertices(s)))


@dataclass(frozen=True)
class ThetaTable:
    """``counts[k][d]``: mutual-visibility sets of size ``k`` and diameter ``d``.

    The empty set is booked at ``counts[0][0]`` by convention.
    """

    counts: tuple[tuple[int, ...], ...]

    @property
    def mu(self) -> int:
        return len(self.counts) - 1

    def polynomial(self) -> Polynomial:
        return Polynomial(sum(row) for row in self.counts)

    def restricted_polynomial(self, d: int) -> Polynomial:
        return Polynomial([1] + [sum(row[: d + 1]) for row in self.counts[1:]])


def iter_mv_masks(g: Graph, max_n: int | None = None) -> Iterator[tuple[int, int, int]]:
    """Depth-first walk over all mutual-visibility sets.

    Yields ``(mask, size, diameter)``, starting with the empty set.  A set is
    only extended by vertices above its current maximum, and only while the
    extension is still a mutual-visibility set.
    """
    check_order(g, max_n)
    geo = geodesics(g)
    dist = geo.dist
    n = g.n
    yield 0, 0, 0
    # stack entries: (mask, members in increasing order, size, diameter)
    stack = [(1 << v, [v], 1, 0) for v in reversed(range(n))]
    while stack:
        mask, members, size, diam = stack.pop()
        yield mask, size, diam
        children = []
        for v in range(members[-1] + 1, n):
            ext = mask | (1 << v)
            if mask_is_mv(geo, ext):
                d_v = max(dist[a][v] for a in members)
                children.append((ext, members + [v], size + 1, max(diam, d_v)))
        stack.extend(reversed(children))


def iter_mv_sets(g: Graph, max_n: int | None = None) -> Iterator[frozenset[int]]:
    for mask, _, _ in iter_mv_masks(g, max_n):
        yield from_mask(mask)


def enumerate_mv_sets(g: Graph, max_n: int | None = None) -> ThetaTable:
    table: dict[tuple[int, int], int] = {}
    top_k = top_d = 0
    for _, k, d in iter_mv_masks(g, max_n):
        table[k, d] = table.get((k, d), 0) + 1
        top_k = max(top_k, k)
        top_d = max(top_d, d)
    counts = tuple(
        tuple(table.get((k, d), 0) for d in range(top_d + 1)) for k in range(top_k + 1)
    )
    return ThetaTable(counts)


def visibility_polynomial(g: Graph, max_n: int | None = None) -> Polynomial:
    return enumerate_mv_sets(g, max_n).polynomial()


def restricted_visibility_polynomial(g: Graph, d: int, max_n: int | None = None) -> Polynomial:
    """Count only mutual-visibility sets whose diameter in ``g`` is at most ``d``."""
    diam = max(max(row) for row in g.distances)
    if not 0 <= d <= diam:
        raise GraphError(f"diameter bound {d} outside 0..{diam}")
    return enumerate_mv_sets(g, max_n).restricted_polynomial(d)


def mu(g: Graph, max_n: int | None = None) -> int:
    """Mutual-visibility number."""
    return visibility_polynomial(g, max_n).degree


def is_shortest_separator(g: Graph, w: int, u: int, v: int) -> bool:
    """True iff ``w`` (distinct from u, v) lies on every shortest u-v path."""
    if w in (u, v) or u == v:
        raise GraphError("a shortest-separator must differ from both endpoints")
    return not geodesics(g).visible(u, v, 1 << w)


def path_cut(g: Graph) -> frozenset[int]:
    """Vertices that are a shortest-separator for at least one pair."""
    geo = geodesics(g)
    cut = 0
    for u, v in combinations(range(g.n), 2):
        for w in iter_bits(geo.interior(u, v) & ~cut):
            if not geo.visible(u, v, 1 << w):
                cut |= 1 << w
    return from_mask(cut)


def is_set_separator(g: Graph, w: int, a: Iterable[int], b: Iterable[int]) -> bool:
    sa, sb = g.check_vertices(a), g.check_vertices(b)
    if not sa or not sb:
        raise GraphError("set-separator needs two nonempty sets")
    if sa & sb:
        raise GraphError("set-separator sets must be disjoint")
    if w in sa or w in sb:
        raise GraphError(f"vertex {w} belongs to one of the separated sets")
    geo = geodesics(g)
    return all(not geo.visible(u, v, 1 << w) for u in sa for v in sb)
