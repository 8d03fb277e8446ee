"""Co-visible (c_Q-visible) sets, their maximal families and absolute-clearness.

For a vertex set ``Q``, a set ``W`` outside ``Q`` is c_Q-visible when every
pair inside ``W`` and every pair in ``Q x W`` is Q-visible.  Whether a single
vertex can belong to such a set depends only on ``Q``, and the pairwise
condition is exactly adjacency in :func:`compatibility_graph`, so c_Q-visible
sets are the cliques of that graph and the maximal ones are its maximal
cliques.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graph import Graph, GraphError, ResourceLimitError, from_mask, iter_bits, to_mask
from .visibility import check_order, geodesics, mask_is_mv


def canonical_order(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Sort by size, then lexicographically by sorted members."""
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class GammaFamily:
    """All maximal absolute c_Q-visible sets of one ``Q``."""

    q: frozenset[int]
    members: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def is_disjoint(self) -> bool:
        return all(not (a & b) for a, b in combinations(self.members, 2))


def _check_q_w(g: Graph, q, w) -> tuple[int, int]:
    qs, ws = g.check_vertices(q), g.check_vertices(w)
    if qs & ws:
        raise GraphError(f"W meets Q in {sorted(qs & ws)}")
    return to_mask(qs), to_mask(ws)


def _q_visible_mask(geo, q_mask: int, w_mask: int) -> bool:
    members = list(iter_bits(w_mask))
    return all(geo.visible(a, b, q_mask) for a, b in combinations(members, 2))


def _cross_visible(geo, q_mask: int, v: int) -> bool:
    return all(geo.visible(u, v, q_mask) for u in iter_bits(q_mask))


def is_q_visible_set(g: Graph, q: Iterable[int], w: Iterable[int]) -> bool:
    """Every pair of ``w`` is Q-visible."""
    q_mask, w_mask = _check_q_w(g, q, w)
    return _q_visible_mask(geodesics(g), q_mask, w_mask)


def is_cq_visible(g: Graph, q: Iterable[int], w: Iterable[int]) -> bool:
    q_mask, w_mask = _check_q_w(g, q, w)
    geo = geodesics(g)
    return _q_visible_mask(geo, q_mask, w_mask) and all(
        _cross_visible(geo, q_mask, v) for v in iter_bits(w_mask)
    )


def is_absolute_cq_visible(g: Graph, q: Iterable[int], w: Iterable[int]) -> bool:
    q_mask, _ = _check_q_w(g, q, w)
    return mask_is_mv(geodesics(g), q_mask) and is_cq_visible(g, q, w)


def _nonempty_q(g: Graph, q) -> int:
    qs = g.check_vertices(q)
    if not qs:
        raise GraphError("Q must be nonempty")
    return to_mask(qs)


def _admissible_mask(geo, full: int, q_mask: int) -> int:
    return to_mask(v for v in iter_bits(full & ~q_mask) if _cross_visible(geo, q_mask, v))


def admissible_vertices(g: Graph, q: Iterable[int]) -> frozenset[int]:
    """Vertices ``v`` outside ``Q`` for which ``{v}`` is c_Q-visible."""
    q_mask = _nonempty_q(g, q)
    return from_mask(_admissible_mask(geodesics(g), g.full_mask, q_mask))


def _compat_masks(geo, q_mask: int, adm: Sequence[int]) -> list[int]:
    nbrs = [0] * len(adm)
    for i, j in combinations(range(len(adm)), 2):
        if geo.visible(adm[i], adm[j], q_mask):
            nbrs[i] |= 1 << j
            nbrs[j] |= 1 << i
    return nbrs


def compatibility_graph(g: Graph, q: Iterable[int]) -> tuple[Graph | None, tuple[int, ...]]:
    """Graph on the admissible vertices joining Q-visible pairs.

    Returns ``(graph, labels)`` where local vertex ``i`` is original vertex
    ``labels[i]``; ``graph`` is None when nothing is admissible.
    """
    q_mask = _nonempty_q(g, q)
    geo = geodesics(g)
    adm = tuple(iter_bits(_admissible_mask(geo, g.full_mask, q_mask)))
    if not adm:
        return None, adm
    nbrs = _compat_masks(geo, q_mask, adm)
    return Graph(len(adm), tuple(from_mask(m) for m in nbrs)), adm


def maximal_cliques(nbrs: Sequence[int]) -> Iterator[int]:
    """Bron-Kerbosch with Tomita pivoting over bitmask adjacency."""

    def expand(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot = max(iter_bits(p | x), key=lambda u: (p & nbrs[u]).bit_count())
        for v in iter_bits(p & ~nbrs[pivot]):
            yield from expand(r | 1 << v, p & nbrs[v], x & nbrs[v])
            p &= ~(1 << v)
            x |= 1 << v

    if nbrs:
        yield from expand(0, (1 << len(nbrs)) - 1, 0)


def maximal_absolute_cq_sets(g: Graph, q: Iterable[int], max_n: int | None = None) -> GammaFamily:
    """The family of maximal absolute c_Q-visible sets (empty if Q is not a mutual-visibility set)."""
    q_mask = _nonempty_q(g, q)
    if q_mask == g.full_mask:
        raise GraphError("Q must be a proper subset of the vertices")
    return _gamma(geodesics(g), g.full_mask, q_mask, max_n)


def _gamma(geo, full: int, q_mask: int, max_n: int | None = None) -> GammaFamily:
    q = from_mask(q_mask)
    if not mask_is_mv(geo, q_mask):
        return GammaFamily(q, ())
    adm = tuple(iter_bits(_admissible_mask(geo, full, q_mask)))
    if not adm:
        return GammaFamily(q, ())
    if max_n is not None and len(adm) > max_n:
        raise ResourceLimitError(f"{len(adm)} admissible vertices exceed cap {max_n}")
    nbrs = _compat_masks(geo, q_mask, adm)
    found = [frozenset(adm[i] for i in iter_bits(c)) for c in maximal_cliques(nbrs)]
    return GammaFamily(q, tuple(canonical_order(found)))


def is_disjoint_visible(g: Graph, q: Iterable[int]) -> bool:
    q_mask = _nonempty_q(g, q)
    if q_mask == g.full_mask:
        return True
    return _gamma(geodesics(g), g.full_mask, q_mask).is_disjoint()


def _subsets_by_size(n: int) -> Iterator[int]:
    # proper nonempty subsets, by size then lexicographically
    for k in range(1, n):
        for combo in combinations(range(n), k):
            yield to_mask(combo)


def absolute_clear_witness(g: Graph, max_n: int | None = None) -> frozenset[int] | None:
    """First ``Q`` (by size, then lexicographic) that is not disjoint-visible, else None."""
    check_order(g, max_n, what="absolute-clear scan")
    geo = geodesics(g)
    for q_mask in _subsets_by_size(g.n):
        if not _gamma(geo, g.full_mask, q_mask).is_disjoint():
            return from_mask(q_mask)
    return None


def is_absolute_clear(g: Graph, max_n: int | None = None) -> bool:
    return absolute_clear_witness(g, max_n) is None
