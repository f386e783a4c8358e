"""Exact graph invariants: distances, diameter, girth, multiset and metric dimension.

Every search here is brute force and exact. Unreachable pairs carry the
token :data:`INF`, which sorts after every finite distance.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import ResourceLimitError, SizeLimitError
from .graphs import SimpleGraph

INF = math.inf
DEFAULT_WORK_LIMIT = 2**24
ISOMORPHISM_LIMIT = 16


def bfs_distances(G: SimpleGraph, src: int) -> list:
    dist = [INF] * G.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(G: SimpleGraph) -> list[list]:
    return [bfs_distances(G, v) for v in range(G.n)]


def is_connected(G: SimpleGraph) -> bool:
    if G.n == 0:
        return True
    return INF not in bfs_distances(G, 0)


def is_regular(G: SimpleGraph) -> bool:
    return len(set(G.degrees())) <= 1


def eccentricity(G: SimpleGraph, v: int, dist=None):
    row = dist[v] if dist is not None else bfs_distances(G, v)
    return max(row)


def diameter(G: SimpleGraph, dist=None):
    """Largest distance; ``None`` for the empty graph, ``INF`` if disconnected."""
    if G.n == 0:
        return None
    dist = dist if dist is not None else all_pairs_distances(G)
    return max(max(row) for row in dist)


def girth(G: SimpleGraph):
    """Length of a shortest cycle, or ``INF`` for a forest.

    BFS from every root; a non-tree edge (u, w) closes a closed walk of
    length d(u) + d(w) + 1 through the root, and the minimum over all roots
    is attained by a shortest cycle.
    """
    best = INF
    for root in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# --- multiset dimension -----------------------------------------------------------------

@dataclass(frozen=True)
class MdimResult:
    """``kind`` is one of ``"undefined"``, ``"finite"``, ``"infinite"``."""

    kind: str
    value: int | None = None
    witness: tuple[int, ...] | None = field(default=None, compare=False)

    @classmethod
    def undefined(cls) -> "MdimResult":
        return cls("undefined")

    @classmethod
    def finite(cls, k: int, witness=None) -> "MdimResult":
        return cls("finite", k, tuple(witness) if witness is not None else None)

    @classmethod
    def infinite(cls) -> "MdimResult":
        return cls("infinite")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __str__(self) -> str:
        if self.kind == "finite":
            return str(self.value)
        return "infinity" if self.kind == "infinite" else "undefined"


def multiset_signature(G: SimpleGraph, B: Sequence[int], v: int, dist=None) -> tuple:
    row = dist[v] if dist is not None else bfs_distances(G, v)
    return tuple(sorted(row[b] for b in B))


def vector_signature(G: SimpleGraph, W: Sequence[int], v: int, dist=None) -> tuple:
    row = dist[v] if dist is not None else bfs_distances(G, v)
    return tuple(row[w] for w in W)


def _injective(dist, B, signature: Callable) -> bool:
    seen = set()
    for row in dist:
        s = signature(row, B)
        if s in seen:
            return False
        seen.add(s)
    return True


def _multiset_sig(row, B):
    return tuple(sorted(row[b] for b in B))


def _vector_sig(row, B):
    return tuple(row[b] for b in B)


def is_m_resolving(G: SimpleGraph, B: Iterable[int], dist=None) -> bool:
    B = list(B)
    if not B:
        raise ValueError("probe set must be nonempty")
    dist = dist if dist is not None else all_pairs_distances(G)
    return _injective(dist, B, _multiset_sig)


def is_resolving(G: SimpleGraph, W: Iterable[int], dist=None) -> bool:
    W = list(W)
    dist = dist if dist is not None else all_pairs_distances(G)
    return _injective(dist, W, _vector_sig)


def _first_resolving_with_lead(args):
    dist, k, lead, signature = args
    n = len(dist)
    for rest in combinations(range(lead + 1, n), k - 1):
        B = (lead, *rest)
        if _injective(dist, B, signature):
            return B
    return None


def _search(G: SimpleGraph, signature: Callable, work_limit: int, workers: int):
    """Smallest k and lexicographically first k-subset that resolves, or ``None``."""
    n = G.n
    dist = all_pairs_distances(G)
    tested = 0
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for k in range(1, n + 1):
            count = math.comb(n, k)
            if tested + count > work_limit:
                raise ResourceLimitError(
                    f"subset search would exceed the work limit of {work_limit} tests", k - 1
                )
            if pool is None:
                for B in combinations(range(n), k):
                    if _injective(dist, B, signature):
                        return k, B
            else:
                # one task per leading element; the lowest lead with a hit is the lexicographic minimum
                tasks = [(dist, k, lead, signature) for lead in range(n - k + 1)]
                for hit in pool.map(_first_resolving_with_lead, tasks):
                    if hit is not None:
                        return k, hit
            tested += count
        return None
    finally:
        if pool is not None:
            pool.shutdown()


def multiset_dimension(G: SimpleGraph, work_limit: int = DEFAULT_WORK_LIMIT, workers: int = 1) -> MdimResult:
    """Exact multiset dimension.

    Subsets are tried by increasing size, lexicographically within a size,
    and the first m-resolving set found is returned as the witness. The
    verdict ``infinite`` is only given after all nonempty subsets fail;
    supersets of resolving sets need not resolve, so no pruning is done.
    """
    if G.n == 0:
        return MdimResult.undefined()
    if G.n == 1:
        return MdimResult.finite(0, ())
    hit = _search(G, _multiset_sig, work_limit, workers)
    if hit is None:
        return MdimResult.infinite()
    return MdimResult.finite(*hit)


def metric_dimension(G: SimpleGraph, work_limit: int = DEFAULT_WORK_LIMIT, workers: int = 1) -> int | None:
    """Classical metric dimension (ordered distance vectors); ``None`` for the empty graph."""
    if G.n == 0:
        return None
    if G.n == 1:
        return 0
    hit = _search(G, _vector_sig, work_limit, workers)
    assert hit is not None, "the full vertex set always resolves"
    return hit[0]


# --- isomorphism and named classes -------------------------------------------------------

def is_isomorphic(G: SimpleGraph, H: SimpleGraph, limit: int = ISOMORPHISM_LIMIT) -> bool:
    """Backtracking isomorphism test for small graphs."""
    if G.n > limit or H.n > limit:
        raise SizeLimitError(f"isomorphism test limited to {limit} vertices")
    if G.n != H.n or G.num_edges() != H.num_edges():
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    n = G.n
    # map high-degree vertices first; it prunes hardest
    order = sorted(range(n), key=lambda v: -G.degree(v))
    gdeg, hdeg = G.degrees(), H.degrees()
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or hdeg[w] != gdeg[v]:
                continue
            if all(G.has_edge(v, u) == H.has_edge(w, mu) for u, mu in mapping.items()):
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    return extend(0)


def bipartition(G: SimpleGraph) -> tuple[list[int], list[int]] | None:
    """Two colour classes of a connected bipartite graph, else ``None``."""
    if G.n == 0 or not is_connected(G):
        return None
    colour = [-1] * G.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if colour[w] == -1:
                colour[w] = 1 - colour[u]
                queue.append(w)
            elif colour[w] == colour[u]:
                return None
    return [v for v in range(G.n) if colour[v] == 0], [v for v in range(G.n) if colour[v] == 1]


def complete_bipartite_parts(G: SimpleGraph) -> tuple[int, int] | None:
    parts = bipartition(G)
    if parts is None or G.n < 2:
        return None
    a, b = len(parts[0]), len(parts[1])
    if G.num_edges() != a * b:
        return None
    return (min(a, b), max(a, b))


def classify_named(G: SimpleGraph) -> set[str]:
    """Named families ``G`` belongs to, e.g. ``{"path", "star", "complete-bipartite(1,2)"}``."""
    n = G.n
    if n == 0:
        return {"empty"}
    if n == 1:
        return {"single-vertex", "path", "complete"}
    tags: set[str] = set()
    degs = G.degrees()
    m = G.num_edges()
    connected = is_connected(G)
    if connected and m == n - 1 and max(degs) <= 2:
        tags.add("path")
    if connected and n >= 3 and all(d == 2 for d in degs):
        tags.add("cycle")
    if G.is_complete():
        tags.add("complete")
    parts = complete_bipartite_parts(G)
    if parts is not None:
        tags.add(f"complete-bipartite({parts[0]},{parts[1]})")
        if parts[0] == 1:
            tags.add("star")
    return tags


def has_tag(tags: set[str], prefix: str) -> bool:
    return any(t == prefix or t.startswith(prefix + "(") for t in tags)
