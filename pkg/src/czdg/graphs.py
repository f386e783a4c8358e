"""Zero-divisor graphs and their compression by annihilator classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import WellDefinednessError
from .ring import ElementSet, FiniteRing, nonzero_zero_divisors


@dataclass
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj`` holds one neighbour bitmask per vertex. ``class_sizes`` is only
    meaningful for compressed graphs, where each vertex stands for an
    annihilator class.
    """

    n: int
    labels: list[str]
    adj: list[int]
    provenance: str = "synthetic"
    class_sizes: list[int] | None = None
    members: list[list[int]] | None = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.labels) != self.n or len(self.adj) != self.n:
            raise ValueError("labels/adjacency length does not match vertex count")
        for v in range(self.n):
            if (self.adj[v] >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in self.neighbors(v):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None,
                   provenance: str = "synthetic") -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(n, list(labels), adj, provenance)

    def neighbors(self, v: int) -> list[int]:
        m, out = self.adj[v], []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_complete(self) -> bool:
        return self.num_edges() == self.n * (self.n - 1) // 2

    def is_empty(self) -> bool:
        return self.n == 0


# --- named synthetic graphs used by oracles and tests ---

def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(m: int, n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


# --- ring graphs ---

def zero_divisor_graph(R: FiniteRing) -> SimpleGraph:
    """Γ(R): vertices Z*(R), edge between distinct x, y with xy = 0."""
    verts = nonzero_zero_divisors(R).members()
    pos = {x: i for i, x in enumerate(verts)}
    adj = [0] * len(verts)
    for i, x in enumerate(verts):
        ann = R.annihilator_mask(x)
        for y in verts:
            if y != x and (ann >> y) & 1:
                adj[i] |= 1 << pos[y]
    return SimpleGraph(len(verts), [R.label(x) for x in verts], adj, "zdg")


@dataclass(frozen=True)
class AnnihilatorClass:
    representative: int
    members: tuple[int, ...]
    annihilator: int  # bitmask


@dataclass
class ClassPartition:
    """Z*(R) split by equality of annihilators, ordered by representative."""

    ring: FiniteRing = field(repr=False)
    classes: list[AnnihilatorClass]
    class_of: dict[int, int]

    def __len__(self) -> int:
        return len(self.classes)

    def member_labels(self) -> list[list[str]]:
        return [[self.ring.label(x) for x in c.members] for c in self.classes]

    def annihilator(self, i: int) -> ElementSet:
        return ElementSet(self.ring, self.classes[i].annihilator)


def annihilator_classes(R: FiniteRing) -> ClassPartition:
    groups: dict[int, list[int]] = {}
    for x in nonzero_zero_divisors(R):
        groups.setdefault(R.annihilator_mask(x), []).append(x)
    classes = sorted(
        (AnnihilatorClass(min(ms), tuple(sorted(ms)), ann) for ann, ms in groups.items()),
        key=lambda c: c.representative,
    )
    class_of = {x: i for i, c in enumerate(classes) for x in c.members}
    return ClassPartition(R, classes, class_of)


def compressed_graph(R: FiniteRing, partition: ClassPartition | None = None) -> SimpleGraph | None:
    """Γ_E(R), or ``None`` when R is an integral domain (the graph is undefined).

    Raises :class:`WellDefinednessError` if two classes have some member
    pairs with zero product and others without.
    """
    part = partition if partition is not None else annihilator_classes(R)
    if not part.classes:
        return None
    k = len(part.classes)
    adj = [0] * k
    for i, j in combinations(range(k), 2):
        ci, cj = part.classes[i], part.classes[j]
        linked = (ci.annihilator >> cj.representative) & 1
        # every member of [y] must agree with the representative
        for y in cj.members:
            if ((ci.annihilator >> y) & 1) != linked:
                raise WellDefinednessError(
                    f"classes [{R.label(ci.representative)}] and [{R.label(cj.representative)}] "
                    f"have inconsistent products (member {R.label(y)})"
                )
        if linked:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return SimpleGraph(
        k,
        [R.label(c.representative) for c in part.classes],
        adj,
        "czdg",
        class_sizes=[len(c.members) for c in part.classes],
        members=[list(c.members) for c in part.classes],
    )
