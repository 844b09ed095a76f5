"""Core graph abstractions: lazy infinite graphs, edges, rays, balls.

Vertices are identified with their position in the graph's canonical
enumeration v_0, v_1, ...  An edge is the normalized pair (lower index,
higher index); edge identity is shared by the infinite graph and every
finite minor built from it, and the tuple order is the canonical
tie-breaking order used everywhere downstream.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Optional

Vertex = int
Edge = tuple[int, int]


def mk_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


class GraphError(Exception):
    pass


class UnknownVertexError(GraphError):
    pass


class Sep(Enum):
    """Answer to: are u and v in the same component of G - S?"""

    SAME = "same"
    DIFF = "diff"
    UNKNOWN = "unknown"


class Card(Enum):
    """Answer to: is the component of u in G - S infinite?"""

    INFINITE = "infinite"
    FINITE = "finite"
    UNKNOWN = "unknown"


class LazyGraph:
    """A countably infinite (or finite), locally finite, connected graph.

    Subclasses implement ``_neighbors``; the public ``neighbors`` caches
    and returns a sorted tuple.  The two component oracles default to a
    budgeted exhaustive search and answer UNKNOWN beyond the horizon;
    generators with decidable structure override them with exact logic.
    All state is write-once: caches fill idempotently, so instances are
    safe for concurrent readers.
    """

    name = "graph"
    search_horizon = 5000

    def __init__(self) -> None:
        self._nbr_cache: dict[int, tuple[int, ...]] = {}

    # -- enumeration and adjacency --

    def vertex_count(self) -> Optional[int]:
        """Number of vertices, or None when the graph is infinite."""
        return None

    def is_vertex(self, v: int) -> bool:
        n = self.vertex_count()
        return v >= 0 and (n is None or v < n)

    def check_vertex(self, v: int) -> None:
        if not self.is_vertex(v):
            raise UnknownVertexError(f"{self.name}: no vertex with index {v}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        got = self._nbr_cache.get(v)
        if got is None:
            self.check_vertex(v)
            got = tuple(sorted(set(self._neighbors(v))))
            self._nbr_cache[v] = got
        return got

    def _neighbors(self, v: int) -> Iterable[int]:
        raise NotImplementedError

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges_at(self, v: int) -> tuple[Edge, ...]:
        return tuple(mk_edge(v, w) for w in self.neighbors(v))

    def has_edge(self, e: Edge) -> bool:
        u, v = e
        return self.is_vertex(u) and v in self.neighbors(u)

    def label(self, v: int) -> str:
        return str(v)

    def parse_label(self, text: str) -> int:
        raise KeyError(text)

    # -- component oracles --

    def same_component_without(self, avoid: frozenset[int], u: int, v: int) -> Sep:
        if u in avoid or v in avoid:
            raise GraphError("query vertex inside the removed set")
        if u == v:
            return Sep.SAME
        seen = {u}
        queue = deque([u])
        while queue:
            if len(seen) > self.search_horizon:
                return Sep.UNKNOWN
            x = queue.popleft()
            for y in self.neighbors(x):
                if y == v:
                    return Sep.SAME
                if y not in seen and y not in avoid:
                    seen.add(y)
                    queue.append(y)
        return Sep.DIFF

    def is_component_infinite(self, avoid: frozenset[int], u: int) -> Card:
        if u in avoid:
            raise GraphError("query vertex inside the removed set")
        seen = {u}
        queue = deque([u])
        while queue:
            if len(seen) > self.search_horizon:
                return Card.UNKNOWN
            x = queue.popleft()
            for y in self.neighbors(x):
                if y not in seen and y not in avoid:
                    seen.add(y)
                    queue.append(y)
        # Exhausted within the horizon: the component really is finite.
        return Card.FINITE


class FiniteGraph(LazyGraph):
    """Explicit finite graph behind the LazyGraph interface.

    Used for loaded dumps, the staged recursive generator, and test
    fixtures.  Oracles are exact by exhaustive search.
    """

    def __init__(self, n: int, edges: Iterable[Edge], name: str = "finite",
                 labels: Optional[dict[int, str]] = None):
        super().__init__()
        self.name = name
        self._n = n
        self._adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for u, v in edges:
            e = mk_edge(u, v)
            if e[1] >= n:
                raise GraphError(f"edge {e} out of range for {n} vertices")
            self._adj[e[0]].add(e[1])
            self._adj[e[1]].add(e[0])
        self._labels = dict(labels) if labels else {}
        self._rlabels = {s: v for v, s in self._labels.items()}

    def vertex_count(self) -> Optional[int]:
        return self._n

    def _neighbors(self, v: int) -> Iterable[int]:
        return self._adj[v]

    def label(self, v: int) -> str:
        return self._labels.get(v, str(v))

    def parse_label(self, text: str) -> int:
        if text in self._rlabels:
            return self._rlabels[text]
        return int(text)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(mk_edge(u, v) for u in self._adj for v in self._adj[u])

    def same_component_without(self, avoid, u, v):
        if u in avoid or v in avoid:
            raise GraphError("query vertex inside the removed set")
        if u == v:
            return Sep.SAME
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in self.neighbors(x):
                if y == v:
                    return Sep.SAME
                if y not in seen and y not in avoid:
                    seen.add(y)
                    queue.append(y)
        return Sep.DIFF

    def is_component_infinite(self, avoid, u):
        return Card.FINITE


@dataclass(frozen=True)
class Ball:
    """Induced subgraph on all vertices within a given distance."""

    center: int
    radius: int
    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    dist: dict[int, int] = field(compare=False)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def ball(g: LazyGraph, v: int, r: int) -> Ball:
    """All vertices at distance <= r from v, with every induced edge."""
    if r < 0:
        raise GraphError("radius must be non-negative")
    g.check_vertex(v)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if dist[x] == r:
            continue
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    verts = tuple(sorted(dist))
    inside = set(verts)
    edges = frozenset(
        mk_edge(x, y) for x in verts for y in g.neighbors(x) if y in inside
    )
    return Ball(center=v, radius=r, vertices=verts, edges=edges, dist=dist)


def bfs_distances(g: LazyGraph, source: int, limit: int) -> dict[int, int]:
    """Distances from source, exploring at most ``limit`` vertices."""
    dist = {source: 0}
    queue = deque([source])
    while queue and len(dist) < limit:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


class Ray:
    """A lazy injective one-way infinite path.

    ``vertex_at(i)`` yields the i-th vertex; consecutive vertices must be
    adjacent.  ``escape_position(k)``, when available, returns a position
    p such that every vertex from p on has enumeration index > k — the
    certificate that lets end classification report exact, stable answers.
    Rays without a certificate degrade to budgeted answers.
    """

    def __init__(self, g: LazyGraph, vertex_at: Callable[[int], int],
                 escape_position: Optional[Callable[[int], int]] = None,
                 name: str = "ray"):
        self.graph = g
        self.name = name
        self._fn = vertex_at
        self._escape = escape_position
        self._cache: list[int] = []

    def vertex_at(self, i: int) -> int:
        while len(self._cache) <= i:
            j = len(self._cache)
            v = self._fn(j)
            if self._cache:
                prev = self._cache[-1]
                if v not in self.graph.neighbors(prev):
                    raise GraphError(
                        f"ray {self.name}: positions {j-1},{j} not adjacent")
                if v in self._cache:
                    raise GraphError(f"ray {self.name}: repeats vertex {v}")
            self._cache.append(v)
        return self._cache[i]

    def prefix(self, n: int) -> list[int]:
        return [self.vertex_at(i) for i in range(n)]

    def escape_position(self, k: int) -> Optional[int]:
        if self._escape is None:
            return None
        return self._escape(k)
