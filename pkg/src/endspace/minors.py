"""Finite minors along the canonical enumeration, built incrementally.

Level n contracts every component of G - S_n (S_n = first n+1 vertices)
to a dummy vertex, dropping loops but keeping parallel edges.  Every edge
of the minor is literally an edge of G (those with at least one endpoint
in S_n), so edge identity is shared across all levels and with the
infinite graph; this is what makes cuts and cycle-space verdicts at
different resolutions comparable.

Level n+1 is obtained from level n by expanding the dummy holding
v_{n+1} into v_{n+1} plus one dummy per component of its component minus
v_{n+1}; all other dummies carry over untouched.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .core import Card, Edge, GraphError, LazyGraph, Sep, mk_edge

# a minor vertex: a real vertex index, or ("d", representative index)
MinorVertex = Union[int, tuple]


def dummy_vertex(rep: int) -> MinorVertex:
    return ("d", rep)


def is_dummy(mv: MinorVertex) -> bool:
    return isinstance(mv, tuple)


def minor_vertex_sort_key(mv: MinorVertex):
    return (0, mv) if isinstance(mv, int) else (1, mv[1])


class UnresolvableComponents(GraphError):
    def __init__(self, horizon: int, detail: str = ""):
        super().__init__(f"cannot resolve component identity (horizon {horizon}) {detail}")
        self.horizon = horizon


@dataclass(frozen=True)
class Dummy:
    rep: int                    # lowest-index vertex of the contracted component
    infinite: Card              # component cardinality flag

    @property
    def id(self) -> int:
        return self.rep


class FiniteMinor:
    """One level of the tower.  Immutable once built."""

    def __init__(self, tower: "MinorTower", level: int,
                 dummies: dict[int, Dummy], edges: frozenset[Edge],
                 q: dict[int, MinorVertex]):
        self.tower = tower
        self.level = level
        self.dummies = dummies          # rep -> Dummy
        self.edges = edges
        self._q = q                     # endpoint map, defined on all edge endpoints
        self._adj: Optional[dict[MinorVertex, list[tuple[Edge, MinorVertex]]]] = None

    @property
    def reals(self) -> range:
        return range(self.level + 1)

    def vertices(self) -> list[MinorVertex]:
        out: list[MinorVertex] = list(self.reals)
        out.extend(dummy_vertex(rep) for rep in sorted(self.dummies))
        return out

    def q(self, v: int) -> MinorVertex:
        """Endpoint map: where does G-vertex v live at this level?"""
        if v <= self.level:
            return v
        got = self._q.get(v)
        if got is not None:
            return got
        rep = self.tower._component_rep(self.level, v)
        mv = dummy_vertex(rep)
        self._q[v] = mv
        return mv

    def endpoints(self, e: Edge) -> tuple[MinorVertex, MinorVertex]:
        return self.q(e[0]), self.q(e[1])

    def adjacency(self) -> dict[MinorVertex, list[tuple[Edge, MinorVertex]]]:
        if self._adj is None:
            adj: dict[MinorVertex, list[tuple[Edge, MinorVertex]]] = {
                mv: [] for mv in self.vertices()}
            for e in sorted(self.edges):
                a, b = self.endpoints(e)
                adj[a].append((e, b))
                adj[b].append((e, a))
            self._adj = adj
        return self._adj

    def degree(self, mv: MinorVertex) -> int:
        return len(self.adjacency()[mv])

    def atomic_cut(self, mv: MinorVertex) -> frozenset[Edge]:
        """All edges at a minor vertex; as an edge set this is a cut of the
        infinite graph (the boundary of the contracted component, or of a
        single real vertex)."""
        return frozenset(e for e, _ in self.adjacency()[mv])

    def incident_dummy_of(self, e: Edge) -> Optional[int]:
        a, b = self.endpoints(e)
        if is_dummy(a):
            return a[1]
        if is_dummy(b):
            return b[1]
        return None

    def as_dict(self) -> dict:
        return {
            "level": self.level,
            "real": list(self.reals),
            "dummies": [
                {"id": d.rep, "rep": d.rep,
                 "infinite": {Card.INFINITE: True, Card.FINITE: False,
                              Card.UNKNOWN: None}[d.infinite]}
                for d in (self.dummies[r] for r in sorted(self.dummies))
            ],
            "edges": [[u, v] for u, v in sorted(self.edges)],
        }

    def to_dot(self, label=None) -> str:
        label = label or (lambda v: str(v))
        lines = [f'graph level{self.level} {{']
        for v in self.reals:
            lines.append(f'  "{label(v)}";')
        for rep in sorted(self.dummies):
            flag = self.dummies[rep].infinite
            mark = {"infinite": "inf", "finite": "fin", "unknown": "?"}[flag.value]
            lines.append(f'  "d{rep}" [shape=box, label="d{rep} ({mark})"];')
        for u, v in sorted(self.edges):
            a, b = self.endpoints((u, v))
            sa = label(a) if not is_dummy(a) else f"d{a[1]}"
            sb = label(b) if not is_dummy(b) else f"d{b[1]}"
            lines.append(f'  "{sa}" -- "{sb}" [label="{label(u)}-{label(v)}"];')
        lines.append("}")
        return "\n".join(lines)


class MinorTower:
    """Memoized tower of finite minors over one lazy graph."""

    def __init__(self, g: LazyGraph):
        self.graph = g
        self._levels: list[FiniteMinor] = []
        self._rep_cache: dict[tuple[int, int], int] = {}

    # -- component bookkeeping helpers --

    def _sep(self, level: int, u: int, v: int) -> Sep:
        S = frozenset(range(level + 1))
        return self.graph.same_component_without(S, u, v)

    def _component_rep(self, level: int, v: int) -> int:
        """Lowest-index vertex of v's component of G - S_level."""
        key = (level, v)
        got = self._rep_cache.get(key)
        if got is not None:
            return got
        rep = None
        i = level + 1
        while rep is None:
            if not self.graph.is_vertex(i):
                raise GraphError("ran out of vertices hunting for a representative")
            if i == v:
                rep = v
                break
            ans = self._sep(level, i, v)
            if ans == Sep.SAME:
                rep = i
            elif ans == Sep.UNKNOWN:
                raise UnresolvableComponents(self.graph.search_horizon,
                                             f"at level {level}")
            else:
                i += 1
        self._rep_cache[key] = rep
        # propagate: every vertex of the scanned prefix got classified
        return rep

    # -- level construction --

    def level(self, n: int) -> FiniteMinor:
        if n < 0:
            raise GraphError("level must be >= 0")
        count = self.graph.vertex_count()
        if count is not None and n >= count:
            raise GraphError(f"graph has only {count} vertices")
        while len(self._levels) <= n:
            self._extend()
        return self._levels[n]

    def _flag(self, level: int, rep: int) -> Card:
        S = frozenset(range(level + 1))
        return self.graph.is_component_infinite(S, rep)

    def _extend(self) -> None:
        g = self.graph
        if not self._levels:
            outside = [w for w in g.neighbors(0) if w != 0]
            comps = self._partition(0, outside)
            dummies = {}
            q: dict[int, MinorVertex] = {}
            for rep, members in comps.items():
                dummies[rep] = Dummy(rep, self._flag(0, rep))
                for m in members:
                    q[m] = dummy_vertex(rep)
            edges = frozenset(g.edges_at(0))
            self._levels.append(FiniteMinor(self, 0, dummies, edges, q))
            return

        prev = self._levels[-1]
        n = prev.level + 1
        home = prev.q(n)
        if not is_dummy(home):
            raise GraphError("enumeration produced a vertex already in the prefix")
        home_rep = home[1]

        new_edges = set(prev.edges)
        q: dict[int, MinorVertex] = {}
        dummies: dict[int, Dummy] = {}
        for rep, d in prev.dummies.items():
            if rep != home_rep:
                dummies[rep] = d
        # recycle endpoint classifications that cannot have changed
        for v, mv in prev._q.items():
            if v > n and is_dummy(mv) and mv[1] != home_rep:
                q[v] = mv

        fresh = [w for w in g.neighbors(n) if w > n]
        for w in fresh:
            new_edges.add(mk_edge(n, w))
        comps = self._partition(n, fresh)
        for rep, members in comps.items():
            dummies[rep] = Dummy(rep, self._flag(n, rep))
            for m in members:
                q[m] = dummy_vertex(rep)
        # old attachments of the expanded component: reclassify lazily via q()
        self._levels.append(FiniteMinor(self, n, dummies, frozenset(new_edges), q))

    def _partition(self, level: int, verts: Iterable[int]) -> dict[int, list[int]]:
        """Group ``verts`` (all outside S_level) by component of G - S_level,
        keyed by the component's lowest-index vertex."""
        groups: dict[int, list[int]] = {}
        for v in verts:
            rep = self._component_rep(level, v)
            groups.setdefault(rep, []).append(v)
        return groups

    # -- edge-set restriction and cut lifting --

    def restrict_edges(self, edges: Iterable[Edge], n: int) -> frozenset[Edge]:
        lv = self.level(n)
        return frozenset(e for e in edges if e in lv.edges)

    def edge_level(self, e: Edge) -> int:
        """First level whose minor contains e."""
        if not self.graph.has_edge(e):
            raise GraphError(f"{e} is not an edge of {self.graph.name}")
        return min(e)

    def lift_cut(self, n: int, side: Iterable[MinorVertex]) -> tuple[frozenset[Edge], dict]:
        """Edge set of the minor cut across (side, rest); verbatim a cut of
        the infinite graph, each contracted component assigned wholly to one
        side.  Returns (edges, side description)."""
        lv = self.level(n)
        side_set = set(side)
        all_mv = set(lv.vertices())
        unknown = side_set - all_mv
        if unknown:
            raise GraphError(f"not level-{n} vertices: {sorted(unknown, key=str)}")
        cut = set()
        for e in lv.edges:
            a, b = lv.endpoints(e)
            if (a in side_set) != (b in side_set):
                cut.add(e)
        desc = {
            "level": n,
            "side_reals": sorted(v for v in side_set if not is_dummy(v)),
            "side_dummies": sorted(v[1] for v in side_set if is_dummy(v)),
        }
        return frozenset(cut), desc
