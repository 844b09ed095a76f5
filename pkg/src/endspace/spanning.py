"""Spanning structures: the compatible tree tower, fundamental cuts and
circuits, lazy breadth-first trees, and normal-tree witnesses.

The tower tree is built recursively: T_0 spans the level-0 minor, and
T_{n+1} extends T_n by one edge per dummy freshly split off when v_{n+1}
is expanded, never touching edges at older vertices.  That recursion
forces E(T_m) cap E(G_n) = E(T_n), so the union presents a lazy edge set
with exact membership; its fundamental cuts are finite and can be read
off any single level containing the tree edge (level-independence is a
theorem here, and a tested invariant).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .core import Edge, GraphError, LazyGraph, mk_edge
from .minors import FiniteMinor, MinorTower, MinorVertex, dummy_vertex, is_dummy
from .verdicts import Verdict, refuted, verified


class NotATreeEdge(GraphError):
    pass


class NotAChord(GraphError):
    pass


class SpanningTower:
    """Compatible sequence (T_n) of spanning trees of the minors.

    ``base_level``/``base_tree`` let a caller replace the bottom of the
    recursion with an explicit spanning tree of one level; levels above
    extend it by the same star rule.  Parallel star candidates are broken
    by lowest edge identity, optionally deprioritizing a fixed edge set.
    """

    def __init__(self, tower: MinorTower, base_level: int = 0,
                 base_tree: Optional[frozenset[Edge]] = None,
                 avoid_if_possible: frozenset[Edge] = frozenset()):
        self.tower = tower
        self.base_level = base_level
        self.avoid = avoid_if_possible
        self._trees: dict[int, frozenset[Edge]] = {}
        self.construction_log: list[tuple[int, Edge, tuple[Edge, ...]]] = []
        if base_tree is not None:
            lv = tower.level(base_level)
            if not _is_spanning_tree(lv, base_tree):
                raise GraphError("base tree is not a spanning tree of its level")
            self._trees[base_level] = frozenset(base_tree)
        elif base_level != 0:
            raise GraphError("explicit base_tree required for base_level > 0")

    def _pick(self, candidates: list[Edge]) -> Edge:
        pool = [e for e in candidates if e not in self.avoid] or candidates
        return min(pool)

    def tree_at(self, n: int) -> frozenset[Edge]:
        if n < self.base_level:
            raise GraphError(f"tower tree starts at level {self.base_level}")
        got = self._trees.get(n)
        if got is not None:
            return got
        if n == 0:
            lv = self.tower.level(0)
            tree = set()
            for rep in sorted(lv.dummies):
                cands = sorted(e for e in lv.edges
                               if lv.endpoints(e)[1] == dummy_vertex(rep)
                               or lv.endpoints(e)[0] == dummy_vertex(rep))
                chosen = self._pick(cands)
                tree.add(chosen)
                self.construction_log.append((0, chosen, tuple(cands)))
            self._trees[0] = frozenset(tree)
            return self._trees[0]
        prev = self.tree_at(n - 1)
        lv = self.tower.level(n)
        before = self.tower.level(n - 1)
        new_reps = sorted(set(lv.dummies) - set(before.dummies))
        tree = set(prev)
        for rep in new_reps:
            target = dummy_vertex(rep)
            cands = sorted(e for e in lv.edges - before.edges
                           if target in lv.endpoints(e))
            if not cands:
                raise GraphError(f"no star candidate for dummy {rep} at level {n}")
            chosen = self._pick(cands)
            tree.add(chosen)
            self.construction_log.append((n, chosen, tuple(cands)))
        self._trees[n] = frozenset(tree)
        return self._trees[n]

    def contains(self, e: Edge) -> bool:
        """Exact membership in the limit edge set: stabilizes at the first
        level that contains the edge."""
        n = max(self.base_level, self.tower.edge_level(e))
        return e in self.tree_at(n)

    def member_level(self, e: Edge) -> int:
        return max(self.base_level, self.tower.edge_level(e))


def tower_tst(tower: MinorTower) -> SpanningTower:
    """The canonical tower presentation of a topological spanning tree."""
    return SpanningTower(tower)


def _is_spanning_tree(lv: FiniteMinor, edges: frozenset[Edge]) -> bool:
    verts = lv.vertices()
    if len(edges) != len(verts) - 1:
        return False
    if not edges <= lv.edges:
        return False
    adj: dict[MinorVertex, list[MinorVertex]] = {v: [] for v in verts}
    for e in edges:
        a, b = lv.endpoints(e)
        adj[a].append(b)
        adj[b].append(a)
    seen = {verts[0]}
    queue = deque([verts[0]])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(verts)


def _tree_side(lv: FiniteMinor, tree: frozenset[Edge], f: Edge) -> set[MinorVertex]:
    """Minor vertices of the component of (tree - f) holding f's lower end."""
    adj: dict[MinorVertex, list[MinorVertex]] = {}
    for e in tree:
        if e == f:
            continue
        a, b = lv.endpoints(e)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start = lv.endpoints(f)[0]
    side = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y not in side:
                side.add(y)
                queue.append(y)
    return side


def fundamental_cut(T: SpanningTower, f: Edge) -> frozenset[Edge]:
    """The finite cut determined by a tower-tree edge.

    Computed in the first level containing f; any other admissible level
    gives the same set, because two finite cuts meeting the tree exactly
    in f must coincide.
    """
    if not T.contains(f):
        raise NotATreeEdge(f"{f} is not an edge of the tower tree")
    return fundamental_cut_at(T, f, T.member_level(f))


def fundamental_cut_at(T: SpanningTower, f: Edge, n: int) -> frozenset[Edge]:
    lv = T.tower.level(n)
    tree = T.tree_at(n)
    if f not in tree:
        raise NotATreeEdge(f"{f} not in the level-{n} tree")
    side = _tree_side(lv, tree, f)
    return frozenset(e for e in lv.edges
                     if (lv.endpoints(e)[0] in side) != (lv.endpoints(e)[1] in side))


class FundamentalCircuit:
    """Lazy fundamental circuit of a chord: exact membership via cut duality
    (a tree edge g lies on C_e iff e lies on D_g), per-level restriction via
    the finite cycle of the chord in T_n + e."""

    def __init__(self, T: SpanningTower, e: Edge):
        if T.contains(e):
            raise NotAChord(f"{e} is an edge of the tower tree")
        self.T = T
        self.chord = e
        self._cut_cache: dict[Edge, frozenset[Edge]] = {}

    def member(self, g: Edge) -> bool:
        if g == self.chord:
            return True
        if not self.T.tower.graph.has_edge(g):
            return False
        if not self.T.contains(g):
            return False
        cut = self._cut_cache.get(g)
        if cut is None:
            cut = fundamental_cut(self.T, g)
            self._cut_cache[g] = cut
        return self.chord in cut

    def restrict(self, n: int) -> frozenset[Edge]:
        lv = self.T.tower.level(n)
        if self.chord not in lv.edges:
            return frozenset(e for e in lv.edges if self.member(e))
        tree = self.T.tree_at(n)
        path = _tree_path_edges(lv, tree, *lv.endpoints(self.chord))
        return frozenset(path) | {self.chord}


def _tree_path_edges(lv: FiniteMinor, tree: frozenset[Edge],
                     a: MinorVertex, b: MinorVertex) -> list[Edge]:
    if a == b:
        return []
    adj: dict[MinorVertex, list[tuple[Edge, MinorVertex]]] = {}
    for e in tree:
        x, y = lv.endpoints(e)
        adj.setdefault(x, []).append((e, y))
        adj.setdefault(y, []).append((e, x))
    prev: dict[MinorVertex, tuple[Edge, MinorVertex]] = {}
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for e, y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                prev[y] = (e, x)
                queue.append(y)
    if b not in seen:
        raise GraphError("tree does not connect the requested endpoints")
    path = []
    cur = b
    while cur != a:
        e, cur = prev[cur]
        path.append(e)
    return path[::-1]


# ---------------------------------------------------------------------------
# lazy ordinary BFS tree


class BFSTree:
    """Breadth-first spanning tree from v_0: parent of v is its lowest-index
    neighbor one layer closer to the root.  Fundamental circuits are finite;
    fundamental cuts are answered lazily by root-path parity."""

    def __init__(self, g: LazyGraph):
        self.graph = g
        self._dist: dict[int, int] = {0: 0}
        self._layers: list[list[int]] = [[0]]
        self._exhausted = False

    def _grow(self) -> bool:
        if self._exhausted:
            return False
        cur = self._layers[-1]
        nxt = sorted({w for v in cur for w in self.graph.neighbors(v)
                      if w not in self._dist})
        if not nxt:
            self._exhausted = True
            return False
        d = len(self._layers)
        for w in nxt:
            self._dist[w] = d
        self._layers.append(nxt)
        return True

    def dist(self, v: int) -> int:
        self.graph.check_vertex(v)
        while v not in self._dist:
            if not self._grow():
                raise GraphError(f"vertex {v} unreachable from the root")
        return self._dist[v]

    def parent(self, v: int) -> Optional[int]:
        if v == 0:
            return None
        d = self.dist(v)
        while len(self._layers) <= d + 1 and not self._exhausted:
            self._grow()
        return min(w for w in self.graph.neighbors(v) if self._dist.get(w) == d - 1)

    def parent_edge(self, v: int) -> Edge:
        return mk_edge(v, self.parent(v))

    def root_path_edges(self, v: int) -> list[Edge]:
        out = []
        while v != 0:
            p = self.parent(v)
            out.append(mk_edge(v, p))
            v = p
        return out

    def contains(self, e: Edge) -> bool:
        u, v = e
        return self.parent(v) == u or self.parent(u) == v

    def fundamental_circuit(self, e: Edge) -> frozenset[Edge]:
        if self.contains(e):
            raise NotAChord(f"{e} is a tree edge")
        u, v = e
        pu = set(self.root_path_edges(u))
        pv = set(self.root_path_edges(v))
        return frozenset(pu ^ pv) | {e}

    def cut_member(self, f: Edge, g: Edge) -> bool:
        """Is g in the fundamental cut of tree edge f?  True iff f lies on
        exactly one of the root paths of g's endpoints."""
        if not self.contains(f):
            raise NotATreeEdge(f"{f} is not a tree edge")
        x, y = g
        return (f in set(self.root_path_edges(x))) != (f in set(self.root_path_edges(y)))

    def cut_restrict(self, tower: MinorTower, f: Edge, n: int) -> frozenset[Edge]:
        lv = tower.level(n)
        return frozenset(g for g in lv.edges if self.cut_member(f, g))


def bfs_tree(g: LazyGraph) -> BFSTree:
    return BFSTree(g)


# ---------------------------------------------------------------------------
# normal spanning trees as generator-supplied witnesses


class NoNormalWitness(GraphError):
    pass


class NormalTreeWitness:
    """Rooted parent map claimed to be a normal spanning tree.

    Normality (tree-order comparability of every edge's endpoints) is what
    makes both fundamental circuits and fundamental cuts finite, so both
    are computed here exactly: circuits from root paths, cuts by scanning
    the finitely many strict ancestors of the child end.
    """

    chain_budget = 100000

    def __init__(self, g: LazyGraph, root: int, parent: Callable[[int], Optional[int]]):
        self.graph = g
        self.root = root
        self._parent = parent
        self._path_cache: dict[int, tuple[int, ...]] = {}

    def parent(self, v: int) -> Optional[int]:
        return self._parent(v)

    def root_path(self, v: int) -> tuple[int, ...]:
        """Vertices from v up to the root, inclusive."""
        got = self._path_cache.get(v)
        if got is not None:
            return got
        path = [v]
        while path[-1] != self.root:
            p = self._parent(path[-1])
            if p is None:
                raise GraphError(f"witness: {path[-1]} has no parent but is not the root")
            if p not in self.graph.neighbors(path[-1]):
                raise GraphError(f"witness: parent link {path[-1]}->{p} is not an edge")
            path.append(p)
            if len(path) > self.chain_budget:
                raise GraphError("witness: parent chain exceeded budget")
        out = tuple(path)
        self._path_cache[v] = out
        return out

    def root_path_edges(self, v: int) -> list[Edge]:
        p = self.root_path(v)
        return [mk_edge(a, b) for a, b in zip(p, p[1:])]

    def in_tree(self, e: Edge) -> bool:
        u, v = e
        return self._parent(u) == v or self._parent(v) == u

    def comparable(self, u: int, v: int) -> bool:
        return u in self.root_path(v) or v in self.root_path(u)

    def child_end(self, f: Edge) -> int:
        u, v = f
        if self._parent(u) == v:
            return u
        if self._parent(v) == u:
            return v
        raise NotATreeEdge(f"{f} is not a witness tree edge")

    def in_subtree(self, x: int, c: int) -> bool:
        return c in self.root_path(x)

    def fundamental_circuit(self, e: Edge) -> frozenset[Edge]:
        if self.in_tree(e):
            raise NotAChord(f"{e} is a witness tree edge")
        u, v = e
        pu = set(self.root_path_edges(u))
        pv = set(self.root_path_edges(v))
        return frozenset(pu ^ pv) | {e}

    def fundamental_cut(self, f: Edge) -> frozenset[Edge]:
        c = self.child_end(f)
        out = set()
        for a in self.root_path(c)[1:]:     # strict ancestors of c
            for x in self.graph.neighbors(a):
                if self.in_subtree(x, c):
                    out.add(mk_edge(a, x))
        return frozenset(out)


def validate_normal(w: NormalTreeWitness, n: int) -> Verdict:
    """Check the witness on the enumeration prefix S_n: parent links are
    edges reaching the root, and every edge inside S_n joins comparable
    vertices.  Refuted carries the offending edge."""
    for v in range(n + 1):
        w.root_path(v)      # raises on broken chains
    for v in range(n + 1):
        for u in w.graph.neighbors(v):
            if u <= n and u < v:
                if not w.comparable(u, v):
                    return refuted(mk_edge(u, v), note="incomparable endpoints")
    return verified(n)


def normal_witness_for(g: LazyGraph) -> NormalTreeWitness:
    """The generator-supplied witness, if the family documents one."""
    maker = getattr(g, "normal_witness", None)
    if maker is None:
        raise NoNormalWitness(f"{g.name}: no normal spanning tree witness available")
    made = maker()
    if made is None:
        raise NoNormalWitness(f"{g.name}: no normal spanning tree witness available")
    root, parent = made
    return NormalTreeWitness(g, root, parent)
