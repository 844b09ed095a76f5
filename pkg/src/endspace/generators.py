"""Built-in graph families with exact component oracles.

Every generator fixes a documented canonical vertex enumeration, because
the whole finite-resolution machinery (prefixes S_n, minors, towers) is
defined relative to it.  Generators also export, where meaningful, named
edge sets, canonical rays with escape certificates, and a rooted parent
map whose tree is normal (every non-tree edge joins comparable vertices).
"""

from __future__ import annotations

import math
from collections import deque
from typing import Callable, Iterable, Optional

from .core import (Card, Edge, FiniteGraph, GraphError, LazyGraph, Ray, Sep,
                   mk_edge)
from .strip import EdgeTemplate, StripGraph, StripSpec


# ---------------------------------------------------------------------------
# ladders (strip-backed)


class LadderGraph(StripGraph):
    """Width-2 strip: slots u (0) and w (1), rungs and both rails.

    Canonical enumeration of the two-way ladder:
    u_0, w_0, u_1, w_1, u_-1, w_-1, u_2, w_2, ...
    Edge names: r_i = u_i w_i (rung), a_i = u_i u_{i+1} (top rail),
    b_i = w_i w_{i+1} (bottom rail).
    """

    def __init__(self, two_way: bool):
        spec = StripSpec(
            width=2,
            two_way=two_way,
            templates=(
                EdgeTemplate("intra", (0, 1)),
                EdgeTemplate("inter", (0, 0)),
                EdgeTemplate("inter", (1, 1)),
            ),
        )
        name = "double_ladder" if two_way else "one_way_ladder"
        super().__init__(spec, name=name, slot_names=["u", "w"])

    # -- edge naming --

    def u(self, i: int) -> int:
        return self.index_of(i, 0)

    def w(self, i: int) -> int:
        return self.index_of(i, 1)

    def rung(self, i: int) -> Edge:
        return mk_edge(self.u(i), self.w(i))

    def a(self, i: int) -> Edge:
        return mk_edge(self.u(i), self.u(i + 1))

    def b(self, i: int) -> Edge:
        return mk_edge(self.w(i), self.w(i + 1))

    def square(self, i: int) -> frozenset[Edge]:
        return frozenset({self.rung(i), self.a(i), self.b(i), self.rung(i + 1)})

    def edge_kind(self, e: Edge) -> tuple[str, int]:
        """Classify a ladder edge as ('r'|'a'|'b', column)."""
        (l1, s1), (l2, s2) = self.coords(e[0]), self.coords(e[1])
        if l1 == l2:
            return "r", l1
        lo = min(l1, l2)
        return ("a", lo) if s1 == 0 else ("b", lo)

    def parse_edge(self, text: str) -> Edge:
        kind, _, col = text.partition("_")
        i = int(col)
        if kind == "r":
            return self.rung(i)
        if kind == "a":
            return self.a(i)
        if kind == "b":
            return self.b(i)
        raise GraphError(f"unknown ladder edge name {text!r}")

    def edge_name(self, e: Edge) -> str:
        kind, col = self.edge_kind(e)
        return f"{kind}_{col}"

    def named_edge_sets(self) -> dict[str, Callable[[Edge], bool]]:
        return {
            "all_rungs": lambda e: self.edge_kind(e)[0] == "r",
            "all_horizontals": lambda e: self.edge_kind(e)[0] in ("a", "b"),
        }

    def rays(self) -> dict[str, Ray]:
        out = {
            "top_right": _monotone_ray(self, lambda j: self.u(j), "top_right"),
            "bottom_right": _monotone_ray(self, lambda j: self.w(j), "bottom_right"),
        }
        if self.spec.two_way:
            out["top_left"] = _monotone_ray(self, lambda j: self.u(-j), "top_left")
            out["bottom_left"] = _monotone_ray(self, lambda j: self.w(-j), "bottom_left")
        return out

    def normal_witness(self):
        """Snake tree: root u_0, stem r_0, one snake per direction.

        Chosen because its fundamental circuits and cuts are all finite,
        which is what sigma/tau need; hand-checkable normality.
        """

        def parent(v: int) -> Optional[int]:
            level, slot = self.coords(v)
            if level == 0:
                return self.u(0) if slot == 1 else None
            step = -1 if level > 0 else 1
            if level % 2 != 0:      # odd columns: w hangs on previous w, u on w
                return self.w(level + step) if slot == 1 else self.w(level)
            return self.u(level + step) if slot == 0 else self.u(level)

        return self.u(0), parent


def double_ladder() -> LadderGraph:
    return LadderGraph(two_way=True)


def one_way_ladder() -> LadderGraph:
    return LadderGraph(two_way=False)


def triangle_strip() -> StripGraph:
    """Two-way ladder plus diagonals u_i w_{i+1}; every square gains a chord."""
    spec = StripSpec(
        width=2,
        two_way=True,
        templates=(
            EdgeTemplate("intra", (0, 1)),
            EdgeTemplate("inter", (0, 0)),
            EdgeTemplate("inter", (1, 1)),
            EdgeTemplate("inter", (0, 1)),
        ),
    )
    return StripGraph(spec, name="triangle_strip", slot_names=["u", "w"])


def _monotone_ray(g: LazyGraph, vertex_at: Callable[[int], int], name: str) -> Ray:
    """Ray whose vertex indices are strictly increasing from position 1 on."""

    def escape(k: int) -> int:
        j = 1
        while vertex_at(j) <= k:
            j += 1
        return j

    return Ray(g, vertex_at, escape_position=escape, name=name)


# ---------------------------------------------------------------------------
# grids


class ZZGrid(LazyGraph):
    """The Z x Z grid, enumerated in square rings spiralling outward.

    Ring r >= 1 starts at (r, 0) and runs counterclockwise; ring r holds
    8r vertices at offset 1 + 4r(r-1).
    """

    name = "zz_grid"

    def coords(self, v: int) -> tuple[int, int]:
        if v == 0:
            return (0, 0)
        r = int((1 + math.isqrt(2 * v - 1)) // 2)
        while 1 + 4 * r * (r - 1) > v:
            r -= 1
        while 1 + 4 * (r + 1) * r <= v:
            r += 1
        p = v - (1 + 4 * r * (r - 1))
        if p <= r:
            return (r, p)
        if p <= 3 * r:
            return (r - (p - r), r)
        if p <= 5 * r:
            return (-r, r - (p - 3 * r))
        if p <= 7 * r:
            return (-r + (p - 5 * r), -r)
        return (r, -r + (p - 7 * r))

    def index_of(self, x: int, y: int) -> int:
        r = max(abs(x), abs(y))
        if r == 0:
            return 0
        base = 1 + 4 * r * (r - 1)
        if x == r and y >= 0:
            p = y
        elif y == r:
            p = r + (r - x)
        elif x == -r:
            p = 3 * r + (r - y)
        elif y == -r:
            p = 5 * r + (x + r)
        else:
            p = 7 * r + (y + r)
        return base + p

    def is_vertex(self, v: int) -> bool:
        return v >= 0

    def label(self, v: int) -> str:
        return str(self.coords(v))

    def parse_label(self, text: str) -> int:
        if "," in text:
            x, y = text.strip("() ").split(",")
            return self.index_of(int(x), int(y))
        return int(text)

    def _cells(self, x: int, y: int):
        yield (x + 1, y)
        yield (x - 1, y)
        yield (x, y + 1)
        yield (x, y - 1)

    def _in_domain(self, x: int, y: int) -> bool:
        return True

    def _neighbors(self, v: int) -> Iterable[int]:
        x, y = self.coords(v)
        return [self.index_of(a, b) for a, b in self._cells(x, y)
                if self._in_domain(a, b)]

    # -- exact oracles: box window, outside summarized by one supernode --

    def same_component_without(self, avoid, u, v):
        if u in avoid or v in avoid:
            raise GraphError("query vertex inside the removed set")
        if u == v:
            return Sep.SAME
        comp = self._window_components(avoid, [u, v])
        return Sep.SAME if comp[u] == comp[v] else Sep.DIFF

    def is_component_infinite(self, avoid, u):
        if u in avoid:
            raise GraphError("query vertex inside the removed set")
        comp = self._window_components(avoid, [u])
        return Card.INFINITE if comp[u] == -1 else Card.FINITE

    def _window_components(self, avoid: frozenset[int], extra: list[int]):
        """Component labels inside the padded bounding box; class -1 is the
        (connected, infinite) outside region, merged through boundary cells."""
        pts = [self.coords(v) for v in list(avoid) + extra]
        x0 = min(p[0] for p in pts) - 1
        x1 = max(p[0] for p in pts) + 1
        y0 = min(p[1] for p in pts) - 1
        y1 = max(p[1] for p in pts) + 1

        def inside(x, y):
            return x0 <= x <= x1 and y0 <= y <= y1 and self._in_domain(x, y)

        def touches_outside(x, y):
            return any(self._in_domain(a, b) and not (x0 <= a <= x1 and y0 <= b <= y1)
                       for a, b in self._cells(x, y))

        comp: dict[int, int] = {}
        for x in range(x0, x1 + 1):
            for y in range(y0, y1 + 1):
                if not inside(x, y):
                    continue
                start = self.index_of(x, y)
                if start in avoid or start in comp:
                    continue
                cells = [(x, y)]
                comp[start] = start
                queue = deque(cells)
                is_outside = touches_outside(x, y)
                while queue:
                    cx, cy = queue.popleft()
                    for a, b in self._cells(cx, cy):
                        if not inside(a, b):
                            continue
                        u = self.index_of(a, b)
                        if u in avoid or u in comp:
                            continue
                        comp[u] = start
                        queue.append((a, b))
                        if touches_outside(a, b):
                            is_outside = True
                if is_outside:
                    root = comp[start]
                    for k, c in list(comp.items()):
                        if c == root:
                            comp[k] = -1
        return comp


class NNGrid(ZZGrid):
    """The N x N quarter-grid, enumerated along anti-diagonals.

    Diagonal d holds (d-y, y) for y = 0..d at offset d(d+1)/2.
    """

    name = "nn_grid"

    def coords(self, v: int) -> tuple[int, int]:
        d = int((math.isqrt(8 * v + 1) - 1) // 2)
        while d * (d + 1) // 2 > v:
            d -= 1
        while (d + 1) * (d + 2) // 2 <= v:
            d += 1
        y = v - d * (d + 1) // 2
        return (d - y, y)

    def index_of(self, x: int, y: int) -> int:
        d = x + y
        return d * (d + 1) // 2 + y

    def _in_domain(self, x: int, y: int) -> bool:
        return x >= 0 and y >= 0


def zz_grid() -> ZZGrid:
    return ZZGrid()


def nn_grid() -> NNGrid:
    return NNGrid()


# ---------------------------------------------------------------------------
# trees


class RegularTree(LazyGraph):
    """Infinite tree, BFS enumeration; the root has ``d`` children and every
    other vertex has d-1 children (so the tree is d-regular)."""

    def __init__(self, d: int, name: Optional[str] = None):
        if d < 2:
            raise GraphError("regular tree needs degree >= 2")
        super().__init__()
        self.d = d
        self.name = name or f"regular_tree_{d}"
        self._offsets = [0, 1]     # first index of each level

    def is_vertex(self, v: int) -> bool:
        return v >= 0

    def _level_size(self, k: int) -> int:
        if k == 0:
            return 1
        return self.d * (self.d - 1) ** (k - 1)

    def _offset(self, k: int) -> int:
        while len(self._offsets) <= k:
            j = len(self._offsets) - 1
            self._offsets.append(self._offsets[-1] + self._level_size(j))
        return self._offsets[k]

    def level_pos(self, v: int) -> tuple[int, int]:
        k = 0
        while self._offset(k + 1) <= v:
            k += 1
        return k, v - self._offset(k)

    def depth(self, v: int) -> int:
        return self.level_pos(v)[0]

    def parent(self, v: int) -> Optional[int]:
        k, p = self.level_pos(v)
        if k == 0:
            return None
        if k == 1:
            return 0
        return self._offset(k - 1) + p // (self.d - 1)

    def children(self, v: int) -> list[int]:
        k, p = self.level_pos(v)
        if k == 0:
            return list(range(1, self.d + 1))
        base = self._offset(k + 1) + p * (self.d - 1)
        return list(range(base, base + self.d - 1))

    def _neighbors(self, v: int) -> Iterable[int]:
        out = self.children(v)
        par = self.parent(v)
        if par is not None:
            out.append(par)
        return out

    def root_path(self, v: int) -> list[int]:
        path = [v]
        while (p := self.parent(path[-1])) is not None:
            path.append(p)
        return path

    def tree_path(self, u: int, v: int) -> list[int]:
        pu = self.root_path(u)
        pv = self.root_path(v)
        su = set(pu)
        meet = next(x for x in pv if x in su)
        up = pu[: pu.index(meet) + 1]
        down = pv[: pv.index(meet)]
        return up + down[::-1]

    def same_component_without(self, avoid, u, v):
        if u in avoid or v in avoid:
            raise GraphError("query vertex inside the removed set")
        if u == v:
            return Sep.SAME
        path = self.tree_path(u, v)
        return Sep.DIFF if any(x in avoid for x in path[1:-1]) else Sep.SAME

    def is_component_infinite(self, avoid, u):
        if u in avoid:
            raise GraphError("query vertex inside the removed set")
        if not avoid:
            return Card.INFINITE
        fence = max(self.depth(s) for s in avoid) + 1
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if self.depth(x) >= fence:
                return Card.INFINITE
            for y in self.neighbors(x):
                if y not in seen and y not in avoid:
                    seen.add(y)
                    queue.append(y)
        return Card.FINITE

    def normal_witness(self):
        return 0, self.parent

    def rays(self) -> dict[str, Ray]:
        def leftmost(j: int) -> int:
            v = 0
            for _ in range(j):
                v = self.children(v)[0]
            return v

        return {"leftmost": _monotone_ray(self, leftmost, "leftmost")}


class BinaryTree(RegularTree):
    """Infinite binary tree: the root has 2 children, every vertex 2 children
    (heap enumeration: children of v are 2v+1 and 2v+2)."""

    name = "binary_tree"

    def __init__(self):
        LazyGraph.__init__(self)
        self.d = 3      # non-root degree

    def depth(self, v: int) -> int:
        return (v + 1).bit_length() - 1

    def level_pos(self, v: int) -> tuple[int, int]:
        k = self.depth(v)
        return k, v - (2 ** k - 1)

    def parent(self, v: int) -> Optional[int]:
        return None if v == 0 else (v - 1) // 2

    def children(self, v: int) -> list[int]:
        return [2 * v + 1, 2 * v + 2]


class TreeWithLevelCircles(RegularTree):
    """Regular tree plus, for every depth k >= 1, a circuit through all the
    depth-k vertices in enumeration order."""

    def __init__(self, d: int):
        if d < 3:
            raise GraphError("level circles need level sizes >= 3, use d >= 3")
        super().__init__(d, name=f"tree_with_circles_{d}")

    def _neighbors(self, v: int) -> Iterable[int]:
        out = list(super()._neighbors(v))
        k, p = self.level_pos(v)
        if k >= 1:
            size = self._level_size(k)
            off = self._offset(k)
            out.append(off + (p + 1) % size)
            out.append(off + (p - 1) % size)
        return out

    # circles break tree-path reasoning: fall back to fenced search with a
    # frontier supernode (everything below the fence is mutually connected
    # through the deeper circles)

    def same_component_without(self, avoid, u, v):
        if u in avoid or v in avoid:
            raise GraphError("query vertex inside the removed set")
        if u == v:
            return Sep.SAME
        comp = self._fenced_components(avoid, [u, v])
        return Sep.SAME if comp[u] == comp[v] else Sep.DIFF

    def is_component_infinite(self, avoid, u):
        if u in avoid:
            raise GraphError("query vertex inside the removed set")
        comp = self._fenced_components(avoid, [u])
        return Card.INFINITE if comp[u] == -1 else Card.FINITE

    def _fenced_components(self, avoid: frozenset[int], extra: list[int]):
        fence = max(self.depth(x) for x in list(avoid) + extra) + 1
        comp: dict[int, int] = {}
        for start in range(self._offset(fence + 1)):
            if start in avoid or start in comp:
                continue
            cls = start
            queue = deque([start])
            comp[start] = cls
            hit_fence = self.depth(start) >= fence
            while queue:
                x = queue.popleft()
                for y in self.neighbors(x):
                    if y in avoid or self.depth(y) > fence or y in comp:
                        continue
                    comp[y] = cls
                    queue.append(y)
                    if self.depth(y) >= fence:
                        hit_fence = True
            if hit_fence:
                for k, c in list(comp.items()):
                    if c == cls:
                        comp[k] = -1
        return comp

    def normal_witness(self):
        return None     # circle edges join incomparable siblings


def binary_tree() -> BinaryTree:
    return BinaryTree()


def regular_tree(d: int) -> RegularTree:
    return RegularTree(d)


def tree_with_circles(d: int) -> TreeWithLevelCircles:
    return TreeWithLevelCircles(d)


# ---------------------------------------------------------------------------
# flow demonstrator graph


class ElusiveGraph(LazyGraph):
    """Edge st plus two disjoint infinite binary trees rooted at s and t.

    Enumeration: s=0, t=1, then depth by depth, the s-side block before
    the t-side block (each block has 2^k vertices at depth k).  The graph
    is acyclic, so circuit conditions on it are vacuous.
    """

    name = "elusive"

    def is_vertex(self, v: int) -> bool:
        return v >= 0

    @staticmethod
    def _block(v: int) -> tuple[int, int, int]:
        """(depth, side, pos) for v >= 2;  side 0 = s-tree, 1 = t-tree."""
        k = 1
        while 2 ** (k + 2) - 2 <= v:
            k += 1
        rel = v - (2 ** (k + 1) - 2)
        side, pos = divmod(rel, 2 ** k)
        return k, side, pos

    def depth(self, v: int) -> int:
        return 0 if v < 2 else self._block(v)[0]

    def index_at(self, depth: int, side: int, pos: int) -> int:
        if depth == 0:
            return side
        return (2 ** (depth + 1) - 2) + side * 2 ** depth + pos

    def parent(self, v: int) -> Optional[int]:
        if v < 2:
            return None
        k, side, pos = self._block(v)
        if k == 1:
            return side
        return self.index_at(k - 1, side, pos // 2)

    def children(self, v: int) -> list[int]:
        if v < 2:
            return [self.index_at(1, v, 0), self.index_at(1, v, 1)]
        k, side, pos = self._block(v)
        return [self.index_at(k + 1, side, 2 * pos),
                self.index_at(k + 1, side, 2 * pos + 1)]

    def _neighbors(self, v: int) -> Iterable[int]:
        out = self.children(v)
        if v == 0:
            out.append(1)
        elif v == 1:
            out.append(0)
        else:
            out.append(self.parent(v))
        return out

    def root_path(self, v: int) -> list[int]:
        path = [v]
        while (p := self.parent(path[-1])) is not None:
            path.append(p)
        return path

    def tree_path(self, u: int, v: int) -> list[int]:
        pu = self.root_path(u)      # ends at 0 or 1
        pv = self.root_path(v)
        if pu[-1] != pv[-1]:        # cross the st bridge
            pu = pu + [pv[-1]]
        su = set(pu)
        meet = next(x for x in pv if x in su)
        return pu[: pu.index(meet) + 1] + pv[: pv.index(meet)][::-1]

    def same_component_without(self, avoid, u, v):
        if u in avoid or v in avoid:
            raise GraphError("query vertex inside the removed set")
        if u == v:
            return Sep.SAME
        path = self.tree_path(u, v)
        return Sep.DIFF if any(x in avoid for x in path[1:-1]) else Sep.SAME

    def is_component_infinite(self, avoid, u):
        if u in avoid:
            raise GraphError("query vertex inside the removed set")
        if not avoid:
            return Card.INFINITE
        fence = max(self.depth(s) for s in avoid) + 1
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if self.depth(x) >= fence:
                return Card.INFINITE
            for y in self.neighbors(x):
                if y not in seen and y not in avoid:
                    seen.add(y)
                    queue.append(y)
        return Card.FINITE

    def normal_witness(self):
        def parent(v: int) -> Optional[int]:
            if v == 0:
                return None
            if v == 1:
                return 0
            return self.parent(v)

        return 0, parent

    def leftmost_ray(self, side: int) -> Ray:
        def at(j: int) -> int:
            return side if j == 0 else self.index_at(j, side, 0)

        return _monotone_ray(self, at, f"leftmost_{'s' if side == 0 else 't'}")


def elusive_graph() -> ElusiveGraph:
    return ElusiveGraph()


# ---------------------------------------------------------------------------
# staged recursive generator (grafting copies of a seed onto fresh cycles)


class StageCounts:
    def __init__(self):
        self.cycles: list[int] = []
        self.points: list[int] = []
        self.copies: list[int] = []


def at_graph(seed_edges: list[tuple[int, int]], anchor: list[int], stages: int,
             cycle_cap: int = 20000) -> FiniteGraph:
    """Finite prefix of the staged construction: repeatedly subdivide k fresh
    edges on every cycle not lying in the previous stage and graft k fresh
    copies of the seed, identified along ``anchor``.

    The seed's k-connectedness and girth >= k^2 are the caller's burden;
    only |anchor| and membership are checked here.  Stage cycle counts grow
    savagely, hence the explicit cap.
    """
    k = len(anchor)
    if k <= 0:
        raise GraphError("anchor set must be non-empty")
    n0 = 1 + max(max(e) for e in seed_edges)
    if any(not 0 <= x < n0 for x in anchor):
        raise GraphError("anchor vertices must lie in the seed graph")
    if len(set(anchor)) != k:
        raise GraphError("anchor vertices must be distinct")

    edges: set[Edge] = {mk_edge(*e) for e in seed_edges}
    n = n0
    prev_edges: frozenset[Edge] = frozenset()   # edge set two stages back
    counts = StageCounts()

    for _ in range(stages):
        stage_start = frozenset(edges)
        cycles = [c for c in _simple_cycles(n, edges, cycle_cap)
                  if not c <= prev_edges]
        cycles.sort(key=lambda c: (len(c), tuple(sorted(c))))
        counts.cycles.append(len(cycles))
        chosen: list[list[Edge]] = []
        for c in cycles:
            eligible = sorted(c - prev_edges)
            if len(eligible) < k:
                raise GraphError(
                    "a cycle offers fewer fresh edges than the anchor size; "
                    "seed girth too small for this construction")
            chosen.append(eligible[:k])
        # accumulate subdivision points per edge, in cycle order
        points_on: dict[Edge, list[int]] = {}
        cycle_points: list[list[int]] = []
        for picks in chosen:
            pts = []
            for e in picks:
                p = n
                n += 1
                points_on.setdefault(e, []).append(p)
                pts.append(p)
            cycle_points.append(pts)
        counts.points.append(sum(len(v) for v in points_on.values()))
        for e, pts in points_on.items():
            edges.remove(e)
            chain = [e[0]] + pts + [e[1]]
            for a, b in zip(chain, chain[1:]):
                edges.add(mk_edge(a, b))
        ncopies = 0
        for pts in cycle_points:
            for _ in range(k):
                mapping = dict(zip(sorted(anchor), sorted(pts)))
                for x in range(n0):
                    if x not in mapping:
                        mapping[x] = n
                        n += 1
                for u, v in seed_edges:
                    edges.add(mk_edge(mapping[u], mapping[v]))
                ncopies += 1
        counts.copies.append(ncopies)
        prev_edges = stage_start
    g = FiniteGraph(n, edges, name=f"staged_k{k}")
    g.stage_counts = counts
    return g


def _simple_cycles(n: int, edges: set[Edge], cap: int) -> list[frozenset[Edge]]:
    """All simple cycles as edge sets (undirected), deterministic order."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v in adj:
        adj[v].sort()
    out: set[frozenset[Edge]] = set()
    verts = sorted(adj)
    for start in verts:
        # DFS over paths whose minimum vertex is the start
        stack: list[tuple[int, list[int]]] = [(start, [start])]
        while stack:
            cur, path = stack.pop()
            for nxt in adj[cur]:
                if nxt < start:
                    continue
                if nxt == start and len(path) >= 3:
                    cyc = frozenset(mk_edge(a, b)
                                    for a, b in zip(path, path[1:] + [start]))
                    out.add(cyc)
                    if len(out) > cap:
                        raise GraphError(
                            f"cycle enumeration exceeded cap ({cap}); "
                            "reduce the stage count")
                elif nxt not in path:
                    stack.append((nxt, path + [nxt]))
    return sorted(out, key=lambda c: (len(c), tuple(sorted(c))))


# ---------------------------------------------------------------------------
# registry


def make_generator(name: str, **params) -> LazyGraph:
    """Build a named graph.  Raises GraphError for unknown names or bad
    parameters."""
    try:
        if name == "double_ladder":
            return double_ladder()
        if name == "one_way_ladder":
            return one_way_ladder()
        if name == "triangle_strip":
            return triangle_strip()
        if name == "zz_grid":
            return zz_grid()
        if name == "nn_grid":
            return nn_grid()
        if name == "binary_tree":
            return binary_tree()
        if name == "regular_tree":
            return regular_tree(int(params.get("d", 3)))
        if name == "tree_with_circles":
            return tree_with_circles(int(params.get("d", 3)))
        if name == "elusive":
            return elusive_graph()
        if name == "at_graph":
            return at_graph(params["seed_edges"], params["anchor"],
                            int(params.get("stages", 1)))
    except KeyError as exc:
        raise GraphError(f"generator {name}: missing parameter {exc}") from exc
    raise GraphError(f"unknown generator {name!r}")


GENERATOR_NAMES = (
    "double_ladder", "one_way_ladder", "triangle_strip", "zz_grid", "nn_grid",
    "binary_tree", "regular_tree", "tree_with_circles", "elusive", "at_graph",
)

# infinite built-ins used by cross-generator test sweeps
INFINITE_GENERATORS = (
    "double_ladder", "one_way_ladder", "zz_grid", "nn_grid",
    "binary_tree", "regular_tree", "tree_with_circles",
)
