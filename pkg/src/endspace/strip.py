"""Bounded-width periodic strips: declarative spec, engine, exact oracles.

A strip has ``width`` slots per level and levels running over Z (two-way)
or N (one-way).  Edges are given by templates: ``intra`` pairs within a
level, ``inter`` pairs from level l to l+1, and optional extra templates
gated by a level-parity predicate.  Component questions about the strip
reduce to reachability in a bounded window: the two half-infinite tails
beyond the window are summarized exactly by a fixpoint of the slot
connectivity relation, which stabilizes because partitions of a
``width``-element set can only coarsen finitely often.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import Card, GraphError, LazyGraph, Sep, mk_edge


@dataclass(frozen=True)
class EdgeTemplate:
    kind: str           # "intra" | "inter"
    pair: tuple[int, int]
    parity: Optional[int] = None    # None = every level, else level % 2

    def active_at(self, level: int) -> bool:
        return self.parity is None or level % 2 == self.parity


@dataclass(frozen=True)
class StripSpec:
    width: int
    two_way: bool
    templates: tuple[EdgeTemplate, ...]

    @staticmethod
    def from_document(doc: dict) -> "StripSpec":
        """Validate and build a spec from a parsed JSON document."""
        if not isinstance(doc, dict):
            raise GraphError("strip spec: document must be a JSON object")
        width = doc.get("width")
        if not isinstance(width, int) or width < 1:
            raise GraphError("strip spec: 'width' must be a positive integer")
        levels = doc.get("levels", "two-way")
        if levels not in ("two-way", "one-way"):
            raise GraphError("strip spec: 'levels' must be 'two-way' or 'one-way'")
        templates: list[EdgeTemplate] = []

        def check_slot(s):
            if not isinstance(s, int) or not 0 <= s < width:
                raise GraphError(f"strip spec: slot {s!r} out of range 0..{width - 1}")

        for pair in doc.get("intra_level_edges", []):
            if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
                raise GraphError(f"strip spec: bad intra pair {pair!r}")
            a, b = pair
            check_slot(a)
            check_slot(b)
            if a == b:
                raise GraphError("strip spec: intra pair may not join a slot to itself")
            templates.append(EdgeTemplate("intra", (min(a, b), max(a, b))))
        for pair in doc.get("inter_level_edges", []):
            if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
                raise GraphError(f"strip spec: bad inter pair {pair!r}")
            a, b = pair
            check_slot(a)
            check_slot(b)
            templates.append(EdgeTemplate("inter", (a, b)))
        for extra in doc.get("extra_edges", []):
            if not isinstance(extra, dict):
                raise GraphError(f"strip spec: bad extra template {extra!r}")
            kind = extra.get("kind")
            if kind not in ("intra", "inter"):
                raise GraphError("strip spec: extra 'kind' must be intra|inter")
            pair = extra.get("pair")
            if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
                raise GraphError(f"strip spec: bad extra pair {pair!r}")
            a, b = pair
            check_slot(a)
            check_slot(b)
            parity = extra.get("parity")
            if parity not in (None, 0, 1):
                raise GraphError("strip spec: extra 'parity' must be 0, 1 or null")
            if kind == "intra":
                if a == b:
                    raise GraphError("strip spec: intra pair may not join a slot to itself")
                a, b = min(a, b), max(a, b)
            templates.append(EdgeTemplate(kind, (a, b), parity))
        if not templates:
            raise GraphError("strip spec: no edge templates")
        return StripSpec(width, levels == "two-way", tuple(dict.fromkeys(templates)))


class StripGraph(LazyGraph):
    """Lazy graph generated by a StripSpec, with exact component oracles."""

    def __init__(self, spec: StripSpec, name: str = "strip",
                 slot_names: Optional[list[str]] = None):
        super().__init__()
        self.spec = spec
        self.name = name
        self.slot_names = slot_names
        self._fix_cache: dict[tuple, tuple] = {}
        self._check_connected_prefix()

    # -- enumeration: levels 0,1,-1,2,-2,... (two-way) or 0,1,2,... --

    def level_of_position(self, p: int) -> int:
        if not self.spec.two_way:
            return p
        if p == 0:
            return 0
        return (p + 1) // 2 if p % 2 == 1 else -(p // 2)

    def position_of_level(self, level: int) -> int:
        if not self.spec.two_way:
            if level < 0:
                raise GraphError("one-way strip has no negative levels")
            return level
        if level == 0:
            return 0
        return 2 * level - 1 if level > 0 else -2 * level

    def index_of(self, level: int, slot: int) -> int:
        return self.position_of_level(level) * self.spec.width + slot

    def coords(self, v: int) -> tuple[int, int]:
        w = self.spec.width
        return self.level_of_position(v // w), v % w

    def is_vertex(self, v: int) -> bool:
        return v >= 0

    def label(self, v: int) -> str:
        level, slot = self.coords(v)
        if self.slot_names:
            return f"{self.slot_names[slot]}_{level}"
        return f"({level},{slot})"

    def parse_label(self, text: str) -> int:
        if self.slot_names:
            for slot, prefix in enumerate(self.slot_names):
                head = prefix + "_"
                if text.startswith(head):
                    return self.index_of(int(text[len(head):]), slot)
        return int(text)

    def _neighbors(self, v: int) -> Iterable[int]:
        level, slot = self.coords(v)
        out = []
        for t in self.spec.templates:
            a, b = t.pair
            if t.kind == "intra":
                if t.active_at(level):
                    if slot == a:
                        out.append(self.index_of(level, b))
                    elif slot == b:
                        out.append(self.index_of(level, a))
            else:
                if t.active_at(level) and slot == a:
                    out.append(self.index_of(level + 1, b))
                if level - 1 >= 0 or self.spec.two_way:
                    if t.active_at(level - 1) and slot == b:
                        out.append(self.index_of(level - 1, a))
        return out

    # -- exact oracles via windowed reachability --

    def _window_graph(self, lo: int, hi: int, avoid: frozenset[int]):
        """Adjacency of the strip restricted to levels lo..hi minus avoid."""
        adj: dict[int, set[int]] = {}
        for level in range(lo, hi + 1):
            if level < 0 and not self.spec.two_way:
                continue
            for slot in range(self.spec.width):
                v = self.index_of(level, slot)
                if v in avoid:
                    continue
                adj.setdefault(v, set())
                for w in self.neighbors(v):
                    wl, _ = self.coords(w)
                    if lo <= wl <= hi and w not in avoid:
                        adj[v].add(w)
                        adj.setdefault(w, set()).add(v)
        return adj

    def _tail_fixpoint(self, cut_level: int, direction: int):
        """Exactly summarize the half-strip on the far side of ``cut_level``.

        Returns (cls_of_slot, infinite): two cut-level slots share a class
        iff their vertices are connected within the tail, and
        ``infinite[class]`` says whether that class's tail component is
        infinite.  The tail is simulated level by level while tracking the
        joint partition of cut slots and frontier slots; once that state
        repeats at the same level parity the evolution is periodic, and
        because the cut partition can only coarsen it has reached its
        limit.  Cached per (direction, cut parity): templates repeat with
        period 2.
        """
        key = (direction, cut_level % 2)
        got = self._fix_cache.get(key)
        if got is not None:
            return got
        w = self.spec.width

        parent: dict[int, int] = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        def add_level(level):
            for slot in range(w):
                parent.setdefault(self.index_of(level, slot), self.index_of(level, slot))
            for v in (self.index_of(level, s) for s in range(w)):
                for u in self.neighbors(v):
                    if u in parent:
                        union(u, v)

        def state(frontier_level):
            verts = [self.index_of(cut_level, s) for s in range(w)]
            verts += [self.index_of(frontier_level, s) for s in range(w)]
            canon: dict[int, int] = {}
            out = []
            for v in verts:
                r = find(v)
                canon.setdefault(r, len(canon))
                out.append(canon[r])
            return tuple(out)

        add_level(cut_level)
        seen: dict[tuple, int] = {}
        depth = 0
        while True:
            frontier = cut_level + direction * depth
            skey = (frontier % 2, state(frontier))
            if skey in seen:
                break
            seen[skey] = depth
            depth += 1
            if depth > 10000:
                raise GraphError("strip tail summary failed to stabilize")
            add_level(cut_level + direction * depth)
        frontier = cut_level + direction * depth
        classes: dict[int, int] = {}
        cls_of_slot: dict[int, int] = {}
        for slot in range(w):
            r = find(self.index_of(cut_level, slot))
            classes.setdefault(r, len(classes))
            cls_of_slot[slot] = classes[r]
        frontier_roots = {find(self.index_of(frontier, s)) for s in range(w)}
        infinite = {cid: (root in frontier_roots) for root, cid in classes.items()}
        result = (cls_of_slot, infinite)
        self._fix_cache[key] = result
        return result

    def _oracle_window(self, avoid: frozenset[int], extra: Iterable[int]):
        levels = [self.coords(v)[0] for v in list(avoid) + list(extra)]
        lo = min(levels) - 1
        hi = max(levels) + 1
        if not self.spec.two_way:
            lo = max(lo, 0)
        adj = self._window_graph(lo, hi, avoid)
        merges: list[tuple[list[int], bool]] = []
        ends = [(hi, +1)]
        if self.spec.two_way:
            ends.append((lo, -1))
        for cut_level, direction in ends:
            cls_of_slot, infinite = self._tail_fixpoint(cut_level, direction)
            by_class: dict[int, list[int]] = {}
            for slot, cid in cls_of_slot.items():
                v = self.index_of(cut_level, slot)
                if v in adj:
                    by_class.setdefault(cid, []).append(v)
            for cid, verts in by_class.items():
                merges.append((verts, infinite[cid]))
        return adj, merges

    def same_component_without(self, avoid, u, v):
        if u in avoid or v in avoid:
            raise GraphError("query vertex inside the removed set")
        if u == v:
            return Sep.SAME
        adj, merges = self._oracle_window(avoid, [u, v])
        comp = _components_with_merges(adj, merges)
        return Sep.SAME if comp[u] == comp[v] else Sep.DIFF

    def is_component_infinite(self, avoid, u):
        if u in avoid:
            raise GraphError("query vertex inside the removed set")
        adj, merges = self._oracle_window(avoid, [u])
        comp = _components_with_merges(adj, merges)
        cu = comp[u]
        for verts, inf in merges:
            if inf and verts and comp[verts[0]] == cu:
                return Card.INFINITE
        return Card.FINITE

    def _check_connected_prefix(self) -> None:
        """Warn when a bounded prefix already shows the spec disconnected."""
        w = self.spec.width
        span = 2 * (w + 2)
        lo = -span if self.spec.two_way else 0
        adj = self._window_graph(lo, span, frozenset())
        merges: list[tuple[list[int], bool]] = []
        ends = [(span, +1)] + ([(lo, -1)] if self.spec.two_way else [])
        for cut_level, direction in ends:
            cls_of_slot, infinite = self._tail_fixpoint(cut_level, direction)
            by_class: dict[int, list[int]] = {}
            for slot, cid in cls_of_slot.items():
                v = self.index_of(cut_level, slot)
                if v in adj:
                    by_class.setdefault(cid, []).append(v)
            merges.extend((verts, infinite[cid]) for cid, verts in by_class.items())
        comp = _components_with_merges(adj, merges)
        if len(set(comp.values())) > 1:
            warnings.warn(
                f"strip spec '{self.name}' appears disconnected on the "
                f"levels [{lo},{span}] prefix; downstream results may be "
                f"meaningless (horizon {span})",
                stacklevel=3,
            )


def _components_with_merges(adj: dict[int, set[int]],
                            merges: list[tuple[list[int], bool]]) -> dict[int, int]:
    parent = {v: v for v in adj}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for v, ns in adj.items():
        for u in ns:
            union(u, v)
    for verts, _inf in merges:
        for v in verts[1:]:
            union(verts[0], v)
    return {v: find(v) for v in adj}


def load_strip_spec(doc: dict, name: str = "strip",
                    slot_names: Optional[list[str]] = None) -> StripGraph:
    """Build a lazy strip graph from a parsed JSON document."""
    return StripGraph(StripSpec.from_document(doc), name=name, slot_names=slot_names)
