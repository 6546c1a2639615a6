"""Rooted trees with subtree surgery and gadget-shape classification.

Vertex ids are preserved across removals, so a tree obtained by surgery is
sparse over the host graph's id space.  The empty tree is a first-class
value (``RootedTree.EMPTY``) with height -1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, bfs_distances


class RootedTree:
    """Immutable rooted tree: parent/children maps keyed by vertex id."""

    __slots__ = ("root", "parent", "children", "depth")

    def __init__(
        self,
        root: Optional[int],
        parent: dict[int, Optional[int]],
        children: dict[int, tuple[int, ...]],
        depth: dict[int, int],
    ):
        self.root = root
        self.parent = parent
        self.children = children
        self.depth = depth

    @staticmethod
    def empty() -> "RootedTree":
        return RootedTree(None, {}, {}, {})

    @staticmethod
    def from_parents(root: int, parent_of: dict[int, int]) -> "RootedTree":
        """Build from a {child: parent} map (root excluded from the map)."""
        parent: dict[int, Optional[int]] = {root: None}
        parent.update(parent_of)
        kids: dict[int, list[int]] = {v: [] for v in parent}
        for c, p in parent_of.items():
            kids[p].append(c)
        children = {v: tuple(sorted(k)) for v, k in kids.items()}
        depth: dict[int, int] = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for c in children[u]:
                depth[c] = depth[u] + 1
                queue.append(c)
        if len(depth) != len(parent):
            raise ValueError("parent map is not a tree rooted at the given root")
        return RootedTree(root, parent, children, depth)

    @property
    def n(self) -> int:
        return len(self.parent)

    def is_empty(self) -> bool:
        return self.root is None

    @property
    def height(self) -> int:
        return max(self.depth.values(), default=-1)

    def vertices(self) -> list[int]:
        return sorted(self.parent)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def subtree_vertices(self, u: int) -> list[int]:
        if u not in self.parent:
            raise ValueError(f"vertex {u} not in tree")
        out = []
        stack = [u]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(self.children[v])
        return out

    def _without(self, removed: set[int]) -> "RootedTree":
        if self.root in removed:
            return RootedTree.empty()
        parent = {v: p for v, p in self.parent.items() if v not in removed}
        children = {
            v: tuple(c for c in self.children[v] if c not in removed)
            for v in parent
        }
        depth = {v: d for v, d in self.depth.items() if v not in removed}
        return RootedTree(self.root, parent, children, depth)

    def remove_subtree(self, u: int) -> "RootedTree":
        """Delete the whole subtree rooted at u; removing the root yields EMPTY."""
        return self._without(set(self.subtree_vertices(u)))

    def remove_leaf(self, w: int) -> "RootedTree":
        if w not in self.parent:
            raise ValueError(f"vertex {w} not in tree")
        if self.children[w]:
            raise ValueError(f"vertex {w} is not a leaf")
        return self._without({w})


@dataclass(frozen=True)
class GadgetShape:
    """Structural class of a subtree: height-1 star, height-2 spider, or other."""

    kind: str  # "H1" | "H2" | "other"
    k: int = 0
    k1: int = 0
    k2: int = 0


def deepest_vertices(t: RootedTree) -> list[int]:
    """All vertices of maximum depth, ascending ids."""
    if t.is_empty():
        return []
    h = t.height
    return sorted(v for v, d in t.depth.items() if d == h)


def classify_subtree(t: RootedTree, u: int) -> GadgetShape:
    """Classify the subtree rooted at u as a star H1(k), spider H2(k1,k2), or other.

    H1(k): all children of u are leaves.  H2(k1,k2): the subtree has height
    exactly 2, each depth-1 child that has children has exactly one child
    (a leaf); k1 counts those legs and k2 the leaf children of u.
    """
    if u not in t.parent:
        raise ValueError(f"vertex {u} not in tree")
    kids = t.children[u]
    if all(t.is_leaf(c) for c in kids):
        return GadgetShape("H1", k=len(kids))
    k1 = 0
    k2 = 0
    for c in kids:
        grand = t.children[c]
        if not grand:
            k2 += 1
        elif len(grand) == 1 and t.is_leaf(grand[0]):
            k1 += 1
        else:
            return GadgetShape("other")
    return GadgetShape("H2", k1=k1, k2=k2)


def bfs_tree(g: Graph, root: int) -> RootedTree:
    """Deterministic BFS spanning tree: neighbors explored in ascending id order.

    Tree depths equal BFS distances in g.  Raises on disconnected input.
    """
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    dist = bfs_distances(g, root)
    if g.n in dist:
        raise ValueError("BFS tree undefined for disconnected graphs")
    parent_of: dict[int, int] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in seen:
                seen.add(v)
                parent_of[v] = u
                queue.append(v)
    return RootedTree.from_parents(root, parent_of)
