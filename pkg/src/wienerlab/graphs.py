"""Bitset-backed simple undirected graphs and their distance invariants.

Vertices are 0..n-1 and each neighbourhood is one Python int used as a
bitmask, so a graph on up to 64 vertices is a tuple of machine words and
BFS is a couple of bitwise operations per level.  All values are immutable
and hashable; every mutator returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64

#: Distance value reported for vertices in a different component.
UNREACHABLE = -1


class DisconnectedGraphError(ValueError):
    """An operation defined only for connected graphs got a disconnected one."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbour set of ``v`` as a bitmask.  Construction
    validates symmetry, irreflexivity and the vertex cap; use
    :meth:`from_edges` for the common case.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in _bits(row):
                out.append((v, u))
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    # -- derived graphs ---------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("cannot add a self-loop")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Apply a permutation: new vertex ``i`` is old vertex ``perm[i]``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        inv = [0] * self.n
        for new, old in enumerate(perm):
            inv[old] = new
        adj = [0] * self.n
        for new, old in enumerate(perm):
            row = 0
            for u in _bits(self.adj[old]):
                row |= 1 << inv[u]
            adj[new] = row
        return Graph(self.n, tuple(adj))

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to 0..k-1 in ascending vertex order."""
        keep = sorted(set(vertices))
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        index = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for v in keep:
            for u in _bits(self.adj[v]):
                if u in index:
                    adj[index[v]] |= 1 << index[u]
        return Graph(len(keep), tuple(adj))

    def is_connected(self) -> bool:
        seen = self._reach(0)
        return seen == (1 << self.n) - 1

    def _reach(self, start: int, forbidden: int = 0) -> int:
        """Bitmask of vertices reachable from ``start`` avoiding ``forbidden``."""
        seen = 1 << start
        frontier = seen
        adj = self.adj
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen & ~forbidden
            seen |= frontier
        return seen


@dataclass(frozen=True)
class DistanceRow:
    """Hop distances from one source vertex; UNREACHABLE marks other components."""

    source: int
    dist: tuple[int, ...]

    def total(self) -> int:
        if UNREACHABLE in self.dist:
            raise DisconnectedGraphError(
                f"vertex {self.source} does not reach the whole graph"
            )
        return sum(self.dist)


def distances_from(g: Graph, v: int) -> DistanceRow:
    """BFS hop distances from ``v`` to every vertex."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[v] = 0
    seen = 1 << v
    frontier = seen
    level = 0
    adj = g.adj
    while frontier:
        level += 1
        nxt = 0
        for u in _bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~seen
        seen |= frontier
        for u in _bits(frontier):
            dist[u] = level
    return DistanceRow(v, tuple(dist))


def transmission(g: Graph, v: int) -> int:
    """Sum of distances from ``v`` to all other vertices (connected graphs only)."""
    return distances_from(g, v).total()


def wiener(g: Graph) -> int:
    """Sum of distances over all unordered vertex pairs, exactly."""
    total = 0
    for v in range(g.n):
        total += transmission(g, v)
    return total // 2


def pendant_vertices(g: Graph) -> frozenset[int]:
    """Vertices of degree one."""
    return frozenset(v for v in range(g.n) if g.adj[v].bit_count() == 1)


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points of a connected graph (iterative lowpoint DFS)."""
    if not g.is_connected():
        raise DisconnectedGraphError("cut vertices are defined on connected graphs")
    n = g.n
    if n <= 2:
        return frozenset()
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    # stack entries: (vertex, parent, iterator over neighbours)
    disc[0] = low[0] = 0
    counter = 1
    root_children = 0
    stack: list[tuple[int, int, Iterator[int]]] = [(0, -1, g.neighbors(0))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                disc[u] = low[u] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                stack.append((u, v, g.neighbors(u)))
                advanced = True
                break
            elif u != parent:
                low[v] = min(low[v], disc[u])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    cuts.add(p)
    if root_children > 1:
        cuts.add(0)
    return frozenset(cuts)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected pieces, bridges as 2-sets) of a connected graph.

    ``block_adjacency`` lists, per cut vertex, the indices of the blocks
    containing it; every edge lies in exactly one block.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_adjacency: tuple[tuple[int, tuple[int, ...]], ...]

    def blocks_at(self, v: int) -> tuple[int, ...]:
        for vertex, idxs in self.block_adjacency:
            if vertex == v:
                return idxs
        return tuple(i for i, b in enumerate(self.blocks) if v in b)

    def pendant_blocks(self) -> tuple[int, ...]:
        """Indices of blocks containing exactly one cut vertex of the graph."""
        out = []
        for i, block in enumerate(self.blocks):
            if len(block & self.cut_vertices) == 1:
                out.append(i)
        return tuple(out)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan biconnected components of a connected graph."""
    if not g.is_connected():
        raise DisconnectedGraphError("block decomposition needs a connected graph")
    n = g.n
    if n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset(), ())
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    cuts = set()
    disc[0] = low[0] = 0
    counter = 1
    root_children = 0
    stack: list[tuple[int, int, Iterator[int]]] = [(0, -1, g.neighbors(0))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                disc[u] = low[u] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                edge_stack.append((v, u))
                stack.append((u, v, g.neighbors(u)))
                advanced = True
                break
            elif u != parent and disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    # edges above (p, v) form one block
                    members = set()
                    while edge_stack:
                        a, b = edge_stack[-1]
                        if disc[a] >= disc[v]:
                            members.update(edge_stack.pop())
                        else:
                            break
                    if edge_stack and edge_stack[-1] == (p, v):
                        members.update(edge_stack.pop())
                    if members:
                        blocks.append(frozenset(members))
                    if p != 0:
                        cuts.add(p)
    if root_children > 1:
        cuts.add(0)
    elif root_children == 0:
        blocks.append(frozenset({0}))
    adjacency = []
    for v in sorted(cuts):
        idxs = tuple(i for i, b in enumerate(blocks) if v in b)
        adjacency.append((v, idxs))
    return BlockDecomposition(tuple(blocks), frozenset(cuts), tuple(adjacency))
