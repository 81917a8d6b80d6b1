"""Wiener-monotone graph surgeries.

Each operation builds the before/after pair of one rewiring step whose
effect on the Wiener index has a guaranteed direction, and returns both
graphs with both values so callers can assert the inequality directly.
Preconditions are checked and violations rejected; nothing is silently
repaired or reoriented.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, transmission, wiener


@dataclass(frozen=True)
class SurgeryResult:
    before: Graph
    after: Graph
    w_before: int
    w_after: int

    @property
    def delta(self) -> int:
        return self.w_after - self.w_before


def _require_connected(g: Graph, what: str) -> None:
    if not g.is_connected():
        raise ValueError(f"{what} must be connected")


def identify_at(base: Graph, at: int, part: Graph, root: int) -> Graph:
    """Glue ``part`` onto ``base`` by identifying ``root`` with ``at``.

    Vertices of ``part`` other than ``root`` are appended after the base
    vertices in their original order.
    """
    if not 0 <= at < base.n:
        raise IndexError(f"vertex {at} out of range")
    if not 0 <= root < part.n:
        raise IndexError(f"root {root} out of range")
    mapping = {}
    nxt = base.n
    for v in range(part.n):
        if v == root:
            mapping[v] = at
        else:
            mapping[v] = nxt
            nxt += 1
    edges = base.edges()
    edges += [(mapping[u], mapping[v]) for u, v in part.edges()]
    return Graph.from_edges(base.n + part.n - 1, edges)


def attach_path(g: Graph, v: int, length: int) -> Graph:
    """Attach a pendant path of ``length`` new vertices at ``v``."""
    if length < 0:
        raise ValueError("path length must be >= 0")
    edges = g.edges()
    prev = v
    for i in range(length):
        new = g.n + i
        edges.append((prev, new))
        prev = new
    return Graph.from_edges(g.n + length, edges)


def attach_pendants(g: Graph, v: int, count: int) -> Graph:
    """Attach ``count`` pendant vertices at ``v``."""
    if count < 0:
        raise ValueError("pendant count must be >= 0")
    edges = g.edges() + [(v, g.n + i) for i in range(count)]
    return Graph.from_edges(g.n + count, edges)


def add_edge_surgery(g: Graph, u: int, v: int) -> SurgeryResult:
    """Join two non-adjacent vertices; the Wiener index strictly drops."""
    _require_connected(g, "input graph")
    if u == v:
        raise ValueError("cannot join a vertex to itself")
    if g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are already adjacent")
    after = g.add_edge(u, v)
    return SurgeryResult(g, after, wiener(g), wiener(after))


def graft_step(g_base: Graph, v: int, k: int, l: int) -> SurgeryResult:
    """One grafting move on the two pendant paths hung at ``v``.

    Builds the graph with paths of k and l new vertices at ``v``, then
    moves the last edge of the k-path onto the tip of the l-path, giving
    the (k-1, l+1) configuration.  For 1 <= k <= l the Wiener index
    strictly grows.
    """
    _require_connected(g_base, "base graph")
    if g_base.n < 2:
        raise ValueError("base graph needs at least 2 vertices")
    if k < 1:
        raise ValueError("grafting needs k >= 1")
    if k > l:
        raise ValueError(
            f"grafting is monotone only for k <= l, got k={k}, l={l}"
        )
    if not 0 <= v < g_base.n:
        raise IndexError(f"vertex {v} out of range")
    # paths: v_1..v_k are n0..n0+k-1; u_1..u_l are n0+k..n0+k+l-1
    n0 = g_base.n
    edges = g_base.edges()
    prev = v
    for i in range(k):
        edges.append((prev, n0 + i))
        prev = n0 + i
    prev = v
    for i in range(l):
        edges.append((prev, n0 + k + i))
        prev = n0 + k + i
    before = Graph.from_edges(n0 + k + l, edges)
    vk = n0 + k - 1
    vk_prev = n0 + k - 2 if k >= 2 else v
    ul = n0 + k + l - 1
    after = before.remove_edge(vk_prev, vk).add_edge(ul, vk)
    return SurgeryResult(before, after, wiener(before), wiener(after))


def move_component(
    h: Graph,
    u: int,
    v: int,
    x_part: Graph,
    x: int,
    y_part: Graph,
    y: int,
) -> tuple[Graph, Graph, Graph]:
    """Consolidation of two attached parts at one of their anchor vertices.

    Returns (G, G1, G2): G has x_part glued at u and y_part glued at v;
    G1 carries both parts at u, G2 both at v.  The smaller of W(G1), W(G2)
    is strictly below W(G).
    """
    for part, what in ((h, "host"), (x_part, "first part"), (y_part, "second part")):
        _require_connected(part, what)
        if part.n < 2:
            raise ValueError(f"{what} needs at least 2 vertices")
    if u == v:
        raise ValueError("anchor vertices must be distinct")
    g = identify_at(identify_at(h, u, x_part, x), v, y_part, y)
    g1 = identify_at(identify_at(h, u, x_part, x), u, y_part, y)
    g2 = identify_at(identify_at(h, v, x_part, x), v, y_part, y)
    return g, g1, g2


def move_pendants(
    g: Graph, u: int, v: int, n1: int, n2: int
) -> tuple[Graph, Graph, Graph]:
    """Pendant consolidation: (split, all at u, all at v).

    The split variant has n1 pendants at u and n2 at v; the better of the
    two consolidated variants is strictly below it.
    """
    _require_connected(g, "input graph")
    if g.n < 2:
        raise ValueError("input graph needs at least 2 vertices")
    if u == v:
        raise ValueError("anchor vertices must be distinct")
    if n1 < 1 or n2 < 1:
        raise ValueError("both pendant groups must be non-empty")
    split = attach_pendants(attach_pendants(g, u, n1), v, n2)
    at_u = attach_pendants(g, u, n1 + n2)
    at_v = attach_pendants(g, v, n1 + n2)
    return split, at_u, at_v


def _is_path_between(g: Graph, u: int, v: int) -> bool:
    degs = [g.degree(w) for w in range(g.n)]
    if sorted(degs) != [1, 1] + [2] * (g.n - 2):
        return False
    return degs[u] == 1 and degs[v] == 1 and g.is_connected()


def merge_paths(g: Graph, u: int, v: int, l: int, k: int) -> SurgeryResult:
    """Merge the two pendant paths hung at u and v into one long path at u.

    Before: paths of l and k vertices with one end identified with u and v
    respectively.  After: a path of l+k-1 vertices at u and nothing at v.
    With l, k >= 2, g not itself the u-v path, and the transmission of u
    at least that of v, the Wiener index strictly grows.
    """
    _require_connected(g, "input graph")
    if g.n < 3:
        raise ValueError("input graph needs at least 3 vertices")
    if u == v:
        raise ValueError("anchor vertices must be distinct")
    if l < 2 or k < 2:
        raise ValueError("both attached paths need at least 2 vertices")
    if _is_path_between(g, u, v):
        raise ValueError(
            "the move is not monotone when the host is exactly the u-v path"
        )
    if transmission(g, u) < transmission(g, v):
        raise ValueError(
            "orientation violated: u must have transmission >= that of v"
        )
    before = attach_path(attach_path(g, u, l - 1), v, k - 1)
    after = attach_path(g, u, l + k - 2)
    return SurgeryResult(before, after, wiener(before), wiener(after))


def edge_surgery(
    g: Graph,
    remove: Iterable[tuple[int, int]] | Sequence[tuple[int, int]],
    add: Iterable[tuple[int, int]] | Sequence[tuple[int, int]],
) -> SurgeryResult:
    """Generic connectivity-preserving edge exchange; no direction guarantee."""
    _require_connected(g, "input graph")
    after = g
    for u, v in remove:
        if not after.has_edge(u, v):
            raise ValueError(f"cannot remove missing edge ({u},{v})")
        after = after.remove_edge(u, v)
    for u, v in add:
        if after.has_edge(u, v):
            raise ValueError(f"cannot add existing edge ({u},{v})")
        after = after.add_edge(u, v)
    if not after.is_connected():
        raise ValueError("surgery would disconnect the graph")
    return SurgeryResult(g, after, wiener(g), wiener(after))
