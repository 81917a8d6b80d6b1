"""Isomorphism tools for the tiny graphs this package deals in.

Three tiers, each exact:

* brute-force canonical form (lexicographically minimal adjacency matrix
  over all vertex permutations) for graphs on at most 8 vertices;
* centre-rooted subtree-encoding canonical form for trees of any
  supported size;
* a degree-refined backtracking bijection search, used internally to
  deduplicate search witnesses without paying the factorial cost.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .graphs import Graph, _bits, distances_from

#: Brute-force canonicalisation is capped here; beyond it only trees are supported.
BRUTE_FORCE_LIMIT = 8


def _pair_index(n: int) -> list[tuple[int, int]]:
    """Unordered pairs (i, j), i < j, in column-major order."""
    return [(i, j) for j in range(n) for i in range(j)]


@lru_cache(maxsize=4096)
def canonical_form(g: Graph) -> int:
    """Lexicographically minimal adjacency bitstring over all relabellings.

    The bit for pair (i, j) of the relabelled graph is placed so that
    earlier pairs are more significant; two graphs on at most
    ``BRUTE_FORCE_LIMIT`` vertices are isomorphic iff the values match.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"canonical form supports at most {BRUTE_FORCE_LIMIT} vertices, got {g.n}"
        )
    pairs = _pair_index(g.n)
    nbits = len(pairs)
    adj = g.adj
    best = None
    for perm in permutations(range(g.n)):
        code = 0
        for k, (i, j) in enumerate(pairs):
            if adj[perm[i]] >> perm[j] & 1:
                code |= 1 << (nbits - 1 - k)
        if best is None or code < best:
            best = code
    return best


def _canonical_permutation(g: Graph) -> tuple[int, ...]:
    pairs = _pair_index(g.n)
    nbits = len(pairs)
    adj = g.adj
    best = None
    best_perm = None
    for perm in permutations(range(g.n)):
        code = 0
        for k, (i, j) in enumerate(pairs):
            if adj[perm[i]] >> perm[j] & 1:
                code |= 1 << (nbits - 1 - k)
        if best is None or code < best:
            best, best_perm = code, perm
    return best_perm


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs on at most 8 vertices."""
    if g.n > BRUTE_FORCE_LIMIT or h.n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"isomorphism test supports at most {BRUTE_FORCE_LIMIT} vertices"
        )
    if g.n != h.n:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


# -- trees ----------------------------------------------------------------


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.n - 1 and g.is_connected()


def _tree_centers(g: Graph) -> list[int]:
    """The one or two middle vertices found by repeatedly stripping leaves."""
    if g.n <= 2:
        return list(range(g.n))
    degree = [g.degree(v) for v in range(g.n)]
    alive = g.n
    layer = [v for v in range(g.n) if degree[v] == 1]
    while alive > 2:
        alive -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for u in _bits(g.adj[v]):
                if degree[u] > 1:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


def _rooted_code(g: Graph, root: int) -> str:
    codes = {}
    order = [root]
    parent = {root: -1}
    for v in order:
        for u in _bits(g.adj[v]):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    for v in reversed(order):
        children = sorted(
            codes[u] for u in _bits(g.adj[v]) if u != parent[v]
        )
        codes[v] = "(" + "".join(children) + ")"
    return codes[root]


def tree_code(g: Graph) -> str:
    """Canonical string of a free tree; equal iff the trees are isomorphic."""
    if not is_tree(g):
        raise ValueError("tree_code needs a tree")
    return min(_rooted_code(g, c) for c in _tree_centers(g))


def _tree_canonical_graph(g: Graph) -> Graph:
    centers = _tree_centers(g)
    codes = [(_rooted_code(g, c), c) for c in centers]
    root = min(codes)[1]
    # Relabel in DFS order, visiting children by ascending subtree code.
    sub = {}
    order = [root]
    parent = {root: -1}
    for v in order:
        for u in _bits(g.adj[v]):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    for v in reversed(order):
        children = sorted(
            (sub[u][0], u) for u in _bits(g.adj[v]) if u != parent[v]
        )
        sub[v] = ("(" + "".join(c for c, _ in children) + ")", [u for _, u in children])
    label = {}
    stack = [root]
    while stack:
        v = stack.pop()
        label[v] = len(label)
        stack.extend(reversed(sub[v][1]))
    edges = [(label[u], label[v]) for u, v in g.edges()]
    return Graph.from_edges(g.n, edges)


def canonical_graph(g: Graph) -> Graph:
    """A canonical relabelling: equal graphs iff isomorphic inputs.

    Brute force up to 8 vertices; centre-rooted canonical labelling for
    larger trees.  Anything else is out of scope.
    """
    if g.n <= BRUTE_FORCE_LIMIT:
        return g.relabel(_canonical_permutation(g))
    if is_tree(g):
        return _tree_canonical_graph(g)
    raise ValueError(
        f"canonical labelling beyond {BRUTE_FORCE_LIMIT} vertices is only supported for trees"
    )


# -- backtracking matcher --------------------------------------------------


def iso_fingerprint(g: Graph) -> tuple:
    """Cheap isomorphism invariant: degree and transmission multisets."""
    transmissions = tuple(sorted(sum(distances_from(g, v).dist) for v in range(g.n)))
    return (g.n, g.degree_sequence(), transmissions)


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Search for a bijection mapping g onto h; None if there is none.

    Exact for any size, and fast in practice on the handful-of-vertices
    graphs that reach it: candidates are filtered by degree and by
    adjacency consistency with already-mapped vertices.
    """
    if g.n != h.n:
        return None
    n = g.n
    gdeg = [g.degree(v) for v in range(n)]
    hdeg = [h.degree(v) for v in range(n)]
    if sorted(gdeg) != sorted(hdeg):
        return None
    # Map high-degree, already-connected vertices first.
    order: list[int] = []
    while len(order) < n:
        best = -1
        best_key = None
        for v in range(n):
            if v in order:
                continue
            attached = sum(1 for u in order if g.has_edge(v, u))
            key = (attached, gdeg[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
    mapping = [-1] * n
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used[w] or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for prev in order[:idx]:
                if g.has_edge(v, prev) != h.has_edge(w, mapping[prev]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(idx + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    if extend(0):
        return tuple(mapping)
    return None


def same_iso_class(g: Graph, h: Graph) -> bool:
    """Exact isomorphism for the sizes the search produces (any-n trees, n<=8 graphs)."""
    if g.n != h.n:
        return False
    if is_tree(g) and is_tree(h):
        return tree_code(g) == tree_code(h)
    if iso_fingerprint(g) != iso_fingerprint(h):
        return False
    return find_isomorphism(g, h) is not None
