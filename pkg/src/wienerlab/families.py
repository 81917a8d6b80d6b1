"""Constructors for the named extremal graph families.

Every family has a fixed labelling so tests and docs can address vertices:
core vertices (path spine, cycle, clique) come first in natural order,
then attachments grouped by anchor in ascending anchor order.

The text syntax accepted by :func:`parse_spec` (case-insensitive):

    P(6)            path            C(6)              cycle
    K(5)            complete        star(5)           star K_{1,4}
    T(2,3,4)        double broom    S(3,2)            broom
    spider(3,2)     spider, 3 legs of length 2
    Tnk(8,3)        balanced spider on 8 vertices with 3 legs
    U_p(7,3)        cycle C_3 with 4 pendants at one vertex
    U_l(7,3)        cycle C_3 with a pendant path of 4 vertices
    C(3,4;9)        two cycles joined into a 9-vertex dumbbell
    Pk(7,2)         kite: K_5 plus 2 pendants at one clique vertex
    K(3;7:2,2,3)    octopus: K_3 with legs of 2, 2 and 3 vertices
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graphs import Graph

KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "double_broom",
    "broom",
    "spider",
    "balanced_spider",
    "unicyclic_pendant",
    "unicyclic_tail",
    "dumbbell",
    "kite",
    "octopus",
)


@dataclass(frozen=True)
class FamilySpec:
    """Tagged descriptor of one family member; see the module constructors."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        _validate(self.kind, self.params)

    def __str__(self) -> str:
        return format_spec(self)


def _validate(kind: str, p: tuple[int, ...]) -> None:
    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise ValueError(f"{kind}{p}: {msg}")

    if kind == "path":
        need(len(p) == 1 and p[0] >= 1, "path needs n >= 1")
    elif kind == "cycle":
        need(len(p) == 1 and p[0] >= 3, "cycle needs n >= 3")
    elif kind == "complete":
        need(len(p) == 1 and p[0] >= 1, "complete graph needs n >= 1")
    elif kind == "star":
        need(len(p) == 1 and p[0] >= 1, "star needs n >= 1")
    elif kind == "double_broom":
        need(len(p) == 3, "double broom takes (k, l, d)")
        need(all(x >= 1 for x in p), "double broom needs k, l, d >= 1")
    elif kind == "broom":
        need(len(p) == 2, "broom takes (d, k)")
        need(p[0] >= 1, "broom needs path length d >= 1")
        need(p[1] >= 0, "broom needs leaf count k >= 0")
    elif kind == "spider":
        need(len(p) == 2, "spider takes (l, q)")
        need(p[0] >= 1 and p[1] >= 1, "spider needs l >= 1 legs of length q >= 1")
    elif kind == "balanced_spider":
        need(len(p) == 2, "balanced spider takes (n, k)")
        n, k = p
        need(2 <= k <= n - 2, "balanced spider needs 2 <= k <= n-2")
    elif kind == "unicyclic_pendant":
        need(len(p) == 2, "unicyclic pendant graph takes (n, g)")
        n, g = p
        need(3 <= g <= n, "needs girth 3 <= g <= n")
    elif kind == "unicyclic_tail":
        need(len(p) == 2, "unicyclic tail graph takes (n, g)")
        n, g = p
        need(3 <= g < n, "needs girth 3 <= g < n (g = n would be a bare cycle)")
    elif kind == "dumbbell":
        need(len(p) == 3, "dumbbell takes (m1, m2, n)")
        m1, m2, n = p
        need(m1 >= 3 and m2 >= 3, "dumbbell cycles need m1, m2 >= 3")
        need(n >= m1 + m2 - 1, "dumbbell needs n >= m1 + m2 - 1")
    elif kind == "kite":
        need(len(p) == 2, "kite takes (n, k)")
        n, k = p
        need(n >= 4, "kite needs n >= 4")
        need(0 <= k <= n - 3, "kite needs 0 <= k <= n-3")
    elif kind == "octopus":
        need(len(p) >= 2, "octopus takes one leg length per clique vertex")
        need(all(x >= 1 for x in p), "octopus legs must have length >= 1")


# -- ergonomic constructors -------------------------------------------------


def path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def star(n: int) -> FamilySpec:
    """Star on n vertices: one centre, n-1 leaves."""
    return FamilySpec("star", (n,))


def double_broom(k: int, l: int, d: int) -> FamilySpec:
    """Path of d vertices with k pendants at one end and l at the other."""
    return FamilySpec("double_broom", (k, l, d))


def broom(d: int, k: int) -> FamilySpec:
    """Path of d vertices with k extra leaves at its last vertex."""
    return FamilySpec("broom", (d, k))


def spider(l: int, q: int) -> FamilySpec:
    """Centre vertex with l pendant paths of q vertices each."""
    return FamilySpec("spider", (l, q))


def balanced_spider(n: int, k: int) -> FamilySpec:
    """Spider on n vertices with k legs whose lengths differ by at most one."""
    return FamilySpec("balanced_spider", (n, k))


def unicyclic_pendant(n: int, g: int) -> FamilySpec:
    """Cycle of length g with n-g pendant vertices at one cycle vertex."""
    return FamilySpec("unicyclic_pendant", (n, g))


def unicyclic_tail(n: int, g: int) -> FamilySpec:
    """Cycle of length g with a pendant path of n-g vertices."""
    return FamilySpec("unicyclic_tail", (n, g))


def dumbbell(m1: int, m2: int, n: int) -> FamilySpec:
    """Cycles of lengths m1 and m2 joined by a path into n vertices total."""
    return FamilySpec("dumbbell", (m1, m2, n))


def kite(n: int, k: int) -> FamilySpec:
    """Complete graph on n-k vertices with k pendants at one clique vertex."""
    return FamilySpec("kite", (n, k))


def octopus(legs: "tuple[int, ...] | list[int]") -> FamilySpec:
    """Clique on len(legs) vertices; leg i is a path of legs[i] vertices
    whose first vertex is clique vertex i (length 1 means no extra vertex)."""
    return FamilySpec("octopus", tuple(legs))


def balanced_octopus(n: int, s: int) -> FamilySpec:
    """The octopus on n vertices with n-s clique vertices and legs as equal
    as possible; its cut vertex count is s."""
    m = n - s
    if m < 2:
        raise ValueError(f"balanced octopus needs n - s >= 2, got n={n}, s={s}")
    q, r = divmod(n, m)
    return octopus([q + 1] * r + [q] * (m - r))


# -- construction -----------------------------------------------------------


def vertex_count_of(spec: FamilySpec) -> int:
    kind, p = spec.kind, spec.params
    if kind in ("path", "cycle", "complete", "star"):
        return p[0]
    if kind == "double_broom":
        return p[0] + p[1] + p[2]
    if kind == "broom":
        return p[0] + p[1]
    if kind == "spider":
        return p[0] * p[1] + 1
    if kind in ("balanced_spider", "unicyclic_pendant", "unicyclic_tail", "kite"):
        return p[0]
    if kind == "dumbbell":
        return p[2]
    if kind == "octopus":
        return sum(p)
    raise AssertionError(kind)


def _path_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return list(zip(vertices, vertices[1:]))


def _cycle_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return _path_edges(vertices) + [(vertices[-1], vertices[0])]


def _clique_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1 :]]


def build(spec: FamilySpec) -> Graph:
    """Materialise the family member with its documented labelling."""
    kind, p = spec.kind, spec.params
    n = vertex_count_of(spec)
    edges: list[tuple[int, int]] = []
    if kind == "path":
        edges = _path_edges(list(range(n)))
    elif kind == "cycle":
        edges = _cycle_edges(list(range(n)))
    elif kind == "complete":
        edges = _clique_edges(list(range(n)))
    elif kind == "star":
        edges = [(0, v) for v in range(1, n)]
    elif kind == "double_broom":
        k, l, d = p
        edges = _path_edges(list(range(d)))
        edges += [(0, d + i) for i in range(k)]
        edges += [(d - 1, d + k + i) for i in range(l)]
    elif kind == "broom":
        d, k = p
        edges = _path_edges(list(range(d)))
        edges += [(d - 1, d + i) for i in range(k)]
    elif kind == "spider":
        l, q = p
        for leg in range(l):
            first = 1 + leg * q
            edges += _path_edges([0] + list(range(first, first + q)))
    elif kind == "balanced_spider":
        nn, k = p
        q, r = divmod(nn - 1, k)
        lengths = [q + 1] * r + [q] * (k - r)
        nxt = 1
        for length in lengths:
            edges += _path_edges([0] + list(range(nxt, nxt + length)))
            nxt += length
    elif kind == "unicyclic_pendant":
        nn, g = p
        edges = _cycle_edges(list(range(g)))
        edges += [(0, v) for v in range(g, nn)]
    elif kind == "unicyclic_tail":
        nn, g = p
        edges = _cycle_edges(list(range(g)))
        edges += _path_edges([0] + list(range(g, nn)))
    elif kind == "dumbbell":
        m1, m2, nn = p
        edges = _cycle_edges(list(range(m1)))
        if nn == m1 + m2 - 1:
            edges += _cycle_edges([0] + list(range(m1, nn)))
        else:
            junction = nn - m2
            edges += _path_edges([0] + list(range(m1, junction + 1)))
            edges += _cycle_edges(list(range(junction, nn)))
    elif kind == "kite":
        nn, k = p
        clique = nn - k
        edges = _clique_edges(list(range(clique)))
        edges += [(0, v) for v in range(clique, nn)]
    elif kind == "octopus":
        m = len(p)
        edges = _clique_edges(list(range(m)))
        nxt = m
        for anchor, length in enumerate(p):
            extra = length - 1
            edges += _path_edges([anchor] + list(range(nxt, nxt + extra)))
            nxt += extra
    else:
        raise AssertionError(kind)
    return Graph.from_edges(n, edges)


# -- closed-form structure counts -------------------------------------------


def pendant_count_of(spec: FamilySpec) -> int:
    """Number of degree-1 vertices, from the parameters alone."""
    kind, p = spec.kind, spec.params
    n = vertex_count_of(spec)
    if kind == "path":
        return 2 if n >= 2 else 0
    if kind == "cycle":
        return 0
    if kind == "complete":
        return 2 if n == 2 else 0
    if kind == "star":
        return 0 if n == 1 else (2 if n == 2 else n - 1)
    if kind == "double_broom":
        return p[0] + p[1]
    if kind == "broom":
        d, k = p
        if k == 0:
            return 2 if d >= 2 else 0
        return k + (1 if d >= 2 else 0)
    if kind == "spider":
        l, _ = p
        return 2 if l == 1 else l
    if kind == "balanced_spider":
        return p[1]
    if kind == "unicyclic_pendant":
        return p[0] - p[1]
    if kind == "unicyclic_tail":
        return 1
    if kind == "dumbbell":
        return 0
    if kind == "kite":
        return p[1]
    if kind == "octopus":
        long_legs = sum(1 for x in p if x >= 2)
        if len(p) == 2:
            return long_legs + sum(1 for x in p if x == 1)
        return long_legs
    raise AssertionError(kind)


def cut_count_of(spec: FamilySpec) -> int:
    """Number of cut vertices, from the parameters alone."""
    kind, p = spec.kind, spec.params
    n = vertex_count_of(spec)
    tree_kinds = ("path", "star", "double_broom", "broom", "spider", "balanced_spider")
    if kind in tree_kinds:
        # trees: every vertex is a pendant vertex or a cut vertex
        return 0 if n == 1 else n - pendant_count_of(spec)
    if kind in ("cycle", "complete"):
        return 0
    if kind == "unicyclic_pendant":
        return 1 if p[0] > p[1] else 0
    if kind == "unicyclic_tail":
        return p[0] - p[1]
    if kind == "dumbbell":
        m1, m2, nn = p
        return 1 if nn == m1 + m2 - 1 else nn - m1 - m2 + 2
    if kind == "kite":
        return 1 if p[1] >= 1 else 0
    if kind == "octopus":
        return n - len(p)
    raise AssertionError(kind)


# -- text syntax -------------------------------------------------------------


def format_spec(spec: FamilySpec) -> str:
    kind, p = spec.kind, spec.params
    if kind == "path":
        return f"P({p[0]})"
    if kind == "cycle":
        return f"C({p[0]})"
    if kind == "complete":
        return f"K({p[0]})"
    if kind == "star":
        return f"star({p[0]})"
    if kind == "double_broom":
        return f"T({p[0]},{p[1]},{p[2]})"
    if kind == "broom":
        return f"S({p[0]},{p[1]})"
    if kind == "spider":
        return f"spider({p[0]},{p[1]})"
    if kind == "balanced_spider":
        return f"Tnk({p[0]},{p[1]})"
    if kind == "unicyclic_pendant":
        return f"U_p({p[0]},{p[1]})"
    if kind == "unicyclic_tail":
        return f"U_l({p[0]},{p[1]})"
    if kind == "dumbbell":
        return f"C({p[0]},{p[1]};{p[2]})"
    if kind == "kite":
        return f"Pk({p[0]},{p[1]})"
    if kind == "octopus":
        legs = ",".join(str(x) for x in p)
        return f"K({len(p)};{sum(p)}:{legs})"
    raise AssertionError(kind)


_SPEC_RE = re.compile(r"^\s*([a-z_]+)\s*\(\s*([-0-9,;:\s]*)\s*\)\s*$")


def parse_spec(text: str) -> FamilySpec:
    """Parse the CLI family syntax; round-trips with :func:`format_spec`."""
    m = _SPEC_RE.match(text.lower())
    if not m:
        raise ValueError(f"cannot parse family spec {text!r}")
    name, body = m.group(1), m.group(2)

    def ints(chunk: str) -> list[int]:
        chunk = chunk.strip()
        if not chunk:
            return []
        try:
            return [int(x) for x in chunk.split(",")]
        except ValueError as exc:
            raise ValueError(f"bad integer list in family spec {text!r}") from exc

    if name == "k" and ";" in body:
        head, _, tail = body.partition(";")
        count = ints(head)
        nstr, _, legstr = tail.partition(":")
        total = ints(nstr)
        legs = ints(legstr)
        if len(count) != 1 or len(total) != 1:
            raise ValueError(f"octopus syntax is K(m;n:l1,...,lm), got {text!r}")
        if len(legs) != count[0]:
            raise ValueError(f"octopus promises {count[0]} legs, got {len(legs)}")
        if sum(legs) != total[0]:
            raise ValueError(f"octopus legs sum to {sum(legs)}, expected {total[0]}")
        return octopus(legs)
    if name == "c" and ";" in body:
        head, _, tail = body.partition(";")
        ms = ints(head)
        ns = ints(tail)
        if len(ms) != 2 or len(ns) != 1:
            raise ValueError(f"dumbbell syntax is C(m1,m2;n), got {text!r}")
        return dumbbell(ms[0], ms[1], ns[0])
    values = ints(body)
    simple = {
        ("p", 1): path,
        ("c", 1): cycle,
        ("k", 1): complete,
        ("star", 1): star,
        ("t", 3): lambda k, l, d: double_broom(k, l, d),
        ("s", 2): lambda d, k: broom(d, k),
        ("spider", 2): lambda l, q: spider(l, q),
        ("tnk", 2): lambda n, k: balanced_spider(n, k),
        ("u_p", 2): lambda n, g: unicyclic_pendant(n, g),
        ("u_l", 2): lambda n, g: unicyclic_tail(n, g),
        ("pk", 2): lambda n, k: kite(n, k),
    }
    maker = simple.get((name, len(values)))
    if maker is None:
        raise ValueError(f"cannot parse family spec {text!r}")
    return maker(*values)
