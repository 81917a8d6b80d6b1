"""Exhaustive extremal search over labelled graph classes.

The searchable classes are all connected graphs (every edge subset of the
complete graph, connectivity-filtered), all labelled trees (decoded
sequences), and all unicyclic graphs (connected graphs with n edges).
One cached sweep per (class, n) buckets every member by its pendant and
cut vertex counts and records, per bucket, the minimum and maximum Wiener
index together with the attaining graphs deduplicated up to isomorphism.

Sweeps are split into a fixed list of chunks that are merged in chunk
order, so results are identical regardless of how many worker processes
run them.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product

from .families import FamilySpec, balanced_octopus, build
from .families import build as build_family
from .families import (
    cycle,
    double_broom,
    dumbbell,
    kite,
    star,
    unicyclic_tail,
)
from .families import balanced_spider as balanced_spider_spec
from .formulas import (
    w_balanced_spider,
    w_cycle,
    w_double_broom,
    w_dumbbell_33,
    w_kite,
    w_max_pendant,
    w_star,
    w_t1,
    w_unicyclic_tail,
    wiener,
)
from .graphs import Graph, block_decomposition
from .graphio import to_graph6
from .isomorphism import canonical_graph, same_iso_class

# re-export the direct evaluator under its usual name for witness checks
from .graphs import wiener  # noqa: F811

ALL_CONNECTED = "AllConnected"
TREES = "Trees"
UNICYCLIC = "Unicyclic"
GRAPH_CLASSES = (ALL_CONNECTED, TREES, UNICYCLIC)

MIN = "min"
MAX = "max"

#: At most this many non-isomorphic witnesses are kept per report.
WITNESS_CAP = 16

_MASK_CHUNKS = 64

THREADS_ENV = "WIENERLAB_THREADS"


class EmptyClassError(LookupError):
    """Raised only by internal helpers; public reports mark emptiness instead."""


@dataclass(frozen=True)
class SearchConstraint:
    """A labelled class plus optional pendant and cut vertex counts."""

    n: int
    graph_class: str = ALL_CONNECTED
    pendant_k: int | None = None
    cut_s: int | None = None

    def __post_init__(self) -> None:
        if self.graph_class not in GRAPH_CLASSES:
            raise ValueError(f"unknown graph class {self.graph_class!r}")
        lo, hi = (2, 10) if self.graph_class == TREES else (3, 8)
        if not lo <= self.n <= hi:
            raise ValueError(
                f"{self.graph_class} enumeration supports {lo} <= n <= {hi}, got {self.n}"
            )
        if self.pendant_k is not None and not 0 <= self.pendant_k <= self.n:
            raise ValueError(f"pendant count {self.pendant_k} out of range")
        if self.cut_s is not None and not 0 <= self.cut_s <= self.n - 2:
            raise ValueError(f"cut vertex count {self.cut_s} out of range")


@dataclass(frozen=True)
class SearchReport:
    constraint: SearchConstraint
    objective: str
    extremal_value: int | None
    witnesses: tuple[Graph, ...]
    witness_labeled_counts: tuple[int, ...]
    witness_overflow: int
    scanned: int
    matching: int
    elapsed_ms: float

    @property
    def is_empty(self) -> bool:
        return self.matching == 0

    @property
    def unique_witness(self) -> bool:
        return len(self.witnesses) == 1 and self.witness_overflow == 0


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    params: tuple[tuple[str, int], ...]
    predicted_value: int
    predicted_families: tuple[FamilySpec, ...]
    observed: SearchReport
    value_match: bool
    witness_match: bool
    unique: bool

    @property
    def ok(self) -> bool:
        return self.value_match and self.witness_match


# -- enumeration primitives --------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(j)]


def enumerate_connected(n: int):
    """Every connected labelled graph on n vertices, exactly once."""
    if not 3 <= n <= 8:
        raise ValueError(f"connected enumeration supports 3 <= n <= 8, got {n}")
    pairs = _pairs(n)
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        adj = _mask_adj(n, mask, pairs)
        if _reach_all(adj, full):
            yield Graph(n, tuple(adj))


def enumerate_trees(n: int):
    """Every labelled tree on n vertices, exactly once (n^(n-2) of them)."""
    if not 2 <= n <= 10:
        raise ValueError(f"tree enumeration supports 2 <= n <= 10, got {n}")
    for seq in product(range(n), repeat=n - 2):
        yield Graph.from_edges(n, _decode_tree_edges(n, seq))


def _mask_adj(n: int, mask: int, pairs: list[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    while mask:
        low = mask & -mask
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        mask ^= low
    return adj


def _reach_all(adj: list[int], full: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def _decode_tree_edges(n: int, seq: tuple[int, ...]) -> list[tuple[int, int]]:
    if n == 2:
        return [(0, 1)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in seq:
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


# -- per-graph evaluation ------------------------------------------------------


def _eval_connected(n: int, adj: list[int], full: int):
    """(wiener, transmissions, pendants, cuts) or None if disconnected."""
    trans = []
    total = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        t = 0
        level = 0
        while frontier:
            level += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
            t += level * frontier.bit_count()
        if seen != full:
            return None
        trans.append(t)
        total += t
    pendants = 0
    cuts = 0
    for v in range(n):
        d = adj[v].bit_count()
        if d == 1:
            pendants += 1
            continue
        vbit = 1 << v
        rest = full ^ vbit
        seen = rest & -rest
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen & rest
            seen |= frontier
        if seen != rest:
            cuts += 1
    return total // 2, trans, pendants, cuts


# -- chunked sweeps ------------------------------------------------------------


def _pool_add(pool: list, overflow: int, n: int, adj: tuple[int, ...], count: int) -> int:
    """Fold one labelled graph into a pool of iso-class representatives."""
    g = Graph(n, adj)
    for entry in pool:
        if entry[2] is None:
            entry[2] = Graph(n, tuple(entry[0]))
        if same_iso_class(entry[2], g):
            entry[1] += count
            return overflow
    if len(pool) >= WITNESS_CAP:
        return overflow + count
    pool.append([list(adj), count, g])
    return overflow


class _Extreme:
    """Running best value with its witness pool, for one direction."""

    __slots__ = ("sign", "value", "pool", "overflow")

    def __init__(self, sign: int):
        self.sign = sign  # +1 for max, -1 for min
        self.value: int | None = None
        self.pool: list = []
        self.overflow = 0

    def consider(self, n: int, value: int, adj: list[int]) -> None:
        if self.value is None or self.sign * (value - self.value) > 0:
            self.value = value
            self.pool = []
            self.overflow = 0
        if value == self.value:
            self.overflow = _pool_add(self.pool, self.overflow, n, tuple(adj), 1)

    def dump(self) -> list:
        return [self.value, [[e[0], e[1]] for e in self.pool], self.overflow]


class _Bucket:
    __slots__ = ("count", "lo", "hi")

    def __init__(self):
        self.count = 0
        self.lo = _Extreme(-1)
        self.hi = _Extreme(+1)

    def consider(self, n: int, value: int, adj: list[int]) -> None:
        self.count += 1
        self.lo.consider(n, value, adj)
        self.hi.consider(n, value, adj)

    def dump(self) -> list:
        return [self.count, self.lo.dump(), self.hi.dump()]


def _scan_chunk(args: tuple) -> tuple:
    kind = args[0]
    if kind == "masks":
        return _scan_masks(*args[1:])
    if kind == "trees":
        return _scan_trees(*args[1:])
    if kind == "unicyclic":
        return _scan_unicyclic(*args[1:])
    raise AssertionError(kind)


def _scan_masks(n: int, lo: int, hi: int) -> tuple:
    pairs = _pairs(n)
    full = (1 << n) - 1
    need = n - 1
    buckets: dict[tuple[int, int], _Bucket] = {}
    scanned = 0
    for mask in range(lo, hi):
        if mask.bit_count() < need:
            continue
        adj = _mask_adj(n, mask, pairs)
        got = _eval_connected(n, adj, full)
        if got is None:
            continue
        scanned += 1
        w, _, pendants, cuts = got
        key = (pendants, cuts)
        bucket = buckets.get(key)
        if bucket is None:
            bucket = buckets[key] = _Bucket()
        bucket.consider(n, w, adj)
    return scanned, {k: b.dump() for k, b in buckets.items()}


def _scan_trees(n: int, first: int) -> tuple:
    buckets: dict[tuple[int, int], _Bucket] = {}
    scanned = 0
    if n == 2:
        bucket = _Bucket()
        bucket.consider(2, 1, [2, 1])
        return 1, {(2, 0): bucket.dump()}
    for rest in product(range(n), repeat=n - 3):
        seq = (first,) + rest
        deg = [1] * n
        present = 0
        for x in seq:
            deg[x] += 1
            present |= 1 << x
        pendants = n - present.bit_count()
        # pointer decode, accumulating the edge-split Wiener sum as we go
        size = [1] * n
        w = 0
        ptr = 0
        while deg[ptr] != 1:
            ptr += 1
        leaf = ptr
        for x in seq:
            s = size[leaf]
            w += s * (n - s)
            size[x] += s
            deg[x] -= 1
            if deg[x] == 1 and x < ptr:
                leaf = x
            else:
                ptr += 1
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
        s = size[leaf]
        w += s * (n - s)
        scanned += 1
        key = (pendants, n - pendants)
        bucket = buckets.get(key)
        if bucket is None:
            bucket = buckets[key] = _Bucket()
        bucket.count += 1
        # materialise edges only if this tree touches a running extreme
        lo_v, hi_v = bucket.lo.value, bucket.hi.value
        if (
            lo_v is None
            or w <= lo_v
            or w >= hi_v
        ):
            adj = [0] * n
            for u, v in _decode_tree_edges(n, seq):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bucket.lo.consider(n, w, adj)
            bucket.hi.consider(n, w, adj)
        else:
            bucket.lo.consider(n, w, None) if False else None
    return scanned, {k: b.dump() for k, b in buckets.items()}


def _scan_unicyclic(n: int, e_lo: int, e_hi: int) -> tuple:
    pairs = _pairs(n)
    total_edges = len(pairs)
    full = (1 << n) - 1
    buckets: dict[tuple[int, int], _Bucket] = {}
    scanned = 0
    for first in range(e_lo, e_hi):
        for rest in combinations(range(first + 1, total_edges), n - 1):
            adj = [0] * n
            for idx in (first, *rest):
                u, v = pairs[idx]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            got = _eval_connected(n, adj, full)
            if got is None:
                continue
            scanned += 1
            w, _, pendants, cuts = got
            key = (pendants, cuts)
            bucket = buckets.get(key)
            if bucket is None:
                bucket = buckets[key] = _Bucket()
            bucket.consider(n, w, adj)
    return scanned, {k: b.dump() for k, b in buckets.items()}


def _chunk_specs(graph_class: str, n: int) -> list[tuple]:
    if graph_class == ALL_CONNECTED:
        total = 1 << (n * (n - 1) // 2)
        chunks = min(_MASK_CHUNKS, total)
        bounds = [total * i // chunks for i in range(chunks + 1)]
        return [("masks", n, bounds[i], bounds[i + 1]) for i in range(chunks)]
    if graph_class == TREES:
        if n == 2:
            return [("trees", 2, 0)]
        return [("trees", n, first) for first in range(n)]
    if graph_class == UNICYCLIC:
        total_edges = n * (n - 1) // 2
        last_first = total_edges - n  # smallest edge index of an n-subset
        return [("unicyclic", n, f, f + 1) for f in range(last_first + 1)]
    raise AssertionError(graph_class)


def _merge_extreme(acc: list | None, part: list, sign: int, n: int) -> list:
    value, entries, overflow = part
    if value is None:
        return acc
    if acc is None or acc[0] is None or sign * (value - acc[0]) > 0:
        acc = [value, [], 0]
    if value == acc[0]:
        pool = acc[1]
        for adj, count in entries:
            acc[2] = _pool_add(pool, acc[2], n, tuple(adj), count)
        acc[2] += overflow
    return acc


_SWEEP_CACHE: dict[tuple[str, int], dict] = {}


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _sweep(graph_class: str, n: int, threads: int | None) -> dict:
    key = (graph_class, n)
    cached = _SWEEP_CACHE.get(key)
    if cached is not None:
        return cached
    chunks = _chunk_specs(graph_class, n)
    workers = default_threads() if threads is None else max(1, threads)
    if workers <= 1 or len(chunks) <= 1:
        parts = [_scan_chunk(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, chunks, chunksize=1))
    scanned = 0
    buckets: dict[tuple[int, int], list] = {}
    for part_scanned, part_buckets in parts:
        scanned += part_scanned
        for bkey, (count, lo, hi) in sorted(part_buckets.items()):
            acc = buckets.get(bkey)
            if acc is None:
                acc = buckets[bkey] = [0, None, None]
            acc[0] += count
            acc[1] = _merge_extreme(acc[1], lo, -1, n)
            acc[2] = _merge_extreme(acc[2], hi, +1, n)
    data = {"scanned": scanned, "buckets": buckets}
    _SWEEP_CACHE[key] = data
    return data


def clear_sweep_cache() -> None:
    _SWEEP_CACHE.clear()


# -- public search -------------------------------------------------------------


def extremal_search(
    constraint: SearchConstraint, objective: str, threads: int | None = None
) -> SearchReport:
    """True min or max of the Wiener index over the constrained class.

    An unsatisfiable constraint yields an empty report (matching == 0,
    extremal_value None) rather than an error, so parameter grids can be
    swept without special cases.
    """
    if objective not in (MIN, MAX):
        raise ValueError(f"objective must be '{MIN}' or '{MAX}', got {objective!r}")
    start = time.perf_counter()
    sweep = _sweep(constraint.graph_class, constraint.n, threads)
    sign = -1 if objective == MIN else +1
    n = constraint.n
    matching = 0
    best: list | None = None
    for (p, c), (count, lo, hi) in sorted(sweep["buckets"].items()):
        if constraint.pendant_k is not None and p != constraint.pendant_k:
            continue
        if constraint.cut_s is not None and c != constraint.cut_s:
            continue
        matching += count
        part = lo if objective == MIN else hi
        best = _merge_extreme(best, part, sign, n)
    if matching == 0 or best is None:
        elapsed = (time.perf_counter() - start) * 1000.0
        return SearchReport(
            constraint, objective, None, (), (), 0, sweep["scanned"], 0, elapsed
        )
    value, pool, overflow = best
    reps = []
    for adj, count in pool:
        g = Graph(n, tuple(adj))
        reps.append((to_graph6(canonical_graph(g)), g, count))
    reps.sort(key=lambda item: item[0])
    witnesses = tuple(canonical_graph(g) for _, g, _ in reps)
    counts = tuple(count for _, _, count in reps)
    elapsed = (time.perf_counter() - start) * 1000.0
    return SearchReport(
        constraint,
        objective,
        value,
        witnesses,
        counts,
        overflow,
        sweep["scanned"],
        matching,
        elapsed,
    )


# -- theorem verification --------------------------------------------------------


def _predicted(theorem_id: str, n: int, k: int | None, s: int | None):
    """(constraint, objective, predicted value, predicted families, witness mode)."""
    if theorem_id == "max_pendant_i":
        if k is None or not 2 <= k <= n - 2:
            raise ValueError("max_pendant_i needs 2 <= k <= n-2")
        fam = double_broom(k // 2, (k + 1) // 2, n - k)
        return (
            SearchConstraint(n, ALL_CONNECTED, pendant_k=k),
            MAX,
            w_max_pendant(n, k),
            (fam,),
            "exact",
        )
    if theorem_id == "max_pendant_ii":
        if n < 4:
            raise ValueError("max_pendant_ii needs n >= 4")
        return (
            SearchConstraint(n, ALL_CONNECTED, pendant_k=1),
            MAX,
            w_unicyclic_tail(n, 3),
            (unicyclic_tail(n, 3),),
            "exact",
        )
    if theorem_id == "max_pendant_iii":
        if n < 3:
            raise ValueError("max_pendant_iii needs n >= 3")
        if n <= 5:
            fams: tuple[FamilySpec, ...] = (cycle(n),)
            value = w_cycle(n)
        elif n == 6:
            fams = (cycle(6), dumbbell(3, 3, 6))
            value = w_cycle(6)
        else:
            fams = (dumbbell(3, 3, n),)
            value = w_dumbbell_33(n)
        return (SearchConstraint(n, ALL_CONNECTED, pendant_k=0), MAX, value, fams, "exact")
    if theorem_id == "min_pendant_i":
        if k is None or n < 4 or not 0 <= k <= n - 3:
            raise ValueError("min_pendant_i needs n >= 4 and 0 <= k <= n-3")
        return (
            SearchConstraint(n, ALL_CONNECTED, pendant_k=k),
            MIN,
            w_kite(n, k),
            (kite(n, k),),
            "exact",
        )
    if theorem_id == "min_pendant_ii":
        if n < 4:
            raise ValueError("min_pendant_ii needs n >= 4")
        return (
            SearchConstraint(n, ALL_CONNECTED, pendant_k=n - 2),
            MIN,
            w_t1(n),
            (double_broom(1, n - 3, 2),),
            "exact",
        )
    if theorem_id == "min_tree":
        if k is None or not 2 <= k <= n - 2:
            raise ValueError("min_tree needs 2 <= k <= n-2")
        return (
            SearchConstraint(n, TREES, pendant_k=k),
            MIN,
            w_balanced_spider(n, k),
            (balanced_spider_spec(n, k),),
            "exact",
        )
    if theorem_id == "min_cut":
        if s is None or not 0 <= s <= n - 3:
            raise ValueError("min_cut needs 0 <= s <= n-3")
        fam = balanced_octopus(n, s)
        return (
            SearchConstraint(n, ALL_CONNECTED, cut_s=s),
            MIN,
            wiener(build_family(fam)),
            (fam,),
            "contains",
        )
    if theorem_id == "tree_cut_max":
        if s is None or not 1 <= s <= n - 2:
            raise ValueError("tree_cut_max needs 1 <= s <= n-2")
        kk = n - s
        fam = double_broom(kk // 2, (kk + 1) // 2, s)
        return (
            SearchConstraint(n, TREES, cut_s=s),
            MAX,
            w_double_broom(kk // 2, (kk + 1) // 2, s),
            (fam,),
            "exact",
        )
    if theorem_id == "tree_cut_min":
        if s is None or not 1 <= s <= n - 2:
            raise ValueError("tree_cut_min needs 1 <= s <= n-2")
        kk = n - s
        if kk <= n - 2:
            fam = balanced_spider_spec(n, kk)
            value = w_balanced_spider(n, kk)
        else:
            fam = star(n)
            value = w_star(n)
        return (SearchConstraint(n, TREES, cut_s=s), MIN, value, (fam,), "exact")
    raise ValueError(f"unknown theorem id {theorem_id!r}")


THEOREM_IDS = (
    "max_pendant_i",
    "max_pendant_ii",
    "max_pendant_iii",
    "min_pendant_i",
    "min_pendant_ii",
    "min_tree",
    "min_cut",
    "tree_cut_max",
    "tree_cut_min",
)


def verify_theorem(
    theorem_id: str,
    n: int,
    k: int | None = None,
    s: int | None = None,
    threads: int | None = None,
) -> TheoremVerdict:
    """Run the exhaustive search matching one theorem and compare.

    ``value_match`` is exact integer equality with the predicted formula
    value; ``witness_match`` compares witness isomorphism classes against
    the predicted family (for min_cut: the predicted family only needs to
    appear among the minimisers).  ``unique`` reports whether exactly one
    isomorphism class attains the extremum.
    """
    constraint, objective, value, fams, mode = _predicted(theorem_id, n, k, s)
    report = extremal_search(constraint, objective, threads=threads)
    params = [("n", n)]
    if k is not None:
        params.append(("k", k))
    if s is not None:
        params.append(("s", s))
    predicted_graphs = [build(f) for f in fams]
    if report.is_empty:
        witness_match = False
        value_match = False
    else:
        value_match = report.extremal_value == value
        matched_fams = []
        witness_ok = True
        for w in report.witnesses:
            hit = None
            for i, pg in enumerate(predicted_graphs):
                if w.n == pg.n and same_iso_class(w, pg):
                    hit = i
                    break
            if hit is None:
                witness_ok = False
            else:
                matched_fams.append(hit)
        if mode == "exact":
            witness_match = (
                witness_ok
                and report.witness_overflow == 0
                and set(matched_fams) == set(range(len(fams)))
            )
        else:  # "contains": the predicted family appears among the witnesses
            witness_match = any(
                w.n == predicted_graphs[0].n and same_iso_class(w, predicted_graphs[0])
                for w in report.witnesses
            )
    return TheoremVerdict(
        theorem_id,
        tuple(params),
        value,
        fams,
        report,
        value_match,
        witness_match,
        report.unique_witness,
    )


# -- structure audit ---------------------------------------------------------------


@dataclass(frozen=True)
class WitnessAudit:
    witness_index: int
    blocks_complete: bool
    cuts_in_two_blocks: bool
    pendant_blocks_k2: bool | None
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class StructureAudit:
    report: SearchReport
    checks: tuple[WitnessAudit, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def minimizer_structure_audit(report: SearchReport) -> StructureAudit:
    """Check the structural facts that hold for cut-vertex-count minimisers:
    all blocks complete, every cut vertex in exactly two blocks, and (for
    two or more cut vertices) every pendant block a single edge."""
    if report.objective != MIN or report.constraint.cut_s is None:
        raise ValueError("audit applies to min-objective cut-vertex searches")
    checks = []
    for idx, g in enumerate(report.witnesses):
        bd = block_decomposition(g)
        failures = []
        blocks_complete = True
        for block in bd.blocks:
            members = sorted(block)
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    if not g.has_edge(members[a], members[b]):
                        blocks_complete = False
        if not blocks_complete:
            failures.append("a block is not a complete graph")
        two_blocks = all(len(bd.blocks_at(v)) == 2 for v in bd.cut_vertices)
        if not two_blocks:
            failures.append("a cut vertex lies in more than two blocks")
        s = len(bd.cut_vertices)
        pendant_k2: bool | None = None
        if s >= 2:
            pendant_k2 = all(
                len(bd.blocks[i]) == 2 for i in bd.pendant_blocks()
            )
            if not pendant_k2:
                failures.append("a pendant block is larger than a single edge")
        checks.append(
            WitnessAudit(idx, blocks_complete, two_blocks, pendant_k2, tuple(failures))
        )
    return StructureAudit(report, tuple(checks))


# -- serialisation -----------------------------------------------------------------


def report_to_json(report: SearchReport) -> dict:
    c = report.constraint
    return {
        "constraint": {
            "n": c.n,
            "class": c.graph_class,
            "pendant_k": c.pendant_k,
            "cut_s": c.cut_s,
        },
        "objective": report.objective,
        "extremal_value": report.extremal_value,
        "witnesses": [to_graph6(w) for w in report.witnesses],
        "witness_labeled_counts": list(report.witness_labeled_counts),
        "witness_overflow": report.witness_overflow,
        "scanned": report.scanned,
        "matching": report.matching,
        "elapsed_ms": report.elapsed_ms,
    }


def verdict_to_json(verdict: TheoremVerdict) -> dict:
    return {
        "theorem_id": verdict.theorem_id,
        "params": dict(verdict.params),
        "predicted_value": verdict.predicted_value,
        "predicted_families": [str(f) for f in verdict.predicted_families],
        "observed": report_to_json(verdict.observed),
        "value_match": verdict.value_match,
        "witness_match": verdict.witness_match,
        "unique": verdict.unique,
    }


def report_json_text(report: SearchReport) -> str:
    return json.dumps(report_to_json(report), indent=2, sort_keys=False)
