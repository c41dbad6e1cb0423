"""Edge-disjoint triangle packings and the two structure-flattening transforms.

A packing's induced subgraph splits into components; a component is a
triangle-forest when every block of it is a single triangle, equivalently
when it has ``2*t_i + 1`` vertices. Components that are not forests are
flattened by repeatedly splitting a shared vertex (``split_vertex``), after
first detaching every non-triangle edge between covered vertices
(``detach_edge``). The number of splits needed is the structure defect
``op = 2t + c - |covered|``.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, InvariantViolation, LimitError
from .graphs import Graph, blocks, degree_profile, induced_by_edges, is_connected

DEFAULT_EXACT_CAP = 24

PACK_MODES = ("greedy", "exact", "forest_greedy", "forest_exact")


@dataclass(frozen=True, order=True)
class Triangle:
    vertices: tuple[int, int, int]
    edge_ids: tuple[int, int, int]


@dataclass(frozen=True)
class TrianglePacking:
    """A set of pairwise edge-disjoint triangles with structure statistics."""

    triangles: tuple[Triangle, ...]
    components: tuple[tuple[int, ...], ...]
    component_vertices: tuple[frozenset[int], ...]
    t: int
    t_i: tuple[int, ...]
    c: int
    covered_vertices: frozenset[int]
    n2_prime: int
    is_forest: tuple[bool, ...]
    op: int

    @property
    def all_forest(self) -> bool:
        return all(self.is_forest)


@dataclass(frozen=True)
class EdgeDetachStep:
    """Edge ``u-v`` replaced by two pendant edges ``u-u_new`` and ``v-v_new``."""

    edge: int
    u: int
    v: int
    u_new: int
    v_new: int
    new_edge: int


@dataclass(frozen=True)
class VertexSplitStep:
    """Vertex split into two nonadjacent copies partitioning its triangles."""

    vertex: int
    new_vertex: int
    moved_edges: tuple[int, ...]
    kept_triangles: tuple[Triangle, ...]
    moved_triangles: tuple[Triangle, ...]


TraceStep = EdgeDetachStep | VertexSplitStep


@dataclass(frozen=True)
class TransformTrace:
    source: Graph
    steps: tuple[tuple[TraceStep, Graph], ...]

    @property
    def final_graph(self) -> Graph:
        return self.steps[-1][1] if self.steps else self.source

    @property
    def split_count(self) -> int:
        return sum(1 for step, _ in self.steps if isinstance(step, VertexSplitStep))


@dataclass(frozen=True)
class TransformResult:
    graph: Graph
    trace: TransformTrace
    triangles: tuple[Triangle, ...]


def make_triangle(g: Graph, a: int, b: int, c: int) -> Triangle:
    vs = tuple(sorted((a, b, c)))
    if len(set(vs)) != 3:
        raise InputError(f"triangle vertices must be distinct: {vs}")
    try:
        eids = (g.edge_id(vs[0], vs[1]), g.edge_id(vs[0], vs[2]), g.edge_id(vs[1], vs[2]))
    except KeyError as exc:
        raise InputError(f"{vs} is not a triangle of the graph") from exc
    return Triangle(vs, eids)


def enumerate_triangles(g: Graph) -> list[Triangle]:
    """Every 3-clique exactly once, in canonical vertex order."""
    adj = [set(g.adjacency[v]) for v in range(g.n)]
    out = []
    for u, v in (sorted(e) for e in g.edges):
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                out.append(make_triangle(g, u, v, w))
    out.sort()
    return out


def _edge_mask(tri: Triangle) -> int:
    return (1 << tri.edge_ids[0]) | (1 << tri.edge_ids[1]) | (1 << tri.edge_ids[2])


class _DSU:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, v: int) -> int:
        p = self.parent.setdefault(v, v)
        while p != self.parent[p]:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        self.parent[v] = p
        return p

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _forest_ok(tri: Triangle, comp: dict[int, int]) -> bool:
    """Adding ``tri`` keeps a triangle-forest iff its corners lie in three
    distinct components of the current structure."""
    roots = []
    for v in tri.vertices:
        r = v
        while r in comp:
            r = comp[r]
        roots.append(r)
    return len(set(roots)) == 3


def _forest_add(tri: Triangle, comp: dict[int, int]) -> None:
    roots = []
    for v in tri.vertices:
        r = v
        while r in comp:
            r = comp[r]
        roots.append(r)
    root = min(roots)
    for r in roots:
        if r != root:
            comp[r] = root


def _pack_greedy(tris: Sequence[Triangle], forest: bool) -> list[Triangle]:
    chosen: list[Triangle] = []
    used = 0
    comp: dict[int, int] = {}
    for tri in tris:
        mask = _edge_mask(tri)
        if used & mask:
            continue
        if forest and not _forest_ok(tri, comp):
            continue
        chosen.append(tri)
        used |= mask
        if forest:
            _forest_add(tri, comp)
    return chosen


def _pack_exact(tris: Sequence[Triangle], forest: bool, cap: int) -> list[Triangle]:
    if len(tris) > cap:
        raise LimitError(f"exact packing capped at {cap} triangles, instance has {len(tris)}")
    masks = [_edge_mask(t) for t in tris]
    best = [tris.index(t) for t in _pack_greedy(tris, forest)]
    n_t = len(tris)
    chosen: list[int] = []

    def dfs(i: int, used: int, comp: dict[int, int]) -> None:
        nonlocal best
        if len(chosen) + (n_t - i) <= len(best):
            return
        if i == n_t:
            best = chosen.copy()
            return
        tri = tris[i]
        if not (masks[i] & used) and (not forest or _forest_ok(tri, comp)):
            comp2 = comp
            if forest:
                comp2 = dict(comp)
                _forest_add(tri, comp2)
            chosen.append(i)
            dfs(i + 1, used | masks[i], comp2)
            chosen.pop()
        dfs(i + 1, used, comp)

    dfs(0, 0, {})
    return [tris[i] for i in best]


def pack_edge_disjoint(g: Graph, mode: str = "greedy", max_triangles: int = DEFAULT_EXACT_CAP) -> TrianglePacking:
    """Pick pairwise edge-disjoint triangles and classify the structure.

    Greedy modes scan triangles in canonical order; exact modes search all
    subsets (capped). Forest modes additionally keep the structure a
    triangle-forest.
    """
    if mode not in PACK_MODES:
        raise InputError(f"unknown packing mode {mode!r}")
    tris = enumerate_triangles(g)
    forest = mode.startswith("forest")
    if mode.endswith("greedy"):
        chosen = _pack_greedy(tris, forest)
    else:
        chosen = _pack_exact(tris, forest, max_triangles)
    return classify_structure(g, chosen)


def classify_structure(g: Graph, triangles: Iterable[Triangle]) -> TrianglePacking:
    """Complete the structure statistics for a set of edge-disjoint triangles."""
    tris = tuple(sorted(triangles))
    used = 0
    for tri in tris:
        rebuilt = make_triangle(g, *tri.vertices)
        if rebuilt != tri:
            raise InputError(f"triangle {tri.vertices} has stale edge ids for this graph")
        mask = _edge_mask(tri)
        if used & mask:
            raise InputError(f"triangle {tri.vertices} shares an edge with another")
        used |= mask
    dsu = _DSU()
    for tri in tris:
        a, b, c = tri.vertices
        dsu.union(a, b)
        dsu.union(a, c)
    covered = frozenset(v for tri in tris for v in tri.vertices)
    roots = sorted({dsu.find(v) for v in covered})
    root_index = {r: i for i, r in enumerate(roots)}
    comp_tri: list[list[int]] = [[] for _ in roots]
    for idx, tri in enumerate(tris):
        comp_tri[root_index[dsu.find(tri.vertices[0])]].append(idx)
    comp_verts = [frozenset(v for v in covered if dsu.find(v) == r) for r in roots]
    forest_flags = []
    for indices in comp_tri:
        edge_ids = {eid for i in indices for eid in tris[i].edge_ids}
        sub = induced_by_edges(g, edge_ids)
        bd = blocks(sub.graph)
        flag = all(len({v for e in blk for v in sub.graph.edges[e]}) == 3 for blk in bd.blocks)
        forest_flags.append(flag)
    t = len(tris)
    c = len(roots)
    op = 2 * t + c - len(covered)
    if op < 0:
        raise InvariantViolation(f"negative structure defect op={op}")
    prof = degree_profile(g)
    return TrianglePacking(
        triangles=tris,
        components=tuple(tuple(ix) for ix in comp_tri),
        component_vertices=tuple(comp_verts),
        t=t,
        t_i=tuple(len(ix) for ix in comp_tri),
        c=c,
        covered_vertices=covered,
        n2_prime=prof.n2 - len(covered),
        is_forest=tuple(forest_flags),
        op=op,
    )


def detach_edge(g: Graph, eid: int) -> tuple[Graph, EdgeDetachStep]:
    """Replace edge ``u-v`` by pendant edges ``u-u_new`` and ``v-v_new``.

    Surviving edges keep their ids; the ``u`` side reuses the detached id and
    the ``v`` side gets a fresh one.
    """
    if not (0 <= eid < g.m):
        raise InputError(f"edge id {eid} out of range")
    u, v = g.edges[eid]
    if g.degree(u) < 2 or g.degree(v) < 2:
        raise InputError(f"both endpoints of edge {eid} must have degree >= 2")
    u_new, v_new = g.n, g.n + 1
    edges = list(g.edges)
    edges[eid] = (u, u_new)
    edges.append((v, v_new))
    step = EdgeDetachStep(edge=eid, u=u, v=v, u_new=u_new, v_new=v_new, new_edge=g.m)
    return Graph(g.n + 2, tuple(edges)), step


def split_vertex(
    g: Graph,
    v: int,
    keep: Sequence[Triangle],
    move: Sequence[Triangle],
) -> tuple[Graph, VertexSplitStep]:
    """Split ``v`` into two nonadjacent copies partitioning its triangles.

    The triangles in ``move`` (and only their edges at ``v``) are rerouted to
    a new vertex; everything else at ``v``, including edges outside the
    structure, stays put. Edge count and ids are unchanged.
    """
    if not keep or not move:
        raise InputError("both sides of the split must contain a triangle")
    if len(keep) + len(move) < 2:
        raise InputError(f"vertex {v} must lie in at least two packing triangles")
    used = 0
    for tri in list(keep) + list(move):
        if v not in tri.vertices:
            raise InputError(f"triangle {tri.vertices} does not contain vertex {v}")
        if make_triangle(g, *tri.vertices) != tri:
            raise InputError(f"triangle {tri.vertices} is stale for this graph")
        mask = _edge_mask(tri)
        if used & mask:
            raise InputError("split sides must be edge-disjoint triangles")
        used |= mask
    new_vertex = g.n
    moved_edges = sorted(
        eid for tri in move for eid in tri.edge_ids if v in g.edges[eid]
    )
    edges = list(g.edges)
    for eid in moved_edges:
        a, b = edges[eid]
        edges[eid] = (new_vertex, b) if a == v else (a, new_vertex)
    step = VertexSplitStep(
        vertex=v,
        new_vertex=new_vertex,
        moved_edges=tuple(moved_edges),
        kept_triangles=tuple(keep),
        moved_triangles=tuple(move),
    )
    return Graph(g.n + 1, tuple(edges)), step


def replay_trace(trace: TransformTrace) -> Graph:
    """Re-apply every step from the source; errors if any recorded graph differs."""
    cur = trace.source
    for step, g_after in trace.steps:
        if isinstance(step, EdgeDetachStep):
            cur, _ = detach_edge(cur, step.edge)
        else:
            cur, _ = split_vertex(cur, step.vertex, step.kept_triangles, step.moved_triangles)
        if cur != g_after:
            raise InvariantViolation("trace replay diverged from the recorded graph")
    return cur


def _structure_connected_after_move(
    comp_tris: Sequence[Triangle], v: int, moved: Triangle, new_vertex: int
) -> bool:
    """Would this component's structure stay connected after the split?"""
    adj: dict[int, set[int]] = {}

    def link(a: int, b: int) -> None:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    for tri in comp_tris:
        vs = tri.vertices
        if tri == moved:
            vs = tuple(new_vertex if x == v else x for x in vs)
        link(vs[0], vs[1])
        link(vs[0], vs[2])
        link(vs[1], vs[2])
    start = next(iter(adj))
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == len(adj)


def _pick_split(g: Graph, packing: TrianglePacking) -> tuple[int, Triangle, list[Triangle]]:
    """Greedy split choice: lowest vertex in >= 2 triangles of a non-forest
    block, then the lowest triangle through it that keeps the component's
    structure connected."""
    tris = packing.triangles
    candidates: set[int] = set()
    for comp_idx, indices in enumerate(packing.components):
        if packing.is_forest[comp_idx]:
            continue
        edge_ids = {eid for i in indices for eid in tris[i].edge_ids}
        sub = induced_by_edges(g, edge_ids)
        bd = blocks(sub.graph)
        eid_to_block: dict[int, int] = {}
        for b_idx, blk in enumerate(bd.blocks):
            for e in blk:
                eid_to_block[sub.edge_to_parent[e]] = b_idx
        block_sizes = [len({v for e in blk for v in sub.graph.edges[e]}) for blk in bd.blocks]
        tri_counts: dict[tuple[int, int], int] = {}
        for i in indices:
            b_idx = eid_to_block[tris[i].edge_ids[0]]
            if block_sizes[b_idx] == 3:
                continue
            for v in tris[i].vertices:
                tri_counts[(b_idx, v)] = tri_counts.get((b_idx, v), 0) + 1
        candidates.update(v for (_, v), cnt in tri_counts.items() if cnt >= 2)
    if not candidates:
        raise InvariantViolation("non-forest structure without a splittable vertex")
    v = min(candidates)
    comp_idx = next(i for i, verts in enumerate(packing.component_vertices) if v in verts)
    comp_tris = [tris[i] for i in packing.components[comp_idx]]
    at_v = sorted(t for t in comp_tris if v in t.vertices)
    for tri in at_v:
        if _structure_connected_after_move(comp_tris, v, tri, g.n):
            keep = [t for t in at_v if t != tri]
            return v, tri, keep
    raise InvariantViolation(f"no split at vertex {v} preserves structure connectivity")


def build_transformed(g: Graph, packing: TrianglePacking) -> TransformResult:
    """Detach chords inside each covered set, then split vertices until every
    component is a triangle-forest. The split count must equal ``packing.op``."""
    if not is_connected(g):
        raise InputError("graph must be connected")
    steps: list[tuple[TraceStep, Graph]] = []
    cur = g
    for comp_idx, indices in enumerate(packing.components):
        verts = packing.component_vertices[comp_idx]
        tri_edges = {eid for i in indices for eid in packing.triangles[i].edge_ids}
        chords = [
            eid
            for eid, (a, b) in enumerate(g.edges)
            if a in verts and b in verts and eid not in tri_edges
        ]
        for eid in sorted(chords):
            cur, step = detach_edge(cur, eid)
            steps.append((step, cur))
    tris = list(packing.triangles)
    splits = 0
    while True:
        current = classify_structure(cur, tris)
        if current.all_forest:
            break
        if splits >= packing.op:
            raise InvariantViolation(
                f"needed more than op={packing.op} vertex splits; structure accounting is broken"
            )
        v, moved, keep = _pick_split(cur, current)
        cur, step = split_vertex(cur, v, keep, [moved])
        steps.append((step, cur))
        splits += 1
        new_vs = tuple(step.new_vertex if x == v else x for x in moved.vertices)
        tris[tris.index(moved)] = make_triangle(cur, *new_vs)
    if splits != packing.op:
        raise InvariantViolation(f"applied {splits} vertex splits, structure defect says {packing.op}")
    final = classify_structure(cur, tris)
    if final.c != packing.c:
        raise InvariantViolation("vertex splits changed the component count")
    trace = TransformTrace(source=g, steps=tuple(steps))
    return TransformResult(graph=cur, trace=trace, triangles=tuple(tris))
