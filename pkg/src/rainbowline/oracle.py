"""Ground truth: exact rainbow-connectivity checking and exhaustive search.

The checker explores (vertex, used-color-set) states per source vertex.
Walks are allowed: a walk with pairwise-distinct edge colors has distinct
edges and contains a rainbow path between its endpoints, so reachability is
unaffected. States are pruned when an already-admitted state at the same
vertex uses a subset of the colors; BFS order adds one color per step, so
admitted masks per vertex form an antichain without ever needing removals.
"""

import time
from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterator, Sequence

from .errors import InputError, InvariantViolation, LimitError
from .graphs import Graph, diameter, is_connected

if TYPE_CHECKING:
    from .coloring import EdgeColoring

DEFAULT_COLOR_CAP = 64
DEFAULT_EDGE_CAP = 12


@dataclass(frozen=True)
class RcReport:
    """Summary of everything computed about one graph's rainbow connection."""

    n: int
    m: int
    diameter: int
    bounds: dict[str, int] = field(default_factory=dict)
    colors_used: int | None = None
    exact_rc: int | None = None
    exact_limits_hit: bool = False


@dataclass(frozen=True)
class IteratedTightnessReport:
    """Whether the ``m - m1`` construction on the twice-iterated line graph
    is tight, checked against the exact oracle."""

    verdict: str  # "equality" | "strict" | "undecided"
    is_long_path: bool
    bound: int
    colors_used: int
    exact: int | None


def _check_all_pairs(g: Graph, bits: Sequence[int]) -> tuple[bool, tuple[int, int] | None]:
    n = g.n
    if n <= 1:
        return True, None
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(g.edges):
        adj[u].append((v, bits[eid]))
        adj[v].append((u, bits[eid]))
    for s in range(n - 1):
        remaining = set(range(s + 1, n))
        visited: list[list[int]] = [[] for _ in range(n)]
        visited[s].append(0)
        queue = deque([(s, 0)])
        while queue and remaining:
            v, mask = queue.popleft()
            for w, b in adj[v]:
                if b & mask:
                    continue
                nm = mask | b
                admitted = visited[w]
                if any(x & nm == x for x in admitted):
                    continue
                admitted.append(nm)
                remaining.discard(w)
                queue.append((w, nm))
        if remaining:
            return False, (s, min(remaining))
    return True, None


def is_rainbow_connected(
    g: Graph, col: "EdgeColoring", max_colors: int = DEFAULT_COLOR_CAP
) -> tuple[bool, tuple[int, int] | None]:
    """Exact check; on failure returns the lexicographically smallest
    vertex pair with no rainbow path."""
    if col.graph != g:
        raise InputError("coloring belongs to a different graph")
    if col.k > max_colors:
        raise LimitError(f"palette of {col.k} colors exceeds the search cap {max_colors}")
    return _check_all_pairs(g, [1 << (c - 1) for c in col.colors])


def canonical_colorings(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """All colorings of ``m`` edges using exactly colors ``1..k``, one per
    color partition: the first edge of each new color takes the smallest
    unused id."""
    if k < 1 or k > m:
        return

    def rec(i: int, top: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if k - top > m - i:
            return
        if i == m:
            if top == k:
                yield tuple(prefix)
            return
        for c in range(1, min(top + 1, k) + 1):
            prefix.append(c)
            yield from rec(i + 1, max(top, c), prefix)
            prefix.pop()

    yield from rec(0, 0, [])


def exact_rc(
    g: Graph,
    max_edges: int = DEFAULT_EDGE_CAP,
    budget: float | None = None,
) -> int:
    """Exact rainbow connection number by exhaustion over canonical colorings.

    Tries palette sizes upward from the diameter. Raises ``LimitError``
    carrying the proven bracket when the instance exceeds ``max_edges`` or
    the time ``budget`` (seconds).
    """
    if not is_connected(g) or g.n < 2:
        raise InputError("exact search needs a connected graph on >= 2 vertices")
    lo = max(int(diameter(g)), 1)
    hi = min(g.m, g.n - 1)
    if g.m > max_edges:
        raise LimitError(
            f"{g.m} edges exceed the exact-search cap {max_edges}", lower=lo, upper=hi
        )
    start = time.monotonic()
    for k in range(lo, g.m + 1):
        for colors in canonical_colorings(g.m, k):
            if budget is not None and time.monotonic() - start > budget:
                raise LimitError("time budget exceeded", lower=k, upper=hi)
            ok, _ = _check_all_pairs(g, [1 << (c - 1) for c in colors])
            if ok:
                return k
    raise InvariantViolation("an all-distinct coloring must be rainbow")


def rc_lower_bound(g: Graph) -> int:
    """Diameter: no coloring can beat the longest shortest path."""
    if not is_connected(g):
        raise InputError("lower bound needs a connected graph")
    return int(diameter(g))


def rc_report(
    g: Graph,
    bounds: dict[str, int] | None = None,
    colors_used: int | None = None,
    max_edges: int = DEFAULT_EDGE_CAP,
    budget: float | None = None,
) -> RcReport:
    """Assemble the summary record, attempting the exact value within limits."""
    d = rc_lower_bound(g)
    exact: int | None = None
    limits_hit = False
    try:
        exact = exact_rc(g, max_edges=max_edges, budget=budget)
    except LimitError:
        limits_hit = True
    return RcReport(
        n=g.n,
        m=g.m,
        diameter=d,
        bounds=dict(bounds or {}),
        colors_used=colors_used,
        exact_rc=exact,
        exact_limits_hit=limits_hit,
    )


def _is_path_of_length_ge3(g: Graph) -> bool:
    if g.n < 4 or g.m != g.n - 1 or not is_connected(g):
        return False
    degs = sorted(g.degree(v) for v in range(g.n))
    return degs[0] == 1 and degs[1] == 1 and all(d == 2 for d in degs[2:])


def check_iterated_tightness(
    g: Graph, max_edges: int = DEFAULT_EDGE_CAP, budget: float | None = None
) -> IteratedTightnessReport:
    """Compare the ``m - m1`` construction against the exact oracle on the
    twice-iterated line graph; equality should hold exactly for paths of
    length at least 3."""
    from .coloring import color_iterated_baseline

    col, cert = color_iterated_baseline(g)
    long_path = _is_path_of_length_ge3(g)
    try:
        exact = exact_rc(col.graph, max_edges=max_edges, budget=budget)
    except LimitError:
        return IteratedTightnessReport("undecided", long_path, cert.bound_value, col.k, None)
    if exact > cert.bound_value:
        raise InvariantViolation("exact value above a verified construction")
    verdict = "equality" if exact == cert.bound_value else "strict"
    return IteratedTightnessReport(verdict, long_path, cert.bound_value, col.k, exact)
