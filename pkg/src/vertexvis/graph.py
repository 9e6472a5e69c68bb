"""Immutable simple graphs and the BFS distance machinery everything else consumes.

Vertices are integers 0..n-1 inside the library; graph files and the CLI use
1-based ids.  A :class:`RootView` bundles everything BFS from one root can
tell us: hop distances, distance layers, the eccentricity, and the DAG of
shortest-path predecessors (``dag_in``).  Shortest-path trees rooted at x are
exactly the ways of assigning each non-root vertex one parent out of its
``dag_in`` list, which is why the solvers lean on this structure so heavily.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    GraphFormatError,
    IdOutOfRangeError,
    InvalidParameterError,
    SelfLoopError,
)

__all__ = [
    "Graph",
    "RootView",
    "build_graph",
    "bfs_root_view",
    "interval",
    "is_connected",
    "is_geodetic",
    "is_block_graph",
    "require_connected",
    "parse_graph",
    "format_graph",
    "read_graph_file",
    "write_graph_file",
    "to_external_ids",
    "from_external_ids",
    "set_to_mask",
    "mask_to_set",
]


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Instances are immutable after construction and safe to share across
    workers.  ``adj_mask[v]`` is the neighborhood of v as a bitmask; the
    exponential solvers work on these masks directly.
    """

    __slots__ = ("n", "m", "adj", "adj_mask", "_root_views", "_connected")

    def __init__(self, n: int, edges):
        if n < 1:
            raise IdOutOfRangeError(f"graph needs at least one vertex, got n={n}")
        seen = set()
        neighbors = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IdOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        self.n = n
        self.m = len(seen)
        self.adj = tuple(tuple(sorted(nb)) for nb in neighbors)
        self.adj_mask = tuple(
            sum(1 << u for u in nb) for nb in self.adj
        )
        self._root_views: dict[int, RootView] = {}
        self._connected: bool | None = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max(len(nb) for nb in self.adj)

    def edges(self):
        """Yield edges as ordered pairs (u, v) with u < v, sorted."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise IdOutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # pickling support for parallel root solves (slots + caches)
    def __getstate__(self):
        return (self.n, list(self.edges()))

    def __setstate__(self, state):
        n, edges = state
        self.__init__(n, edges)


def build_graph(n: int, edges) -> Graph:
    """Validate and normalize (n, edge list) into a Graph."""
    return Graph(n, edges)


@dataclass(frozen=True)
class RootView:
    """Everything BFS from one root tells us.

    dist[v] is the hop distance, -1 when v is unreachable.  ``order`` lists
    reachable vertices by nondecreasing distance (root first), ``layers[d]``
    the vertices at distance exactly d, and ``dag_in[v]`` the neighbors of v
    one step closer to the root, i.e. the penultimate vertices of all
    shortest root,v-paths.  ``dag_in_mask`` carries the same sets as bitmasks.
    """

    root: int
    dist: tuple[int, ...]
    ecc: int
    order: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]
    dag_in: tuple[tuple[int, ...], ...]
    dag_in_mask: tuple[int, ...]


def bfs_root_view(g: Graph, x: int) -> RootView:
    """BFS artifact rooted at x; cached per graph and root."""
    g.check_vertex(x)
    cached = g._root_views.get(x)
    if cached is not None:
        return cached
    n = g.n
    dist = [-1] * n
    dist[x] = 0
    order = [x]
    queue = deque([x])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                order.append(w)
                queue.append(w)
    ecc = dist[order[-1]]
    layers = [[] for _ in range(ecc + 1)]
    dag_in = [[] for _ in range(n)]
    dag_in_mask = [0] * n
    for v in order:
        layers[dist[v]].append(v)
        dv = dist[v]
        for u in g.adj[v]:
            if dist[u] == dv - 1:
                dag_in[v].append(u)
                dag_in_mask[v] |= 1 << u
    view = RootView(
        root=x,
        dist=tuple(dist),
        ecc=ecc,
        order=tuple(order),
        layers=tuple(tuple(layer) for layer in layers),
        dag_in=tuple(tuple(p) for p in dag_in),
        dag_in_mask=tuple(dag_in_mask),
    )
    g._root_views[x] = view
    return view


def is_connected(g: Graph) -> bool:
    if g._connected is None:
        g._connected = len(bfs_root_view(g, 0).order) == g.n
    return g._connected


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedError("operation requires a connected graph")


def interval(g: Graph, x: int, y: int) -> frozenset[int]:
    """Open interval I(x,y): vertices on shortest x,y-paths, excluding x and y.

    A vertex v lies on some shortest x,y-path exactly when
    d(x,v) + d(v,y) = d(x,y).
    """
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise InvalidParameterError("interval endpoints must differ")
    require_connected(g)
    dx = bfs_root_view(g, x).dist
    dy = bfs_root_view(g, y).dist
    d = dx[y]
    return frozenset(
        v for v in range(g.n) if v != x and v != y and dx[v] + dy[v] == d
    )


def is_geodetic(g: Graph) -> bool:
    """True when every vertex pair is joined by exactly one shortest path.

    Shortest-path counts per root saturate at 2; only unique-vs-multiple
    matters here.
    """
    require_connected(g)
    for x in range(g.n):
        rv = bfs_root_view(g, x)
        count = [0] * g.n
        count[x] = 1
        for v in rv.order[1:]:
            c = 0
            for u in rv.dag_in[v]:
                c += count[u]
                if c >= 2:
                    break
            count[v] = min(c, 2)
            if count[v] > 1:
                return False
    return True


def _biconnected_components(g: Graph):
    """Yield the edge sets of biconnected components (Hopcroft-Tarjan, iterative)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    for start in range(n):
        if disc[start] >= 0:
            continue
        stack = [(start, -1, iter(g.adj[start]))]
        disc[start] = low[start] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp = []
                    while edge_stack:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == (u, v):
                            break
                    yield comp


def is_block_graph(g: Graph) -> bool:
    """True when every biconnected component induces a complete subgraph."""
    require_connected(g)
    for comp in _biconnected_components(g):
        verts = set()
        for u, v in comp:
            verts.add(u)
            verts.add(v)
        k = len(verts)
        if len(comp) != k * (k - 1) // 2:
            return False
    return True


# ---------------------------------------------------------------------------
# vertex-set helpers (internal 0-based <-> external 1-based)

def set_to_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def to_external_ids(vertices) -> list[int]:
    """Sorted 1-based ids, the only form that appears in files and reports."""
    return sorted(v + 1 for v in vertices)


def from_external_ids(ids, n: int) -> frozenset[int]:
    out = set()
    for i in ids:
        if not (1 <= i <= n):
            raise IdOutOfRangeError(f"external id {i} outside 1..{n}")
        out.add(i - 1)
    return frozenset(out)


# ---------------------------------------------------------------------------
# graph file format: `p <n> <m>` header, `e <u> <v>` lines, 1-based ids,
# `c ...` comments and blank lines ignored.

def parse_graph(text: str) -> Graph:
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: second 'p' header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, declared_m = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: bad header numbers") from exc
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before 'p' header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: bad edge ids") from exc
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: edge id outside 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if declared_m != len(edges):
        raise GraphFormatError(
            f"header declares {declared_m} edges, file has {len(edges)}"
        )
    return Graph(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p {g.n} {g.m}")
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def read_graph_file(path) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())


def write_graph_file(path, g: Graph, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_graph(g, comment))
