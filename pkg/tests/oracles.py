"""Independent reference implementations used only by the tests.

Everything here works from raw adjacency lists with its own BFS; nothing is
shared with the library's sweep machinery, so agreement between the two is
meaningful evidence.
"""

from collections import deque
from itertools import combinations

from vertexvis.graph import Graph, build_graph


def bfs_dist(g: Graph, x: int) -> dict[int, int]:
    dist = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_shortest_paths(g: Graph, x: int, y: int) -> list[tuple[int, ...]]:
    """Every shortest x,y-path as a vertex tuple, by forward DFS over
    distance-increasing edges that stay on some geodesic."""
    dx = bfs_dist(g, x)
    dy = bfs_dist(g, y)
    target = dx[y]
    paths: list[tuple[int, ...]] = []

    def extend(path):
        u = path[-1]
        if u == y:
            paths.append(tuple(path))
            return
        for w in g.adj[u]:
            if w in dx and dx[w] == len(path) and dx[w] + dy.get(w, -1) == target:
                path.append(w)
                extend(path)
                path.pop()

    extend([x])
    return paths


def visible_by_paths(g: Graph, x: int, s, y: int) -> bool:
    """Definition-level check: some shortest x,y-path meets s only in {x, y}."""
    s = set(s)
    return any(
        all(v not in s for v in p[1:-1]) for p in all_shortest_paths(g, x, y)
    )


def xvis_by_paths(g: Graph, x: int, s) -> bool:
    s = set(s)
    return x not in s and all(visible_by_paths(g, x, s, y) for y in s)


def mutual_by_paths(g: Graph, s) -> bool:
    s = set(s)
    return all(visible_by_paths(g, u, s, v) for u, v in combinations(sorted(s), 2))


def vx_by_paths(g: Graph, x: int) -> int:
    """Definition-level visibility number; only sensible for tiny graphs."""
    others = [v for v in range(g.n) if v != x]
    best = 0
    for k in range(len(others), 0, -1):
        if k <= best:
            break
        for combo in combinations(others, k):
            if xvis_by_paths(g, x, combo):
                best = k
                break
    return best


def unique_geodesics_by_paths(g: Graph) -> bool:
    return all(
        len(all_shortest_paths(g, x, y)) == 1
        for x in range(g.n)
        for y in range(x + 1, g.n)
    )


def _connected_edge_mask(n: int, pairs, mask: int) -> bool:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = n
    for i, (u, v) in enumerate(pairs):
        if (mask >> i) & 1:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
    return comps == 1


def connected_graphs_upto(nmax: int = 5):
    """All labeled connected graphs on 2..nmax vertices, as Graph objects."""
    for n in range(2, nmax + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << len(pairs)):
            if not _connected_edge_mask(n, pairs, mask):
                continue
            edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
            yield build_graph(n, edges)


def diameter(g: Graph) -> int:
    return max(max(bfs_dist(g, x).values()) for x in range(g.n))
