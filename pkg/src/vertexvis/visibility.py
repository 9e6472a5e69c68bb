"""Visibility predicates and vertex classifications.

The central primitive is a single O(n+m) sweep over a root's BFS DAG:
a vertex is *clear-reachable* when some shortest path from the root reaches
it without passing through a blocked vertex.  Every visibility question in
the package reduces to that sweep; no path enumeration happens outside the
test oracles.

Terminology used throughout:

* S is an x-visibility set when x is not in S and every y in S can be
  reached from x along some shortest path whose interior avoids S.
* S is a mutual-visibility set when every pair u, v in S admits a shortest
  u,v-path whose interior avoids S.
* y is maximally distant from x when no neighbor of y is farther from x.
* y is a stress vertex for x when some maximally distant z (z distinct from
  both x and y) has all of its shortest x,z-paths passing through y.
"""

from __future__ import annotations

from .errors import InvalidParameterError
from .graph import (
    Graph,
    RootView,
    bfs_root_view,
    mask_to_set,
    require_connected,
)

__all__ = [
    "clear_reachable",
    "is_visible_from",
    "is_x_visibility_set",
    "is_mutual_visibility_set",
    "maximally_distant",
    "stress_vertices",
    "simplicial_vertices",
    "has_universal_vertex",
    "has_spanning_double_star",
]


def _checked_mask(g: Graph, vertices) -> int:
    mask = 0
    for v in vertices:
        g.check_vertex(v)
        mask |= 1 << v
    return mask


def _clear_mask(rv: RootView, blocked_mask: int) -> int:
    """Bitmask of vertices reachable from rv.root along shortest paths that
    avoid blocked vertices entirely (the root itself is always included)."""
    reach = 1 << rv.root
    dag_in_mask = rv.dag_in_mask
    for v in rv.order[1:]:
        if not (blocked_mask >> v) & 1 and dag_in_mask[v] & reach:
            reach |= 1 << v
    return reach


def clear_reachable(g: Graph, x: int, blocked) -> frozenset[int]:
    """Vertices v outside `blocked` (plus x itself) admitting a shortest
    x,v-path that avoids `blocked` internally."""
    g.check_vertex(x)
    require_connected(g)
    blocked_mask = _checked_mask(g, blocked)
    if (blocked_mask >> x) & 1:
        raise InvalidParameterError("root may not be blocked")
    return mask_to_set(_clear_mask(bfs_root_view(g, x), blocked_mask))


def is_visible_from(g: Graph, x: int, blockers, y: int) -> bool:
    """True when some shortest x,y-path meets `blockers` only in {x, y}."""
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise InvalidParameterError("visibility is asked between distinct vertices")
    require_connected(g)
    rv = bfs_root_view(g, x)
    blocked_mask = _checked_mask(g, blockers) & ~(1 << x) & ~(1 << y)
    reach = _clear_mask(rv, blocked_mask)
    return bool(rv.dag_in_mask[y] & reach)


def _members_all_visible(rv: RootView, s_mask: int) -> bool:
    """One sweep check: every member of s_mask has a DAG predecessor that is
    clear-reachable around s_mask.  Interior vertices of a shortest path to a
    member are never the member itself, so blocking the full set is exact."""
    reach = _clear_mask(rv, s_mask)
    rest = s_mask
    dag_in_mask = rv.dag_in_mask
    while rest:
        low = rest & -rest
        y = low.bit_length() - 1
        if not dag_in_mask[y] & reach:
            return False
        rest ^= low
    return True


def is_x_visibility_set(g: Graph, x: int, s) -> bool:
    """Decide whether s is an x-visibility set (x itself must not be in s)."""
    g.check_vertex(x)
    require_connected(g)
    s_mask = _checked_mask(g, s)
    if (s_mask >> x) & 1:
        raise InvalidParameterError("an x-visibility set may not contain x")
    return _members_all_visible(bfs_root_view(g, x), s_mask)


def is_mutual_visibility_set(g: Graph, s) -> bool:
    """Decide whether every pair of members sees each other around s.

    Visibility between u and v is symmetric, so each unordered pair is
    checked once, from the smaller endpoint.
    """
    require_connected(g)
    members = sorted(set(s))
    s_mask = _checked_mask(g, members)
    for i, u in enumerate(members[:-1]):
        rv = bfs_root_view(g, u)
        reach = _clear_mask(rv, s_mask & ~(1 << u))
        for v in members[i + 1:]:
            if not rv.dag_in_mask[v] & reach:
                return False
    return True


def maximally_distant(g: Graph, x: int) -> frozenset[int]:
    """All vertices with no neighbor farther from x than themselves."""
    g.check_vertex(x)
    require_connected(g)
    dist = bfs_root_view(g, x).dist
    out = []
    for y in range(g.n):
        dy = dist[y]
        if all(dist[z] <= dy for z in g.adj[y]):
            out.append(y)
    return frozenset(out)


def stress_vertices(g: Graph, x: int) -> frozenset[int]:
    """Stress vertices for x.

    y qualifies when deleting y disconnects some maximally distant z (z
    distinct from y) from every shortest x,z-path; tested by one clear
    sweep per y with only y blocked.
    """
    g.check_vertex(x)
    require_connected(g)
    md = maximally_distant(g, x) - {x}
    if not md:
        return frozenset()
    rv = bfs_root_view(g, x)
    out = []
    for y in range(g.n):
        if y == x:
            continue
        reach = _clear_mask(rv, 1 << y)
        if any(z != y and not (reach >> z) & 1 for z in md):
            out.append(y)
    return frozenset(out)


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighborhood induces a complete subgraph."""
    out = []
    for v in range(g.n):
        nb_mask = g.adj_mask[v]
        if all(
            g.adj_mask[u] & nb_mask == nb_mask & ~(1 << u)
            for u in g.adj[v]
        ):
            out.append(v)
    return frozenset(out)


def has_universal_vertex(g: Graph) -> int | None:
    """Smallest vertex adjacent to all others, or None."""
    require_connected(g)
    for v in range(g.n):
        if len(g.adj[v]) == g.n - 1:
            return v
    return None


def has_spanning_double_star(g: Graph) -> bool:
    """True when some edge uv dominates the graph and each endpoint can keep
    a private leaf, i.e. the graph has a spanning tree with exactly two
    internal vertices."""
    require_connected(g)
    if g.n < 4:
        return False
    full = (1 << g.n) - 1
    for u, v in g.edges():
        if g.adj_mask[u] | g.adj_mask[v] | (1 << u) | (1 << v) != full:
            continue
        a = g.adj_mask[u] & ~(1 << v)
        b = g.adj_mask[v] & ~(1 << u)
        if a and b and (a | b).bit_count() >= 2:
            return True
    return False
