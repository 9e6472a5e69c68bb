"""Exact solvers with certificates, plus a scalable greedy heuristic.

The exact route for the visibility number of a root x rests on one fact:
shortest-path trees rooted at x are exactly the parent assignments over the
BFS DAG, and the visibility number of x equals the maximum number of leaves
such a tree can have.  Writing P for the set of internal vertices (x always
included once n >= 2), P must meet dag_in(v) for every non-root v, and any
such P can be realized, so

    vx(g, x) = n - min{ |P| : P hits every dag_in(v), v != x }.

That minimum hitting set is solved by branch and bound over bitmasks with
unit propagation, a disjoint-candidate-set lower bound, and deterministic
smallest-id tie-breaking.  Every solver returns a certificate, never a bare
number: a witness set that re-verifies through the visibility module, and a
parent map realizing the matching shortest-path tree.

The maximum leaf count over all spanning trees (not just shortest-path
trees) is computed through the classical duality with minimum connected
dominating sets: for connected graphs on at least three vertices the two
quantities add up to n.
"""

from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .errors import (
    DisconnectedError,
    InvalidParameterError,
    SolveTimeoutError,
    TooLargeError,
)
from .graph import Graph, RootView, bfs_root_view, is_connected, mask_to_set
from .visibility import _clear_mask

__all__ = [
    "SolverConfig",
    "DEFAULT_CONFIG",
    "SolveResult",
    "MaxLeafResult",
    "vx_exact",
    "vx_brute",
    "vx_greedy",
    "vv_exact",
    "max_leaf_spanning_tree",
    "mu_brute",
    "alpha_brute",
]


@dataclass(frozen=True)
class SolverConfig:
    """Caps and budgets for the exponential solvers; hard errors, never
    silent truncation."""

    brute_cap: int = 22
    mu_cap: int = 16
    alpha_cap: int = 30
    mcds_cap: int = 32
    timeout_s: float | None = None
    jobs: int = 1

    def deadline(self) -> float | None:
        if self.timeout_s is None:
            return None
        return time.monotonic() + self.timeout_s


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class SolveResult:
    """An exact (or heuristic lower-bound) value plus its certificate.

    witness is a visibility set for root of size value; tree, when present,
    maps every non-root vertex to its parent in a shortest-path tree whose
    leaf set is exactly witness.
    """

    value: int
    root: int
    witness: frozenset[int]
    tree: dict[int, int] | None
    method: str

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "root": self.root + 1,
            "witness": sorted(v + 1 for v in self.witness),
            "tree": None
            if self.tree is None
            else {str(v + 1): p + 1 for v, p in sorted(self.tree.items())},
            "method": self.method,
        }


@dataclass(frozen=True)
class MaxLeafResult:
    """Maximum spanning-tree leaf count with a realizing tree."""

    value: int
    root: int
    tree: dict[int, int]
    leaves: frozenset[int]

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "root": self.root + 1,
            "leaves": sorted(v + 1 for v in self.leaves),
            "tree": {str(v + 1): p + 1 for v, p in sorted(self.tree.items())},
        }


def _check_deadline(deadline, what: str):
    if deadline is not None and time.monotonic() > deadline:
        raise SolveTimeoutError(f"{what} exceeded its time budget")


def _require_solvable(g: Graph, min_n: int = 2) -> None:
    if g.n < min_n:
        raise InvalidParameterError(f"need at least {min_n} vertices")
    if not is_connected(g):
        raise DisconnectedError("solver requires a connected graph")


# ---------------------------------------------------------------------------
# minimum parent cover (exact vx)

def _greedy_cover(rv: RootView, n: int, covers: list[int]) -> int:
    """Feasible parent set by repeated max-coverage choice; returns a mask."""
    full = (1 << n) - 1
    chosen = 1 << rv.root
    covered = covers[rv.root] | (1 << rv.root)
    while covered != full:
        best_p, best_gain = -1, 0
        uncovered = full & ~covered
        for p in range(n):
            if (chosen >> p) & 1:
                continue
            gain = (covers[p] & uncovered).bit_count()
            if gain > best_gain:
                best_p, best_gain = p, gain
        chosen |= 1 << best_p
        covered |= covers[best_p]
    return chosen


def _min_parent_cover(rv: RootView, n: int, deadline) -> int:
    """Smallest P containing the root and meeting every dag_in set; returns
    the chosen mask.  Branches on the uncovered vertex with fewest remaining
    candidates, candidates tried in ascending id order."""
    _check_deadline(deadline, "exact visibility solve")
    root = rv.root
    dag_in_mask = rv.dag_in_mask
    covers = [0] * n
    for v in range(n):
        if v == root:
            continue
        rest = dag_in_mask[v]
        while rest:
            low = rest & -rest
            covers[low.bit_length() - 1] |= 1 << v
            rest ^= low
    full = (1 << n) - 1

    best_mask = _greedy_cover(rv, n, covers)
    best_size = best_mask.bit_count()
    node_budget = 0

    def search(chosen: int, size: int, excluded: int, covered: int):
        nonlocal best_mask, best_size, node_budget
        node_budget += 1
        if node_budget & 0xFF == 0:
            _check_deadline(deadline, "exact visibility solve")
        # unit propagation: uncovered vertices with one allowed candidate
        while True:
            forced = 0
            rest = full & ~covered
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                allowed = dag_in_mask[v] & ~excluded
                if allowed == 0:
                    return
                if allowed & (allowed - 1) == 0:
                    forced |= allowed
            if not forced:
                break
            add = forced & ~chosen
            if add:
                size += add.bit_count()
                if size >= best_size:
                    return
                chosen |= add
                rest = add
                while rest:
                    low = rest & -rest
                    covered |= covers[low.bit_length() - 1]
                    rest ^= low
            else:
                break
        if covered == full:
            if size < best_size:
                best_size, best_mask = size, chosen
            return
        # lower bound: uncovered vertices with pairwise disjoint candidates
        lb = 0
        used = 0
        branch_v, branch_opts = -1, n + 1
        rest = full & ~covered
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            allowed = dag_in_mask[v] & ~excluded
            if not allowed & used:
                lb += 1
                used |= allowed
            k = allowed.bit_count()
            if k < branch_opts:
                branch_v, branch_opts = v, k
        if size + lb >= best_size:
            return
        allowed = dag_in_mask[branch_v] & ~excluded
        while allowed:
            low = allowed & -allowed
            p = low.bit_length() - 1
            allowed ^= low
            search(chosen | low, size + 1, excluded, covered | covers[p])
            excluded |= low
            if size + 1 >= best_size:
                return

    start_cover = covers[root] | (1 << root)
    search(1 << root, 1, 0, start_cover)
    return best_mask


def _tree_from_parent_set(rv: RootView, n: int, chosen: int):
    """Assign each non-root vertex its smallest chosen DAG parent; return
    (parent map, leaf set)."""
    tree: dict[int, int] = {}
    used = 0
    for v in rv.order[1:]:
        cands = rv.dag_in_mask[v] & chosen
        p = (cands & -cands).bit_length() - 1
        tree[v] = p
        used |= 1 << p
    leaves = frozenset(
        v for v in range(n) if v != rv.root and not (used >> v) & 1
    )
    return tree, leaves


def vx_exact(g: Graph, x: int, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Exact visibility number of root x with a maximum-leaf shortest-path
    tree certificate."""
    g.check_vertex(x)
    _require_solvable(g)
    rv = bfs_root_view(g, x)
    chosen = _min_parent_cover(rv, g.n, config.deadline())
    tree, leaves = _tree_from_parent_set(rv, g.n, chosen)
    return SolveResult(
        value=g.n - chosen.bit_count(),
        root=x,
        witness=leaves,
        tree=tree,
        method="cover_bnb",
    )


def vx_brute(g: Graph, x: int, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Independent oracle: enumerate every subset of V minus x and keep the
    largest visibility set."""
    g.check_vertex(x)
    _require_solvable(g)
    if g.n > config.brute_cap:
        raise TooLargeError(f"brute force capped at n={config.brute_cap}")
    rv = bfs_root_view(g, x)
    others = [v for v in range(g.n) if v != x]
    k = len(others)
    deadline = config.deadline()
    best_size, best_set = 0, 0
    for picks in range(1 << k):
        if picks & 0x3FF == 0:
            _check_deadline(deadline, "brute-force visibility solve")
        s_mask = 0
        rest = picks
        while rest:
            low = rest & -rest
            s_mask |= 1 << others[low.bit_length() - 1]
            rest ^= low
        size = s_mask.bit_count()
        if size <= best_size:
            continue
        reach = _clear_mask(rv, s_mask)
        ok = True
        rest = s_mask
        while rest:
            low = rest & -rest
            if not rv.dag_in_mask[low.bit_length() - 1] & reach:
                ok = False
                break
            rest ^= low
        if ok:
            best_size, best_set = size, s_mask
    return SolveResult(
        value=best_size,
        root=x,
        witness=mask_to_set(best_set),
        tree=None,
        method="brute",
    )


def vx_greedy(g: Graph, x: int, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Greedy parent cover on the BFS DAG: always a valid visibility set,
    never exceeding the exact value."""
    g.check_vertex(x)
    _require_solvable(g)
    rv = bfs_root_view(g, x)
    n = g.n
    covers = [0] * n
    for v in range(n):
        if v == x:
            continue
        rest = rv.dag_in_mask[v]
        while rest:
            low = rest & -rest
            covers[low.bit_length() - 1] |= 1 << v
            rest ^= low
    chosen = _greedy_cover(rv, n, covers)
    tree, leaves = _tree_from_parent_set(rv, n, chosen)
    return SolveResult(
        value=len(leaves),
        root=x,
        witness=leaves,
        tree=tree,
        method="greedy",
    )


def _vx_worker(payload):
    g, x, config = payload
    res = vx_exact(g, x, config)
    return x, res


def vv_exact(g: Graph, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Maximum visibility number over all roots; leaves are skipped as roots
    once n >= 3 because their support vertex always does strictly better.
    Ties resolve to the smallest root id."""
    _require_solvable(g)
    if g.n == 2:
        roots = [0]
    else:
        roots = [v for v in range(g.n) if g.degree(v) > 1]
    if config.jobs > 1 and len(roots) > 1:
        worker_cfg = replace(config, jobs=1)
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = dict(
                pool.map(_vx_worker, [(g, x, worker_cfg) for x in roots])
            )
        per_root = [results[x] for x in roots]
    else:
        per_root = [vx_exact(g, x, config) for x in roots]
    best = per_root[0]
    for res in per_root[1:]:
        if res.value > best.value:
            best = res
    return best


# ---------------------------------------------------------------------------
# maximum-leaf spanning trees via minimum connected dominating sets

def _greedy_cds(g: Graph) -> int:
    """Internal vertices of a BFS tree from a max-degree vertex: a connected
    dominating set used as the starting incumbent."""
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    rv = bfs_root_view(g, start)
    used = 0
    for v in rv.order[1:]:
        cands = rv.dag_in_mask[v]
        used |= cands & -cands
    if used == 0:
        used = 1 << start
    return used


def _min_cds(g: Graph, deadline) -> int:
    """Exact minimum connected dominating set as a mask (n >= 3, connected).

    Grows connected sets from each possible minimum-id anchor inside the
    closed neighborhood of a smallest-degree vertex; degree-1 vertices are
    never needed and are excluded up front.
    """
    _check_deadline(deadline, "max-leaf spanning tree solve")
    n = g.n
    full = (1 << n) - 1
    closed = [g.adj_mask[v] | (1 << v) for v in range(n)]
    leaf_mask = 0
    for v in range(n):
        if g.degree(v) == 1:
            leaf_mask |= 1 << v

    best_mask = _greedy_cds(g)
    best_size = best_mask.bit_count()
    node_budget = 0

    def neighborhood(mask: int) -> int:
        out = 0
        rest = mask
        while rest:
            low = rest & -rest
            out |= g.adj_mask[low.bit_length() - 1]
            rest ^= low
        return out

    def search(s_mask: int, size: int, excluded: int, dominated: int):
        nonlocal best_mask, best_size, node_budget
        node_budget += 1
        if node_budget & 0xFF == 0:
            _check_deadline(deadline, "max-leaf spanning tree solve")
        if dominated == full:
            if size < best_size:
                best_size, best_mask = size, s_mask
            return
        if size + 1 >= best_size:
            return
        allowed = full & ~s_mask & ~excluded
        frontier = neighborhood(s_mask) & allowed
        if frontier == 0:
            return
        # allowed vertices reachable from the frontier without leaving allowed
        reach = frontier
        while True:
            grown = reach | (neighborhood(reach) & allowed)
            if grown == reach:
                break
            reach = grown
        undominated = full & ~dominated
        rest = undominated
        while rest:
            low = rest & -rest
            w = low.bit_length() - 1
            rest ^= low
            if not closed[w] & reach:
                return
        # each future pick dominates at most maxcover new vertices
        maxcover = 0
        rest = reach
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            rest ^= low
            k = (closed[c] & undominated).bit_count()
            if k > maxcover:
                maxcover = k
        if maxcover == 0:
            return
        undom_cnt = undominated.bit_count()
        lb = -(-undom_cnt // maxcover)
        if size + lb >= best_size:
            return
        pick, pick_gain = -1, -1
        rest = frontier
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            gain = (closed[u] & undominated).bit_count()
            if gain > pick_gain:
                pick, pick_gain = u, gain
        ubit = 1 << pick
        search(s_mask | ubit, size + 1, excluded, dominated | closed[pick])
        search(s_mask, size, excluded | ubit, dominated)

    # a leaf-free minimum connected dominating set always exists (n >= 3)
    # and must meet the closed neighborhood of any vertex; split on the
    # smallest member it takes there
    anchor = min(range(n), key=lambda v: (g.degree(v), v))
    candidates = [
        r for r in range(n)
        if (closed[anchor] >> r) & 1 and not (leaf_mask >> r) & 1
    ]
    banned_below = 0
    for r in candidates:
        search(1 << r, 1, (leaf_mask | banned_below) & ~(1 << r), closed[r])
        banned_below |= 1 << r
    return best_mask


def max_leaf_spanning_tree(
    g: Graph, config: SolverConfig = DEFAULT_CONFIG
) -> MaxLeafResult:
    """Maximum number of leaves over all spanning trees, with a tree
    realizing it.  Computed as n minus the minimum connected dominating set
    size for n >= 3; the one- and two-vertex graphs are direct."""
    if not is_connected(g):
        raise DisconnectedError("spanning trees need a connected graph")
    if g.n == 1:
        return MaxLeafResult(value=1, root=0, tree={}, leaves=frozenset({0}))
    if g.n == 2:
        return MaxLeafResult(
            value=2, root=0, tree={1: 0}, leaves=frozenset({0, 1})
        )
    if g.n > config.mcds_cap:
        raise TooLargeError(f"exact max-leaf capped at n={config.mcds_cap}")
    cds = _min_cds(g, config.deadline())
    members = sorted(mask_to_set(cds))
    root = members[0]
    # spanning tree of the induced connected dominator set, then every
    # remaining vertex hangs off its smallest dominator
    tree: dict[int, int] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if (cds >> w) & 1 and w not in seen:
                seen.add(w)
                tree[w] = u
                queue.append(w)
    for v in range(g.n):
        if (cds >> v) & 1 or v == root:
            continue
        dom = g.adj_mask[v] & cds
        tree[v] = (dom & -dom).bit_length() - 1
    internal = {root} | set(tree.values())
    leaves = frozenset(v for v in range(g.n) if v not in internal)
    return MaxLeafResult(
        value=g.n - cds.bit_count(), root=root, tree=tree, leaves=leaves
    )


# ---------------------------------------------------------------------------
# brute-force mutual visibility and independence numbers

def mu_brute(g: Graph, config: SolverConfig = DEFAULT_CONFIG) -> int:
    """Largest mutual-visibility set size by descending-size enumeration;
    valid because subsets of mutual-visibility sets stay mutually visible."""
    from itertools import combinations

    _require_solvable(g, min_n=1)
    n = g.n
    if n > config.mu_cap:
        raise TooLargeError(f"mutual-visibility brute force capped at n={config.mu_cap}")
    views = [bfs_root_view(g, v) for v in range(n)]
    deadline = config.deadline()
    checked = 0
    for k in range(n, 0, -1):
        for combo in combinations(range(n), k):
            checked += 1
            if checked & 0xFF == 0:
                _check_deadline(deadline, "mutual-visibility brute force")
            s_mask = 0
            for v in combo:
                s_mask |= 1 << v
            ok = True
            for i, u in enumerate(combo[:-1]):
                rv = views[u]
                reach = _clear_mask(rv, s_mask & ~(1 << u))
                if any(
                    not rv.dag_in_mask[v] & reach for v in combo[i + 1:]
                ):
                    ok = False
                    break
            if ok:
                return k
    return 0


def alpha_brute(g: Graph, config: SolverConfig = DEFAULT_CONFIG) -> int:
    """Maximum independent set size by branching on a highest-degree vertex."""
    if g.n > config.alpha_cap:
        raise TooLargeError(f"independence brute force capped at n={config.alpha_cap}")
    adj_mask = g.adj_mask
    deadline = config.deadline()
    best = 0
    calls = 0

    def search(allowed: int, count: int):
        nonlocal best, calls
        calls += 1
        if calls & 0x3FF == 0:
            _check_deadline(deadline, "independence brute force")
        total = allowed.bit_count()
        if count + total <= best:
            return
        if allowed == 0:
            best = max(best, count)
            return
        pick, pick_deg = -1, -1
        rest = allowed
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            deg = (adj_mask[v] & allowed).bit_count()
            if deg > pick_deg:
                pick, pick_deg = v, deg
        if pick_deg <= 1:
            # each remaining component is a vertex or an edge
            edges = 0
            rest = allowed
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                edges += (adj_mask[v] & allowed).bit_count()
            best = max(best, count + total - edges // 2)
            return
        vbit = 1 << pick
        search(allowed & ~(adj_mask[pick] | vbit), count + 1)
        search(allowed & ~vbit, count)

    search((1 << g.n) - 1, 0)
    return best
