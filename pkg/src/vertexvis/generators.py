"""Deterministic constructors for named graph families and gadgets.

Product graphs use the row-major id convention: the vertex (g, h) of G box H
gets id g * n(H) + h.  For the square families (grid, prism, torus) on side n
this means coordinate (row k, column l), 1-based, lands on id
(k-1) * n + (l-1); the witness constructions address vertices that way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    InvalidParameterError,
    IsolatedVertexError,
    UnsupportedFamilyError,
)
from .graph import Graph, build_graph, is_connected

__all__ = [
    "FamilySpec",
    "parse_family_spec",
    "generate",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "double_star",
    "cocktail_party",
    "grid_graph",
    "prism_graph",
    "torus_graph",
    "complete_product",
    "cartesian_product",
    "first_factor_layer",
    "second_factor_layer",
    "np_gadget",
    "ReductionResult",
    "figure_family",
    "FIGURE_EDGES",
    "random_connected_graph",
    "random_graph_no_isolated",
    "random_tree",
    "random_block_graph",
]

_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "double_star": 2,
    "cocktail": 1,
    "grid": 1,
    "prism": 1,
    "torus": 1,
    "kxk": 2,
    "figure1": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its integer parameters, e.g. grid:5 or kxk:3,2."""

    family: str
    args: tuple[int, ...]

    def __post_init__(self):
        arity = _FAMILY_ARITY.get(self.family)
        if arity is None:
            raise UnsupportedFamilyError(f"unknown family {self.family!r}")
        if len(self.args) != arity:
            raise InvalidParameterError(
                f"family {self.family!r} takes {arity} parameter(s), got {self.args}"
            )
        if any(a < 1 for a in self.args):
            raise InvalidParameterError(f"parameters must be positive: {self.args}")

    def __str__(self):
        return f"{self.family}:{','.join(str(a) for a in self.args)}"


def parse_family_spec(text: str) -> FamilySpec:
    name, sep, rest = text.partition(":")
    if not sep:
        raise InvalidParameterError(f"family spec needs 'name:params', got {text!r}")
    try:
        args = tuple(int(part) for part in rest.split(","))
    except ValueError as exc:
        raise InvalidParameterError(f"bad family parameters in {text!r}") from exc
    return FamilySpec(name, args)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(k: int) -> Graph:
    """K_{1,k}: center 0 with k leaves."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centers 0 and 1 carrying a and b leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return build_graph(a + b + 2, edges)


def cocktail_party(k: int) -> Graph:
    """K_{k x 2}: complete multipartite with k parts of size two."""
    if k < 2:
        raise InvalidParameterError("cocktail party graph needs k >= 2")
    n = 2 * k
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if u // 2 != v // 2
    ]
    return build_graph(n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (a,b) ~ (a',b') iff equal in one coordinate and
    adjacent in the other.  Vertex (a, b) gets id a * n(H) + b."""
    nh = h.n
    edges = []
    for a in range(g.n):
        base = a * nh
        for b, b2 in h.edges():
            edges.append((base + b, base + b2))
    for a, a2 in g.edges():
        for b in range(nh):
            edges.append((a * nh + b, a2 * nh + b))
    return build_graph(g.n * nh, edges)


def first_factor_layer(ng: int, nh: int, b: int) -> tuple[int, ...]:
    """Ids of the copy of the first factor at second coordinate b."""
    return tuple(a * nh + b for a in range(ng))


def second_factor_layer(ng: int, nh: int, a: int) -> tuple[int, ...]:
    """Ids of the copy of the second factor at first coordinate a."""
    return tuple(a * nh + b for b in range(nh))


def grid_graph(n: int) -> Graph:
    return cartesian_product(path_graph(n), path_graph(n))


def prism_graph(n: int) -> Graph:
    """Square prism: path rows, cyclic columns (P_n box C_n)."""
    return cartesian_product(path_graph(n), cycle_graph(n))


def torus_graph(n: int) -> Graph:
    return cartesian_product(cycle_graph(n), cycle_graph(n))


def complete_product(m: int, n: int) -> Graph:
    return cartesian_product(complete_graph(m), complete_graph(n))


def generate(spec: FamilySpec) -> Graph:
    """Materialize a family spec; figure1 returns the graph only (see
    figure_family for the labeled vertices)."""
    fam, args = spec.family, spec.args
    if fam == "path":
        return path_graph(args[0])
    if fam == "cycle":
        return cycle_graph(args[0])
    if fam == "complete":
        return complete_graph(args[0])
    if fam == "star":
        return star_graph(args[0])
    if fam == "double_star":
        return double_star(args[0], args[1])
    if fam == "cocktail":
        return cocktail_party(args[0])
    if fam == "grid":
        return grid_graph(args[0])
    if fam == "prism":
        return prism_graph(args[0])
    if fam == "torus":
        return torus_graph(args[0])
    if fam == "kxk":
        return complete_product(args[0], args[1])
    if fam == "figure1":
        return figure_family(args[0])[0]
    raise UnsupportedFamilyError(f"unknown family {fam!r}")


# ---------------------------------------------------------------------------
# the 16-vertex family separating max-leaf counts from visibility numbers

# 1-based edges of one copy; vertex 16 is the hub shared between copies.
FIGURE_EDGES = (
    (5, 1), (5, 2), (5, 3),
    (7, 4), (7, 5), (7, 6),
    (13, 9), (13, 10), (13, 11),
    (15, 12), (15, 13), (15, 14),
    (16, 7), (16, 8), (16, 15),
    (8, 2), (8, 10),
)

# labeled vertices of one copy, 1-based
_FIGURE_LABELS = {"x": 16, "y": 7, "z": 15, "a": 5, "b": 2, "c": 8}


def figure_family(copies: int) -> tuple[Graph, dict]:
    """`copies` disjoint copies of the 16-vertex graph with all hub vertices
    identified; n = 15 * copies + 1.

    Returns (graph, labels) where labels["x"] is the shared hub id and each
    of "y", "z", "a", "b", "c" maps to a tuple with one id per copy.
    Ids are 0-based: copy j occupies 15*j .. 15*j+14, the hub is 15*copies.
    """
    if copies < 1:
        raise InvalidParameterError("figure1 needs at least one copy")
    hub = 15 * copies
    edges = []
    for j in range(copies):
        off = 15 * j
        for u, v in FIGURE_EDGES:
            uu = hub if u == 16 else off + u - 1
            vv = hub if v == 16 else off + v - 1
            edges.append((uu, vv))
    labels: dict[str, object] = {"x": hub}
    for name in ("y", "z", "a", "b", "c"):
        local = _FIGURE_LABELS[name]
        labels[name] = tuple(15 * j + local - 1 for j in range(copies))
    return build_graph(15 * copies + 1, edges), labels


# ---------------------------------------------------------------------------
# hardness gadget: decide-an-independent-set inside a diameter-2 supergraph

@dataclass(frozen=True)
class ReductionResult:
    """Output of np_gadget.

    gprime: the transformed graph; apex: the vertex adjacent to every
    original vertex; original_map[i]: id of original vertex i inside gprime;
    edge_vertex_map: original edge (u, v), u < v -> id of its edge vertex;
    k_offset: number of original edges, so that independent sets of size t
    correspond to apex-visibility sets of size k_offset + t.
    """

    gprime: Graph
    apex: int
    original_map: tuple[int, ...]
    edge_vertex_map: dict
    k_offset: int


def np_gadget(g: Graph) -> ReductionResult:
    """Augment g with a universal-over-originals apex and one vertex per
    original edge; the edge vertices induce a clique and each one is adjacent
    to exactly the two endpoints of its edge.  Original edges are kept.

    The apex-visibility number of the result equals m(g) plus the maximum
    independent set size of g.  Rejects graphs with isolated vertices.
    """
    for v in range(g.n):
        if not g.adj[v]:
            raise IsolatedVertexError(f"vertex {v} is isolated")
    n = g.n
    apex = n
    original_edges = list(g.edges())
    edges = list(original_edges)
    edges += [(v, apex) for v in range(n)]
    edge_ids = {}
    for idx, (u, v) in enumerate(original_edges):
        ev = n + 1 + idx
        edge_ids[(u, v)] = ev
        edges.append((u, ev))
        edges.append((v, ev))
    evs = sorted(edge_ids.values())
    edges += [(a, b) for i, a in enumerate(evs) for b in evs[i + 1:]]
    gprime = build_graph(n + 1 + len(original_edges), edges)
    return ReductionResult(
        gprime=gprime,
        apex=apex,
        original_map=tuple(range(n)),
        edge_vertex_map=edge_ids,
        k_offset=len(original_edges),
    )


# ---------------------------------------------------------------------------
# seeded random graphs (test plumbing)

def random_connected_graph(n: int, p: float, seed: int, max_tries: int = 1000) -> Graph:
    """Erdos-Renyi G(n, p), resampled until connected."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = build_graph(n, edges)
        if is_connected(g):
            return g
    raise InvalidParameterError(
        f"no connected sample in {max_tries} tries for n={n}, p={p}"
    )


def random_graph_no_isolated(n: int, p: float, seed: int, max_tries: int = 1000) -> Graph:
    """Erdos-Renyi G(n, p), resampled until no vertex is isolated (the graph
    itself may be disconnected)."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = build_graph(n, edges)
        if all(g.adj[v] for v in range(n)):
            return g
    raise InvalidParameterError(
        f"no isolated-free sample in {max_tries} tries for n={n}, p={p}"
    )


def random_tree(n: int, seed: int) -> Graph:
    """Random labeled tree: each vertex attaches to a random earlier one."""
    if n == 1:
        return build_graph(1, [])
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return build_graph(n, edges)


def random_block_graph(n: int, seed: int, max_clique: int = 4) -> Graph:
    """Random connected block graph: cliques glued at cut vertices.

    Guarantees at least two blocks, hence never a complete graph, for n >= 3.
    """
    if n < 3:
        raise InvalidParameterError("block graph sampler needs n >= 3")
    rng = random.Random(seed)
    first = rng.randint(2, min(max_clique, n - 1))
    vertices = list(range(first))
    edges = [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]
    count = first
    while count < n:
        size = rng.randint(2, max_clique)
        size = min(size, n - count + 1)
        cut = rng.choice(range(count))
        block = [cut] + list(range(count, count + size - 1))
        count += size - 1
        edges += [(u, v) for i, u in enumerate(block) for v in block[i + 1:]]
    return build_graph(n, edges)
