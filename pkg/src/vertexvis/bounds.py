"""Closed-form values, general bounds, and the provenance-tagged report.

Every entry in a report carries the mathematical reason it holds, a kind
(lower/upper), and a scope: "vv" entries bound the maximum visibility
number of the graph, "vx" entries bound the visibility number of the one
root the report was asked about.  Per-root lower bounds also bound vv (a
root's value never exceeds the maximum), but per-root upper bounds do not.

Two tabulated closed forms are known to disagree with exact computation and
are reported with their discrepancy notes instead of being silently
corrected or silently repeated; see closed_form_notes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    CompleteGraphError,
    InvalidParameterError,
    NotBlockGraphError,
    UnsupportedFamilyError,
)
from .generators import FamilySpec
from .graph import Graph, bfs_root_view, is_block_graph, require_connected
from .visibility import (
    has_spanning_double_star,
    has_universal_vertex,
    maximally_distant,
    simplicial_vertices,
    stress_vertices,
)

__all__ = [
    "BoundEntry",
    "BoundsReport",
    "bounds_report",
    "characterize_extremal",
    "closed_form",
    "closed_form_notes",
    "cartesian_bounds",
    "block_graph_value",
    "COMPLETE_PRODUCT_NOTE",
    "TORUS_EVEN_NOTE",
]

COMPLETE_PRODUCT_NOTE = (
    "complete products K_m box K_n (m >= n >= 2): the product bounds pin the "
    "value to mn-n = (m-1)n, and exact solves agree (K_3 box K_2 gives 4, "
    "K_4 box K_3 gives 9); the sometimes-quoted closed form mn-m contradicts "
    "both and is not used"
)

TORUS_EVEN_NOTE = (
    "square torus, even n >= 6: the tabulated value (n^2+2)/2 is a verified "
    "lower bound but not the maximum; exact solves give (n^2+n-2)/2 (20 at "
    "n=6, 35 at n=8, 54 at n=10), packing the full antipodal row, which the "
    "diagonal-alternation counting behind the tabulated value does not allow"
)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str  # "lower" | "upper"
    value: int
    applicable: bool
    provenance: str
    scope: str  # "vv" | "vx"

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "value": self.value,
            "applicable": self.applicable,
            "provenance": self.provenance,
            "scope": self.scope,
        }


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    delta: int
    root: int | None
    entries: tuple[BoundEntry, ...]
    mu: int | None = None
    exact_value: int | None = None
    exact_root: int | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_json_dict(self) -> dict:
        return {
            "graph": {"n": self.n, "m": self.m, "delta": self.delta},
            "root": None if self.root is None else self.root + 1,
            "bounds": [e.to_json_dict() for e in self.entries],
            "mu": self.mu,
            "exact": None
            if self.exact_value is None
            else {"value": self.exact_value, "root": self.exact_root + 1},
            "notes": list(self.notes),
        }


def bounds_report(
    g: Graph,
    x: int | None = None,
    compute_mu: bool = False,
    compute_exact: bool = False,
    config=None,
) -> BoundsReport:
    """Assemble every applicable bound; per-root entries appear only when a
    root is given.  The mutual-visibility entry is exponential to evaluate
    and therefore opt-in; when skipped it is reported as not applicable
    rather than estimated."""
    require_connected(g)
    if g.n < 2:
        raise InvalidParameterError("bounds need at least two vertices")
    n, delta = g.n, g.max_degree()
    entries: list[BoundEntry] = []
    notes: list[str] = []
    entries.append(
        BoundEntry(
            "order_upper",
            "upper",
            n - 1,
            True,
            "a visibility set excludes its root",
            "vv",
        )
    )
    entries.append(
        BoundEntry(
            "max_degree_lower",
            "lower",
            delta,
            True,
            "the open neighborhood of a max-degree vertex is a visibility set from it",
            "vv",
        )
    )
    universal = has_universal_vertex(g)
    entries.append(
        BoundEntry(
            "degree_order_upper",
            "upper",
            (n * delta - 1) // (delta + 1),
            universal is None,
            "without a universal vertex, members outside the root's "
            "neighborhood need unblocked outside neighbors; counting both "
            "sides gives floor((n*delta-1)/(delta+1))",
            "vv",
        )
    )
    mu_value: int | None = None
    if compute_mu:
        from .solvers import DEFAULT_CONFIG, mu_brute

        mu_value = mu_brute(g, config or DEFAULT_CONFIG)
    entries.append(
        BoundEntry(
            "mutual_visibility_lower",
            "lower",
            (mu_value - 1) if mu_value is not None else 0,
            mu_value is not None,
            "dropping one vertex from a maximum mutual-visibility set leaves "
            "a visibility set from the dropped vertex",
            "vv",
        )
    )
    if x is not None:
        g.check_vertex(x)
        rv = bfs_root_view(g, x)
        md = maximally_distant(g, x)
        stress = stress_vertices(g, x)
        entries.append(
            BoundEntry(
                "max_distant_lower",
                "lower",
                len(md),
                True,
                "some maximum visibility set for the root contains every "
                "maximally distant vertex",
                "vx",
            )
        )
        entries.append(
            BoundEntry(
                "stress_upper",
                "upper",
                n - len(stress) - 1,
                True,
                "no maximum visibility set for the root needs a stress vertex",
                "vx",
            )
        )
        entries.append(
            BoundEntry(
                "eccentricity_lower",
                "lower",
                math.ceil((n - 1) / rv.ecc),
                True,
                "a largest distance layer is a visibility set from the root",
                "vx",
            )
        )
        entries.append(
            BoundEntry(
                "eccentricity_upper",
                "upper",
                n - rv.ecc,
                True,
                "a geodesic to an eccentric vertex meets a visibility set at "
                "most once",
                "vx",
            )
        )
    exact_value = exact_root = None
    if compute_exact:
        from .solvers import DEFAULT_CONFIG, vv_exact, vx_exact

        cfg = config or DEFAULT_CONFIG
        if x is not None:
            res = vx_exact(g, x, cfg)
        else:
            res = vv_exact(g, cfg)
        exact_value, exact_root = res.value, res.root
    return BoundsReport(
        n=n,
        m=g.m,
        delta=delta,
        root=x,
        entries=tuple(entries),
        mu=mu_value,
        exact_value=exact_value,
        exact_root=exact_root,
        notes=tuple(notes),
    )


def characterize_extremal(g: Graph) -> str:
    """Classify the graph: "top" when the maximum visibility number is n-1
    (exactly the graphs with a universal vertex), "second" when it is n-2
    (no universal vertex but a spanning double star), else "other"."""
    require_connected(g)
    if g.n < 2:
        raise InvalidParameterError("need at least two vertices")
    if has_universal_vertex(g) is not None:
        return "top"
    if has_spanning_double_star(g):
        return "second"
    return "other"


def closed_form(spec: FamilySpec) -> int:
    """Tabulated maximum visibility number for the supported families.

    The complete-product and even-torus entries carry discrepancy notes;
    see closed_form_notes.
    """
    fam, args = spec.family, spec.args
    if fam == "path":
        n = args[0]
        if n < 2:
            raise InvalidParameterError("path closed form needs n >= 2")
        return 2 if n >= 3 else 1
    if fam == "cycle":
        if args[0] < 3:
            raise InvalidParameterError("cycle needs n >= 3")
        return 2
    if fam == "complete":
        if args[0] < 2:
            raise InvalidParameterError("complete closed form needs n >= 2")
        return args[0] - 1
    if fam == "grid":
        n = args[0]
        if n < 4:
            raise InvalidParameterError("grid closed form holds for n >= 4")
        return (n * n + n - 2) // 2
    if fam == "prism":
        n = args[0]
        if n < 4:
            raise InvalidParameterError("prism closed form holds for n >= 4")
        return {
            1: (n * n + 3) // 2,
            3: (n * n + n - 2) // 2,
            0: (2 * n * n + n) // 4,
            2: (2 * n * n + n - 2) // 4,
        }[n % 4]
    if fam == "torus":
        n = args[0]
        if n < 4:
            raise InvalidParameterError("torus closed form holds for n >= 4")
        if n % 4 == 1:
            return (n * n - 1) // 2
        if n % 4 == 3:
            return (n * n + 3) // 2
        return (n * n + 2) // 2
    if fam == "kxk":
        m, n = args
        if min(m, n) < 2:
            raise InvalidParameterError("complete product needs m, n >= 2")
        return m * n - min(m, n)
    raise UnsupportedFamilyError(f"no closed form for family {fam!r}")


def closed_form_notes(spec: FamilySpec) -> tuple[str, ...]:
    """Discrepancy notes attached to a closed-form value, empty for the
    families whose tabulated values agree with exact computation."""
    if spec.family == "kxk":
        return (COMPLETE_PRODUCT_NOTE,)
    if spec.family == "torus" and spec.args[0] >= 6 and spec.args[0] % 2 == 0:
        return (TORUS_EVEN_NOTE,)
    return ()


def cartesian_bounds(g: Graph, h: Graph) -> tuple[int, int]:
    """General sandwich for a Cartesian product: layers through a max-degree
    vertex give the lower bound, and a full factor layer plus a full
    co-layer cannot both fit, giving the upper bound.  Factors are
    normalized so the first is the larger one."""
    require_connected(g)
    require_connected(h)
    if g.n < h.n:
        g, h = h, g
    lower = max(g.max_degree() * h.n, h.max_degree() * g.n)
    upper = (g.n - 1) * h.n
    return lower, upper


def block_graph_value(g: Graph) -> int:
    """Maximum visibility number of a non-complete block graph: the number
    of simplicial vertices (both sides of the distance-based sandwich meet
    there)."""
    require_connected(g)
    if not is_block_graph(g):
        raise NotBlockGraphError("graph has a non-complete biconnected component")
    if g.m == g.n * (g.n - 1) // 2:
        raise CompleteGraphError("complete graph: the value is n - 1")
    return len(simplicial_vertices(g))
