"""Command-line front door.

Graphs are read either from a file in the `p/e` line format or from a family
spec like grid:5 or kxk:3,2 (detected by the name:params shape).  All ids in
files, flags, and output are 1-based.  Exit codes: 0 success, 1 computation
error (disconnected input, caps, timeouts), 2 usage error, 3 verification
failure (the verify and witness verbs).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import (
    bounds_report,
    closed_form,
    closed_form_notes,
)
from .errors import (
    GraphFormatError,
    InvalidParameterError,
    VertexVisError,
    WitnessRejectedError,
)
from .generators import (
    FamilySpec,
    generate,
    np_gadget,
    parse_family_spec,
    random_block_graph,
    random_connected_graph,
    random_tree,
    _FAMILY_ARITY,
)
from .graph import (
    Graph,
    format_graph,
    from_external_ids,
    read_graph_file,
    to_external_ids,
)
from .solvers import (
    SolverConfig,
    max_leaf_spanning_tree,
    mu_brute,
    vv_exact,
    vx_brute,
    vx_exact,
    vx_greedy,
)
from .visibility import is_x_visibility_set
from .witnesses import witness_for

_RANDOM_FAMILIES = ("random", "rtree", "rblock")


def _looks_like_spec(text: str) -> bool:
    name = text.partition(":")[0]
    return ":" in text and (name in _FAMILY_ARITY or name in _RANDOM_FAMILIES)


def _load_graph(where: str, seed: int) -> Graph:
    if not _looks_like_spec(where):
        return read_graph_file(where)
    name, _, rest = where.partition(":")
    if name == "random":
        parts = rest.split(",")
        if len(parts) != 2:
            raise InvalidParameterError("random spec is random:<n>,<p>")
        return random_connected_graph(int(parts[0]), float(parts[1]), seed)
    if name == "rtree":
        return random_tree(int(rest), seed)
    if name == "rblock":
        return random_block_graph(int(rest), seed)
    return generate(parse_family_spec(where))


def _read_set_file(path: str, n: int):
    ids = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("c") or line.startswith("#"):
                continue
            try:
                ids.append(int(line))
            except ValueError as exc:
                raise GraphFormatError(
                    f"{path}:{lineno}: expected one 1-based id per line"
                ) from exc
    return from_external_ids(ids, n)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _config(args) -> SolverConfig:
    kwargs = {}
    if getattr(args, "brute_cap", None) is not None:
        kwargs["brute_cap"] = args.brute_cap
    if getattr(args, "mu_cap", None) is not None:
        kwargs["mu_cap"] = args.mu_cap
    if getattr(args, "maxleaf_cap", None) is not None:
        kwargs["mcds_cap"] = args.maxleaf_cap
    if getattr(args, "timeout", None) is not None:
        kwargs["timeout_s"] = args.timeout
    if getattr(args, "jobs", None) is not None:
        kwargs["jobs"] = args.jobs
    return SolverConfig(**kwargs)


def _cmd_gen(args) -> int:
    g = _load_graph(args.input, args.seed)
    text = format_graph(g, comment=f"generated from {args.input}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_vx(args) -> int:
    g = _load_graph(args.input, args.seed)
    root = args.root - 1
    cfg = _config(args)
    solver = {"exact": vx_exact, "brute": vx_brute, "greedy": vx_greedy}[args.method]
    res = solver(g, root, cfg)
    payload = res.to_json_dict()
    lines = [
        f"root {args.root}: visibility number {res.value} ({res.method})",
        f"witness: {to_external_ids(res.witness)}",
    ]
    if args.method == "greedy":
        lines[0] = f"root {args.root}: visibility number >= {res.value} (greedy)"
    _emit(args, payload, lines)
    return 0


def _cmd_vv(args) -> int:
    g = _load_graph(args.input, args.seed)
    res = vv_exact(g, _config(args))
    _emit(
        args,
        res.to_json_dict(),
        [
            f"vertex visibility number {res.value}, attained at root {res.root + 1}",
            f"witness: {to_external_ids(res.witness)}",
        ],
    )
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.input, args.seed)
    root = args.root - 1
    members = _read_set_file(args.set, g.n)
    ok = is_x_visibility_set(g, root, members)
    _emit(
        args,
        {"root": args.root, "size": len(members), "visible": ok},
        [
            f"set of size {len(members)} is"
            + ("" if ok else " NOT")
            + f" a visibility set for root {args.root}"
        ],
    )
    return 0 if ok else 3


def _cmd_bounds(args) -> int:
    g = _load_graph(args.input, args.seed)
    x = args.root - 1 if args.root is not None else None
    report = bounds_report(
        g,
        x=x,
        compute_mu=args.mu,
        compute_exact=args.exact,
        config=_config(args),
    )
    lines = [f"n={report.n} m={report.m} delta={report.delta}"]
    for e in report.entries:
        flag = "" if e.applicable else " (not applicable)"
        lines.append(f"  [{e.scope}] {e.name}: {e.kind} {e.value}{flag}")
    if report.mu is not None:
        lines.append(f"  mutual visibility number: {report.mu}")
    if report.exact_value is not None:
        lines.append(
            f"  exact: {report.exact_value} at root {report.exact_root + 1}"
        )
    for note in report.notes:
        lines.append(f"  note: {note}")
    _emit(args, report.to_json_dict(), lines)
    return 0


def _cmd_reduce(args) -> int:
    g = _load_graph(args.input, args.seed)
    red = np_gadget(g)
    comment = (
        f"visibility gadget of {args.input}; apex {red.apex + 1}; "
        f"threshold offset {red.k_offset}"
    )
    text = format_graph(red.gprime, comment=comment)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    payload = {
        "n": red.gprime.n,
        "m": red.gprime.m,
        "apex": red.apex + 1,
        "k_offset": red.k_offset,
        "original_vertices": [v + 1 for v in red.original_map],
        "edge_vertices": {
            f"{u + 1}-{v + 1}": ev + 1 for (u, v), ev in sorted(red.edge_vertex_map.items())
        },
    }
    lines = [
        f"gadget: n={red.gprime.n} m={red.gprime.m} apex={red.apex + 1} "
        f"threshold offset={red.k_offset}",
    ]
    if not args.output:
        lines.append(text.rstrip("\n"))
    else:
        lines.append(f"graph written to {args.output}")
    _emit(args, payload, lines)
    return 0


def _cmd_witness(args) -> int:
    spec = parse_family_spec(args.spec)
    if spec.family not in ("grid", "prism", "torus"):
        raise InvalidParameterError("witness supports grid:<n>, prism:<n>, torus:<n>")
    w = witness_for(spec.family, spec.args[0])
    row, col = w.root_coords()
    _emit(
        args,
        w.to_json_dict(),
        [
            f"{spec}: witness of size {w.claimed_size} at root "
            f"({row},{col}) id {w.root + 1}; verified",
            f"set: {to_external_ids(w.members)}",
        ],
    )
    return 0


def _cmd_table(args) -> int:
    lo, _, hi = args.range.partition("..")
    try:
        lo_n, hi_n = int(lo), int(hi)
    except ValueError as exc:
        raise InvalidParameterError("range must look like 4..8") from exc
    cfg = _config(args)
    rows = []
    notes: set[str] = set()
    for n in range(lo_n, hi_n + 1):
        spec = FamilySpec(args.family, (n,))
        value = closed_form(spec)
        notes.update(closed_form_notes(spec))
        w = witness_for(args.family, n)
        exact = None
        if args.exact_max is not None and n <= args.exact_max:
            exact = vv_exact(generate(spec), cfg).value
        rows.append({"n": n, "closed_form": value, "witness": len(w.members), "exact": exact})
    lines = [f"{args.family}: n, closed form, witness size, exact"]
    for r in rows:
        exact = "-" if r["exact"] is None else str(r["exact"])
        lines.append(f"  {r['n']:3d}  {r['closed_form']:6d}  {r['witness']:6d}  {exact:>5}")
    for note in sorted(notes):
        lines.append(f"note: {note}")
    _emit(args, {"family": args.family, "rows": rows, "notes": sorted(notes)}, lines)
    return 0


def _cmd_maxleaf(args) -> int:
    g = _load_graph(args.input, args.seed)
    res = max_leaf_spanning_tree(g, _config(args))
    _emit(
        args,
        res.to_json_dict(),
        [
            f"maximum spanning-tree leaf count: {res.value}",
            f"leaves: {to_external_ids(res.leaves)}",
        ],
    )
    return 0


def _cmd_mu(args) -> int:
    g = _load_graph(args.input, args.seed)
    value = mu_brute(g, _config(args))
    _emit(args, {"mu": value}, [f"mutual visibility number: {value}"])
    return 0


def _add_common(p, root=False, required_root=False):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for random:* specs")
    if root:
        p.add_argument("--root", type=int, required=required_root, help="1-based root id")


def _add_caps(p):
    p.add_argument("--brute-cap", type=int, default=None)
    p.add_argument("--mu-cap", type=int, default=None)
    p.add_argument("--maxleaf-cap", type=int, default=None)
    p.add_argument("--timeout", type=float, default=None, help="seconds")
    p.add_argument("--jobs", type=int, default=None, help="parallel roots for vv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vertexvis",
        description="Exact vertex visibility computations on graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="materialize a family spec as a graph file")
    p.add_argument("input", help="family spec (e.g. grid:5) or graph file")
    p.add_argument("-o", "--output", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("vx", help="visibility number of one root")
    p.add_argument("input")
    _add_common(p, root=True, required_root=True)
    p.add_argument("--method", choices=("exact", "brute", "greedy"), default="exact")
    _add_caps(p)
    p.set_defaults(func=_cmd_vx)

    p = sub.add_parser("vv", help="vertex visibility number of the graph")
    p.add_argument("input")
    _add_common(p)
    _add_caps(p)
    p.set_defaults(func=_cmd_vv)

    p = sub.add_parser("verify", help="check a vertex set file against a root")
    p.add_argument("input")
    _add_common(p, root=True, required_root=True)
    p.add_argument("--set", required=True, help="file with one 1-based id per line")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="bound report, optionally with exact values")
    p.add_argument("input")
    _add_common(p, root=True)
    p.add_argument("--mu", action="store_true", help="compute the mutual-visibility entry")
    p.add_argument("--exact", action="store_true", help="solve exactly as well")
    _add_caps(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("reduce", help="build the independent-set hardness gadget")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("witness", help="construct and verify an extremal set")
    p.add_argument("spec", help="grid:<n>, prism:<n>, or torus:<n>")
    _add_common(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("table", help="closed form vs witness vs exact over a range")
    p.add_argument("family", choices=("grid", "prism", "torus"))
    p.add_argument("--range", required=True, help="e.g. 4..8")
    p.add_argument("--exact-max", type=int, default=None)
    _add_common(p)
    _add_caps(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("maxleaf", help="maximum spanning-tree leaf count")
    p.add_argument("input")
    _add_common(p)
    _add_caps(p)
    p.set_defaults(func=_cmd_maxleaf)

    p = sub.add_parser("mu", help="mutual visibility number (exhaustive)")
    p.add_argument("input")
    _add_common(p)
    _add_caps(p)
    p.set_defaults(func=_cmd_mu)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WitnessRejectedError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except VertexVisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
