import json

from vertexvis.cli import main
from vertexvis.graph import parse_graph, read_graph_file
from vertexvis.generators import generate, parse_family_spec
from vertexvis.solvers import vv_exact
from vertexvis.witnesses import grid_witness

from oracles import diameter


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_round_trip(tmp_path, capsys):
    out = tmp_path / "grid4.gr"
    code, _, _ = run(capsys, "gen", "grid:4", "-o", str(out))
    assert code == 0
    g = read_graph_file(out)
    assert g == generate(parse_family_spec("grid:4"))


def test_gen_to_stdout(capsys):
    code, stdout, _ = run(capsys, "gen", "path:3")
    assert code == 0
    assert parse_graph(stdout).n == 3


def test_vv_json_value(capsys):
    code, stdout, _ = run(capsys, "vv", "grid:4", "--format", "json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["value"] == 9
    assert payload["method"] == "cover_bnb"


def test_vx_methods_agree(capsys):
    values = {}
    for method in ("exact", "brute"):
        code, stdout, _ = run(
            capsys, "vx", "cycle:6", "--root", "1", "--method", method,
            "--format", "json",
        )
        assert code == 0
        values[method] = json.loads(stdout)["value"]
    assert values["exact"] == values["brute"] == 2


def test_verify_accepts_solver_witness(tmp_path, capsys):
    res = vv_exact(generate(parse_family_spec("figure1:1")))
    setfile = tmp_path / "set.txt"
    setfile.write_text("".join(f"{v + 1}\n" for v in sorted(res.witness)))
    code, stdout, _ = run(
        capsys, "verify", "figure1:1", "--root", str(res.root + 1),
        "--set", str(setfile),
    )
    assert code == 0
    assert "is a visibility set" in stdout


def test_verify_hub_root_sixteen(tmp_path, capsys):
    # the shared hub of figure1:1 is external id 16; a maximum set there has
    # ten members
    from vertexvis.solvers import vx_exact

    g = generate(parse_family_spec("figure1:1"))
    res = vx_exact(g, 15)
    assert res.value == 10
    setfile = tmp_path / "hub.txt"
    setfile.write_text("".join(f"{v + 1}\n" for v in sorted(res.witness)))
    code, _, _ = run(
        capsys, "verify", "figure1:1", "--root", "16", "--set", str(setfile)
    )
    assert code == 0


def test_verify_rejects_bad_set(tmp_path, capsys):
    setfile = tmp_path / "set.txt"
    setfile.write_text("2\n4\n")  # both path neighbors of an end blocked
    code, stdout, _ = run(capsys, "verify", "path:4", "--root", "1", "--set", str(setfile))
    assert code == 3
    assert "NOT" in stdout


def test_table_rows(capsys):
    code, stdout, _ = run(
        capsys, "table", "torus", "--range", "4..8", "--exact-max", "5",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(stdout)
    rows = {r["n"]: r for r in payload["rows"]}
    assert [rows[n]["closed_form"] for n in range(4, 9)] == [9, 12, 19, 26, 33]
    assert rows[4]["exact"] == 9 and rows[5]["exact"] == 12
    assert rows[6]["exact"] is None
    assert all(rows[n]["witness"] == rows[n]["closed_form"] for n in range(4, 9))
    assert payload["notes"]


def test_reduce_output(tmp_path, capsys):
    out = tmp_path / "gadget.gr"
    code, stdout, _ = run(
        capsys, "reduce", "path:5", "-o", str(out), "--format", "json"
    )
    assert code == 0
    payload = json.loads(stdout)
    assert payload["apex"] == 6
    assert payload["k_offset"] == 4
    g = read_graph_file(out)
    assert g.n == 10 and g.m == 23
    assert diameter(g) == 2
    # re-solving the emitted file at the apex reproduces offset + independence
    code, stdout, _ = run(
        capsys, "vx", str(out), "--root", "6", "--format", "json"
    )
    assert code == 0
    assert json.loads(stdout)["value"] == payload["k_offset"] + 3


def test_witness_command(capsys):
    code, stdout, _ = run(capsys, "witness", "grid:6", "--format", "json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["verified"] is True
    assert payload["claimed_size"] == 20
    assert sorted(payload["set"]) == sorted(
        v + 1 for v in grid_witness(6).members
    )


def test_maxleaf_and_mu(capsys):
    code, stdout, _ = run(capsys, "maxleaf", "figure1:1", "--format", "json")
    assert code == 0
    assert json.loads(stdout)["value"] == 11
    code, stdout, _ = run(capsys, "mu", "path:4", "--format", "json")
    assert code == 0
    assert json.loads(stdout)["mu"] == 2


def test_text_and_json_agree(capsys):
    code, stdout, _ = run(capsys, "vv", "cocktail:3")
    assert code == 0
    assert "4" in stdout
    code, payload, _ = run(capsys, "vv", "cocktail:3", "--format", "json")
    assert json.loads(payload)["value"] == 4


def test_error_exit_codes(tmp_path, capsys):
    bad = tmp_path / "disconnected.gr"
    bad.write_text("p 4 2\ne 1 2\ne 3 4\n")
    code, _, err = run(capsys, "vv", str(bad))
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "mu", "grid:5")
    assert code == 1  # exceeds the exhaustive cap
    code, _, err = run(capsys, "witness", "cycle:6")
    assert code == 1


def test_random_specs_seeded(capsys):
    code1, out1, _ = run(capsys, "gen", "random:8,0.4", "--seed", "7")
    code2, out2, _ = run(capsys, "gen", "random:8,0.4", "--seed", "7")
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3, _ = run(capsys, "gen", "rblock:10", "--seed", "3")
    assert code3 == 0
    assert parse_graph(out3).n == 10


def test_usage_error_exit_code(capsys):
    try:
        main(["vx", "grid:4"])  # missing required --root
    except SystemExit as exc:
        assert exc.code == 2
    else:
        raise AssertionError("argparse should exit with usage error")
