import json

import pytest

from polarlines.cli import main
from polarlines.files import parse_lineset_file, write_lineset, build_report
from polarlines.schemetables import tables_for_space


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_scheme_tables_json(capsys):
    code, out = run_cli(capsys, "scheme", "tables", "--q", "2", "--e", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 105
    assert doc["multiplicities"] == [1, 14, 20, 14, 56]
    assert doc["P"][0] == ["1", "12", "12", "48", "32"]
    assert doc["Q"][4][1] == "-7/2"


def test_scheme_tables_csv(capsys):
    code, out = run_cli(capsys, "scheme", "tables", "--q", "2", "--e", "0", "--csv")
    assert code == 0
    assert out.startswith("# P\n1,12,12,48,32\n")
    assert "# Q" in out


def test_lp_bound_spot_value(capsys):
    code, out = run_cli(capsys, "lp", "bound", "--q", "2", "--e", "0", "--forbid", "R11,R21")
    assert code == 0
    doc = json.loads(out)
    assert doc["optimum"] == "7"
    assert doc["tight"] == ["11"]
    assert doc["certificate"]["bound"] == "7"


def test_lp_bound_half_integer_e(capsys):
    code, out = run_cli(capsys, "lp", "bound", "--q", "4", "--e", "1/2", "--forbid", "R10")
    assert code == 0
    doc = json.loads(out)
    assert doc["optimum"] == str((2 * 4 + 1) * (2 * 16 + 1))


def test_space_build_info_and_cache(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    code, out = run_cli(capsys, "space", "build", "--space", "o6plus_q2", "--cache", cache)
    assert code == 0
    doc = json.loads(out)
    assert (doc["points"], doc["lines"], doc["planes"]) == (35, 105, 30)
    code, out = run_cli(capsys, "--cache", cache, "space", "info", "--space", "o6plus_q2")
    assert code == 0
    doc = json.loads(out)
    assert doc["valencies"] == [1, 12, 12, 48, 32]
    assert doc["e"] == "0"


def test_construct_hexagon_then_eval(tmp_path, capsys):
    out_file = str(tmp_path / "hexagon.json")
    code, _ = run_cli(capsys, "construct", "hexagon", "--space", "sp6_q2", "-o", out_file)
    assert code == 0
    code, out = run_cli(capsys, "set", "eval", "--space", "sp6_q2", "--file", out_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["size"] == 63
    assert doc["a"] == ["1", "6", "0", "24", "32"]
    assert doc["regular"]["verdict"] == "regular"
    assert doc["regular"]["eigenspace"] == "20"
    assert doc["pencil_condition"] is True
    assert set(map(int, doc["plane_histogram"])) <= {0, 1, 3}


def test_construct_one_system_and_probe(tmp_path, capsys):
    out_file = str(tmp_path / "one_system.json")
    code, _ = run_cli(capsys, "construct", "one-system", "--space", "sp6_q2", "-o", out_file)
    assert code == 0
    code, out = run_cli(capsys, "set", "eval", "--space", "sp6_q2", "--file", out_file)
    doc = json.loads(out)
    assert doc["a"] == ["1", "0", "0", "0", "8"]
    assert doc["support"] == ["11", "20", "21"]


def test_search_cli(capsys):
    code, out = run_cli(
        capsys, "search", "regular", "--space", "o6plus_q2", "--j", "11", "--size", "15"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["complete"] and doc["count"] == 28
    code, out = run_cli(
        capsys,
        "search",
        "probe",
        "--space",
        "o6plus_q2",
        "--support",
        "10",
        "--size",
        "21",
        "--no-prefilter",
    )
    doc = json.loads(out)
    assert doc["status"] == "none"
    code, out = run_cli(capsys, "search", "packing", "--space", "o6plus_q2")
    doc = json.loads(out)
    assert doc["count"] == 7 and doc["complete"]


def test_lineset_file_roundtrip(tmp_path, o6plus2):
    from polarlines.analysis import make_lineset

    path = tmp_path / "set.json"
    write_lineset(o6plus2, make_lineset(o6plus2, [0, 1, 2], name="demo"), path)
    y = parse_lineset_file(path, o6plus2)
    assert y.indices == (0, 1, 2)
    assert y.name == "demo"


def test_lineset_bases_resolution(tmp_path, o6plus2):
    from polarlines.constructions import plane_lines

    y = plane_lines(o6plus2, 0)
    path = tmp_path / "plane.json"
    write_lineset(o6plus2, y, path, with_bases=True)
    doc = json.loads(path.read_text())
    del doc["lines"]  # force resolution through the canonical bases
    path.write_text(json.dumps(doc))
    again = parse_lineset_file(path, o6plus2)
    assert again.indices == y.indices


def test_lineset_fingerprint_mismatch(tmp_path, o6plus2, sp62):
    from polarlines.analysis import make_lineset

    path = tmp_path / "set.json"
    write_lineset(sp62, make_lineset(sp62, [0, 1]), path)
    with pytest.raises(ValueError, match="space"):
        parse_lineset_file(path, o6plus2)


def test_construct_ovoid_and_pencil_union_via_point_file(tmp_path, capsys):
    points_file = str(tmp_path / "ovoid.json")
    code, out = run_cli(
        capsys, "construct", "ovoid", "--space", "o6plus_q2", "-o", points_file
    )
    assert code == 0
    assert len(json.loads(out)["points"]) == 5
    union_file = str(tmp_path / "union.json")
    code, _ = run_cli(
        capsys,
        "construct",
        "pencil-union",
        "--space",
        "o6plus_q2",
        "--point-file",
        points_file,
        "-o",
        union_file,
    )
    assert code == 0
    code, out = run_cli(capsys, "set", "eval", "--space", "o6plus_q2", "--file", union_file)
    doc = json.loads(out)
    assert doc["size"] == 45 and doc["regular"]["eigenspace"] == "11"


def test_search_movoid_cli(tmp_path, capsys):
    out_file = str(tmp_path / "all_points.json")
    code, out = run_cli(
        capsys,
        "search",
        "movoid",
        "--space",
        "o6plus_q2",
        "--m",
        "3",
        "-o",
        out_file,
    )
    assert code == 0
    doc = json.loads(out)
    # the full point set of the O(5,2) section is the unique 3-ovoid candidate
    assert doc["found"] and len(doc["points"]) == 15


def test_cli_error_is_machine_readable(capsys):
    code, out = run_cli(capsys, "space", "info", "--space", "nonsense")
    assert code == 1
    doc = json.loads(out)
    assert "error" in doc


def test_cli_determinism(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    _, out1 = run_cli(capsys, "--cache", cache, "scheme", "verify", "--space", "o6plus_q2")
    _, out2 = run_cli(capsys, "--cache", cache, "scheme", "verify", "--space", "o6plus_q2")
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["ok"] is True


def test_report_rationals_are_exact_strings(o6plus2):
    tables = tables_for_space(o6plus2)
    from polarlines.analysis import make_lineset
    from polarlines.constructions import point_pencil

    rep = build_report(o6plus2, tables, point_pencil(o6plus2, 0))
    assert rep["aQ"] == ["9", "56", "40", "0", "0"]
    # a pair of concurrent coplanar lines has fractional projections
    pair = make_lineset(o6plus2, o6plus2.plane_lines[0][:2])
    rep = build_report(o6plus2, tables, pair)
    assert rep["a"] == ["1", "1", "0", "0", "0"]
    assert rep["aQ"][1] == "133/6"
    assert all("." not in s for s in rep["a"] + rep["aQ"])
