import json

import pytest

from coverpack.cli import REPORT_SCHEMA, build_parser, emit_report, main, parse_graph_spec
from coverpack.graphs import complete, cycle, path, star


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_graph_spec():
    assert parse_graph_spec("path:5") == path(5)
    assert parse_graph_spec("cycle:6") == cycle(6)
    assert parse_graph_spec("star:4") == star(4)
    assert parse_graph_spec("complete:4") == complete(4)
    assert parse_graph_spec("DQc").n == 5


def test_parse_graph_spec_file(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text("EhEG\n")
    assert parse_graph_spec(f"file:{p}") == cycle(6)


def test_parse_graph_spec_errors():
    from coverpack.cli import UsageError
    with pytest.raises(UsageError):
        parse_graph_spec("path:x")
    with pytest.raises(UsageError):
        parse_graph_spec("???")
    with pytest.raises(UsageError):
        parse_graph_spec("file:/nonexistent/nope")


def test_gens_command(capsys):
    code, out, _ = run_cli(capsys, "gens", "--graph", "path:7", "--t", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "gens"
    assert payload["result"]["generators"] == [
        "x4", "x3*x7", "x3*x6", "x3*x5", "x2*x6", "x2*x5", "x1*x5"]


def test_gens_routes_agree(capsys):
    _, out1, _ = run_cli(capsys, "gens", "--graph", "cycle:9", "--t", "3")
    _, out2, _ = run_cli(capsys, "gens", "--graph", "cycle:9", "--t", "3", "--closed-form")
    _, out3, _ = run_cli(capsys, "gens", "--graph", "cycle:9", "--t", "3", "--brute-force")
    gens1 = json.loads(out1)["result"]["generators"]
    assert gens1 == json.loads(out2)["result"]["generators"]
    assert gens1 == json.loads(out3)["result"]["generators"]


def test_gens_closed_form_requires_canonical(capsys):
    code, _, err = run_cli(capsys, "gens", "--graph", "star:4", "--t", "3", "--closed-form")
    assert code == 2 and "closed-form" in err


def test_gens_flag_conflict(capsys):
    code, _, _ = run_cli(capsys, "gens", "--graph", "path:5", "--t", "3",
                         "--closed-form", "--brute-force")
    assert code == 2


def test_simis_command(capsys):
    code, out, _ = run_cli(capsys, "simis", "--graph", "star:4", "--t", "3", "--smax", "2")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["verdict"] == "witness_at" and res["s"] == 2
    assert res["witness"] == "x2*x3*x4"


def test_konig_command(capsys):
    code, out, _ = run_cli(capsys, "konig", "--graph", "cycle:9", "--t", "3")
    res = json.loads(out)["result"]
    assert code == 0 and res["konig"] is True
    assert res["certificate"] == ["x1*x4*x7", "x2*x5*x8", "x3*x6*x9"]


def test_packing_command(capsys):
    code, out, _ = run_cli(capsys, "packing", "--graph", "cycle:7", "--t", "3")
    res = json.loads(out)["result"]
    assert code == 0 and res["packed"] is False
    assert res["witness"]["minor"] == {"zeros": [], "ones": []}


def test_lp_command(capsys):
    code, out, _ = run_cli(capsys, "lp", "--graph", "cycle:7", "--t", "3")
    res = json.loads(out)["result"]
    assert code == 0
    assert res["tau"] == 3 and res["nu"] == 2 and res["equal"] is False


def test_lp_custom_alpha(capsys):
    code, out, _ = run_cli(capsys, "lp", "--graph", "path:5", "--t", "2",
                           "--alpha", "1,2,1,2,1")
    res = json.loads(out)["result"]
    assert code == 0 and res["equal"] is True
    code, _, _ = run_cli(capsys, "lp", "--graph", "path:5", "--t", "2", "--alpha", "1,2")
    assert code == 2


def test_gap_search_command(capsys):
    code, out, _ = run_cli(capsys, "gap-search", "--graph", "cycle:7", "--t", "3",
                           "--entry-bound", "1")
    res = json.loads(out)["result"]
    assert code == 0
    assert res["witness"] == [0, 1, 1, 0, 1, 1, 1]


def test_verify_theorem_command(capsys):
    code, out, _ = run_cli(capsys, "verify-theorem", "--nmax", "4")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["disagreements"] == 0
    assert res["summary"]["instances"] == 80
    assert res["rows"] == []           # omitted without --rows


def test_verify_theorem_rows_flag(capsys):
    code, out, _ = run_cli(capsys, "verify-theorem", "--nmax", "3", "--rows")
    res = json.loads(out)["result"]
    assert code == 0 and len(res["rows"]) == res["summary"]["instances"]


def test_verify_theorem_paths_cycles(capsys):
    code, out, _ = run_cli(capsys, "verify-theorem", "--paths-cycles", "6",
                           "--tmin", "3", "--tmax", "4")
    assert code == 0
    assert json.loads(out)["result"]["disagreements"] == 0


def test_reports_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "packing", "--graph", "cycle:12", "--t", "3")
    _, out2, _ = run_cli(capsys, "packing", "--graph", "cycle:12", "--t", "3")
    assert out1 == out2


def test_out_file_matches_stdout(capsys, tmp_path):
    _, out1, _ = run_cli(capsys, "lp", "--graph", "cycle:6", "--t", "3")
    target = tmp_path / "report.json"
    code = main(["lp", "--graph", "cycle:6", "--t", "3", "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    assert target.read_text() == out1


def test_pretty_same_payload(capsys):
    _, out1, _ = run_cli(capsys, "konig", "--graph", "cycle:6", "--t", "3")
    _, out2, _ = run_cli(capsys, "konig", "--graph", "cycle:6", "--t", "3", "--pretty")
    assert json.loads(out1) == json.loads(out2)
    assert out1 != out2


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "gens", "--graph", "nonsense:9", "--t", "3")
    assert code == 2
    code, _, err = run_cli(capsys, "gens", "--graph", "path:5", "--t", "9")
    assert code == 2 and "error" in err


def test_resource_guard_exit(capsys, monkeypatch):
    monkeypatch.setenv("COVERPACK_SCAN_CAP", "10")
    code, _, err = run_cli(capsys, "gap-search", "--graph", "cycle:6", "--t", "3")
    assert code == 3 and "resource guard" in err


def test_gen_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("COVERPACK_GEN_CAP", "5")
    code, _, err = run_cli(capsys, "simis", "--graph", "cycle:9", "--t", "3")
    assert code == 3


def test_emit_report_validates():
    import jsonschema
    with pytest.raises(jsonschema.ValidationError):
        emit_report({"command": "gens", "config": {}, "result": {}},
                    out="/dev/null")
    with pytest.raises(jsonschema.ValidationError):
        emit_report({"command": "bogus", "config": {}, "result": {}},
                    out="/dev/null")


def test_report_round_trip(capsys):
    # parse -> re-emit is byte identical for the compact encoding
    _, out, _ = run_cli(capsys, "simis", "--graph", "cycle:6", "--t", "3")
    payload = json.loads(out)
    assert json.dumps(payload, separators=(",", ":")) + "\n" == out


def test_parser_subcommand_required(capsys):
    assert main([]) == 2


def test_schema_shape():
    assert set(REPORT_SCHEMA["required"]) == {"command", "config", "result"}
    parser = build_parser()
    assert parser.prog == "coverpack"
