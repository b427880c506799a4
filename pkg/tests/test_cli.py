import json

import pytest

from sporadica.checks import REPORT_FIELDS, Config, check_ids, load_config, parse_config, run_all
from sporadica.cli import main
from sporadica.errors import ConfigError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_group_order(capsys):
    assert run(capsys, "group", "order", "PSL", "2", "7") == (0, "168\n", "")
    code, out, _ = run(capsys, "--json", "group", "order", "PSL", "3", "4")
    assert json.loads(out)["order"] == "20160"


def test_unsupported_family_exit_code(capsys):
    code, out, err = run(capsys, "group", "order", "E8", "2")
    assert code != 0 and "E8" in err


def test_field(capsys):
    code, out, _ = run(capsys, "field", "2", "2")
    assert code == 0 and "F_4" in out and "fail" not in out
    code, _, err = run(capsys, "field", "4", "1")
    assert code != 0 and "prime" in err


def test_perm_and_reps(capsys, tmp_path, m12_chain):
    from sporadica.permgrp import write_generators
    M11 = m12_chain.restricted(1)
    path = tmp_path / "m11.gens"
    write_generators(path, M11.degree, M11.generators)
    assert run(capsys, "perm", "transitivity", str(path))[1] == "k=4 sharp, order 7920\n"
    assert run(capsys, "perm", "order", str(path))[1] == "7920\n"
    s4 = tmp_path / "s4.gens"
    s4.write_text("degree 4\n(1 2 3 4)\n(1 2)\n")
    code, out, _ = run(capsys, "reps", "table", str(s4))
    assert code == 0 and out.count("X.") == 5
    code, out, _ = run(capsys, "--json", "reps", "table", str(s4))
    assert len(json.loads(out)["characters"]) == 5


def test_perm_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.gens"
    bad.write_text("degree 3\n(1 2\n")
    code, _, err = run(capsys, "perm", "order", str(bad))
    assert code != 0 and err.startswith("error:")


def test_mathieu_export(capsys, tmp_path):
    out_path = tmp_path / "m11.gens"
    code, _, err = run(capsys, "mathieu", "export", "m11", "-o", str(out_path))
    assert code == 0 and "7920" in err
    assert out_path.read_text().startswith("degree 11")


def test_moonshine(capsys):
    code, out, _ = run(capsys, "moonshine", "check")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2 and all(line.startswith("pass") for line in lines)
    code, out, _ = run(capsys, "--json", "moonshine", "j", "--terms", "2")
    assert json.loads(out) == {"-1": 1, "0": 744, "1": 196884, "2": 21493760}
    code, out, _ = run(capsys, "moonshine", "ramanujan")
    assert out.startswith("262537412640768743.99999999999925")


def test_catalog_dump(capsys):
    code, out, _ = run(capsys, "catalog", "dump", "--format", "json")
    data = json.loads(out)
    assert len(data) == 26 and {d["symbol"] for d in data if d["flagged"]} == {"J4"}
    code, out, _ = run(capsys, "catalog", "dump")
    assert len(out.strip().splitlines()) == 26


def test_codes_golay(capsys):
    code, out, _ = run(capsys, "--json", "codes", "golay")
    data = json.loads(out)
    assert data["octads"] == 759 and data["steiner"]


# -- config ------------------------------------------------------------------------------

def test_parse_config():
    cfg = parse_config("# comment\nbudget = 1_000\n\nseed=7  # trailing\n")
    assert cfg.budget == 1000 and cfg.seed == 7 and cfg.terms == Config().terms


@pytest.mark.parametrize("text,line", [("budget = 1\nbogus\n", 2), ("\n\ncolour = red\n", 3),
                                       ("seed = x\n", 1), ("terms = -4\n", 1)])
def test_config_errors_carry_line(text, line):
    with pytest.raises(ConfigError) as exc:
        parse_config(text)
    assert exc.value.line == line and str(exc.value).startswith(f"line {line}:")


def test_budget_precedence(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("budget = 5\n")
    assert load_config(path, env={}).budget == 5
    assert load_config(path, env={"SPORADICA_BUDGET": "9"}).budget == 9
    with pytest.raises(ConfigError):
        load_config(None, env={"SPORADICA_BUDGET": "lots"})


def test_malformed_config_from_cli(capsys, tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("budget = 0\nnonsense\n")
    code, _, err = run(capsys, "run-all", "--config", str(path))
    assert code != 0 and "line 2" in err


# -- report ----------------------------------------------------------------------------------

def test_check_registry():
    ids = check_ids()
    assert len(ids) >= 40 and len(set(ids)) == len(ids)


def test_report_schema_and_budget_zero():
    results = run_all(Config(budget=0), only=["mathieu.m24", "gfq.f4", "catalog.count"])
    for r in results:
        assert set(r.to_dict()) == set(REPORT_FIELDS)
        assert r.paper_anchor
    by_id = {r.check_id: r.status for r in results}
    assert by_id["mathieu.m24_order"] == "unknown"
    assert by_id["mathieu.m24_transitivity"] == "unknown"
    assert by_id["mathieu.m24_chain"] == "pass"
    assert by_id["gfq.f4_table"] == "pass"
