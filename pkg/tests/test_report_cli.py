import json
import subprocess
import sys

import pytest

from twistorcalc import __version__
from twistorcalc.cli import main
from twistorcalc.report import SELECTORS, run_suite


def test_table_suite_has_27_passing_entries():
    rep = run_suite("table")
    assert rep.summary == {"pass": 27, "fail": 0, "imposed-by-citation": 0, "total": 27}
    assert rep.results[0].id == "table-row-0.a" and rep.results[-1].id == "table-row-8.d"


def test_prop_1_1_suite():
    rep = run_suite("prop-1.1")
    assert rep.ok
    ids = {r.id for r in rep.results}
    assert {"prop-1.1.u^4", "prop-1.1.u^3*v", "prop-1.1.u^2*v^2", "prop-1.1.e^4", "prop-1.1.f^4"} <= ids


def test_thm_2_3_suite():
    rep = run_suite("thm-2.3")
    poly = next(r for r in rep.results if r.id == "thm-2.3.polynomial")
    assert poly.status == "pass" and poly.computed == "14/45*k^6 + 4/9*k^4 + 11/45*k^2"


def test_every_selector_runs_clean():
    for name in SELECTORS:
        assert run_suite(name).ok, name


def test_imposed_items_are_distinct():
    rep = run_suite("all")
    imposed = sorted(r.id for r in rep.results if r.status == "imposed-by-citation")
    assert imposed == ["prop-1.2.P3", "prop-2.2.c5"]
    assert rep.tool_version == __version__


def test_lemma_discrepancy_is_flagged():
    rep = run_suite("prop-3.2")
    first = next(r for r in rep.results if r.id == "lemma-3.3.first")
    assert first.status == "pass" and "prefactor" in first.note


def test_unknown_selector():
    with pytest.raises(ValueError):
        run_suite("prop-9.9")


def test_json_is_deterministic(capsys):
    assert main(["verify", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--format", "json"]) == 0
    assert capsys.readouterr().out == first
    data = json.loads(first)
    ids = [r["id"] for r in data["results"]]
    assert len(ids) == len(set(ids))
    for r in data["results"]:
        assert {"id", "status", "expected", "computed", "paper_anchor"} <= set(r)


@pytest.mark.parametrize("argv, out", [
    (["verlinde", "--genus", "3", "--level", "2"], "28"),
    (["verlinde", "--genus", "3", "--level", "9"], "168273"),
    (["verlinde", "--genus", "2", "--level", "2"], "6"),
    (["dims", "--rank", "4", "--weight", "1,0,0,0"], "8"),
    (["dims", "--rank", "4", "--weight", "3,1,0,0"], "567"),
    (["dims", "--rank", "4", "--weight", "0,0,0,0"], "1"),
])
def test_cli_examples(argv, out, capsys):
    assert main(argv) == 0
    assert capsys.readouterr().out.split()[0] == out


def test_cli_cross_check(capsys):
    assert main(["verlinde", "--genus", "3", "--level", "5", "--cross-check"]) == 0
    assert "pass" in capsys.readouterr().out


def test_cli_float_method(capsys):
    assert main(["verlinde", "--genus", "4", "--level", "6", "--method", "float"]) == 0
    assert "residual" in capsys.readouterr().out


@pytest.mark.parametrize("argv, code", [
    (["dims", "--rank", "4", "--weight", "0,1,0,0"], 2),
    (["dims", "--rank", "4", "--weight", "a,b"], 2),
    (["verlinde", "--genus", "1", "--level", "2"], 2),
    (["verlinde", "--genus", "4", "--level", "2", "--cross-check"], 2),
    (["verlinde", "--genus", "9", "--level", "2", "--method", "float"], 1),
    (["table", "--kmax", "-1"], 2),
])
def test_cli_error_codes(argv, code, capsys):
    assert main(argv) == code


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["verify", "no-such-suite"])
    assert info.value.code == 2


def test_table_extends_past_reference(capsys):
    assert main(["table", "--kmax", "10", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert rows[9] == {"k": 9, "a": 1591876, "b": 4489485, "d": 315580}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twistorcalc", "dims", "--rank", "4", "--weight", "2,0,0,0"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "35"
