import json
import subprocess
import sys

import pytest

from g3tilt import cli, formulas
from g3tilt.dsl import parse_formula
from g3tilt.tables import TILTING
from g3tilt.verify import FAIL, PASS, CaseResult, Report, compact, run, run_suite
from g3tilt.blocks import f


def _clear_caches():
    for fn in (formulas._tilting, formulas._projective, formulas._jh):
        fn.cache_clear()


def test_small_run_is_clean():
    rep = run("all", kmax=1, nmax=6)
    assert rep.ok and rep.cases
    assert set(rep.summary()) >= {"translation", "soergel", "bgg", "lengths", "jantzen"}
    d = rep.as_dict()
    assert set(d) == {"ok", "summary", "cases"}
    assert all(c["status"] in ("pass", "fail", "skipped-unknown") for c in d["cases"])


def test_corrupted_row_is_caught(monkeypatch):
    row = next(r for r in TILTING if r.thm == "4.1(1)")
    _clear_caches()
    monkeypatch.setitem(formulas._FORMULAS, row, parse_formula("M_{n}^{[e,s]}"))
    try:
        rep = run_suite("translation", 2, 8)
        bad = rep.failed
        assert bad and all(c.case == "4.1(1)" for c in bad)
        assert bad[0].as_dict()["diff"]
    finally:
        monkeypatch.undo()
        _clear_caches()
    assert run_suite("translation", 1, 6).ok


def test_compact_symbol_text():
    assert compact(f(0, 1)) == "[-3/2|0,-3/2,3/2]"


def _main(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = _main(capsys, "classify", "[-3/2|0,-3/2,3/2]")
    assert code == 0 and json.loads(out) == {"block": 0, "n": 1, "w": ["e", "2"]}
    code, out, _ = _main(capsys, "classify", "[-3/2|-1/2,-2,5/2]")
    assert code == 0 and json.loads(out)["block"] == "typical"


def test_bad_input_exits_two(capsys):
    assert _main(capsys, "classify", "[1|2")[0] == 2
    assert _main(capsys, "tilting", "1", "0", "zz")[0] == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["tilting", "-1", "0", "e"])
    assert e.value.code == 2


def test_tilting_json_shape(capsys):
    code, out, _ = _main(capsys, "tilting", "1", "0", "0w0")
    d = json.loads(out)
    assert code == 0 and d["block"] == 1 and d["label"] == {"n": 0, "w": "0w0"}
    assert len(d["flag"]) == 24
    for e in d["flag"]:
        assert set(e) == {"symbol", "mult", "label"} and len(e["symbol"]) == 4


def test_unknown_case_exits_zero(capsys):
    code, out, _ = _main(capsys, "tilting", "0", "2", "0")
    d = json.loads(out)
    assert code == 0 and d["unknown"] is True and "flag" not in d


def test_csv_and_tex(capsys):
    code, out, _ = _main(capsys, "projective", "1", "0", "w0", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("table,block,n,w,d2") and len(lines) == 6
    code, out, _ = _main(capsys, "jh", "1", "2", "0w0", "--format", "tex")
    assert out.startswith("\\begin{tabular}") and out.rstrip().endswith("\\end{tabular}")


def test_emit_is_deterministic(capsys):
    first = _main(capsys, "emit", "--block", "1", "--nmax", "4")[1]
    second = _main(capsys, "emit", "--block", "1", "--nmax", "4")[1]
    assert first == second
    d = json.loads(first)
    assert set(d) == {"block", "tilting", "projective", "jh"}


def test_verify_exit_codes(capsys, monkeypatch, tmp_path):
    out = tmp_path / "r.json"
    code, text, _ = _main(capsys, "verify", "--suite", "table2", "--json", str(out))
    assert code == 0 and "table2" in text and json.loads(out.read_text())["ok"] is True

    def failing(*_):
        return Report([CaseResult("x", "case", PASS), CaseResult("x", "case", FAIL, k=1)])
    monkeypatch.setattr(cli, "run", failing)
    code, text, _ = _main(capsys, "verify")
    assert code == 1 and "FAIL" in text


def test_console_script_entry():
    r = subprocess.run([sys.executable, "-m", "g3tilt", "classify", "[-1/2|-1/2,-1/2,1]"],
                       capture_output=True, text=True, check=True)
    assert json.loads(r.stdout)["block"] == 0
