import io
import json
import subprocess
import sys

import pytest

from chowcalc.cli import cache_dir, run


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("CHOWCALC_CACHE", str(tmp_path / "cache"))
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")
    return tmp_path / "cache"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_ring_text():
    code, out, _ = call("ring", "--group", "gl", "--n", "2", "--q", "3", "--max-degree", "3", "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# ring:gl:n=2:q=3:d=3:invert="
    rows = [l.split(None, 1) for l in lines if l[:1].isdigit()]
    assert rows == [["0", "Z"], ["1", "Z/2"], ["2", "Z/2 + Z/8"], ["3", "Z/2 + Z/2"]]


def test_ring_localized():
    code, out, _ = call("ring", "--group", "sp", "--m", "2", "--q", "3", "--invert", "2,3", "--max-degree", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["degree,factors", "0,0", "1,", "2,", "3,", "4,5"]


def test_sylow_model_json():
    code, out, _ = call("sylow-model", "--n", "6", "--q", "2", "--l", "3", "--max-degree", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["descriptor"] == "sylow-model:n=6:q=2:l=3:d=4"
    assert doc["cutoff"] == 4
    assert [c["degree"] for c in doc["components"]] == [0, 1, 2, 3, 4]
    assert doc["components"][1]["factors"] == [3, 3]
    assert doc["metadata"]["tool"] == "chowcalc"
    assert doc["metadata"]["timestamp"] == "1970-01-01T00:00:00Z"


def test_levi_and_wreath():
    code, out, _ = call("levi", "--blocks", "1,1", "--q", "3", "--max-degree", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,0", "1,2;0", "2,2;2;8"]
    code, out, _ = call("wreath", "--l", "2", "--b", "1", "--height", "1", "--max-degree", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["0,0", "1,2;2", "2,2;2;4", "3,2;2;2;2"]


def test_sylow_shape():
    code, out, _ = call("sylow-shape", "--n", "6", "--q", "2", "--l", "3")
    assert code == 0
    assert "(Z/3 wr Z/3)" in out
    assert "order exponent 4" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["ring", "--group", "gl", "--q", "3"],
        ["ring", "--group", "xx", "--n", "2", "--q", "3"],
        ["ring", "--group", "gl", "--n", "2", "--q", "3", "--invert", "a,b"],
        ["ring", "--group", "gl", "--n", "2", "--q", "3", "--max-degree", "-1"],
        ["verify", "nosuch"],
        [],
    ],
)
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["ring", "--group", "gl", "--n", "2", "--q", "6"],
        ["ring", "--group", "gl", "--n", "2", "--q", "3", "--invert", "3"],
        ["sylow-shape", "--n", "4", "--q", "3", "--l", "3"],
        ["sylow-model", "--n", "4", "--q", "3", "--l", "2"],
    ],
)
def test_precondition_errors(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert out == ""
    assert "error" in err


def test_verify_suite():
    code, out, _ = call("verify", "embedding")
    assert code == 0
    lines = out.splitlines()
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert lines[-1] == "embedding: 5 passed, 0 failed"


def test_cache_hit_is_identical(isolated_cache):
    argv = ["ring", "--group", "sl", "--n", "3", "--q", "2", "--max-degree", "5", "--format", "json"]
    cold = call(*argv)[1]
    files = list(isolated_cache.glob("*.json"))
    assert len(files) == 1
    assert call(*argv)[1] == cold
    assert call(*argv, "--no-cache")[1] == cold
    # a corrupt entry is recomputed, not trusted
    files[0].write_text("{not json")
    assert call(*argv)[1] == cold


def test_no_cache_writes_nothing(isolated_cache):
    call("wreath", "--l", "3", "--max-degree", "3", "--no-cache")
    assert not isolated_cache.exists() or not any(isolated_cache.iterdir())


def test_cache_dir_default(monkeypatch, tmp_path):
    monkeypatch.delenv("CHOWCALC_CACHE")
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path))
    assert cache_dir() == tmp_path / "chowcalc"


def test_text_output_is_timestamp_free(monkeypatch):
    argv = ["ring", "--group", "gl", "--n", "3", "--q", "4", "--max-degree", "4", "--no-cache"]
    a = call(*argv)[1]
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "99999")
    assert call(*argv)[1] == a


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "chowcalc", "sylow-shape", "--n", "4", "--q", "2", "--l", "3"],
        capture_output=True,
        text=True,
        env={"CHOWCALC_CACHE": str(tmp_path), "PATH": ""},
    )
    assert proc.returncode == 0
    assert "(Z/3) x (Z/3)" in proc.stdout
