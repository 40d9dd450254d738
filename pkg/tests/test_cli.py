import json
import subprocess
import sys
import time

import pytest

from gelfand_wreath import cli
from gelfand_wreath import group as grp


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rsk_signed_window(capsys):
    code, out, _ = run(capsys, "rsk", "-r", "2", "[-1,2]")
    assert code == 0
    assert "P_0 = [2]" in out and "P_1 = [1]" in out
    assert "P = Q: yes" in out
    code, out, _ = run(capsys, "rsk", "-r", "2", "[-1,2]", "--format", "json")
    data = json.loads(out)
    assert data["P"] == data["Q"] == [[[2]], [[1]]]
    assert data["shape"] == [[1], [1]]


def test_rsk_single_row(capsys):
    code, out, _ = run(capsys, "rsk", "-r", "1", "[1,2,3]", "--format", "json")
    assert code == 0
    assert json.loads(out)["P"] == [[[1, 2, 3]]]


def test_rsk_pair_window(capsys):
    code, out, _ = run(capsys, "rsk", "-r", "3", "[(2,1),(1,1),(3,2)]", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["P"] == [[], [[1], [2]], [[3]]]
    assert data["absolute_involution"] is True


@pytest.mark.parametrize("argv", [["rsk", "-r", "2", "[1,1]"], ["rsk", "-r", "3", "[-1,2]"], ["bogus"], ["classes", "-r", "2"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("error:") or "usage" in err


def test_classes_table(capsys):
    code, out, _ = run(capsys, "classes", "-r", "2", "-n", "6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    sizes = {(tuple(c["class"]["f"]), tuple(c["class"]["p"])): c["size"] for c in data["classes"]}
    assert sizes[((1, 1), (1, 1))] == 180
    assert data["total"] == 1384


def test_classes_sizes_sum_and_zero_rank(capsys):
    _, out, _ = run(capsys, "classes", "-r", "2", "-n", "4", "--format", "json")
    assert json.loads(out)["total"] == sum(1 for _ in grp.enumerate_absolute_involutions(2, 4))
    _, out, _ = run(capsys, "classes", "-r", "3", "-n", "0", "--format", "json")
    data = json.loads(out)
    assert len(data["classes"]) == 1 and data["classes"][0]["size"] == 1
    code, out, _ = run(capsys, "classes", "-r", "2", "-n", "3")
    assert code == 0 and out.splitlines()[0].split() == ["class", "size", "representative", "shapes"]


def test_decompose_single_class(capsys):
    code, out, _ = run(capsys, "decompose", "-r", "2", "-n", "6", "--class", "f=1,1;p=1,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verified"] is True
    assert len(data["summands"]) == 4
    assert data["missing"] == [] and data["unexpected"] == []


def test_decompose_all_and_variants(capsys):
    code, out, _ = run(capsys, "decompose", "-r", "3", "-n", "2", "--all", "--format", "json")
    assert code == 0
    assert all(rep["verified"] for rep in json.loads(out))
    # phi is a representation but need not follow the column rule
    code, _, _ = run(capsys, "decompose", "-r", "2", "-n", "2", "--all", "--rep", "phi")
    assert code == 2
    code, _, _ = run(capsys, "decompose", "-r", "3", "-n", "2", "--all", "--rep", "phi-literal")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["decompose", "-r", "2", "-n", "2"],
        ["decompose", "-r", "2", "-n", "2", "--all", "--class", "f=2,0;p=0,0"],
        ["decompose", "-r", "2", "-n", "2", "--class", "f=1,0;p=0,0"],
    ],
)
def test_decompose_usage(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_limit_exit_code(capsys):
    code, _, err = run(capsys, "decompose", "-r", "2", "-n", "6", "--all", "--limit", "100")
    assert code == 3 and "limit" in err
    code, _, _ = run(capsys, "verify", "-r", "2", "-n", "3", "--suite", "homomorphism", "--limit", "10")
    assert code == 3


def test_chartable(capsys):
    code, out, _ = run(capsys, "chartable", "-r", "2", "-n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["classes"]) == len(data["characters"]) == 5
    identity = [i for i, c in enumerate(data["classes"]) if c["cycles"] == [[1, 0], [1, 0]]][0]
    assert sorted(row["values"][identity][0] for row in data["characters"]) == [1, 1, 1, 1, 2]
    code, out, _ = run(capsys, "chartable", "-r", "2", "-n", "2")
    lines = out.splitlines()
    assert len(lines) == 7


def test_cache_is_byte_identical(capsys, tmp_path, monkeypatch):
    argv = ["chartable", "-r", "3", "-n", "2", "--format", "json", "--cache-dir", str(tmp_path)]
    _, miss, _ = run(capsys, *argv)
    assert (tmp_path / "chartable-r3-n2.json").exists()
    _, hit, _ = run(capsys, *argv)
    assert hit == miss
    _, plain, _ = run(capsys, *argv[:-2])
    assert plain == miss
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path / "env"))
    run(capsys, "decompose", "-r", "2", "-n", "3", "--all")
    assert (tmp_path / "env" / "chartable-r2-n3.json").exists()


def test_corrupt_cache_is_recomputed(capsys, tmp_path):
    (tmp_path / "chartable-r2-n2.json").write_text("{not json")
    code, out, _ = run(capsys, "chartable", "-r", "2", "-n", "2", "--format", "json", "--cache-dir", str(tmp_path))
    assert code == 0 and len(json.loads(out)["characters"]) == 5


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "-r", "2", "-n", "3", "--suite", "gelfand")
    assert code == 0 and out.startswith("gelfand: PASS")
    start = time.perf_counter()
    code, out, _ = run(capsys, "verify", "-r", "2", "-n", "2", "--suite", "all")
    assert time.perf_counter() - start < 5
    assert code == 0
    assert [line.split(":")[0] for line in out.splitlines()] == list(cli.SUITES)
    assert all("PASS" in line for line in out.splitlines())


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "classes", "-r", "3", "-n", "3", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gelfand_wreath", "rsk", "-r", "2", "[2,1]", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["shape"] == [[1, 1], []]
