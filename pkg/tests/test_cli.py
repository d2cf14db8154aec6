import json
import subprocess
import sys

import pytest

from stochmatch import load_edge_list
from stochmatch.cli import CSV_HEADER, main


def test_gen_er(tmp_path, capsys):
    out = tmp_path / "er.txt"
    assert main(["gen", "er", "--n", "100", "--q", "0.1", "--seed", "7",
                 "--output", str(out)]) == 0
    first = out.read_text().splitlines()[0]
    assert first.startswith("100 ")
    g = load_edge_list(out)
    assert g.n == 100


def test_gen_complete(tmp_path):
    out = tmp_path / "k20.txt"
    assert main(["gen", "complete", "--n", "20", "--output", str(out)]) == 0
    assert load_edge_list(out).m == 190


def test_gen_hard_with_sidecar(tmp_path):
    out = tmp_path / "hard.txt"
    assert main(["gen", "hard", "--N", "50", "--p", "0.5", "--seed", "3",
                 "--output", str(out)]) == 0
    g = load_edge_list(out)
    meta = json.loads((tmp_path / "hard.txt.meta.json").read_text())
    assert meta["N"] == 50 and meta["blocks"]["L1"] == [0, 50]
    assert g.n == meta["n"] and g.m == meta["m"]


def test_sparsify_roundtrip_and_determinism(tmp_path, capsys):
    src = tmp_path / "g.txt"
    main(["gen", "er", "--n", "40", "--q", "0.3", "--seed", "1",
          "--output", str(src)])
    out1 = tmp_path / "h1.txt"
    out2 = tmp_path / "h2.txt"
    for out in (out1, out2):
        code = main(["sparsify", "--input", str(src), "--p", "0.05",
                     "--output", str(out)])
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    stats = json.loads((tmp_path / "h1.txt.stats.json").read_text())
    assert stats["branch"] == "small-p"
    assert stats["max_degree"] <= 20 + stats["rounds"]


def test_estimate_json(tmp_path, capsys):
    src = tmp_path / "g.txt"
    main(["gen", "er", "--n", "20", "--q", "0.4", "--seed", "2",
          "--output", str(src)])
    capsys.readouterr()
    assert main(["estimate", "--input", str(src), "--p", "0.5",
                 "--trials", "200", "--seed", "5"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report) >= {"mean", "stderr", "trials", "ci95", "seed", "p"}


def test_experiment_csv_schema_and_determinism(tmp_path, capsys):
    src = tmp_path / "g.txt"
    main(["gen", "er", "--n", "30", "--q", "0.3", "--seed", "4",
          "--output", str(src)])
    capsys.readouterr()
    args = ["experiment", "--input", str(src), "--p", "0.3", "0.7",
            "--trials", "150", "--seed", "9", "--format", "csv"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert first.splitlines()[0] == CSV_HEADER
    assert main(args) == 0
    assert capsys.readouterr().out == first
    rows = first.strip().splitlines()[1:]
    assert len(rows) == 2
    assert all(row.split(",")[-1] in ("PASS", "FAIL") for row in rows)


def test_experiment_empty_graph_row_is_na(tmp_path, capsys):
    src = tmp_path / "empty.txt"
    src.write_text("5 0\n")
    capsys.readouterr()
    assert main(["experiment", "--input", str(src), "--p", "0.5",
                 "--trials", "10", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].split(",")[-1] == "NA"


def test_missing_input_is_usage_error(tmp_path, capsys):
    code = main(["estimate", "--input", str(tmp_path / "nope.txt"), "--p", "0.5"])
    assert code == 2


def test_unknown_suite_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_verify_quick_bounds(capsys):
    assert main(["verify", "bounds", "--quick"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stochmatch.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "sparsify" in proc.stdout
