"""Tests for the driftbench command line."""

import json
from pathlib import Path
from unittest.mock import MagicMock

import pytest

from app.cli import main as cli
from app.core.exceptions import EvaluationError


def test_stats_prints_table(micro_dir: Path, capsys) -> None:
    """stats prints the class balance and exits 0."""
    assert cli.main(["stats", "--manifest", str(micro_dir / "data.yaml")]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].split() == ["a", "0", "2", "0", "2"]


def test_eval_then_compare(micro_dir: Path, tmp_path: Path, capsys) -> None:
    """eval writes metrics.json; compare reads two of them."""
    for name, conf in (("Low", "0.05"), ("High", "0.5")):
        code = cli.main([
            "eval", "--manifest", str(micro_dir / "data.yaml"), "--split", "val",
            "--preds", str(micro_dir / "preds"), "--conf", conf, "--name", name,
            "--out", str(tmp_path / name),
        ])
        assert code == 0
    assert json.loads((tmp_path / "Low" / "metrics.json").read_text(encoding="utf-8"))["name"] == "Low"
    capsys.readouterr()

    code = cli.main([
        "compare", str(tmp_path / "Low" / "metrics.json"), str(tmp_path / "High" / "metrics.json"),
        "--labels", "Low,High",
    ])
    assert code == 0
    assert capsys.readouterr().out.splitlines()[0].split() == ["Metric", "Low", "High", "Delta"]


def test_validation_error_exit_2(tmp_path: Path, capsys) -> None:
    """Missing inputs are validation errors: exit 2 and a message on stderr."""
    code = cli.main(["split", "--source", str(tmp_path / "missing"), "--out", str(tmp_path / "out")])
    assert code == 2
    assert "driftbench split:" in capsys.readouterr().err


def test_bad_ratios_exit_2(tmp_path: Path) -> None:
    """Ratios that do not sum to one exit 2 before anything is written."""
    (tmp_path / "flat" / "images").mkdir(parents=True)
    code = cli.main([
        "split", "--source", str(tmp_path / "flat"), "--ratios", "0.5,0.5,0.5", "--out", str(tmp_path / "out"),
    ])
    assert code == 2
    assert not (tmp_path / "out").exists()


def test_compare_pdf_without_out(write_report) -> None:
    """--pdf without --out is a usage error."""
    a = write_report("a.json", "A", (0.5,) * 5)
    assert cli.main(["compare", str(a), str(a), "--pdf"]) == 2


def test_argparse_usage_error() -> None:
    """Unknown subcommands exit through argparse with status 2."""
    with pytest.raises(SystemExit) as exc_info:
        cli.main(["transmogrify"])
    assert exc_info.value.code == 2


def test_runtime_error_exit_1(monkeypatch, micro_dir: Path, capsys) -> None:
    """Failures that are not validation errors exit 1."""
    service = MagicMock()
    service.return_value.stats.side_effect = EvaluationError("no evaluable classes")
    monkeypatch.setattr(cli, "StatsService", service)
    assert cli.main(["stats", "--manifest", str(micro_dir / "data.yaml")]) == 1
    assert "no evaluable classes" in capsys.readouterr().err


def test_os_error_exit_1(monkeypatch, micro_dir: Path) -> None:
    """I/O failures exit 1."""
    service = MagicMock()
    service.return_value.stats.side_effect = PermissionError("denied")
    monkeypatch.setattr(cli, "StatsService", service)
    assert cli.main(["stats", "--manifest", str(micro_dir / "data.yaml")]) == 1


def test_invalid_utf8_predictions_exit_2(micro_dir: Path, tmp_path: Path, capsys) -> None:
    """A prediction file with undecodable bytes exits 2 with the file named, not a traceback."""
    preds = tmp_path / "preds"
    preds.mkdir()
    (preds / "img1.txt").write_bytes(b"0 0.5 0.5 0.2 0.1\xff\n")
    code = cli.main([
        "eval", "--manifest", str(micro_dir / "data.yaml"), "--split", "val",
        "--preds", str(preds), "--out", str(tmp_path / "out"),
    ])
    assert code == 2
    assert "img1.txt:1" in capsys.readouterr().err
    assert not (tmp_path / "out").exists()
