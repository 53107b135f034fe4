import io
import json
import subprocess
import sys

import pytest

from lexnorm.cli import EXIT_CONFIG, EXIT_LOAD, EXIT_OK, Config, main, run


def config(paths, tmp_path, **kw):
    kw.setdefault("input_path", paths["messages.txt"])
    kw.setdefault("output_path", str(tmp_path / "out.tsv"))
    return Config(paths["words.txt"], paths["words.utf-8.txt"], paths["big.txt"], paths["w5_.txt"], **kw)


def run_quiet(cfg):
    stats = io.StringIO()
    code = run(cfg, stats)
    return code, json.loads(stats.getvalue()) if stats.getvalue() else None


def test_tsv_output(fixture_paths, tmp_path):
    code, summary = run_quiet(config(fixture_paths, tmp_path))
    assert code == EXIT_OK
    text = (tmp_path / "out.tsv").read_text(encoding="utf-8")
    blocks = text.split("\n\n")
    assert len(blocks) - 1 == summary["messages"] == 20
    assert blocks[0].splitlines() == [
        "see\tIV\tsee\tIdentity",
        "you\tIV\tyou\tIdentity",
        "thre\tOOV\tthere\tContextSelection",
        "tonight\tIV\ttonight\tIdentity",
    ]
    records = [line.split("\t") for line in text.splitlines() if line]
    assert all(len(r) == 4 for r in records)
    assert summary["tokens"] == len(records) == sum(summary["tags"].values())
    assert sum(summary["methods"].values()) == summary["tokens"]


def test_jsonl_output(fixture_paths, tmp_path):
    out = tmp_path / "out.jsonl"
    code, summary = run_quiet(config(fixture_paths, tmp_path, output_path=str(out), format="jsonl"))
    assert code == EXIT_OK
    rows = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert len(rows) == summary["tokens"]
    assert rows[2] == {"message": 0, "token": 2, "original": "thre", "tag": "OOV",
                       "normalised": "there", "method": "ContextSelection"}
    assert rows[-1]["message"] == 19


def test_byte_identical_across_runs_and_jobs(fixture_paths, tmp_path):
    outputs = []
    for i, jobs in enumerate([1, 1, 4, 3]):
        out = tmp_path / f"out{i}.tsv"
        assert run_quiet(config(fixture_paths, tmp_path, output_path=str(out), jobs=jobs))[0] == EXIT_OK
        outputs.append(out.read_bytes())
    assert len(set(outputs)) == 1


def test_backends_give_identical_output(fixture_paths, tmp_path):
    from lexnorm.distance import available_backends
    outputs = set()
    for name in available_backends():
        out = tmp_path / f"{name}.tsv"
        run_quiet(config(fixture_paths, tmp_path, output_path=str(out), backend=name))
        outputs.add(out.read_bytes())
    assert len(outputs) == 1


def test_empty_input(fixture_paths, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("", encoding="utf-8")
    code, summary = run_quiet(config(fixture_paths, tmp_path, input_path=str(empty)))
    assert code == EXIT_OK
    assert (tmp_path / "out.tsv").read_text() == ""
    assert summary["tokens"] == 0 and summary["messages"] == 0


def test_missing_corpus_is_load_error(fixture_paths, tmp_path, capsys):
    paths = dict(fixture_paths, **{"w5_.txt": str(tmp_path / "absent_w5.txt")})
    code, _ = run_quiet(config(paths, tmp_path))
    assert code == EXIT_LOAD
    assert "absent_w5.txt" in capsys.readouterr().err


def test_duplicate_paths_are_config_error(fixture_paths, tmp_path):
    paths = dict(fixture_paths, **{"words.utf-8.txt": fixture_paths["words.txt"]})
    assert run_quiet(config(paths, tmp_path))[0] == EXIT_CONFIG


def test_bad_max_dist(fixture_paths, tmp_path):
    assert run_quiet(config(fixture_paths, tmp_path, max_dist=0))[0] == EXIT_CONFIG


def test_missing_flag_prints_usage(fixture_paths, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--lexicon", fixture_paths["words.txt"], "--dict", fixture_paths["words.utf-8.txt"],
              "--corpus", fixture_paths["big.txt"]])
    assert exc.value.code == EXIT_CONFIG
    err = capsys.readouterr().err
    assert "usage:" in err and "--fivegrams" in err


def test_max_dist_flag_validated(fixture_paths, capsys):
    code = main(["--lexicon", fixture_paths["words.txt"], "--dict", fixture_paths["words.utf-8.txt"],
                 "--corpus", fixture_paths["big.txt"], "--fivegrams", fixture_paths["w5_.txt"],
                 "--max-dist", "0"])
    assert code == EXIT_CONFIG
    assert "usage:" in capsys.readouterr().err


def test_module_entry_point_stdin_stdout(fixture_paths):
    proc = subprocess.run(
        [sys.executable, "-m", "lexnorm", "--lexicon", fixture_paths["words.txt"],
         "--dict", fixture_paths["words.utf-8.txt"], "--corpus", fixture_paths["big.txt"],
         "--fivegrams", fixture_paths["w5_.txt"]],
        input="helo @bob\n", capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "@bob\tNO\t@bob\tIdentity"
    assert json.loads(proc.stderr[proc.stderr.index("{"):])["tags"]["NO"] == 1
