"""Golden-transcript replay for every CLI subcommand, plus exit-code checks.

Transcript format (tests/golden/*.txt): blocks separated by blank lines,
each holding a ``$ command`` line, expected stdout, expected stderr lines
prefixed ``! ``, and a final ``exit <code>`` line.  ``{data}`` expands to
the tests/data directory.  Byte-identical comparison, default seeds.
"""

import pathlib
import shlex

import pytest

from freeassoc.cli import run

HERE = pathlib.Path(__file__).parent
GOLDEN = HERE / "golden"
DATA = str(HERE / "data")


def load_transcripts():
    cases = []
    for path in sorted(GOLDEN.glob("*.txt")):
        for block in path.read_text(encoding="utf-8").split("\n\n"):
            lines = block.strip("\n").splitlines()
            if not lines:
                continue
            assert lines[0].startswith("$ "), f"bad transcript block in {path.name}"
            command = lines[0][2:]
            assert lines[-1].startswith("exit "), f"missing exit line in {path.name}"
            code = int(lines[-1].split()[1])
            stdout = [l for l in lines[1:-1] if not l.startswith("! ")]
            stderr = [l[2:] for l in lines[1:-1] if l.startswith("! ")]
            cases.append(
                pytest.param(command, stdout, stderr, code, id=f"{path.stem}:{command[:40]}")
            )
    return cases


TRANSCRIPTS = load_transcripts()


def test_transcripts_cover_every_subcommand():
    from freeassoc.cli import build_parser

    covered = {shlex.split(command)[0] for command, *_ in
               (case.values for case in TRANSCRIPTS)}
    subcommands = {
        "simplify", "mirror", "abelianize", "member-comm", "apply", "compose",
        "classify", "factor", "central", "scan-central", "verify-cat",
        "probe-kernel",
    }
    assert covered == subcommands
    # and at least three transcripts per subcommand
    from collections import Counter

    counts = Counter(shlex.split(case.values[0])[0] for case in TRANSCRIPTS)
    assert all(counts[name] >= 3 for name in subcommands), counts


@pytest.mark.parametrize("command,stdout,stderr,code", TRANSCRIPTS)
def test_golden_transcript(command, stdout, stderr, code, capsys):
    argv = [arg.replace("{data}", DATA) for arg in shlex.split(command)]
    got_code = run(argv)
    captured = capsys.readouterr()
    got_out = captured.out.replace(DATA, "{data}")
    got_err = captured.err.replace(DATA, "{data}")
    expected_out = "".join(line + "\n" for line in stdout)
    expected_err = "".join(line + "\n" for line in stderr)
    assert got_out == expected_out
    assert got_err == expected_err
    assert got_code == code


def test_byte_identical_rerun(capsys):
    argv = ["probe-kernel", "--field", "Q", "--arity", "2", "x*y + y*x"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    second = capsys.readouterr().out
    assert first == second


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 2


def test_missing_file_is_input_error(capsys):
    code = run(["apply", "--map", "/nonexistent/path.map", "x"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_map_file(tmp_path, capsys):
    bad = tmp_path / "bad.map"
    bad.write_text("field Q\ndom 2\ncod 1\nx1 -> t\n", encoding="utf-8")
    code = run(["apply", "--map", str(bad), "x*y"])
    assert code == 2
    assert "missing images" in capsys.readouterr().err


def test_internal_error_exit_code(monkeypatch, capsys):
    import freeassoc.cli as cli_module

    def boom(text, algebra):
        raise RuntimeError("deliberate")

    monkeypatch.setattr(cli_module, "parse_poly", boom)
    code = cli_module.run(["mirror", "x*y"])
    assert code == 3
    assert "internal error" in capsys.readouterr().err
