import subprocess
import sys

import pytest

from hyperberge.cli import main
from hyperberge.core import read_hgr


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def star(tmp_path, capsys):
    path = tmp_path / "s.hgr"
    assert run(capsys, "construct", "star", "--n", "7", "--r", "3", "-o", str(path))[0] == 0
    return path


def test_star_file_contents(star):
    assert star.read_text() == "hgr 3 7 simple\n1 2 3\n1 2 4\n1 2 5\n1 2 6\n1 2 7\n"


def test_check_absent_cycle(star, capsys):
    code, out, _ = run(capsys, "check", "--file", str(star), "--min-cycle", "3", "--pretty")
    assert code == 0 and out == "no Berge cycle of length >= 3\n"
    code, out, _ = run(capsys, "check", "--file", str(star), "--min-cycle", "3")
    assert code == 0 and "found=no" in out.splitlines()


def test_assert_free_fails_when_cycle_exists(star, capsys):
    code, out, _ = run(
        capsys, "check", "--file", str(star), "--min-cycle", "2", "--assert-free", "--certificate", "--verify"
    )
    assert code == 1
    assert "certificate=cycle 2: 1 (1) 2 (2)" in out and "verified=yes" in out


def test_path_check(star, capsys):
    code, out, _ = run(capsys, "check", "--file", str(star), "--path-len", "3", "--certificate")
    assert code == 0 and "certificate=path 3: 3 (1) 1 (2) 2 (3) 5" in out


def test_recognize_star(star, capsys):
    code, out, _ = run(capsys, "recognize", "--file", str(star), "--pretty")
    assert code == 0 and out == "r-star, center {1,2}\n"
    assert run(capsys, "recognize", "--file", str(star))[1] == "kind=r_star\ncenter=1,2\n"


def test_census_report(capsys):
    code, out, _ = run(capsys, "census", "--n", "5", "--r", "3", "--k", "3", "--variant", "cycles")
    lines = out.splitlines()
    assert code == 0
    assert {"value=3", "formula=3", "match=yes", "exhaustive=yes"} <= set(lines)


def test_census_enumerates_classes(capsys):
    code, out, _ = run(
        capsys, "census", "--n", "5", "--r", "3", "--k", "3", "--variant", "cycles",
        "--multi", "--cap", "2", "--enumerate-extremal",
    )
    assert code == 0 and "classes=" in out and "block tree, s=3" in out


def test_census_is_stable_across_workers(capsys):
    args = ["census", "--n", "6", "--r", "3", "--k", "3", "--variant", "cycles"]
    assert run(capsys, *args, "--workers", "1")[1] == run(capsys, *args, "--workers", "2")[1]


def test_extremal(capsys):
    code, out, _ = run(capsys, "extremal", "--n", "11", "--r", "5", "--k", "4", "--variant", "cycles")
    assert code == 0 and "value=6" in out.splitlines()


def test_extremal_out_of_regime(capsys):
    code, _, err = run(capsys, "extremal", "--n", "11", "--r", "5", "--k", "6", "--variant", "cycles")
    assert code == 2 and "no closed form" in err


def test_construct_block_tree_to_stdout(capsys):
    code, out, _ = run(capsys, "construct", "block-tree", "--r", "3", "--k", "3", "--blocks", "2", "--chain")
    assert code == 0 and read_hgr(out).edges == ((1, 2, 3), (1, 2, 4), (4, 5, 6), (4, 5, 7))


def test_construct_with_attachments(capsys):
    code, out, _ = run(
        capsys, "construct", "block-tree", "--r", "3", "--k", "3", "--blocks", "3",
        "--multi", "--attach", "2:1:1", "3:1:2",
    )
    assert code == 0
    assert read_hgr(out).edges == ((1, 2, 3),) * 2 + ((1, 4, 5),) * 2 + ((2, 6, 7),) * 2


def test_bad_attachment_is_a_usage_error(capsys):
    code, _, err = run(
        capsys, "construct", "block-tree", "--r", "3", "--k", "3", "--blocks", "3", "--attach", "2:1:1"
    )
    assert code == 2 and "--attach" in err


def test_witness_with_trace(star, capsys):
    code, out, _ = run(capsys, "witness", "--file", str(star), "--k", "3", "--m", "1", "--trace", "--verify")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("witness III ")
    assert "guided=yes" in lines and "verified=yes" in lines
    assert any(l.startswith("lemma: ") for l in lines)


def test_witness_on_graph_with_long_cycle(tmp_path, capsys):
    path = tmp_path / "t.hgr"
    path.write_text("hgr 3 6 simple\n1 2 3\n3 4 5\n1 5 6\n")
    code, out, err = run(capsys, "witness", "--file", str(path), "--k", "3", "--m", "1")
    assert code == 1 and out.startswith("cycle 3:") and "Berge cycle" in err


def test_missing_file_names_the_path(capsys):
    code, _, err = run(capsys, "recognize", "--file", "/nonexistent/x.hgr")
    assert code == 2 and "/nonexistent/x.hgr" in err


def test_parse_error_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.hgr"
    path.write_text("hgr 3 4 simple\n1 2\n")
    code, _, err = run(capsys, "recognize", "--file", str(path))
    assert code == 2 and "line 2" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["check", "--file", "x"],
        ["check", "--file", "x", "--min-cycle", "3", "--path-len", "2"],
        ["census", "--n", "5", "--r", "3", "--k", "3", "--variant", "cycles", "--cap", "2"],
        ["extremal", "--n", "5", "--r", "3", "--k", "3", "--variant", "loops"],
    ],
)
def test_usage_errors_print_grammar(argv, capsys):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    err = capsys.readouterr().err
    assert info.value.code == 2
    assert "witness --file F --k K --m M" in err


def test_module_entry_point(star):
    proc = subprocess.run(
        [sys.executable, "-m", "hyperberge", "recognize", "--file", str(star)],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "kind=r_star\ncenter=1,2\n"
