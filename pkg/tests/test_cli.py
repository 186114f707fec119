import json
import subprocess
import sys

import pytest

from cdawg_sens.cli import UsageError, expand_repeat, run

FIG1 = "ababababcababab"
INS_T = "abababcabababab"


def test_size():
    assert run(["size", FIG1]) == (0, "9\n", "")
    assert run(["size", "--repeat", "(ab)^4c(ab)^3"])[1] == "9\n"
    assert run(["size", "--oracle", "--verify", FIG1])[1] == "9\n"


def test_size_from_file(tmp_path):
    p = tmp_path / "t.bin"
    p.write_bytes(FIG1.encode())
    assert run(["size", "--file", str(p)])[:2] == (0, "9\n")
    code, _, err = run(["size", "--file", str(tmp_path / "missing")])
    assert code == 2 and "cannot read" in err


def test_delta_table():
    code, out, _ = run(["delta", "--op", "ins", "--char", "b", INS_T])
    assert code == 0
    rows = dict(line.split(None, 1) for line in out.splitlines() if len(line.split(None, 1)) == 2)
    assert rows["e"] == "9" and rows["e'"] == "16" and rows["delta"] == "7"


def test_delta_json_with_checks():
    code, out, _ = run(["delta", "--op", "del", "--json", "--check", "L6,G_del,bound", "--repeat", "(ab)^4c(ab)^3"])
    d = json.loads(out)
    assert code == 0
    assert (d["e_before"], d["e_after"], d["delta"]) == (9, 14, 5)
    assert d["checks"] == {"L6": "ok", "G_del": "ok", "bound": "ok"}


def test_sweep():
    code, out, _ = run(["sweep", "--alphabet", "ab", "--max-len", "10", "--op", "ins", "--check", "all"])
    assert code == 0
    assert out.rstrip().endswith("0 violations")


def test_sweep_json():
    code, out, _ = run(["sweep", "--alphabet", "abc", "--max-len", "4", "--check", "all", "--json", "--spell", "--cross-check"])
    d = json.loads(out)
    assert code == 0 and d["failures"] == 0 and d["strings"] == 3 + 9 + 27 + 81


def test_family():
    code, out, _ = run(["family", "--kind", "insertion", "--m", "3"])
    assert code == 0
    assert out.splitlines()[1] == "insertion\t3\t0\t15\t9\t16\t7\t9,16\tyes"
    code, out, _ = run(["family", "--kind", "online", "--m", "2", "--k", "all", "--json"])
    rows = json.loads(out)
    assert code == 0 and [(r["k"], r["e_before"], r["e_after"]) for r in rows] == [(0, 14, 23), (1, 15, 27)]
    # the prepend formula is not claimed at k = m
    assert run(["family", "--kind", "online", "--m", "2", "--k", "2"])[0] == 1


def test_churn():
    code, out, _ = run(["churn", "--m", "2"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t")[:5] == ["i", "suffix_len", "e", "added", "removed"]
    sizes = {int(l.split("\t")[0]): int(l.split("\t")[2]) for l in lines[1:] if not l.startswith("#")}
    assert [sizes[i] for i in (3, 2, 1)] == [15, 27, 16]
    assert any(l.startswith("# transition_churn\t40") for l in lines)
    code, out, _ = run(["churn", "aaaaa", "--json"])
    assert code == 0 and json.loads(out)["total_churn"] == 4  # one new edge per step after "a"


def test_churn_fit():
    code, out, _ = run(["churn", "--fit", "4,8,16"])
    assert code == 0 and float(out.splitlines()[-1].split("\t")[1]) == pytest.approx(2.0, abs=0.1)


def test_repeats():
    code, out, _ = run(["repeats", "--verify", FIG1])
    assert code == 0
    assert out.splitlines() == [
        "# maximal substrings (5)", "ε", "ab", "abab", "ababab", FIG1,
        "# maximal repeats (3)", "ab", "abab", "ababab",
    ]


def test_build_formats():
    code, dot, _ = run(["build", "ab"])
    assert code == 0 and dot.count("->") == 2
    code, js, _ = run(["build", "--format", "json", "--verify", "abab"])
    assert json.loads(js)["size_e"] == 3
    assert run(["build", "--format", "json", FIG1]) == run(["build", "--format", "json", "--oracle", FIG1])


@pytest.mark.parametrize(
    "argv",
    [
        ["size"],
        ["size", "ab", "--repeat", "ab"],
        ["size", "--bogus", "ab"],
        ["delta", "--op", "ins", "ab"],
        ["delta", "--op", "sub", "--char", "a", "ab"],
        ["delta", "--op", "del", "--char", "a", "ab"],
        ["delta", "--op", "del", "--check", "L1", "ab"],
        ["sweep", "--max-len", "3", "--check", "nope"],
        ["family", "--kind", "online", "--m", "2", "--k", "5"],
        ["churn"],
        ["churn", "--m", "2", "ab"],
        ["size", "--repeat", "(ab^3"],
        ["nonsense"],
    ],
)
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_oracle_length_cap(monkeypatch):
    monkeypatch.setenv("CDAWG_MAX_N", "5")
    assert run(["size", "--oracle", "abcdef"])[0] == 2
    assert run(["size", "abcdef"])[0] == 0


def test_verification_failure_exit_code(monkeypatch):
    import cdawg_sens.cli as cli

    monkeypatch.setattr(cli, "canonical_equal", lambda a, b: False)
    code, _, err = run(["size", "--verify", "abab"])
    assert code == 1 and "builders disagree" in err


def test_expand_repeat():
    assert expand_repeat("(ab)^4c(ab)^3") == FIG1.encode()
    assert expand_repeat("a^3") == b"aaa"
    assert expand_repeat("((ab)^2c)^2") == b"ababcababc"
    assert expand_repeat(r"\(a\)^2") == b"(a))"
    for bad in ["(ab", "ab)", "^2", "a^", "a\\"]:
        with pytest.raises(UsageError):
            expand_repeat(bad)


def test_deterministic_output():
    argv = ["sweep", "--alphabet", "ab", "--max-len", "6", "--check", "all", "--json"]
    assert run(argv) == run(argv)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cdawg_sens", "size", FIG1], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "9\n"
