import json
import subprocess
import sys

import pytest

import circsep.cli as cli
from circsep.verify import IdentityReport


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# ---------------------------------------------------------------------------
# count


def test_count_single_circle(capsys):
    rc, out, err = run(capsys, "count", "--sizes", "10", "--s", "1", "--k", "3")
    assert (rc, out, err) == (0, "50\n", "")


def test_count_two_circles_json(capsys):
    rc, out, _ = run(capsys, "count", "--sizes", "8,7", "--s", "2", "--k", "3",
                     "--format", "json")
    assert rc == 0
    assert out == ('{"sizes":[8,7],"s":2,"k":3,"fixed":null,'
                   '"method":"closed","count":"140"}\n')


def test_count_fixed(capsys):
    rc, out, _ = run(capsys, "count", "--sizes", "8,7", "--s", "2", "--k", "3",
                     "--fixed", "1@1")
    assert (rc, out) == (0, "28\n")
    rc, out, _ = run(capsys, "count", "--sizes", "8,7", "--s", "2", "--k", "3",
                     "--fixed", "5@2", "--format", "json")
    assert rc == 0
    assert json.loads(out) == {"sizes": [8, 7], "s": 2, "k": 3, "fixed": "5@2",
                               "method": "closed", "count": "28"}


def test_count_methods_agree(capsys):
    base = ("count", "--sizes", "8,7", "--s", "2", "--k", "3")
    assert run(capsys, *base, "--method", "convolution")[:2] == (0, "140\n")
    assert run(capsys, *base, "--method", "enumerate")[:2] == (0, "140\n")
    assert run(capsys, *base, "--fixed", "1@1",
               "--method", "recursive")[:2] == (0, "28\n")
    assert run(capsys, *base, "--fixed", "1@1",
               "--method", "enumerate")[:2] == (0, "28\n")


def test_count_enumerate_covers_what_closed_forms_refuse(capsys):
    rc, out, err = run(capsys, "count", "--sizes", "4", "--s", "2", "--k", "2")
    assert rc == 3
    assert out == ""
    assert "n_1=4" in err and "count_by_enumeration" in err
    rc, out, _ = run(capsys, "count", "--sizes", "4", "--s", "2", "--k", "2",
                     "--method", "enumerate")
    assert (rc, out) == (0, "0\n")


def test_count_usage_errors(capsys):
    assert run(capsys, "count", "--sizes", "8,7", "--s", "2", "--k", "3",
               "--method", "recursive")[0] == 2  # recursive needs --fixed 1@1
    assert run(capsys, "count", "--sizes", "8,7", "--s", "2", "--k", "3",
               "--fixed", "2@1", "--method", "recursive")[0] == 2
    assert run(capsys, "count", "--sizes", "8,7", "--s", "2", "--k", "3",
               "--fixed", "1@1", "--method", "convolution")[0] == 2
    assert run(capsys, "count", "--sizes", "8,7", "--s", "2", "--k", "3",
               "--fixed", "9@1")[0] == 2  # no such element
    assert run(capsys, "count", "--sizes", "0", "--s", "1", "--k", "1")[0] == 2
    assert run(capsys, "count", "--sizes", "8,7", "--s", "-1", "--k", "3")[0] == 2
    assert run(capsys, "count", "--sizes", "8,7", "--s", "2")[0] == 2


# ---------------------------------------------------------------------------
# enumerate


EXPECTED_43 = ["1@1,3@1", "1@1,1@2", "1@1,2@2", "1@1,3@2"]


def test_enumerate_text(capsys):
    rc, out, _ = run(capsys, "enumerate", "--sizes", "4,3", "--s", "1",
                     "--k", "2", "--fixed", "1@1")
    assert rc == 0
    assert out.splitlines() == EXPECTED_43


def test_enumerate_limit(capsys):
    rc, out, _ = run(capsys, "enumerate", "--sizes", "4,3", "--s", "1",
                     "--k", "2", "--fixed", "1@1", "--limit", "2")
    assert rc == 0
    assert out.splitlines() == EXPECTED_43[:2]


def test_enumerate_json(capsys):
    rc, out, _ = run(capsys, "enumerate", "--sizes", "4,3", "--s", "1",
                     "--k", "2", "--fixed", "1@1", "--format", "json")
    assert rc == 0
    assert out == ('[["1@1","3@1"],["1@1","1@2"],["1@1","2@2"],'
                   '["1@1","3@2"]]\n')


def test_enumerate_csv(capsys):
    rc, out, _ = run(capsys, "enumerate", "--sizes", "4,3", "--s", "1",
                     "--k", "2", "--fixed", "1@1", "--format", "csv")
    assert rc == 0
    assert out.splitlines() == EXPECTED_43


def test_enumerate_empty_family(capsys):
    rc, out, _ = run(capsys, "enumerate", "--sizes", "5", "--s", "2", "--k", "2")
    assert (rc, out) == (0, "")


def test_enumerate_rejects_unknown_fixed(capsys):
    assert run(capsys, "enumerate", "--sizes", "4,3", "--s", "1", "--k", "2",
               "--fixed", "4@2")[0] == 2


# ---------------------------------------------------------------------------
# bijection


def test_bijection_forward(capsys):
    rc, out, _ = run(capsys, "bijection", "forward", "--sizes", "4,3",
                     "--s", "1", "--set", "1@1,3@2")
    assert (rc, out) == (0, "1,4\n")


def test_bijection_forward_trace(capsys):
    rc, out, _ = run(capsys, "bijection", "forward", "--sizes", "4,3",
                     "--s", "1", "--set", "1@1,3@2", "--trace")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "1,4"
    assert json.loads(lines[1]) == {
        "direction": "zig", "order": 1,
        "steps": [{"i": 0, "window": {"circle": 2, "lo": 3, "hi": 3},
                   "removed": 3, "d": 1, "added": 4}],
    }


def test_bijection_backward(capsys):
    rc, out, _ = run(capsys, "bijection", "backward", "--sizes", "4,3",
                     "--s", "1", "--set", "1,4")
    assert (rc, out) == (0, "1@1,3@2\n")


def test_bijection_json_envelope(capsys):
    rc, out, _ = run(capsys, "bijection", "forward", "--sizes", "4,3",
                     "--s", "1", "--set", "1@1,3@2", "--format", "json")
    assert rc == 0
    assert out == ('{"direction":"forward","sizes":[4,3],"s":1,'
                   '"input":"1@1,3@2","output":"1,4","trace":null}\n')


def test_bijection_round_trip_via_cli(capsys):
    rc, flat, _ = run(capsys, "bijection", "forward", "--sizes", "5,4",
                      "--s", "1", "--set", "1@1,4@1,4@2")
    assert rc == 0
    rc, back, _ = run(capsys, "bijection", "backward", "--sizes", "5,4",
                      "--s", "1", "--set", flat.strip())
    assert (rc, back) == (0, "1@1,4@1,4@2\n")


def test_bijection_usage_errors(capsys):
    assert run(capsys, "bijection", "forward", "--sizes", "4,3,2", "--s", "1",
               "--set", "1@1")[0] == 2
    assert run(capsys, "bijection", "forward", "--sizes", "4,3", "--s", "1",
               "--set", "1,4")[0] == 2  # flat syntax on the forward side
    assert run(capsys, "bijection", "forward", "--sizes", "4,3", "--s", "1",
               "--set", "1@1,5@2")[0] == 2
    assert run(capsys, "bijection", "backward", "--sizes", "4,3", "--s", "1",
               "--set", "1,9")[0] == 2
    assert run(capsys, "bijection", "sideways", "--sizes", "4,3", "--s", "1",
               "--set", "1@1")[0] == 2


def test_bijection_domain_errors(capsys):
    rc, _, err = run(capsys, "bijection", "forward", "--sizes", "4,3",
                     "--s", "1", "--set", "1@1,2@1")
    assert rc == 3
    assert "s-separated" in err
    rc, _, err = run(capsys, "bijection", "backward", "--sizes", "4,3",
                     "--s", "1", "--set", "2,5")
    assert rc == 3
    assert "1@1" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_table(capsys):
    rc, out, _ = run(capsys, "verify", "--checks", "circle,divisibility",
                     "--max-size", "6", "--max-k", "2", "--max-s", "1")
    assert rc == 0
    lines = out.splitlines()
    assert lines[-1].startswith("result: PASS")
    assert all(line.startswith(("PASS", "FAIL", "XFAIL", "SKIP"))
               for line in lines[:-1])


def test_verify_json(capsys):
    rc, out, _ = run(capsys, "verify", "--checks", "circle",
                     "--max-size", "6", "--max-k", "2", "--max-s", "1",
                     "--format", "json")
    assert rc == 0
    for line in out.splitlines():
        report = json.loads(line)
        assert report["check"] == "circle"
        assert report["pass"] or report["skipped"]


def test_verify_unknown_check(capsys):
    assert run(capsys, "verify", "--checks", "circle,nope")[0] == 2
    assert run(capsys, "verify", "--checks", ",")[0] == 2
    assert run(capsys, "verify", "--jobs", "0")[0] == 2


def test_verify_reports_failure_in_exit_code(capsys, monkeypatch):
    # the pipeline turns any failed non-documentation report into exit 1
    monkeypatch.setattr(cli, "verify_all", lambda grid: [
        IdentityReport(check="circle", params={"n": 5, "s": 1, "k": 2},
                       left="5", right="4")])
    rc, out, _ = run(capsys, "verify")
    assert rc == 1
    assert out.splitlines()[-1].startswith("result: FAIL")
    assert out.splitlines()[0].startswith("FAIL")


# ---------------------------------------------------------------------------
# cross-cutting behavior


def test_no_subcommand_is_usage_error(capsys):
    assert cli.main([]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0
    assert "count" in capsys.readouterr().out


def test_repeated_invocations_are_byte_identical(capsys):
    first = run(capsys, "enumerate", "--sizes", "8,7", "--s", "2", "--k", "3")
    second = run(capsys, "enumerate", "--sizes", "8,7", "--s", "2", "--k", "3")
    assert first == second
    assert len(first[1].splitlines()) == 140


def test_closed_and_enumerate_agree_through_the_cli(capsys):
    for sizes, s, k in (("6,5", "1", "2"), ("7,8", "2", "3"),
                        ("9", "2", "3"), ("5,4,3", "1", "2")):
        closed = run(capsys, "count", "--sizes", sizes, "--s", s, "--k", k)
        brute = run(capsys, "count", "--sizes", sizes, "--s", s, "--k", k,
                    "--method", "enumerate")
        assert closed[0] == brute[0] == 0
        assert closed[1] == brute[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "circsep", "count",
         "--sizes", "10", "--s", "1", "--k", "3"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout == "50\n"
