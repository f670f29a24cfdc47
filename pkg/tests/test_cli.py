import json
import subprocess
import sys

import pytest

from casson_lmo import verify
from casson_lmo.cli import main
from casson_lmo.io import data_from_json, data_to_json
from casson_lmo.links import LinkInvariantData

TREFOIL = {"pd": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], "components": 1, "framings": [-1]}
UNKNOT_PLUS = {"linking_matrix": [[1]], "conway": {"1": [1]}}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(obj, name="in.json"):
        f = tmp_path / name
        f.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(f)

    return _write


def test_lambda_of_plus_one_unknot(capsys, write):
    code, out, _ = run(capsys, "lambda", "--input", write(UNKNOT_PLUS))
    assert code == 0 and out.splitlines()[0] == "lambda_L = 0"


def test_lambda_accepts_the_looser_unknot_input(capsys, write):
    # trailing zeros in a knot polynomial are dropped on input
    code, out, _ = run(capsys, "lambda", "--input", write({"linking_matrix": [[1]], "conway": {"1": [1, 0]}}), "--json")
    assert code == 0 and json.loads(out)["lambda_L"] == "0"


def test_lambda_json_from_pd(capsys, write):
    code, out, _ = run(capsys, "lambda", "--input", write(TREFOIL), "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload == {
        "lambda_L": "-1",
        "det": -1,
        "betti1": 0,
        "h1_order": 1,
        "sigma_plus": 0,
        "sigma_minus": 1,
        "lambda_walker": "-2",
    }


def test_lambda_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(UNKNOT_PLUS)))
    code, out, _ = run(capsys, "lambda", "--input", "-")
    assert code == 0 and "lambda_L = 0" in out


def test_conway_of_sublinks(capsys, write):
    f = write({"linking_matrix": [[0, 0], [0, 0]], "conway": {"1": [1, 0, 1], "2": [1], "1,2": [0, 0, 0, 1]}})
    code, out, _ = run(capsys, "conway", "--input", f, "--sublink", "1", "--json")
    assert code == 0 and json.loads(out) == {"sublink": [1], "conway": ["1", "0", "1"]}
    code, out, _ = run(capsys, "conway", "--input", f)
    assert code == 0 and out.strip() == "z^3"


def test_conway_from_pd(capsys, write):
    code, out, _ = run(capsys, "conway", "--input", write(TREFOIL))
    assert code == 0 and out.strip() == "1 + z^2"


def test_mu(capsys, write):
    code, out, _ = run(capsys, "mu", "--input", write(TREFOIL))
    assert code == 0 and out.strip() == "-7/8"
    f = write({"linking_matrix": [[0, 1], [1, 0]], "conway": {"1": [1], "2": [1], "1,2": [0, 1]}})
    code, out, _ = run(capsys, "mu", "--input", f, "--components", "2", "--json")
    assert code == 0 and json.loads(out) == {"components": [2], "mu": "1/12"}


def test_iota_theta(capsys):
    code, out, _ = run(capsys, "iota-theta", "1 | (1,0)-(1,2); (1,1)-(1,3)")
    assert code == 0 and out.strip() == "-1/3"
    code, out, _ = run(capsys, "iota-theta", "1 | (1,0)-(1,1); (1,2)-(1,3)", "--json")
    assert code == 0 and json.loads(out)["iota_theta"] == "1/6"


def test_enumerate_essential_minus(capsys):
    code, out, _ = run(capsys, "diagrams", "enumerate", "--class", "essential-minus", "--circles", "2")
    assert code == 0 and out.splitlines()[-1] == "count: 3"
    assert len(out.splitlines()) == 4


@pytest.mark.parametrize(
    "cls,n,count",
    [("essential-plus", 3, 12), ("essential-minus", 3, 9), ("chain", 5, 12), ("infected", 2, 2), ("infected", 1, 0)],
)
def test_enumerate_counts(capsys, cls, n, count):
    code, out, _ = run(capsys, "diagrams", "enumerate", "--class", cls, "--circles", str(n), "--json")
    payload = json.loads(out)
    assert code == 0 and payload["count"] == count == len(payload["diagrams"])


def test_enumerate_respects_max_size(capsys):
    code, _, err = run(capsys, "diagrams", "enumerate", "--class", "chain", "--circles", "5", "--max-size", "3")
    assert code == 1 and "max-size" in err


def test_verify_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "det-identity")
    assert code == 0 and out.startswith("PASS")


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "mu-paths", "--seed", "7", "--max-size", "4", "--json")
    second = run(capsys, "verify", "--suite", "mu-paths", "--seed", "7", "--max-size", "4", "--json")
    assert first == second and json.loads(first[1])["passed"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(verify.SUITES, "skein", lambda seed=0, max_size=None: [verify.Check("forced", False, "0/1")])
    code, out, _ = run(capsys, "verify", "--suite", "skein")
    assert code == 3 and out.startswith("FAIL")


def test_input_errors(capsys, write, tmp_path):
    assert run(capsys, "lambda", "--input", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "lambda", "--input", write("{not json"))[0] == 1
    assert run(capsys, "lambda", "--input", write({"linking_matrix": [[0, 1], [2, 0]]}))[0] == 1
    assert run(capsys, "mu", "--input", write(UNKNOT_PLUS), "--components", "2")[0] == 1
    assert run(capsys, "iota-theta", "1 | (1,0)-(1,0)")[0] == 1
    assert run(capsys, "lambda")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "bogus")[0] == 1


def test_incomplete_data_exit_code(capsys, write):
    f = write({"linking_matrix": [[1, 0], [0, 1]], "conway": {"1": [1]}})
    code, _, err = run(capsys, "lambda", "--input", f)
    assert code == 2 and "2" in err
    assert run(capsys, "conway", "--input", f, "--sublink", "1,2")[0] == 2


def test_json_output_round_trips_through_the_input_schema():
    d = data_from_json({"linking_matrix": [[2, 1], [1, -1]], "conway": {"1": [1, 0, "1/1"], "2": [1], "1,2": [0, 1]}})
    again = data_from_json(json.loads(json.dumps(data_to_json(d))))
    assert again == d and isinstance(again, LinkInvariantData)


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "casson_lmo.cli", "iota-theta", "1 | (1,0)-(1,2); (1,1)-(1,3)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "-1/3"
