import io
import json
from importlib import resources

import jsonschema
import pytest

from utimage.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def schema(name):
    return json.loads(resources.files("utimage").joinpath(f"schemas/{name}").read_text())


def test_classify_j2():
    code, out, _ = run("classify", "--n", "3", "[x1,x2][x3,x4]")
    assert code == 0
    res = json.loads(out)
    assert res["verdict"] == "J^2" and res["seed"] == 0
    jsonschema.validate(res, schema("verdict.schema.json"))


def test_classify_full():
    code, out, _ = run("classify", "--n", "3", "x1*x2")
    assert json.loads(out)["verdict"] == "UT3"


def test_classify_conjecture():
    code, out, _ = run("classify", "--n", "5", "[x1,x2]", "--conjecture")
    res = json.loads(out)
    assert code == 0 and res["verdict"] == "J" and res["conjectural"] is True
    jsonschema.validate(res, schema("verdict.schema.json"))


@pytest.mark.parametrize("argv,code", [
    (("classify", "--n", "5", "[x1,x2]"), 4),
    (("classify", "--n", "3", "x1 +"), 2),
    (("classify", "--n", "3", "x1*x1"), 3),
    (("nf", "--n", "3", "x1*x1"), 3),
    (("witness", "--n", "3", "[x1,x2]", "--target", '{"1,1":"1"}'), 5),
    (("witness", "--n", "3", "[x1,x2][x3,x4][x5,x6]", "--target", '{"1,3":"1"}'), 5),
    (("witness", "--n", "3", "[x1,x2]", "--target", "not json"), 2),
])
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_degree_cap_exit(monkeypatch):
    monkeypatch.setenv("UTIMAGE_DEGREE_CAP", "3")
    assert run("identity", "--n", "2", "[x1,x2][x3,x4]")[0] == 8


def test_nf_output():
    code, out, _ = run("nf", "--n", "3", "x2*x1")
    res = json.loads(out)
    assert res["text"] == "x1*x2 + [x2,x1]"
    jsonschema.validate(res, schema("normal_form.schema.json"))
    assert json.loads(run("nf", "--n", "3", "[x1,x2]")[1])["text"] == "-[x2,x1]"


def test_witness_output():
    code, out, _ = run("witness", "--n", "3", "[x1,x2]", "--target", '{"1,2":"1"}')
    res = json.loads(out)
    assert code == 0
    jsonschema.validate(res, schema("witness.schema.json"))
    assert res["assignment"]["x2"]["entries"] == {"2,2": "1", "3,3": "2"}  # diag(0,1,2)
    assert res["achieved"] == res["target"]


def test_witness_exhausted_is_structured():
    code, out, _ = run("witness", "--n", "3", "[x1,x2]", "--target", '{"1,2":"1"}',
                       "--budget", "0")
    res = json.loads(out)
    assert code == 6 and res["error"] == "WitnessSearchExhausted" and "evidence" in res


def test_identity_and_sample():
    res = json.loads(run("identity", "--n", "2", "[x1,x2][x3,x4]")[1])
    assert res["identity"] is True and res["certificate"] is None
    res = json.loads(run("identity", "--n", "2", "[x1,x2]")[1])
    assert res["identity"] is False and res["entry"] == "1,2"
    res = json.loads(run("sample", "--n", "3", "--trials", "7", "[x1,x2]")[1])
    assert res["count"] == 7 and res["span_rank"] == 3


def test_pretty():
    code, out, _ = run("classify", "--pretty", "--n", "3", "[x1,x2][x3,x4]")
    assert out.startswith("Im(f) on UT3 = J^2")
    assert "identity of UT2 but not of UT3" in out


def test_corpus_empty_and_deterministic():
    code, out, _ = run("corpus", "--count", "0")
    assert code == 0 and out.strip().endswith("0/0 agree")
    first = run("corpus", "--count", "12", "--deg", "2..5", "--seed", "3")
    second = run("corpus", "--count", "12", "--deg", "2..5", "--seed", "3")
    assert first == second
    assert first[0] == 0 and "12/12 agree" in first[1]


def test_determinism_classify():
    argv = ("classify", "--n", "3", "--seed", "17", "[x1,x2]*x3 - x3*x2*x1")
    assert run(*argv) == run(*argv)
