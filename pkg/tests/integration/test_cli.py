import json

import pytest
from typer.testing import CliRunner

from arrayldpc import __version__
from arrayldpc.cli import app, run
from arrayldpc.core.template import load_template

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def invoke_json(*args: str):
    result = runner.invoke(app, [*args, "--quiet"])
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_construct(tmp_path):
    alist = tmp_path / "h.alist"
    data = invoke_json("construct", "--q", "5", "--m", "3", "--alist", str(alist))
    assert data == {
        "q": 5,
        "m": 3,
        "n": 25,
        "checks": 15,
        "rank": 13,
        "dimension": 12,
        "even_weight": True,
    }
    assert alist.read_text(encoding="utf-8").splitlines()[0] == "25 15"


def test_distance():
    data = invoke_json("distance", "--q", "7", "--m", "6")
    assert data["d"] == 12
    assert data["kind"] == "exact"
    assert len(data["witness"]) == 12


def test_distance_rejects_non_prime():
    result = runner.invoke(app, ["distance", "--q", "9", "--m", "3"])
    assert result.exit_code == 2


def test_distance_above_enumeration_limit_is_an_error():
    result = runner.invoke(app, ["distance", "--q", "11", "--m", "3", "--quiet"])
    assert result.exit_code == 1


def test_stopping_with_cap():
    data = invoke_json("stopping", "--q", "7", "--m", "4", "--cap", "5")
    assert data["h"] == 6
    assert data["kind"] == "lower-bound"
    assert data["witness"] is None


def test_search():
    data = invoke_json("search", "--q", "7", "--m", "6", "--budget", "1000", "--seed", "3")
    assert data["kind"] == "upper-bound"
    assert data["d"] >= 12


def test_graph(tmp_path):
    dot = tmp_path / "g.dot"
    data = invoke_json("graph", "--support", "q47_m6_w20", "--i", "0", "--j", "1", "--dot", str(dot))
    assert data["edges"] == 20
    assert len(data["left"]) == len(data["right"]) == 10
    assert data["cycles"]["canonical"] == [[46, 0, 0, 28, 5, 8, 11, 32, 6, 4, 46]]
    assert dot.read_text(encoding="utf-8").startswith('graph "G(0,1)"')


@pytest.mark.parametrize(
    "a,b,relaxed,match",
    [
        ("q47_m6_w20", "q59_m6_w20", False, True),
        ("q23_m7_w24", "q29_m7_w24", False, False),
        ("q23_m7_w24", "q29_m7_w24", True, True),
    ],
)
def test_compare(a, b, relaxed, match):
    args = ["compare", "--a", a, "--b", b] + (["--relaxed"] if relaxed else [])
    assert invoke_json(*args) == {"match": match, "relaxed": relaxed}


def test_infer_writes_template(tmp_path):
    out = tmp_path / "m6.json"
    data = invoke_json("infer", "--a", "q47_m6_w20", "--b", "q59_m6_w20", "--I", "5", "--out", str(out))
    assert data["template"]["columns"][17] == {"x": "-16", "y": "17/2"}
    assert data["permutation"]["17"] == 17
    template = load_template(out)
    assert template.is_complete and template.w == 20


def test_instantiate():
    data = invoke_json("instantiate", "--template", "m6", "--q", "23")
    assert data["q"] == 23
    assert data["canonical_order"] is True
    assert len(data["indices"]) == 20


def test_instantiate_rejects_non_prime():
    result = runner.invoke(app, ["instantiate", "--template", "m6", "--q", "4"])
    assert result.exit_code == 2
    assert run(["instantiate", "--template", "m6", "--q", "4"]) == 2


def test_verify_shipped_template():
    data = invoke_json("verify", "--template", "m6", "--sweep", "1000")
    assert data["q0"] == 13
    assert [(e["q"], e["status"], e["weight"]) for e in data["exceptions"]] == [
        (7, "exceptional", 12),
        (11, "exceptional", 16),
    ]


def test_verify_pretty():
    result = runner.invoke(app, ["verify", "--template", "m7", "--sweep", "100", "--pretty", "--quiet"])
    assert result.exit_code == 0
    assert "d(q,7) <= 24" in result.stdout


def test_verify_failure_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps({"m": 2, "w": 2, "columns": [{"x": "0", "y": "0"}, {"x": "1", "y": "0"}]}),
        encoding="utf-8",
    )
    result = runner.invoke(app, ["verify", "--template", str(bad), "--sweep", "50", "--quiet"])
    assert result.exit_code == 3
    assert json.loads(result.stdout)["q0"] is None
    assert run(["verify", "--template", str(bad), "--sweep", "50", "--quiet"]) == 3


def test_unknown_template_is_usage_error():
    result = runner.invoke(app, ["verify", "--template", "m9"])
    assert result.exit_code == 2


def test_config_init_and_validate(tmp_path):
    path = tmp_path / "arrayldpc.toml"
    result = runner.invoke(app, ["config", "--init", "--path", str(path)])
    assert result.exit_code == 0
    assert path.exists()

    result = runner.invoke(app, ["validate", str(path)])
    assert result.exit_code == 0
    assert "valid" in result.stdout

    result = runner.invoke(app, ["config", "--show", "--path", str(path)])
    assert result.exit_code == 0
    assert "distance.stopping_cap" in result.stdout


def test_validate_rejects_bad_config(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text("[distance]\nstopping_cap = 0\n", encoding="utf-8")
    result = runner.invoke(app, ["validate", str(path)])
    assert result.exit_code == 1


def test_config_requires_action():
    assert runner.invoke(app, ["config"]).exit_code == 1
