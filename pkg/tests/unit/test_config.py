import pytest

from arrayldpc.core.interfaces import ConfigurationError
from arrayldpc.models.config import ArrayLDPCConfig, DistanceSettings, TableSettings


def test_defaults():
    config = ArrayLDPCConfig()
    assert config.code.max_expand_columns == 10_000
    assert config.distance.enumeration_limit_bits == 26
    assert config.distance.stopping_cap == 12
    assert config.distance.heuristic_seed == 2012
    assert config.verify.sweep_max == 1000
    assert config.table.lower_bound_cap is None
    assert config.logging.level == "WARNING"


def test_file_round_trip(tmp_path):
    path = tmp_path / "arrayldpc.toml"
    config = ArrayLDPCConfig(distance=DistanceSettings(stopping_cap=9), table=TableSettings(lower_bound_cap=14))
    config.to_file(path)
    assert "stopping_cap = 9" in path.read_text(encoding="utf-8")
    assert ArrayLDPCConfig.from_file(path) == config


def test_partial_file_keeps_defaults(tmp_path):
    path = tmp_path / "partial.toml"
    path.write_text("[verify]\nsweep_max = 300\n", encoding="utf-8")
    config = ArrayLDPCConfig.from_file(path)
    assert config.verify.sweep_max == 300
    assert config.distance.stopping_cap == 12


@pytest.mark.parametrize(
    "text",
    [
        "[distance]\nstoping_cap = 3\n",
        "[verify]\nsweep_max = 1\n",
        "[logging]\nlevel = 'LOUD'\n",
        "[distance\n",
    ],
)
def test_invalid_files(tmp_path, text):
    path = tmp_path / "bad.toml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigurationError):
        ArrayLDPCConfig.from_file(path)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigurationError):
        ArrayLDPCConfig.from_file(tmp_path / "nope.toml")


def test_load_default_prefers_explicit(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    path = tmp_path / "custom.toml"
    path.write_text("[distance]\nthreads = 3\n", encoding="utf-8")
    config, source = ArrayLDPCConfig.load_default(path)
    assert source == path
    assert config.distance.threads == 3


def test_inference_config():
    config = ArrayLDPCConfig()
    assert config.inference_config().bound_for(6) == 5
    assert config.inference_config(multiplier_bound=3).bound_for(6) == 3
    assert config.inference_config(relaxed=True).relaxed
    assert config.inference_config(relaxed=None).relaxed is False
