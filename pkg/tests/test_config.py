"""
Tests for settings loading
"""
import pytest

from src.config import ENV_VARIABLES, Settings, load_settings
from src.errors import ConfigurationError


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for variable in ENV_VARIABLES.values():
        monkeypatch.delenv(variable, raising=False)


def test_defaults():
    """Test default tolerances"""
    settings = load_settings()

    assert settings == Settings()
    assert settings.eig_tol == 1e-10
    assert settings.cluster_tol == 1e-8
    assert settings.compare_tol == 1e-6
    assert settings.max_workers == 1


def test_environment_overrides_defaults(monkeypatch):
    """Test FLIFT_* variables"""
    monkeypatch.setenv("FLIFT_TOL", "1e-4")
    monkeypatch.setenv("FLIFT_MAX_WORKERS", "3")
    settings = load_settings()

    assert settings.compare_tol == 1e-4
    assert settings.max_workers == 3


def test_explicit_overrides_win(monkeypatch):
    """Test that keyword overrides beat the environment and None is ignored"""
    monkeypatch.setenv("FLIFT_TOL", "1e-4")

    assert load_settings(compare_tol=1e-7).compare_tol == 1e-7
    assert load_settings(compare_tol=None).compare_tol == 1e-4


@pytest.mark.parametrize("variable, value", [("FLIFT_TOL", "abc"), ("FLIFT_MAX_WORKERS", "0"), ("FLIFT_LIFT_TOL", "-1")])
def test_malformed_values(monkeypatch, variable, value):
    """Test configuration errors"""
    monkeypatch.setenv(variable, value)

    with pytest.raises(ConfigurationError):
        load_settings()


def test_settings_are_frozen():
    """Test immutability"""
    with pytest.raises(ValueError):
        Settings().eig_tol = 1.0
