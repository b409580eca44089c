"""
Runtime settings: tolerances, concurrency and corpus location
"""
import os
from typing import Any, Dict

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from src.errors import ConfigurationError


ENV_VARIABLES: Dict[str, str] = {
    "compare_tol": "FLIFT_TOL",
    "eig_tol": "FLIFT_EIG_TOL",
    "cluster_tol": "FLIFT_CLUSTER_TOL",
    "zero_tol": "FLIFT_ZERO_TOL",
    "lift_tol": "FLIFT_LIFT_TOL",
    "max_workers": "FLIFT_MAX_WORKERS",
    "corpus_dir": "FLIFT_CORPUS_DIR",
    "log_level": "FLIFT_LOG_LEVEL",
}


class Settings(BaseModel):
    """Tolerances and execution knobs shared by every engine"""
    model_config = ConfigDict(frozen=True)

    eig_tol: float = Field(1e-10, gt=0.0, description="Relative eigenpair residual bound")
    cluster_tol: float = Field(1e-8, gt=0.0, description="Eigenvalue clustering radius (relative)")
    zero_tol: float = Field(1e-8, gt=0.0, description="Support-condition zero test relative to the vector norm")
    lift_tol: float = Field(1e-8, gt=0.0, description="Relative residual bound for lifted eigenvectors")
    compare_tol: float = Field(1e-6, gt=0.0, description="Multiset comparison tolerance")
    max_workers: int = Field(1, ge=1, description="Worker threads for per-r blocks and sweep trials")
    corpus_dir: str = Field("corpus", description="Directory for archived counterexamples")
    log_level: str = Field("WARNING", description="Root log level used by the CLI")


def load_settings(**overrides: Any) -> Settings:
    """
    Build settings from defaults, the environment (and a .env file) and overrides

    Args:
        **overrides: explicit values; None entries are ignored

    Returns:
        Frozen Settings instance
    """
    load_dotenv()
    values: Dict[str, Any] = {}
    for field_name, variable in ENV_VARIABLES.items():
        raw = os.environ.get(variable)
        if raw is None or raw.strip() == "":
            continue
        annotation = Settings.model_fields[field_name].annotation
        try:
            values[field_name] = annotation(raw.strip())
        except ValueError as exc:
            raise ConfigurationError(f"{variable}={raw!r} is not a valid {annotation.__name__}") from exc

    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return Settings(**values)
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from exc
