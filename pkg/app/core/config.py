"""Application configuration via environment variables."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from environment (prefix DRIFTBENCH_) or .env."""

    model_config = SettingsConfigDict(
        env_prefix="DRIFTBENCH_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Seed fallback when --seed is not given (DRIFTBENCH_SEED)
    seed: int = 0

    # Logging
    log_level: str = "INFO"
    log_json: bool | None = None

    # Per-image thread pool
    workers: int = Field(default=4, ge=1)

    # Evaluation
    conf_threshold: float = Field(default=0.2, ge=0.0, le=1.0)

    # Drift transforms
    drop_threshold: float = Field(default=0.3, ge=0.0, le=1.0)
    fill_rgb: tuple[int, int, int] = (128, 128, 128)

    # Drift scores
    hist_bins: int = 64
    psi_threshold: float = 0.25
    jsd_threshold: float = 0.1
    w1_threshold: float = 8.0

    # Baseline detector
    baseline_top_k: int = Field(default=10, ge=1)


settings = Settings()
