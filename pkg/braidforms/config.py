"""Runtime settings, read from BRAIDFORMS_* environment variables."""

from functools import cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Bounds and logging configuration.

    Attributes:
        max_n: Largest strand count accepted by n!-sized work
            (Gram matrices, basis expansion, selfcheck).
        skein_max_crossings: Crossing cap of the skein oracle.
        log_level: Level applied by the CLI when --verbose is absent.
    """

    model_config = SettingsConfigDict(env_prefix="BRAIDFORMS_", extra="ignore")

    max_n: int = Field(default=6, ge=1, le=8)
    skein_max_crossings: int = Field(default=16, ge=0)
    log_level: str = "WARNING"


@cache
def get_settings() -> Settings:
    """Return the process-wide settings, loaded once from the environment."""
    return Settings()
