# config.py
# Runtime settings read from the environment (and a .env file when present)

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


def _flag(value: str) -> bool:
    return value.strip().lower() in {"1", "true", "yes", "on"}


class Settings(BaseModel):
    """
    Settings shared by the algebra layer, the checks and the CLI.

    Attributes:
        log_level: Level passed to logging.basicConfig by the CLI
        max_theta_space: Largest monoidal-structure search space before TooLarge
        coherence_window: Default window for coherence checks on rule models
        check_results: Re-verify every lifting/extension/composition result
    """

    model_config = {"frozen": True}

    log_level: str = "WARNING"
    max_theta_space: int = Field(default=1 << 20, ge=1)
    coherence_window: int = Field(default=16, ge=1)
    check_results: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from PICARDKIT_* environment variables."""
        return cls(
            log_level=os.getenv("PICARDKIT_LOG_LEVEL", "WARNING").upper(),
            max_theta_space=int(os.getenv("PICARDKIT_MAX_THETA_SPACE", str(1 << 20))),
            coherence_window=int(os.getenv("PICARDKIT_COHERENCE_WINDOW", "16")),
            check_results=_flag(os.getenv("PICARDKIT_CHECK_RESULTS", "0")),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings, read once from the environment."""
    return Settings.from_env()
