"""Environment driven settings."""

from pathlib import Path

from pydantic import BaseSettings

LIBRARY_DIR = Path(__file__).parent / "library"


class Settings(BaseSettings):
    """Settings read from UPSILON_* environment variables."""

    examples_dir: Path = LIBRARY_DIR
    log_level: str = "WARNING"

    class Config:
        env_prefix = "UPSILON_"
