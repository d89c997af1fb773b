from pydantic import field_validator
from pydantic_settings import BaseSettings
from functools import lru_cache


class Settings(BaseSettings):
    # Size caps
    HYPERPRIME_MAX_CARRIER: int = 16  # products, quotients and corpus entries
    HYPERPRIME_ZERO_SEARCH_CAP: int = 12  # classical-zero search ranges over all subsets of M
    HYPERPRIME_ORACLE_CAP: int = 6  # naive all-subsets enumeration

    # Reporting
    HYPERPRIME_DETERMINISTIC: bool = True
    HYPERPRIME_LOG_LEVEL: str = "WARNING"

    # Pydantic v2-style config
    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore"
    }

    @field_validator("HYPERPRIME_MAX_CARRIER", "HYPERPRIME_ZERO_SEARCH_CAP", "HYPERPRIME_ORACLE_CAP")
    @classmethod
    def validate_positive_cap(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("size caps must be positive")
        return v

    @field_validator("HYPERPRIME_LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level '{v}'")
        return level


@lru_cache()
def get_settings() -> Settings:
    return Settings()


# Global instance
settings = get_settings()
