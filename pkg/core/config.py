import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings


load_dotenv()


def _env_int(name: str, default: str) -> int:
    return int(os.getenv(name, default))


class PellConfig(BaseModel):
    """Configuration for the continued-fraction Pell solver"""
    cf_max_terms: int = Field(default_factory=lambda: _env_int("LA2_CF_MAX_TERMS", "1000000"))
    cache_size: int = Field(default_factory=lambda: _env_int("LA2_PELL_CACHE_SIZE", "1024"))


class CountingConfig(BaseModel):
    """Configuration for threshold searches and floating cross-checks"""
    n0_max_iter: int = Field(default_factory=lambda: _env_int("LA2_N0_MAX_ITER", "100000"))
    float_precision: int = Field(default_factory=lambda: _env_int("LA2_FLOAT_PRECISION", "256"))  # bits
    float_check: bool = Field(default_factory=lambda: os.getenv("LA2_FLOAT_CHECK", "true").lower() in ("1", "true", "yes"))


class OracleConfig(BaseModel):
    """Configuration for the brute-force lattice oracle"""
    cap: int = Field(default_factory=lambda: _env_int("LA2_ORACLE_CAP", "100000"))
    workers: int = Field(default_factory=lambda: _env_int("LA2_ORACLE_WORKERS", "1"))


class LoggingConfig(BaseModel):
    level: str = Field(default_factory=lambda: os.getenv("LA2_LOG_LEVEL", "WARNING").upper())


class Settings(BaseSettings):
    pell: PellConfig = Field(default_factory=PellConfig)
    counting: CountingConfig = Field(default_factory=CountingConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    model_config = ConfigDict(extra='allow')


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get a cached settings instance for library callers"""
    return Settings()
