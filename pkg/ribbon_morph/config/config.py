from functools import lru_cache
from typing import Optional, Tuple
import os
import re

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

ENV_PREFIX = "RIBBON_"


class LoggingConfig(BaseModel):
    level: str = "INFO"
    fmt: str = "text"

    model_config = ConfigDict(frozen=True, validate_assignment=True)

    @field_validator('level')
    @classmethod
    def validate_level(cls, v: str) -> str:
        v = v.upper()
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR"):
            raise ValueError('Level must be one of DEBUG, INFO, WARNING, ERROR')
        return v

    @field_validator('fmt')
    @classmethod
    def validate_fmt(cls, v: str) -> str:
        v = v.lower()
        if v not in ("json", "text"):
            raise ValueError('Format must be json or text')
        return v


class SolverConfig(BaseModel):
    tolerance: float = 1e-9
    residual_tolerance: float = 1e-8
    phi_scan_points: int = 2000
    seed: int = 20240229
    coarse_samples: Tuple[int, int] = (120, 12)
    fine_samples: Tuple[int, int] = (480, 48)

    model_config = ConfigDict(frozen=True, validate_assignment=True)

    @field_validator('tolerance', 'residual_tolerance')
    @classmethod
    def validate_positive(cls, v: float) -> float:
        if not v > 0:
            raise ValueError('Tolerance must be positive')
        return v

    @field_validator('phi_scan_points')
    @classmethod
    def validate_scan(cls, v: int) -> int:
        if v < 16:
            raise ValueError('Scan needs at least 16 points')
        return v

    @field_validator('coarse_samples', 'fine_samples')
    @classmethod
    def validate_samples(cls, v: Tuple[int, int]) -> Tuple[int, int]:
        if min(v) < 2:
            raise ValueError('Sample counts must be at least 2')
        return v


def parse_samples(value: str) -> Tuple[int, int]:
    """'120x12' -> (120, 12)."""
    match = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", value)
    if not match:
        raise ValueError(f"samples must look like SxT, got '{value}'")
    return int(match.group(1)), int(match.group(2))


class AppConfig(BaseSettings):

    env: str = Field("development", validation_alias="RIBBON_ENV")
    name: str = Field("ribbon-morph", validation_alias="RIBBON_APP_NAME")
    version: str = "0.1.0"

    logging: Optional[LoggingConfig] = None
    solver: Optional[SolverConfig] = None

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        frozen=True
    )

    def __init__(self, **kwargs):
        super().__init__(**kwargs)

        if self.logging is None:
            object.__setattr__(self, 'logging', LoggingConfig(
                level=self._get_env('LOG_LEVEL', 'INFO'),
                fmt=self._get_env('LOG_FORMAT', 'text'),
            ))

        if self.solver is None:
            object.__setattr__(self, 'solver', SolverConfig(
                tolerance=float(self._get_env('TOLERANCE', '1e-9')),
                residual_tolerance=float(self._get_env('RESIDUAL_TOLERANCE', '1e-8')),
                phi_scan_points=int(self._get_env('PHI_SCAN_POINTS', '2000')),
                seed=int(self._get_env('SEED', '20240229')),
                coarse_samples=parse_samples(self._get_env('COARSE_SAMPLES', '120x12')),
                fine_samples=parse_samples(self._get_env('FINE_SAMPLES', '480x48')),
            ))

    @staticmethod
    def _get_env(key: str, default: str = '') -> str:
        return os.getenv(ENV_PREFIX + key, default)

    def model_dump(self, **kwargs) -> dict:
        data = super().model_dump(**kwargs)
        if data.get('solver'):
            data['solver']['coarse_samples'] = "x".join(str(n) for n in self.solver.coarse_samples)
            data['solver']['fine_samples'] = "x".join(str(n) for n in self.solver.fine_samples)
        return data

    def __repr__(self) -> str:
        return f"AppConfig(env={self.env}, name={self.name}, version={self.version})"


@lru_cache(maxsize=1)
def get_config(env_file: Optional[str] = None) -> AppConfig:
    if env_file:
        from dotenv import load_dotenv
        load_dotenv(env_file, override=True)
    return AppConfig()
