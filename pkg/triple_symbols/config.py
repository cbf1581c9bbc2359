"""
Configuration management for Triple Symbols
"""
import os
from dataclasses import dataclass, field, replace
from typing import Optional

from dotenv import load_dotenv

from .errors import InvalidConfig

OUTPUT_FORMATS = ("json", "csv", "text")


def _positive_int(name: str, raw, default: int) -> int:
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise InvalidConfig(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise InvalidConfig(f"{name} must be positive, got {value}")
    return value


@dataclass
class SearchSettings:
    """Norm equation search limits"""
    bound: int = 100
    enumeration_bound: int = 200
    retry_limit: int = 4


@dataclass
class OutputSettings:
    """Report output configuration"""
    output_format: str = "text"
    parallelism: int = 1


@dataclass
class ServerSettings:
    """Logging and diagnostics"""
    log_level: str = "INFO"
    debug: bool = False
    literal_norm_check: bool = False


@dataclass(frozen=True)
class RunConfig:
    """Settings for one CLI or tool invocation"""
    search_bound: int = 100
    enumeration_bound: int = 200
    retry_limit: int = 4
    output_format: str = "text"
    parallelism: int = 1
    literal_norm_check: bool = False

    def __post_init__(self):
        if self.search_bound < 1:
            raise InvalidConfig(f"search_bound must be positive, got {self.search_bound}")
        if self.enumeration_bound < 1:
            raise InvalidConfig(f"enumeration_bound must be positive, got {self.enumeration_bound}")
        if self.retry_limit < 0:
            raise InvalidConfig(f"retry_limit must be non-negative, got {self.retry_limit}")
        if self.parallelism < 1:
            raise InvalidConfig(f"parallelism must be positive, got {self.parallelism}")
        if self.output_format not in OUTPUT_FORMATS:
            raise InvalidConfig(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")

    def with_overrides(self, **overrides) -> "RunConfig":
        """Return a copy with the non-None overrides applied"""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **changes)


@dataclass
class Config:
    """Main configuration class"""
    search: SearchSettings = field(default_factory=SearchSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    server: ServerSettings = field(default_factory=ServerSettings)

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables"""
        config = cls()

        # Search
        config.search.bound = _positive_int(
            "TRIPLE_SYMBOL_BOUND", os.getenv("TRIPLE_SYMBOL_BOUND"), config.search.bound)
        config.search.enumeration_bound = _positive_int(
            "TRIPLE_SYMBOL_ENUM_BOUND", os.getenv("TRIPLE_SYMBOL_ENUM_BOUND"), config.search.enumeration_bound)
        retry = os.getenv("TRIPLE_SYMBOL_RETRY_LIMIT")
        if retry not in (None, ""):
            try:
                config.search.retry_limit = int(retry)
            except ValueError:
                raise InvalidConfig(f"TRIPLE_SYMBOL_RETRY_LIMIT must be an integer, got {retry!r}")

        # Output
        config.output.output_format = os.getenv("TRIPLE_SYMBOL_FORMAT", config.output.output_format)
        if config.output.output_format not in OUTPUT_FORMATS:
            raise InvalidConfig(f"TRIPLE_SYMBOL_FORMAT must be one of {OUTPUT_FORMATS}")
        config.output.parallelism = _positive_int(
            "TRIPLE_SYMBOL_JOBS", os.getenv("TRIPLE_SYMBOL_JOBS"), config.output.parallelism)

        # Server
        config.server.log_level = os.getenv("LOG_LEVEL", config.server.log_level)
        config.server.debug = os.getenv("DEBUG", "false").lower() == "true"
        config.server.literal_norm_check = os.getenv("TRIPLE_SYMBOL_LITERAL_NORM", "false").lower() == "true"

        return config

    def run_config(self, **overrides) -> RunConfig:
        """Build a RunConfig from the loaded settings, CLI flags taking precedence"""
        base = RunConfig(
            search_bound=self.search.bound,
            enumeration_bound=self.search.enumeration_bound,
            retry_limit=self.search.retry_limit,
            output_format=self.output.output_format,
            parallelism=self.output.parallelism,
            literal_norm_check=self.server.literal_norm_check,
        )
        return base.with_overrides(**overrides)


def load_config(env_file: Optional[str] = None) -> Config:
    """Read an optional .env file, then the process environment"""
    load_dotenv(env_file)
    return Config.from_env()


# Global configuration instance
config = load_config()
