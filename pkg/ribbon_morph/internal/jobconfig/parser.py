try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Union

import tomli_w
from pydantic import ValidationError

from ribbon_morph.internal.errors import ConfigError
from ribbon_morph.internal.jobconfig.schema import JobConfig


def _describe(e: ValidationError) -> tuple[str, str | None]:
    parts = []
    first_field = None
    for err in e.errors():
        loc = ".".join(str(p) for p in err["loc"])
        msg = err["msg"].removeprefix("Value error, ")
        if loc and first_field is None:
            first_field = loc
        parts.append(f"{loc}: {msg}" if loc else msg)
    return "; ".join(parts), first_field


def parse_config(document: str) -> JobConfig:
    """Validated job from TOML text. Unknown keys and missing fields are errors."""
    try:
        raw = tomllib.loads(document)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"malformed job document: {e}") from e

    mode = raw.get("mode") if isinstance(raw.get("mode"), str) else None
    try:
        return JobConfig.model_validate(raw)
    except ValidationError as e:
        message, field = _describe(e)
        prefix = f"mode '{mode}': " if mode else ""
        raise ConfigError(prefix + message, field=field, mode=mode) from e


def load_config(path: Union[str, Path]) -> JobConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read job document {path}: {e}") from e
    return parse_config(text)


def serialize_config(cfg: JobConfig) -> str:
    """Fully resolved document, defaults included; parses back to an equal JobConfig."""
    return tomli_w.dumps(cfg.model_dump(mode="json", exclude_none=True))
