"""
Flat key=value configuration files

Keys are ScenarioConfig field names; nested specifications are reached with dotted
keys such as ``field.applied_voltage`` or ``field.doping.x1``. Lines starting with
``#`` and blank lines are ignored.
"""
import dataclasses
import typing
from enum import Enum
from pathlib import Path
from typing import Dict, List, Mapping, Union

from ..errors import ConfigurationError
from ..scenarios import ScenarioConfig

_TRUE = ("1", "true", "yes", "on")
_FALSE = ("0", "false", "no", "off")


def parse_config_text(text: str) -> Dict[str, str]:
    """
    :param text: Contents of a configuration file
    :return: Mapping of keys to raw string values, later lines win
    :raises ConfigurationError: On a line without '=' or with an empty key
    """
    settings: Dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigurationError(f"line {number}: expected key=value, got {line!r}")
        settings[key] = value.strip()
    return settings


def load_config_file(path: Union[str, Path]) -> Dict[str, str]:
    """
    :param path: Configuration file
    :return: Raw settings
    :raises ConfigurationError: When the file cannot be read or parsed
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise ConfigurationError(f"cannot read configuration file {path}: {err}") from err
    return parse_config_text(text)


def _coerce(key: str, raw: str, annotation):
    origin = typing.get_origin(annotation)
    if origin is Union:
        if raw.lower() in ("", "none"):
            return None
        inner = [a for a in typing.get_args(annotation) if a is not type(None)]
        return _coerce(key, raw, inner[0])
    if origin is tuple:
        item = typing.get_args(annotation)[0]
        return tuple(_coerce(key, part.strip(), item) for part in raw.split(",") if part.strip())

    try:
        if annotation is bool:
            if raw.lower() in _TRUE:
                return True
            if raw.lower() in _FALSE:
                return False
            raise ValueError(f"not a boolean: {raw!r}")
        if isinstance(annotation, type) and issubclass(annotation, Enum):
            return annotation(raw.lower())
        if annotation in (int, float, str):
            return annotation(raw)
    except ValueError as err:
        raise ConfigurationError(f"{key}: {err}") from err
    raise ConfigurationError(f"{key}: is a nested specification, set its fields with dotted keys")


def _replace(obj, settings: Mapping[str, str], prefix: str):
    fields = {f.name: f for f in dataclasses.fields(obj)}
    direct: Dict[str, object] = {}
    nested: Dict[str, Dict[str, str]] = {}
    for key, raw in settings.items():
        head, _, rest = key.partition(".")
        if head not in fields:
            raise ConfigurationError(f"unknown configuration key {prefix + key!r}")
        if rest:
            nested.setdefault(head, {})[rest] = raw
        else:
            direct[head] = _coerce(prefix + key, raw, fields[head].type)

    for head, sub in nested.items():
        child = direct.get(head, getattr(obj, head))
        if not dataclasses.is_dataclass(child):
            raise ConfigurationError(f"{prefix + head!r} has no sub-keys")
        direct[head] = _replace(child, sub, f"{prefix}{head}.")

    try:
        return dataclasses.replace(obj, **direct)
    except ConfigurationError:
        raise
    except (TypeError, ValueError) as err:
        raise ConfigurationError(f"{prefix or 'config'}: {err}") from err


def apply_settings(config: ScenarioConfig, settings: Mapping[str, str]) -> ScenarioConfig:
    """
    :param config: Base configuration
    :param settings: Raw key=value settings
    :return: Configuration with the settings applied
    :raises ConfigurationError: On unknown keys or values of the wrong type
    """
    if not settings:
        return config
    return _replace(config, settings, "")


def _format_value(value) -> str:
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, tuple):
        return ",".join(f"{v:g}" for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def format_config(config, prefix: str = "") -> List[str]:
    """
    Effective configuration as key=value lines, readable by ``parse_config_text``

    :param config: ScenarioConfig or one of its nested specifications
    :param prefix: Key prefix of nested specifications
    :return: Lines in field order
    """
    lines: List[str] = []
    for f in dataclasses.fields(config):
        value = getattr(config, f.name)
        if dataclasses.is_dataclass(value):
            lines.extend(format_config(value, f"{prefix}{f.name}."))
        else:
            lines.append(f"{prefix}{f.name}={_format_value(value)}")
    return lines
