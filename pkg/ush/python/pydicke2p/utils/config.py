#!/usr/bin/env python3

import os
from logging import getLogger
from typing import Any, Dict, Iterable

from wxflow import AttrDict, YAMLFile

from pydicke2p.core import UsageError

logger = getLogger(__name__.split('.')[-1])


def _coerce(text: str) -> Any:
    value = text.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    lowered = value.lower()
    if lowered in ('true', 'yes', 'on'):
        return True
    if lowered in ('false', 'no', 'off'):
        return False
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            pass
    return value


def read_key_value_file(path: str) -> Dict[str, Any]:
    """Flat UTF-8 ``key = value`` lines; blank lines and ``#`` comments are skipped."""
    config = {}
    with open(path, encoding='utf-8') as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value', got '{raw.rstrip()}'", flag='--config')
            key, value = line.split('=', 1)
            config[normalize_key(key)] = _coerce(value)
    return config


def normalize_key(key: str) -> str:
    return key.strip().lstrip('-').replace('-', '_')


def read_config_file(path: str) -> Dict[str, Any]:
    """
    Read a run configuration file.

    YAML files (``.yaml``/``.yml``) must hold a flat mapping; anything else is
    parsed as ``key = value`` lines.  Keys are normalized to option names.
    """
    if not os.path.isfile(path):
        raise UsageError(f"config file '{path}' not found", flag='--config')
    if path.endswith(('.yaml', '.yml')):
        data = YAMLFile(path=path)
        nested = [key for key, value in data.items() if isinstance(value, dict)]
        if nested:
            raise UsageError(f"config file '{path}' must be flat, nested keys: {nested}", flag='--config')
        config = {normalize_key(key): value for key, value in data.items()}
    else:
        config = read_key_value_file(path)
    logger.debug(f"read {len(config)} keys from {path}")
    return config


def merge_sections(config: Dict[str, Any], sections: Iterable[str]) -> AttrDict:
    """Flatten the named top-level sections of a parsed YAML into one AttrDict, later sections winning."""
    merged = AttrDict()
    for section in sections:
        merged.update(config.get(section) or {})
    return merged
