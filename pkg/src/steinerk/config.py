"""Solver guard limits, overridable per call or via environment variables."""

from __future__ import annotations

import os

DP_LIMIT_ENV = "STEINERK_DP_LIMIT"
ORACLE_GUARD_ENV = "STEINERK_ORACLE_GUARD"
SPECTRUM_LIMIT_ENV = "STEINERK_SPECTRUM_LIMIT"

DEFAULT_DP_LIMIT = 16  # max terminal-set support size for the subset DP
DEFAULT_ORACLE_GUARD = 22  # max (order - support size) for superset enumeration
DEFAULT_SPECTRUM_LIMIT = 20  # max order for the whole-subset-lattice engine


class GuardExceeded(RuntimeError):
    """An instance is larger than the configured solver guard allows."""


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc


def dp_limit(override: int | None = None) -> int:
    return override if override is not None else _env_int(DP_LIMIT_ENV, DEFAULT_DP_LIMIT)


def oracle_guard(override: int | None = None) -> int:
    return override if override is not None else _env_int(ORACLE_GUARD_ENV, DEFAULT_ORACLE_GUARD)


def spectrum_limit(override: int | None = None) -> int:
    return override if override is not None else _env_int(SPECTRUM_LIMIT_ENV, DEFAULT_SPECTRUM_LIMIT)
