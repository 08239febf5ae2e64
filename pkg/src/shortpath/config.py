"""
Flat ``key = value`` run configurations.

Lines starting with ``#`` are comments. Potential parameters accept an
absolute number or a multiple of N, e.g. ``1``, ``N``, ``0.25N``,
``-N/4``, ``-3N/8``. Size lists accept ``30,40,50`` or an inclusive range
``30:50:2``. Any key can be overridden by an environment variable named
``SHORTPATH_<KEY>`` (upper case).
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .errors import ShortPathError
from .model import ModelParams, ParamSpec, PerN
from .operators import DriverSpec

__all__ = ["ConfigError", "RunConfig", "parse_quantity", "parse_n_list", "load_config"]

ENV_PREFIX = "SHORTPATH_"

_QUANTITY = re.compile(
    r"""^\s*(?P<sign>[+-])?\s*
        (?P<num>(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)?\s*
        (?P<star>\*)?\s*
        (?P<n>N)?\s*
        (/\s*(?P<den>(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?))?\s*$""",
    re.VERBOSE,
)


class ConfigError(ShortPathError, ValueError):
    """Malformed or inconsistent run configuration."""


def parse_quantity(text: str) -> float | PerN:
    """Parse ``1.5``, ``N``, ``0.25N``, ``0.25*N``, ``-N/4`` or ``-3N/8``."""
    m = _QUANTITY.match(text)
    if not m or (m.group("num") is None and m.group("n") is None):
        raise ConfigError(f"cannot parse quantity {text!r}")
    if m.group("star") and (m.group("n") is None or m.group("num") is None):
        raise ConfigError(f"cannot parse quantity {text!r}")
    value = float(m.group("num")) if m.group("num") is not None else 1.0
    if m.group("den") is not None:
        den = float(m.group("den"))
        if den == 0:
            raise ConfigError(f"division by zero in {text!r}")
        value /= den
    if m.group("sign") == "-":
        value = -value
    return PerN(value) if m.group("n") else value


def parse_n_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) == 2:
                parts.append(1)
            lo, hi, step = parts
            if step <= 0:
                raise ConfigError(f"range step must be positive in {text!r}")
            out = tuple(range(lo, hi + 1, step))
        else:
            out = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise ConfigError(f"cannot parse size list {text!r}") from exc
    if not out:
        raise ConfigError(f"size list {text!r} is empty")
    return out


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"cannot parse boolean {text!r}")


@dataclass(frozen=True)
class RunConfig:
    v_max: float | PerN = PerN(1.0)
    delta_v: float | PerN = PerN(0.25)
    delta_w: float | PerN = PerN(-0.25)
    fluct_f: float | PerN = 0.0
    n: int = 40
    n_list: tuple[int, ...] = tuple(range(30, 51, 2))
    k: float = 1.0
    b: float = 0.7
    s: float = 1.0
    b_lo: float = 0.0
    b_hi: float = 2.0
    b_points: int = 201
    s_lo: float = 0.0
    s_hi: float = 1.0
    s_points: int = 101
    coarse_points: int = 64
    tol: float = 1e-14
    margin_frac: float = 0.025
    check_field: bool = True
    w_b: int = 0
    d: int = 0

    def __post_init__(self):
        if self.b_points < 1 or self.s_points < 1:
            raise ConfigError("grids must be non-empty")
        if not self.b_lo <= self.b_hi or (self.b_points > 1 and not self.b_lo < self.b_hi):
            raise ConfigError(f"b grid must be ascending: b_lo={self.b_lo}, b_hi={self.b_hi}")
        if self.b_lo < 0:
            raise ConfigError("b_lo must be non-negative")
        if not 0 <= self.s_lo <= self.s_hi <= 1 or (self.s_points > 1 and not self.s_lo < self.s_hi):
            raise ConfigError(f"s grid must be ascending in [0, 1]: s_lo={self.s_lo}, s_hi={self.s_hi}")
        if not self.tol > 0:
            raise ConfigError("tol must be positive")
        if self.coarse_points < 8:
            raise ConfigError("coarse_points must be at least 8")
        if list(self.n_list) != sorted(set(self.n_list)):
            raise ConfigError("n_list must be strictly ascending")

    @property
    def param_spec(self) -> ParamSpec:
        return ParamSpec(self.v_max, self.delta_v, self.delta_w, self.fluct_f)

    @property
    def params(self) -> ModelParams:
        return self.param_spec.at(self.n)

    @property
    def driver(self) -> DriverSpec:
        return DriverSpec(k=self.k, b=self.b, s=self.s)

    @property
    def b_grid(self) -> np.ndarray:
        return np.linspace(self.b_lo, self.b_hi, self.b_points)

    @property
    def s_grid(self) -> np.ndarray:
        return np.linspace(self.s_lo, self.s_hi, self.s_points)

    @property
    def b_range(self) -> tuple[float, float]:
        return (self.b_lo, self.b_hi)


_QUANTITY_KEYS = {"v_max", "delta_v", "delta_w", "fluct_f"}
_INT_KEYS = {"n", "b_points", "s_points", "coarse_points", "w_b", "d"}
_FLOAT_KEYS = {"k", "b", "s", "b_lo", "b_hi", "s_lo", "s_hi", "tol", "margin_frac"}
_KEYS = {f.name for f in fields(RunConfig)}


def _convert(key: str, raw: str):
    if key in _QUANTITY_KEYS:
        return parse_quantity(raw)
    if key == "n_list":
        return parse_n_list(raw)
    if key == "check_field":
        return _bool(raw)
    try:
        if key in _INT_KEYS:
            return int(raw)
        if key in _FLOAT_KEYS:
            return float(raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {raw!r}") from exc
    raise ConfigError(f"unknown key {key!r}")


def parse_config_text(text: str, env: dict | None = None) -> RunConfig:
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.lower()
        if key not in _KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = _convert(key, raw)
    env = os.environ if env is None else env
    for key in _KEYS:
        raw = env.get(ENV_PREFIX + key.upper())
        if raw is not None:
            values[key] = _convert(key, raw)
    return RunConfig(**values)


def load_config(path: str | os.PathLike | None, env: dict | None = None) -> RunConfig:
    """Read a config file (``None`` means defaults plus environment overrides)."""
    if path is None:
        return parse_config_text("", env)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config_text(text, env)
