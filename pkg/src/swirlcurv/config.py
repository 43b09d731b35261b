"""JSON run configuration: profiles, modes, and command parameters.

A config is one JSON document:

    {
      "profile": {"expr": "2 - r^2"},
      "modes":   [{"n": 1, "g": {"expr": "r^2*(1-r)"}, "f": {"poly": [0.0]}}],
      "params":  {"grid": 2048, "m_max": 3}
    }

Radial functions accept three spellings: {"expr": "..."} for the expression
language, {"poly": [c0, c1, ...]} for ascending polynomial coefficients, and
{"table": {"r": [...], "values": [...]}} for sampled data.  Mode entries may
add "g_imag"/"f_imag" for complex coefficients; a missing "f" (or "g") means
identically zero.  ``to_json`` emits a canonical form (sorted keys, two-space
indent) that round-trips byte-identically through ``parse_config``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ValidationError
from .modes import FourierMode
from .profile import RadialProfile
from .radial import (ComplexRadialFunction, ExpressionFunction, PolynomialFunction,
                     RadialFunction, TableFunction, zero)

__all__ = ["RunConfig", "parse_config", "radial_from_spec"]


def radial_from_spec(spec) -> RadialFunction:
    if not isinstance(spec, dict):
        raise ValidationError(f"radial function spec must be an object, got {spec!r}")
    keys = set(spec) & {"expr", "poly", "table"}
    if len(keys) != 1:
        raise ValidationError(
            f"radial function spec needs exactly one of expr/poly/table, got {sorted(spec)}")
    if "expr" in spec:
        return ExpressionFunction(spec["expr"])
    if "poly" in spec:
        return PolynomialFunction(spec["poly"])
    tab = spec["table"]
    return TableFunction(tab["r"], tab["values"])


def _complex_from_spec(cfg: dict, key: str) -> ComplexRadialFunction:
    real = radial_from_spec(cfg[key]) if key in cfg else zero()
    imag_key = f"{key}_imag"
    imag = radial_from_spec(cfg[imag_key]) if imag_key in cfg else None
    return ComplexRadialFunction(real, imag)


def _mode_from_spec(cfg: dict) -> FourierMode:
    if "n" not in cfg:
        raise ValidationError("mode spec missing 'n'")
    return FourierMode(int(cfg["n"]), _complex_from_spec(cfg, "g"),
                       _complex_from_spec(cfg, "f"))


@dataclass
class RunConfig:
    raw: dict
    profile: RadialProfile
    modes: list
    params: dict

    def to_json(self) -> str:
        """Canonical serialization; stable under parse -> serialize."""
        return json.dumps(self.raw, sort_keys=True, indent=2) + "\n"


def _is_existing_path(source) -> bool:
    try:
        return Path(str(source)).exists()
    except OSError:  # e.g. a JSON document too long to be a file name
        return False


def parse_config(source) -> RunConfig:
    """Build a RunConfig from a dict, a JSON string, or a file path."""
    if isinstance(source, (str, Path)) and _is_existing_path(source):
        raw = json.loads(Path(source).read_text())
    elif isinstance(source, str):
        raw = json.loads(source)
    elif isinstance(source, dict):
        raw = source
    else:
        raise ValidationError(f"cannot read config from {source!r}")
    if "profile" not in raw:
        raise ValidationError("config missing 'profile'")
    profile = RadialProfile(radial_from_spec(raw["profile"]))
    modes = [_mode_from_spec(m) for m in raw.get("modes", [])]
    params = dict(raw.get("params", {}))
    return RunConfig(raw=raw, profile=profile, modes=modes, params=params)
