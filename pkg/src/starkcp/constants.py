"""Physical constants and energy-unit conversions.

Every formula in this package is evaluated in SI; units are converted only
at the boundaries (input parsing, report output).  The hydrogen ground
energy is stored *negative* so the signs of induced dipoles and
polarizabilities come out of the closed forms without ad-hoc flips.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from pathlib import Path


class ConfigurationError(ValueError):
    """Bad constant override or unknown unit token."""


# CODATA 2018.  h and q are exact by SI definition; hbar follows from h.
_H_PLANCK = 6.62607015e-34          # J s (exact)
_C_LIGHT = 299792458.0              # m/s (exact)
_Q_ELEMENTARY = 1.602176634e-19     # C (exact)
_EPSILON_0 = 8.8541878128e-12       # F/m
_A_BOHR = 5.29177210903e-11         # m
_E_RYDBERG = 2.1798723611035e-18    # J (Rydberg constant times hc)


@dataclass(frozen=True)
class ConstantsSet:
    """Immutable set of SI constants used by all formulas.

    E1 is the hydrogen ground-state energy and must be negative; the
    bound-state closed forms (gamma, polarizabilities, ...) rely on that
    sign.
    """

    hbar: float = _H_PLANCK / (2.0 * math.pi)   # J s
    c: float = _C_LIGHT                         # m/s
    epsilon0: float = _EPSILON_0                # F/m
    q: float = _Q_ELEMENTARY                    # C
    a0: float = _A_BOHR                         # m
    E1: float = -_E_RYDBERG                     # J, negative

    def __post_init__(self):
        if not self.E1 < 0.0:
            raise ConfigurationError(f"E1 must be negative (bound state), got {self.E1}")
        for name in ("hbar", "c", "epsilon0", "q", "a0"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ConfigurationError(f"{name} must be positive, got {value}")

    @property
    def hbar_c(self) -> float:
        """hbar * c in J m, always the exact product of the stored values."""
        return self.hbar * self.c

    @property
    def ev(self) -> float:
        """One electronvolt in joules (numerically q)."""
        return self.q

    @property
    def hartree(self) -> float:
        """One hartree in joules, q^2 / (4 pi eps0 a0) from the stored constants."""
        return self.q**2 / (4.0 * math.pi * self.epsilon0 * self.a0)


def default_constants() -> ConstantsSet:
    """CODATA-2018 values; E1 = -13.605693... eV converted to joules."""
    return ConstantsSet()


def override_constants(base: ConstantsSet, overrides: dict) -> ConstantsSet:
    """Return a copy of `base` with named constants replaced (SI values)."""
    known = {"hbar", "c", "epsilon0", "q", "a0", "E1"}
    bad = set(overrides) - known
    if bad:
        raise ConfigurationError(f"unknown constant name(s): {sorted(bad)}")
    try:
        values = {k: float(v) for k, v in overrides.items()}
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(f"constant overrides must be numbers: {overrides}") from exc
    return replace(base, **values)


def load_constants(path: str | Path, base: ConstantsSet | None = None) -> ConstantsSet:
    """Load constant overrides from a JSON file of {name: SI value} pairs."""
    base = base if base is not None else default_constants()
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ConfigurationError(f"constants file must hold one JSON object: {path}")
    return override_constants(base, data)


_UNIT_ALIASES = {
    "j": "J",
    "joule": "J",
    "ev": "eV",
    "hartree": "hartree",
    "ha": "hartree",
}


def _joules_per_unit(unit: str, constants: ConstantsSet) -> float:
    key = _UNIT_ALIASES.get(unit.strip().lower())
    if key == "J":
        return 1.0
    if key == "eV":
        return constants.ev
    if key == "hartree":
        return constants.hartree
    raise ConfigurationError(f"unknown energy unit {unit!r}; expected eV, J or hartree")


def energy_convert(value: float, from_unit: str, to_unit: str,
                   constants: ConstantsSet | None = None) -> float:
    """Exact linear conversion between eV, J and hartree."""
    constants = constants if constants is not None else default_constants()
    return value * _joules_per_unit(from_unit, constants) / _joules_per_unit(to_unit, constants)
