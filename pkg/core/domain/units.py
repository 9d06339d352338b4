"""Physical constants and the unit conversions shared by every module.

Internal units: rad/ps for frequencies, ps for time, nm for length and
K for temperature. Energies enter in meV and rates leave in s^-1 only at the
reporting boundary.
"""

import math

from core.domain.exceptions import InvalidArgumentError

HBAR_MEV_PS = 0.6582119569
K_B_MEV_PER_K = 0.08617333262

ELEMENTARY_CHARGE_C = 1.602176634e-19
MEV_TO_JOULE = ELEMENTARY_CHARGE_C * 1e-3
EV_TO_JOULE = ELEMENTARY_CHARGE_C
HBAR_J_S = HBAR_MEV_PS * MEV_TO_JOULE * 1e-12

PER_PS_TO_PER_S = 1e12
S2_TO_PS2 = 1e24
M_PER_S_TO_NM_PER_PS = 1e-3


def _require_finite(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidArgumentError(f"{name} must be finite, got {value}")
    return value


def energy_to_angular_frequency(energy_mev: float) -> float:
    return _require_finite(energy_mev, "energy") / HBAR_MEV_PS


def angular_frequency_to_energy(omega: float) -> float:
    return _require_finite(omega, "omega") * HBAR_MEV_PS


def thermal_frequency(temperature: float) -> float:
    """k_B T / hbar in rad/ps."""
    temperature = _require_finite(temperature, "temperature")
    if temperature <= 0:
        raise InvalidArgumentError(
            f"temperature must be positive, got {temperature} K"
        )
    return K_B_MEV_PER_K * temperature / HBAR_MEV_PS


def rate_to_per_second(rate_per_ps: float) -> float:
    return _require_finite(rate_per_ps, "rate") * PER_PS_TO_PER_S


def rate_to_per_picosecond(rate_per_s: float) -> float:
    return _require_finite(rate_per_s, "rate") / PER_PS_TO_PER_S
