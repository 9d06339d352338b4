from dataclasses import dataclass
from typing import Dict

import numpy as np


@dataclass(frozen=True)
class BathModel:
    """Super-ohmic deformation-potential bath.

    eta in ps^2, omega_c in rad/ps, r_corr in nm, temperature in K.
    """

    eta: float = 0.035
    omega_c: float = 1.41
    r_corr: float = 3.0
    temperature: float = 10.0

    def __post_init__(self) -> None:
        values = (self.eta, self.omega_c, self.r_corr, self.temperature)
        if not all(np.isfinite(v) for v in values):
            raise ValueError("Bath parameters must be finite")
        if self.eta < 0:
            raise ValueError("eta must be non-negative")
        if self.omega_c <= 0:
            raise ValueError("omega_c must be positive")
        if self.r_corr <= 0:
            raise ValueError("r_corr must be positive")
        if self.temperature <= 0:
            raise ValueError("temperature must be positive")


@dataclass(frozen=True)
class MaterialParams:
    """Deformation potentials in eV, mass density in kg/m^3, speed of sound in
    m/s and ground-state localization length in nm."""

    d_e: float
    d_h: float
    rho: float
    u: float
    l: float

    def __post_init__(self) -> None:
        if not all(np.isfinite(v) for v in (self.d_e, self.d_h)):
            raise ValueError("Deformation potentials must be finite")
        if not all(np.isfinite(v) and v > 0 for v in (self.rho, self.u, self.l)):
            raise ValueError("Density, sound speed and length must be positive")


BATH_PRESETS: Dict[str, BathModel] = {
    "GaAs-10K": BathModel(eta=0.035, omega_c=1.41, r_corr=3.0, temperature=10.0),
}
