import warnings
from typing import Callable, Tuple

import numpy as np
from scipy import integrate

from config import Config
from core.domain.bath_model import BathModel, MaterialParams
from core.domain.exceptions import (
    DivergenceError,
    InvalidArgumentError,
    QuadratureError,
)
from core.domain.units import (
    EV_TO_JOULE,
    HBAR_J_S,
    M_PER_S_TO_NM_PER_PS,
    S2_TO_PS2,
    thermal_frequency,
)
from core.interfaces.bath_domain_service_interface import BathDomainServiceInterface

CUTOFF_MULTIPLE = 10.0


class BathDomainService(BathDomainServiceInterface):
    def __init__(self, pv_tolerance: float = None, pv_limit: int = None) -> None:
        self.pv_tolerance = pv_tolerance or Config.PV_TOLERANCE
        self.pv_limit = pv_limit or Config.PV_LIMIT

    def derive_bath_params(self, material: MaterialParams) -> Tuple[float, float]:
        """eta = (D_e - D_h)^2 / (4 pi^2 rho u^5 hbar) in ps^2 and
        omega_c = sqrt(2) u / l in rad/ps."""
        if not isinstance(material, MaterialParams):
            raise InvalidArgumentError("derive_bath_params expects MaterialParams")
        delta_d = (material.d_e - material.d_h) * EV_TO_JOULE
        eta_s2 = delta_d**2 / (
            4.0 * np.pi**2 * material.rho * material.u**5 * HBAR_J_S
        )
        omega_c = np.sqrt(2.0) * material.u * M_PER_S_TO_NM_PER_PS / material.l
        return eta_s2 * S2_TO_PS2, float(omega_c)

    def spectral_density(self, omega, bath: BathModel):
        """J(w) = Theta(w) eta w^3 exp(-w^2 / w_c^2) in ps^-1."""
        omega = np.asarray(omega, dtype=float)
        positive = np.where(omega > 0, omega, 0.0)
        value = bath.eta * positive**3 * np.exp(-((positive / bath.omega_c) ** 2))
        return value if value.ndim else float(value)

    def bose_einstein(self, omega, temperature: float):
        omega = np.asarray(omega, dtype=float)
        if np.any(omega == 0):
            raise DivergenceError(
                "Bose-Einstein occupation diverges at omega = 0; "
                "use the correlation function limit"
            )
        value = 1.0 / np.expm1(omega / thermal_frequency(temperature))
        return value if value.ndim else float(value)

    def correlation_c(self, omega, bath: BathModel):
        """C(w) = 2 pi [n(w) + 1] (J(w) - J(-w)) in ps^-1, with C(0) = 0.

        Evaluated as 2 pi J(|w|) [n(|w|) + Theta(w)] so both branches keep
        full relative precision and detailed balance holds to rounding.
        """
        omega = np.asarray(omega, dtype=float)
        magnitude = np.abs(omega)
        nonzero = magnitude > 0
        safe = np.where(nonzero, magnitude, 1.0)

        occupation = 1.0 / np.expm1(safe / thermal_frequency(bath.temperature))
        occupation = occupation + (omega > 0)
        value = 2.0 * np.pi * self.spectral_density(safe, bath) * occupation
        value = np.where(nonzero, value, 0.0)
        return value if value.ndim else float(value)

    def spatial_correlation(self, distance, r_corr: float):
        distance = np.asarray(distance, dtype=float)
        if np.any(distance < 0):
            raise InvalidArgumentError("Distances must be non-negative")
        if r_corr <= 0:
            raise InvalidArgumentError("Correlation length must be positive")
        value = np.exp(-distance / r_corr)
        return value if value.ndim else float(value)

    def pv_hilbert(self, omega0: float, bath: BathModel, tol: float = None) -> float:
        """P int C(w) / (omega0 - w) dw over the real line."""
        if bath.eta == 0:
            return 0.0
        half_width = max(
            CUTOFF_MULTIPLE * bath.omega_c, abs(omega0) + CUTOFF_MULTIPLE * bath.omega_c
        )
        return self.principal_value(
            lambda w: self.correlation_c(w, bath), omega0, half_width, tol
        )

    def principal_value(
        self,
        func: Callable[[float], float],
        omega0: float,
        half_width: float,
        tol: float = None,
    ) -> float:
        """P int_{-W}^{W} f(w) / (omega0 - w) dw for |omega0| < W."""
        tol = self.pv_tolerance if tol is None else tol
        if not np.isfinite(omega0):
            raise InvalidArgumentError(f"omega0 must be finite, got {omega0}")
        if not 0 < tol <= 1e-3:
            raise InvalidArgumentError(f"tol must lie in (0, 1e-3], got {tol}")
        if not abs(omega0) < half_width:
            raise InvalidArgumentError("omega0 must lie inside the integration window")

        grid = np.linspace(-half_width, half_width, 257)
        scale = max(float(np.max(np.abs([func(w) for w in grid]))), 1.0e-300)
        epsabs = tol * 1e-3 * scale

        # quad's Cauchy weight integrates f(w) / (w - wvar)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            result = integrate.quad(
                func,
                -half_width,
                half_width,
                weight="cauchy",
                wvar=float(omega0),
                epsabs=epsabs,
                epsrel=tol,
                limit=self.pv_limit,
                full_output=1,
            )
        value, abs_error, info = result[0], result[1], result[2]
        if not np.isfinite(value) or abs_error > max(tol * abs(value), epsabs):
            raise QuadratureError(
                f"Principal value at omega0={omega0} did not converge "
                f"(estimate {value:.6e}, error {abs_error:.3e}, "
                f"{info.get('last', '?')} subintervals)",
                estimate=-value,
                abs_error=abs_error,
            )
        return -float(value)
