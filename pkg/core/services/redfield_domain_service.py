from typing import Dict, Tuple

import numpy as np

from adapters.loggers.logger_adapter import app_logger
from config import Config
from core.domain.bath_model import BathModel
from core.domain.exceptions import InvalidArgumentError, NumericalError
from core.domain.redfield_model import RateMatrix, RedfieldTensor, ZetaTensor
from core.domain.system_model import ExcitonBasis
from core.interfaces.bath_domain_service_interface import BathDomainServiceInterface
from core.interfaces.redfield_domain_service_interface import (
    RedfieldDomainServiceInterface,
)


class RedfieldDomainService(RedfieldDomainServiceInterface):
    def __init__(
        self,
        bath_service: BathDomainServiceInterface,
        max_sites: int = None,
        grouping_tol: float = None,
    ) -> None:
        self.bath_service = bath_service
        self.max_sites = max_sites or Config.MAX_SITES
        self.grouping_tol = (
            Config.SECULAR_GROUPING_TOL if grouping_tol is None else grouping_tol
        )

    def compute_zeta(
        self, basis: ExcitonBasis, distances: np.ndarray, r_corr: float
    ) -> ZetaTensor:
        """zeta[a,b,c,d] = sum_nm U_na U_nb U_mc U_md exp(-R_mn / r_corr)."""
        u = basis.vectors
        distances = np.asarray(distances, dtype=float)
        if distances.shape != u.shape:
            raise InvalidArgumentError(
                f"Distance matrix of shape {distances.shape} does not match "
                f"a {basis.size}-state basis"
            )
        kernel = self.bath_service.spatial_correlation(distances, r_corr)
        values = np.einsum("na,nb,mc,md,nm->abcd", u, u, u, u, kernel, optimize=True)
        return ZetaTensor(values=values)

    def compute_gamma(
        self,
        zeta: ZetaTensor,
        indices: Tuple[int, int, int, int],
        omega: float,
        bath: BathModel,
        lamb_shift: bool = True,
    ) -> complex:
        a, b, c, d = indices
        return complex(
            zeta.values[a, b, c, d] * self._bath_response(omega, bath, lamb_shift)
        )

    def assemble_tensor(
        self,
        basis: ExcitonBasis,
        zeta: ZetaTensor,
        bath: BathModel,
        secular: bool = False,
        lamb_shift: bool = True,
        grouping_tol: float = None,
    ) -> RedfieldTensor:
        n = basis.size
        if n > self.max_sites:
            raise InvalidArgumentError(
                f"{n} sites exceed the configured maximum of {self.max_sites}"
            )
        if zeta.size != n:
            raise InvalidArgumentError("Zeta tensor and exciton basis disagree in size")

        omega = basis.transition_frequencies
        response = self._response_matrix(omega, bath, lamb_shift)
        z = zeta.values
        eye = np.eye(n)

        # R_ab,cd = G_db,ac(w_ca) + G*_ca,bd(w_db)
        #           - d_bd sum_e G_ae,ec(w_ce) - d_ac sum_e G*_be,ed(w_de)
        values = np.einsum("dbac,ca->abcd", z, response)
        values = values + np.einsum("cabd,db->abcd", z, np.conj(response))
        inner = np.einsum("aeec,ce->ac", z, response)
        values = values - np.einsum("bd,ac->abcd", eye, inner)
        values = values - np.einsum("ac,bd->abcd", eye, np.conj(inner))

        tensor = RedfieldTensor(
            values=values, frequencies=omega, secular=False, lamb_shift=lamb_shift
        )
        app_logger.debug(
            "Assembled %dx%d Redfield tensor (lamb_shift=%s, trace defect %.2e)",
            n * n,
            n * n,
            lamb_shift,
            tensor.trace_defect(),
        )
        if secular:
            tensor = self.secular_filter(tensor, grouping_tol)
        return tensor

    def compute_rates(
        self, zeta: ZetaTensor, basis: ExcitonBasis, bath: BathModel
    ) -> RateMatrix:
        """k_ab = zeta_ab,ba C(w_ab), the a -> b population transfer rate."""
        if zeta.size != basis.size:
            raise InvalidArgumentError("Zeta tensor and exciton basis disagree in size")
        off_diagonal = ~np.eye(basis.size, dtype=bool)
        zeta_part = np.where(off_diagonal, zeta.transfer_part, 0.0)
        # rounding can leave zeta_ab,ba a few ulps below zero
        zeta_part = np.clip(zeta_part, 0.0, None)
        c_part = np.where(
            off_diagonal,
            self.bath_service.correlation_c(basis.transition_frequencies, bath),
            0.0,
        )
        return RateMatrix(k=zeta_part * c_part, zeta_part=zeta_part, c_part=c_part)

    def secular_filter(
        self, tensor: RedfieldTensor, grouping_tol: float = None
    ) -> RedfieldTensor:
        tol = self.grouping_tol if grouping_tol is None else grouping_tol
        omega = tensor.frequencies
        keep = np.abs(omega[:, :, None, None] - omega[None, None, :, :]) <= tol
        filtered = RedfieldTensor(
            values=np.where(keep, tensor.values, 0.0),
            frequencies=omega,
            secular=True,
            lamb_shift=tensor.lamb_shift,
        )

        scale = max(float(np.max(np.abs(tensor.values))), 1.0)
        if filtered.trace_defect() > 1e-12 * scale:
            raise NumericalError(
                "Secular filter broke trace preservation "
                f"(defect {filtered.trace_defect():.3e})"
            )
        app_logger.debug(
            "Secular filter kept %d of %d tensor entries",
            int(np.count_nonzero(keep)),
            keep.size,
        )
        return filtered

    def _bath_response(
        self, omega: float, bath: BathModel, lamb_shift: bool
    ) -> complex:
        """Gamma / zeta at one frequency: C/2 + i/(2 pi) P int C/(omega - w)."""
        real = 0.5 * self.bath_service.correlation_c(omega, bath)
        if not lamb_shift:
            return complex(real, 0.0)
        return complex(real, self.bath_service.pv_hilbert(omega, bath) / (2.0 * np.pi))

    def _response_matrix(
        self, omega: np.ndarray, bath: BathModel, lamb_shift: bool
    ) -> np.ndarray:
        cache: Dict[float, complex] = {}
        response = np.empty(omega.shape, dtype=complex)
        for index, value in np.ndenumerate(omega):
            key = float(value)
            if key not in cache:
                cache[key] = self._bath_response(key, bath, lamb_shift)
            response[index] = cache[key]
        app_logger.debug(
            "Evaluated bath response at %d distinct frequencies", len(cache)
        )
        return response
