import numpy as np

from core.domain.dynamics_model import BASES, EXCITON_BASIS, SITE_BASIS, DensityMatrix
from core.domain.exceptions import (
    InvalidArgumentError,
    InvalidGeometryError,
    NumericalError,
)
from core.domain.system_model import (
    DipolePerpendicular,
    ExcitonBasis,
    ExplicitCouplings,
    Site,
    SiteHamiltonian,
    SiteNetwork,
)
from core.domain.units import HBAR_MEV_PS
from core.interfaces.system_domain_service_interface import (
    SystemDomainServiceInterface,
)

DEGENERACY_TOL = 1e-12
TIE_TOL = 1e-12


class SystemDomainService(SystemDomainServiceInterface):
    def coupling_from_distance(self, distance: float, strength: float = 100.0) -> float:
        if not np.isfinite(distance) or distance <= 0:
            raise InvalidGeometryError(
                f"Inter-site distance must be positive, got {distance} nm"
            )
        return strength / distance**3

    def build_hamiltonian(self, network: SiteNetwork) -> SiteHamiltonian:
        positions = network.positions
        n = network.size
        separations = positions[:, None, :] - positions[None, :, :]
        distances = np.linalg.norm(separations, axis=-1)

        off_diagonal = ~np.eye(n, dtype=bool)
        if np.any(distances[off_diagonal] <= 0):
            m, k = np.argwhere((distances <= 0) & off_diagonal)[0]
            raise InvalidGeometryError(
                f"Sites {m + 1} and {k + 1} coincide; distances must be positive"
            )

        rule = network.coupling_rule
        if isinstance(rule, ExplicitCouplings):
            couplings = np.array(rule.matrix)
        elif isinstance(rule, DipolePerpendicular):
            couplings = np.zeros((n, n))
            for m in range(n):
                for k in range(m + 1, n):
                    j = self.coupling_from_distance(distances[m, k], rule.strength)
                    couplings[m, k] = couplings[k, m] = j
        else:
            raise InvalidArgumentError(f"Unknown coupling rule: {rule!r}")

        matrix = (couplings + np.diag(network.energies)) / HBAR_MEV_PS
        return SiteHamiltonian(matrix=matrix, distances=distances)

    def diagonalize(self, hamiltonian: SiteHamiltonian) -> ExcitonBasis:
        h = np.asarray(hamiltonian.matrix)
        energies, vectors = np.linalg.eigh(h)
        vectors = self._apply_sign_convention(vectors)
        energies, vectors = self._order_degenerate(energies, vectors)
        self._verify(h, energies, vectors)
        return ExcitonBasis(energies=energies, vectors=vectors)

    def transform_density(
        self, rho: DensityMatrix, basis_to: str, vectors: np.ndarray
    ) -> DensityMatrix:
        if basis_to not in BASES:
            raise InvalidArgumentError(f"Unknown basis tag: {basis_to}")
        vectors = np.asarray(vectors, dtype=float)
        if vectors.shape != (rho.size, rho.size):
            raise InvalidArgumentError(
                f"Transformation of shape {vectors.shape} does not match a "
                f"{rho.size}-dimensional density matrix"
            )
        if abs(rho.trace - 1.0) > 1e-10:
            raise InvalidArgumentError(f"Density matrix trace is {rho.trace}, not 1")
        if rho.hermiticity_defect() > 1e-12:
            raise InvalidArgumentError("Density matrix is not Hermitian")
        if rho.basis == basis_to:
            return rho

        if basis_to == EXCITON_BASIS:
            matrix = vectors.T @ rho.matrix @ vectors
        else:
            matrix = vectors @ rho.matrix @ vectors.T
        return DensityMatrix(matrix=matrix, basis=basis_to)

    def scale_network(
        self, network: SiteNetwork, factor: float, geometry: bool = False
    ) -> SiteNetwork:
        """Scale the site energies by ``factor``.

        With ``geometry`` the couplings follow so the whole Hamiltonian scales:
        explicit couplings directly, dipole couplings by moving the sites to
        ``factor**(-1/3)`` of their distances.
        """
        if not np.isfinite(factor) or factor <= 0:
            raise InvalidArgumentError(f"Scale factor must be positive, got {factor}")

        rule = network.coupling_rule
        positions = network.positions
        if geometry:
            if isinstance(rule, ExplicitCouplings):
                rule = ExplicitCouplings(matrix=factor * rule.matrix)
            positions = positions * factor ** (-1.0 / 3.0)

        sites = tuple(
            Site(position=tuple(p), energy=factor * site.energy)
            for p, site in zip(positions, network.sites)
        )
        return SiteNetwork(sites=sites, coupling_rule=rule)

    def coherent_site_populations(
        self, basis: ExcitonBasis, initial_site: int, times: np.ndarray
    ) -> np.ndarray:
        """|<s_n| exp(-iHt) |s_k>|^2 for every time and site."""
        u = basis.vectors
        times = np.asarray(times, dtype=float)
        phases = np.exp(-1j * np.outer(times, basis.energies))
        amplitudes = (phases * u[initial_site, :]) @ u.T
        return np.abs(amplitudes) ** 2

    @staticmethod
    def _apply_sign_convention(vectors: np.ndarray) -> np.ndarray:
        vectors = vectors.copy()
        for a in range(vectors.shape[1]):
            column = vectors[:, a]
            magnitudes = np.abs(column)
            lead = int(np.flatnonzero(magnitudes >= magnitudes.max() - TIE_TOL)[0])
            if column[lead] < 0:
                vectors[:, a] = -column
        return vectors

    @staticmethod
    def _order_degenerate(energies: np.ndarray, vectors: np.ndarray):
        scale = max(1.0, float(np.max(np.abs(energies))))
        lead_site = []
        for a in range(vectors.shape[1]):
            magnitudes = np.abs(vectors[:, a])
            lead_site.append(
                int(np.flatnonzero(magnitudes >= magnitudes.max() - TIE_TOL)[0])
            )

        order = list(range(energies.size))
        start = 0
        while start < energies.size:
            stop = start + 1
            while (
                stop < energies.size
                and energies[stop] - energies[start] <= DEGENERACY_TOL * scale
            ):
                stop += 1
            order[start:stop] = sorted(order[start:stop], key=lambda a: lead_site[a])
            start = stop
        return energies[order], vectors[:, order]

    @staticmethod
    def _verify(h: np.ndarray, energies: np.ndarray, vectors: np.ndarray) -> None:
        n = energies.size
        orthogonality = np.max(np.abs(vectors.T @ vectors - np.eye(n)))
        if orthogonality > 1e-12:
            raise NumericalError(
                f"Eigenvectors are not orthonormal (defect {orthogonality:.3e})"
            )
        norm = max(float(np.linalg.norm(h)), np.finfo(float).tiny)
        residual = np.max(np.abs(h @ vectors - vectors * energies))
        if residual > 1e-10 * norm:
            raise NumericalError(f"Eigen-residual {residual:.3e} exceeds tolerance")
