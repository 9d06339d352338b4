from typing import Dict, List

import numpy as np
from scipy import linalg

from adapters.loggers.logger_adapter import app_logger
from config import Config
from core.domain.dynamics_model import (
    EXCITON_BASIS,
    EXPM,
    METHODS,
    RK4,
    SITE_BASIS,
    DensityMatrix,
    Liouvillian,
    Trajectory,
)
from core.domain.exceptions import (
    IntegrationInstabilityError,
    InvalidArgumentError,
    PositivityError,
)
from core.domain.redfield_model import RedfieldTensor
from core.domain.scenario_model import INITIAL_EXCITON, INITIAL_SITE, InitialState
from core.domain.system_model import ExcitonBasis
from core.domain.units import thermal_frequency
from core.interfaces.propagation_domain_service_interface import (
    PropagationDomainServiceInterface,
)
from core.interfaces.system_domain_service_interface import (
    SystemDomainServiceInterface,
)

PHASE_RESOLUTION = 0.05
DECAY_RESOLUTION = 0.05


class PropagationDomainService(PropagationDomainServiceInterface):
    def __init__(
        self,
        system_service: SystemDomainServiceInterface,
        default_method: str = None,
        output_interval: float = None,
        max_dt: float = None,
        trace_drift_limit: float = None,
        positivity_warn: float = None,
        positivity_fail: float = None,
    ) -> None:
        self.system_service = system_service
        self.default_method = default_method or Config.DEFAULT_METHOD
        self.output_interval = output_interval or Config.OUTPUT_INTERVAL_PS
        self.max_dt = max_dt or Config.MAX_DT_PS
        self.trace_drift_limit = trace_drift_limit or Config.TRACE_DRIFT_LIMIT
        self.positivity_warn = (
            Config.POSITIVITY_WARN if positivity_warn is None else positivity_warn
        )
        self.positivity_fail = (
            Config.POSITIVITY_FAIL if positivity_fail is None else positivity_fail
        )

    def build_liouvillian(
        self, basis: ExcitonBasis, tensor: RedfieldTensor
    ) -> Liouvillian:
        """d vec(rho)/dt = L vec(rho) with vec taken row by row."""
        if tensor.size != basis.size:
            raise InvalidArgumentError(
                f"Redfield tensor of size {tensor.size} does not match a "
                f"{basis.size}-state basis"
            )
        coherent = -1j * np.diag(basis.transition_frequencies.reshape(-1))
        return Liouvillian(matrix=coherent + tensor.as_matrix(), basis=basis)

    def default_time_step(self, basis: ExcitonBasis, tensor: RedfieldTensor) -> float:
        return self._time_step(
            basis.transition_frequencies, float(np.max(np.abs(tensor.values)))
        )

    def initial_state(
        self, initial: InitialState, basis: ExcitonBasis
    ) -> DensityMatrix:
        n = basis.size
        if initial.kind == INITIAL_EXCITON:
            if initial.index >= n:
                raise InvalidArgumentError(f"No exciton state {initial.index + 1}")
            matrix = np.zeros((n, n))
            matrix[initial.index, initial.index] = 1.0
            return DensityMatrix(matrix=matrix, basis=EXCITON_BASIS)

        if initial.kind == INITIAL_SITE:
            if initial.index >= n:
                raise InvalidArgumentError(f"No site {initial.index + 1}")
            matrix = np.zeros((n, n))
            matrix[initial.index, initial.index] = 1.0
            rho = DensityMatrix(matrix=matrix, basis=SITE_BASIS)
        else:
            rho = DensityMatrix(matrix=initial.matrix, basis=initial.basis)
            if rho.min_eigenvalue() < self.positivity_warn:
                raise InvalidArgumentError(
                    "Initial density matrix is not positive semi-definite"
                )
        return self.system_service.transform_density(
            rho, EXCITON_BASIS, basis.vectors
        )

    def evolve(
        self,
        liouvillian: Liouvillian,
        rho0: DensityMatrix,
        t_final: float,
        dt: float = None,
        stride: int = None,
        method: str = None,
    ) -> Trajectory:
        method = method or self.default_method
        if method not in METHODS:
            raise InvalidArgumentError(f"Unknown propagation method: {method}")
        if rho0.basis != EXCITON_BASIS:
            raise InvalidArgumentError("evolve expects an exciton-basis density matrix")
        if rho0.size != liouvillian.size:
            raise InvalidArgumentError(
                "Initial state dimension does not match the Liouvillian"
            )
        if not np.isfinite(t_final) or t_final <= 0:
            raise InvalidArgumentError(f"t_final must be positive, got {t_final}")
        if dt is None:
            dt = self._liouvillian_time_step(liouvillian)
        if not np.isfinite(dt) or dt <= 0:
            raise InvalidArgumentError(f"dt must be positive, got {dt}")
        if t_final < dt:
            raise InvalidArgumentError("t_final must be at least one time step")
        if stride is not None and stride < 1:
            raise InvalidArgumentError("stride must be at least 1")

        # shrink dt so that t_final falls on the grid
        steps = int(np.ceil(t_final / dt - 1e-9))
        dt = t_final / steps
        if stride is None:
            stride = max(1, int(round(self.output_interval / dt)))
        stride = min(stride, steps)
        output_steps = list(range(0, steps + 1, stride))
        if output_steps[-1] != steps:
            output_steps.append(steps)

        app_logger.debug(
            "Evolving %d-state system with %s: %d steps of %.3e ps, %d outputs",
            liouvillian.size,
            method,
            steps,
            dt,
            len(output_steps),
        )

        propagator = self._segment_propagator(liouvillian, dt, method)
        initial_trace = rho0.trace
        vector = rho0.vectorized()
        n = liouvillian.size
        vectors = liouvillian.basis.vectors

        states: List[DensityMatrix] = []
        populations, traces, min_eigenvalues = [], [], []
        worst_eigenvalue = 0.0
        previous = 0
        for step in output_steps:
            if step > previous:
                vector = propagator(step - previous) @ vector
                previous = step
            time = step * dt
            state = DensityMatrix(matrix=vector.reshape(n, n), basis=EXCITON_BASIS)
            self._check_stability(state, initial_trace, time, dt, method)

            min_eigenvalue = state.min_eigenvalue()
            if min_eigenvalue < self.positivity_fail:
                raise PositivityError(
                    f"Smallest eigenvalue {min_eigenvalue:.3e} at t={time:.6g} ps",
                    min_eigenvalue=min_eigenvalue,
                )
            worst_eigenvalue = min(worst_eigenvalue, min_eigenvalue)

            states.append(state)
            populations.append(self.site_populations(state, vectors))
            traces.append(state.trace.real)
            min_eigenvalues.append(min_eigenvalue)

        if worst_eigenvalue < self.positivity_warn:
            app_logger.warning(
                "Density matrix dipped to eigenvalue %.3e during propagation",
                worst_eigenvalue,
            )

        return Trajectory(
            times=np.array(output_steps) * dt,
            states=tuple(states),
            site_populations=np.array(populations),
            traces=np.array(traces),
            min_eigenvalues=np.array(min_eigenvalues),
            method=method,
            dt=dt,
            stride=stride,
        )

    def thermal_state(self, basis: ExcitonBasis, temperature: float) -> DensityMatrix:
        """Boltzmann populations over the exciton energies."""
        omega_t = thermal_frequency(temperature)
        weights = np.exp(-(basis.energies - basis.energies.min()) / omega_t)
        return DensityMatrix(
            matrix=np.diag(weights / weights.sum()), basis=EXCITON_BASIS
        )

    def site_populations(
        self, state: DensityMatrix, vectors: np.ndarray
    ) -> np.ndarray:
        if state.basis == SITE_BASIS:
            return state.populations
        vectors = np.asarray(vectors, dtype=float)
        if vectors.shape != (state.size, state.size):
            raise InvalidArgumentError("Transformation does not match the state")
        return np.real(np.einsum("na,ab,nb->n", vectors, state.matrix, vectors))

    def steady_state(self, liouvillian: Liouvillian) -> DensityMatrix:
        """Stationary state of L normalized to unit trace.

        The first population equation is replaced by the trace condition,
        which is linearly dependent on the others for a trace-preserving L.
        """
        n = liouvillian.size
        system = np.array(liouvillian.matrix)
        system[0, :] = np.eye(n).reshape(-1)
        rhs = np.zeros(n * n, dtype=complex)
        rhs[0] = 1.0

        solution, _, rank, _ = np.linalg.lstsq(system, rhs, rcond=None)
        if rank < n * n:
            app_logger.warning(
                "Steady state is not unique (rank %d of %d); "
                "returning the minimum-norm solution",
                rank,
                n * n,
            )
        matrix = solution.reshape(n, n)
        matrix = 0.5 * (matrix + matrix.conj().T)
        residual = float(np.max(np.abs(liouvillian.matrix @ matrix.reshape(-1))))
        app_logger.debug("Steady-state residual %.3e", residual)
        return DensityMatrix(matrix=matrix, basis=EXCITON_BASIS)

    def _time_step(self, frequencies: np.ndarray, relaxation_scale: float) -> float:
        fastest_phase = float(np.max(np.abs(frequencies)))
        candidates = [self.max_dt]
        if fastest_phase > 0:
            candidates.append(PHASE_RESOLUTION * 2.0 * np.pi / fastest_phase)
        if relaxation_scale > 0:
            candidates.append(DECAY_RESOLUTION / relaxation_scale)
        return min(candidates)

    def _liouvillian_time_step(self, liouvillian: Liouvillian) -> float:
        frequencies = liouvillian.basis.transition_frequencies
        relaxation = liouvillian.matrix + 1j * np.diag(frequencies.reshape(-1))
        return self._time_step(frequencies, float(np.max(np.abs(relaxation))))

    @staticmethod
    def _segment_propagator(liouvillian: Liouvillian, dt: float, method: str):
        """Map from a number of steps to the matrix advancing vec(rho) by them.

        For a constant generator one classical Runge-Kutta step is the
        fourth-order Taylor polynomial of exp(L dt), so rk4 segments are
        powers of that polynomial.
        """
        generator = liouvillian.matrix
        cache: Dict[int, np.ndarray] = {}

        if method == RK4:
            h = dt * generator
            identity = np.eye(generator.shape[0], dtype=complex)
            h2 = h @ h
            h3 = h2 @ h
            step = identity + h + h2 / 2.0 + h3 / 6.0 + (h3 @ h) / 24.0

            def advance(count: int) -> np.ndarray:
                if count not in cache:
                    cache[count] = np.linalg.matrix_power(step, count)
                return cache[count]

        elif method == EXPM:

            def advance(count: int) -> np.ndarray:
                if count not in cache:
                    cache[count] = linalg.expm(generator * (count * dt))
                return cache[count]

        else:
            raise InvalidArgumentError(f"Unknown propagation method: {method}")
        return advance

    def _check_stability(
        self,
        state: DensityMatrix,
        initial_trace: complex,
        time: float,
        dt: float,
        method: str,
    ) -> None:
        matrix = state.matrix
        drift = abs(state.trace - initial_trace)
        if not np.all(np.isfinite(matrix)) or drift > self.trace_drift_limit:
            raise IntegrationInstabilityError(
                f"Trace drifted by {drift:.3e} at t={time:.6g} ps with {method} "
                f"and dt={dt:.3e} ps; use a smaller dt"
            )
        if np.max(np.abs(matrix)) > 1.0 + self.trace_drift_limit:
            raise IntegrationInstabilityError(
                f"Density matrix entries exceed 1 at t={time:.6g} ps with {method} "
                f"and dt={dt:.3e} ps; use a smaller dt"
            )
