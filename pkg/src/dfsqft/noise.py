"""Collective noise as random identical one-qubit rotations, plus ensemble runs.

One noise event applies exp(-i * sum_a phi_a S_a) with S_a the
qubit-summed Pauli. The per-qubit terms commute, so this equals the
single-qubit rotation exp(-i * phi . sigma) applied to every qubit;
we evaluate that 2x2 exponential in closed form instead of a dense
matrix exponential. States in a decoherence-free sector are fixed
exactly, whatever the angles.

Where noise strikes during a circuit is a policy, not a fixed choice:
at every elementary gate, at logical-block boundaries only, or at the
endpoints only. Block-boundary noise is the regime the encodings
protect against; intra-block noise hits intermediate states that leave
the protected sector, and the report shows the resulting fidelity loss
honestly.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .circuits import Circuit
from .dfs import CollectiveModel
from .statevector import StateVector, SubspaceBasis, _apply_1q, _apply_gate_nd

MAX_NOISE_QUBITS = 10

PER_ELEMENTARY_GATE = "per_elementary_gate"
PER_LOGICAL_BLOCK = "per_logical_block"
ENDPOINTS_ONLY = "endpoints_only"
GRANULARITIES = (PER_ELEMENTARY_GATE, PER_LOGICAL_BLOCK, ENDPOINTS_ONLY)
DISTRIBUTIONS = ("uniform", "gaussian")

_SEED_MASK = 2**64 - 1


@dataclass(frozen=True)
class NoiseEvent:
    """Per-axis rotation angles: (phi_z,) under WCD, (phi_x, phi_y, phi_z) under SCD."""

    phis: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "phis", tuple(float(x) for x in self.phis))
        if not all(math.isfinite(x) for x in self.phis):
            raise ValueError("noise angles must be finite")


@dataclass(frozen=True)
class NoisePolicy:
    """Where noise strikes, how the angles are drawn, and how many trials run."""

    granularity: str
    distribution: str = "uniform"  # uniform[0, 2pi) per axis
    sigma: float = 0.0  # gaussian std deviation, radians
    trials: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.granularity not in GRANULARITIES:
            raise ValueError(f"granularity must be one of {GRANULARITIES}")
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"distribution must be one of {DISTRIBUTIONS}")
        if self.sigma < 0 or not math.isfinite(self.sigma):
            raise ValueError("sigma must be finite and nonnegative")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")


@dataclass(frozen=True)
class RunReport:
    """Ensemble fidelity statistics for one noisy-circuit experiment."""

    mean_fidelity: float
    min_fidelity: float
    std_fidelity: float
    mean_leakage: float | None  # None when no logical subspace was tracked
    trials: int
    policy: NoisePolicy

    def to_dict(self) -> dict:
        return {
            "mean_fidelity": self.mean_fidelity,
            "min_fidelity": self.min_fidelity,
            "std_fidelity": self.std_fidelity,
            "mean_leakage": self.mean_leakage,
            "trials": self.trials,
            "policy": asdict(self.policy),
        }


def sample_event(rng: np.random.Generator, model: CollectiveModel, policy: NoisePolicy) -> NoiseEvent:
    """Draw one event's angles from the policy's distribution."""
    n_axes = len(model.axes)
    if policy.distribution == "uniform":
        phis = rng.uniform(0.0, 2.0 * math.pi, n_axes)
    else:
        phis = rng.normal(0.0, policy.sigma, n_axes)
    return NoiseEvent(tuple(phis))


def single_qubit_rotation(event: NoiseEvent, model: CollectiveModel) -> np.ndarray:
    """2x2 unitary exp(-i * phi . sigma) for the event's angle vector."""
    if len(event.phis) != len(model.axes):
        raise ValueError(
            f"{model.value} events carry {len(model.axes)} angle(s), got {len(event.phis)}"
        )
    fx, fy, fz = 0.0, 0.0, 0.0
    for axis, phi in zip(model.axes, event.phis):
        if axis == "x":
            fx = phi
        elif axis == "y":
            fy = phi
        else:
            fz = phi
    theta = math.sqrt(fx * fx + fy * fy + fz * fz)
    if theta == 0.0:
        return np.eye(2, dtype=complex)
    nx, ny, nz = fx / theta, fy / theta, fz / theta
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [[c - 1j * s * nz, -s * ny - 1j * s * nx], [s * ny - 1j * s * nx, c + 1j * s * nz]]
    )


def apply_noise(state: StateVector, event: NoiseEvent, model: CollectiveModel) -> StateVector:
    """Apply exp(-i * sum_a phi_a S_a); exact identity (up to a global phase,
    which is exactly 1 for spin-zero sectors) on decoherence-free states."""
    n = state.n_qubits
    if n > MAX_NOISE_QUBITS:
        raise ValueError(f"register of {n} qubits is too large for the dense noise channel")
    u = single_qubit_rotation(event, model)
    arr = state.amplitudes.reshape((2,) * n)
    for t in range(1, n + 1):
        arr = _apply_1q(arr, u, t, n)
    return StateVector(arr.reshape(-1))


def _noise_positions(policy: NoisePolicy, n_gates: int, block_boundaries) -> list[int]:
    if policy.granularity == PER_ELEMENTARY_GATE:
        return list(range(n_gates + 1))
    if policy.granularity == ENDPOINTS_ONLY:
        return sorted({0, n_gates})
    if block_boundaries is None:
        raise ValueError("per_logical_block noise needs block boundaries")
    bounds = list(block_boundaries)
    if (
        not bounds
        or any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:]))
        or bounds[0] < 1
        or bounds[-1] != n_gates
    ):
        raise ValueError(
            "block boundaries must be strictly increasing gate positions partitioning the gate list"
        )
    return [0] + bounds


def run_trials(
    circuit: Circuit,
    input_state: StateVector,
    ideal_output: StateVector,
    policy: NoisePolicy,
    model: CollectiveModel,
    block_boundaries: list[int] | None = None,
    subspace: SubspaceBasis | None = None,
) -> tuple[np.ndarray, np.ndarray | None]:
    """Per-trial (fidelities, leakages) arrays; leakages is None without a subspace.

    Each trial draws fresh events at the policy's positions and runs the
    circuit. Per-trial random streams derive from (seed, trial index), so
    identical policies yield identical arrays.
    """
    n = circuit.n_qubits
    if input_state.n_qubits != n or ideal_output.n_qubits != n:
        raise ValueError("circuit, input, and ideal output must share one register size")
    if n > MAX_NOISE_QUBITS:
        raise ValueError(f"register of {n} qubits is too large for the dense noise channel")
    positions = set(_noise_positions(policy, len(circuit), block_boundaries))
    basis_matrix = subspace.matrix if subspace is not None else None
    ideal = ideal_output.amplitudes
    fidelities = np.empty(policy.trials)
    leakages = np.empty(policy.trials) if basis_matrix is not None else None

    for trial in range(policy.trials):
        rng = np.random.default_rng([policy.seed & _SEED_MASK, trial])
        arr = input_state.amplitudes.reshape((2,) * n)
        for pos in range(len(circuit) + 1):
            if pos in positions:
                u = single_qubit_rotation(sample_event(rng, model, policy), model)
                for t in range(1, n + 1):
                    arr = _apply_1q(arr, u, t, n)
            if pos < len(circuit):
                arr = _apply_gate_nd(arr, circuit.gates[pos], n)
        out = arr.reshape(-1)
        fidelities[trial] = min(1.0, abs(np.vdot(ideal, out)) ** 2)
        if basis_matrix is not None:
            leakages[trial] = np.linalg.norm(out - basis_matrix @ (basis_matrix.conj().T @ out))
    return fidelities, leakages


def noisy_run(
    circuit: Circuit,
    input_state: StateVector,
    ideal_output: StateVector,
    policy: NoisePolicy,
    model: CollectiveModel,
    block_boundaries: list[int] | None = None,
    subspace: SubspaceBasis | None = None,
) -> RunReport:
    """Aggregate run_trials into ensemble statistics; deterministic under the seed."""
    fidelities, leakages = run_trials(
        circuit, input_state, ideal_output, policy, model, block_boundaries, subspace
    )
    return RunReport(
        mean_fidelity=float(np.mean(fidelities)),
        min_fidelity=float(np.min(fidelities)),
        std_fidelity=float(np.std(fidelities)),
        mean_leakage=None if leakages is None else float(np.mean(leakages)),
        trials=policy.trials,
        policy=policy,
    )
