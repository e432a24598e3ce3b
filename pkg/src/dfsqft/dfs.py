"""Collective operators, decoherence-free subspace bases, and encoding efficiency.

Two collective-noise models: under WCD every qubit couples through the
single summed Pauli S_z, so any one S_z eigenspace is noise-free up to a
global phase; under SCD the coupling runs through all of S_x, S_y, S_z
and the noise-free states are their common null space (total spin zero).

Dimensions come two ways on purpose: closed forms (binomials) and brute
force (dense eigen/nullspace of the actual operators); consumers are
expected to cross-check one against the other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .statevector import StateVector, SubspaceBasis

MAX_BRUTE_FORCE_QUBITS = 10
NULLSPACE_TOL = 1e-9  # collective operators have integer spectra; gap to nonzero is >= 1

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class CollectiveModel(Enum):
    """Which collective couplings strike the register."""

    WCD = "wcd"
    SCD = "scd"

    @property
    def axes(self) -> tuple[str, ...]:
        return ("z",) if self is CollectiveModel.WCD else ("x", "y", "z")


def collective_operator(n: int, axis: str) -> np.ndarray:
    """Dense sum of the single-qubit Pauli over all n qubits."""
    if not 1 <= n <= MAX_BRUTE_FORCE_QUBITS:
        raise ValueError(f"n must be in 1..{MAX_BRUTE_FORCE_QUBITS}, got {n}")
    if axis not in _PAULI:
        raise ValueError(f"axis must be one of x, y, z, got {axis!r}")
    sigma = _PAULI[axis]
    total = np.zeros((2**n, 2**n), dtype=complex)
    for t in range(1, n + 1):
        total += np.kron(np.eye(2 ** (n - t)), np.kron(sigma, np.eye(2 ** (t - 1))))
    return total


def _collective_nullspace(n: int) -> np.ndarray:
    """Orthonormal columns spanning the common null space of S_x, S_y, S_z."""
    stacked = np.vstack([collective_operator(n, ax) for ax in "xyz"])
    _, singulars, vh = np.linalg.svd(stacked)
    rank = int(np.sum(singulars > NULLSPACE_TOL))
    return vh[rank:].conj().T


def dfs_basis(n: int, model: CollectiveModel) -> SubspaceBasis:
    """Orthonormal basis of the canonical noise-free sector.

    WCD: the S_z eigenvalue-0 eigenspace, i.e. the computational states
    with equally many 0s and 1s, in index order. SCD: the common null
    space of all three collective operators, found numerically with
    singular values below 1e-9 treated as zero.
    """
    if not 2 <= n <= MAX_BRUTE_FORCE_QUBITS:
        raise ValueError(f"n must be in 2..{MAX_BRUTE_FORCE_QUBITS}, got {n}")
    if n % 2:
        raise ValueError(f"the canonical {model.value} sector needs even n, got {n}")
    if model is CollectiveModel.WCD:
        vectors = tuple(
            StateVector.basis(n, l) for l in range(2**n) if l.bit_count() == n // 2
        )
        return SubspaceBasis(n, vectors)
    null = _collective_nullspace(n)
    return SubspaceBasis(n, tuple(StateVector(null[:, j]) for j in range(null.shape[1])))


def _closed_form_max_dim(n: int, model: CollectiveModel) -> int:
    if model is CollectiveModel.WCD:
        return math.comb(n, n // 2)
    if n % 2:
        return 0  # no spin-zero sector on an odd register
    return math.comb(n, n // 2) - math.comb(n, n // 2 + 1)


def max_dfs_dimension(n: int, model: CollectiveModel) -> int:
    """Largest noise-free sector dimension (closed form; 0 means no sector)."""
    if not 1 <= n <= MAX_BRUTE_FORCE_QUBITS:
        raise ValueError(f"n must be in 1..{MAX_BRUTE_FORCE_QUBITS}, got {n}")
    return _closed_form_max_dim(n, model)


def wcd_sector_dimensions(n: int) -> dict[int, int]:
    """S_z eigenvalue -> multiplicity, from a dense eigenproblem (brute force)."""
    eigenvalues = np.linalg.eigvalsh(collective_operator(n, "z"))
    dims: dict[int, int] = {}
    for w in np.rint(eigenvalues.real).astype(int):
        dims[int(w)] = dims.get(int(w), 0) + 1
    return dims


def brute_force_max_dfs_dimension(n: int, model: CollectiveModel) -> int:
    """Same quantity as max_dfs_dimension, but measured on the operators themselves."""
    if not 1 <= n <= MAX_BRUTE_FORCE_QUBITS:
        raise ValueError(f"n must be in 1..{MAX_BRUTE_FORCE_QUBITS}, got {n}")
    if model is CollectiveModel.WCD:
        return max(wcd_sector_dimensions(n).values())
    return _collective_nullspace(n).shape[1]


def eta_max(n: int, model: CollectiveModel) -> Fraction:
    """Best logical-per-physical qubit ratio: floor(log2(max sector dim)) / n."""
    dim = max_dfs_dimension(n, model)
    if dim < 1:
        raise ValueError(f"no noise-free sector for {model.value} on {n} qubits")
    return Fraction(dim.bit_length() - 1, n)


def min_physical_qubits(m: int, model: CollectiveModel, search_limit: int = 14) -> int:
    """Smallest register whose largest noise-free sector fits m logical qubits."""
    if not 1 <= m <= 5:
        raise ValueError(f"m must be in 1..5, got {m}")
    for n in range(1, search_limit + 1):
        if _closed_form_max_dim(n, model) >= 2**m:
            return n
    raise RuntimeError(f"search bound n <= {search_limit} exceeded")


@dataclass(frozen=True)
class DfsReport:
    """Brute-force sector census for one register size and model."""

    n: int
    model: CollectiveModel
    labels: tuple[int, ...]  # WCD: S_z eigenvalues; SCD: the single spin-0 label
    dims: tuple[int, ...]
    max_dim: int

    def __post_init__(self):
        if self.max_dim < 1:
            raise ValueError("a sector census needs at least one nonempty sector")


def dfs_report(n: int, model: CollectiveModel) -> DfsReport:
    if model is CollectiveModel.WCD:
        sectors = wcd_sector_dimensions(n)
        labels = tuple(sorted(sectors, reverse=True))
        dims = tuple(sectors[w] for w in labels)
        return DfsReport(n, model, labels, dims, max(dims))
    dim = brute_force_max_dfs_dimension(n, model)
    if dim == 0:
        raise ValueError(f"no noise-free sector for scd on {n} qubits")
    return DfsReport(n, model, (0,), (dim,), dim)
