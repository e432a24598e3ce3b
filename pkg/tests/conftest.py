"""Shared helpers: random normalized states and an independent gate-matrix oracle."""
from __future__ import annotations

import math

import numpy as np

from dfsqft import Gate, StateVector

GOLDEN_DIR = __file__.rsplit("/", 1)[0] + "/golden"


def random_state(n_qubits: int, rng: np.random.Generator) -> StateVector:
    amps = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    return StateVector(amps / np.linalg.norm(amps))


def gate_matrix_oracle(gate: Gate, n: int) -> np.ndarray:
    """Full-register matrix of one gate, built by index arithmetic on basis
    states (bit t-1 of the index is qubit t). Independent of the simulator's
    slicing kernel on purpose."""
    dim = 2**n
    matrix = np.zeros((dim, dim), dtype=complex)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    for col in range(dim):
        if gate.kind == "H":
            t = gate.qubits[0]
            bit = (col >> (t - 1)) & 1
            flipped = col ^ (1 << (t - 1))
            matrix[col if bit == 0 else flipped, col] += inv_sqrt2
            matrix[flipped if bit == 0 else col, col] += inv_sqrt2 * (-1.0 if bit else 1.0)
        elif gate.kind == "R":
            t = gate.qubits[0]
            bit = (col >> (t - 1)) & 1
            flipped = col ^ (1 << (t - 1))
            c, s = math.cos(gate.angle), math.sin(gate.angle)
            if bit == 0:
                matrix[col, col] += c
                matrix[flipped, col] += s
            else:
                matrix[flipped, col] += -s
                matrix[col, col] += c
        elif gate.kind == "CN":
            c_idx, t_idx = gate.qubits
            if (col >> (c_idx - 1)) & 1:
                matrix[col ^ (1 << (t_idx - 1)), col] = 1.0
            else:
                matrix[col, col] = 1.0
        elif gate.kind == "P":
            c_idx, t_idx = gate.qubits
            both = ((col >> (c_idx - 1)) & 1) and ((col >> (t_idx - 1)) & 1)
            matrix[col, col] = np.exp(1j * gate.angle) if both else 1.0
        elif gate.kind == "CR":
            c_idx, t_idx = gate.qubits
            if (col >> (c_idx - 1)) & 1:
                bit = (col >> (t_idx - 1)) & 1
                flipped = col ^ (1 << (t_idx - 1))
                c, s = math.cos(gate.angle), math.sin(gate.angle)
                if bit == 0:
                    matrix[col, col] += c
                    matrix[flipped, col] += s
                else:
                    matrix[flipped, col] += -s
                    matrix[col, col] += c
            else:
                matrix[col, col] = 1.0
        else:
            raise ValueError(gate.kind)
    return matrix
