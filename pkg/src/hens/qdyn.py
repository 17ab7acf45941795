"""Small dense complex linear algebra for quantum states.

Density matrices and Hermitian operators with validated invariants, plus the
handful of operations everything else is built from: Kronecker products,
partial traces, unitary evolution and the trace distance.  All values are
immutable after construction and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERM_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = -1e-10

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


class DimensionError(ValueError):
    """Operands have incompatible dimensions."""


def _frozen_complex(matrix) -> np.ndarray:
    m = np.array(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError("expected a square matrix")
    m.setflags(write=False)
    return m


def hermiticity_defect(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


@dataclass(frozen=True)
class HermitianOperator:
    """A Hermitian matrix in units where hbar = 1."""

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen_complex(self.matrix))
        if hermiticity_defect(self.matrix) > HERM_TOL:
            raise ValueError("operator is not Hermitian")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class DensityMatrix:
    """A Hermitian, unit-trace, positive-semidefinite state."""

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen_complex(self.matrix))
        m = self.matrix
        if hermiticity_defect(m) > HERM_TOL:
            raise ValueError("state is not Hermitian")
        if abs(np.trace(m) - 1.0) > TRACE_TOL:
            raise ValueError("state trace differs from 1")
        if float(np.linalg.eigvalsh(m)[0]) < PSD_TOL:
            raise ValueError("state has a negative eigenvalue")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def identity_operator(dim: int) -> HermitianOperator:
    return HermitianOperator(np.eye(dim, dtype=complex))


def maximally_mixed(dim: int) -> DensityMatrix:
    return DensityMatrix(np.eye(dim, dtype=complex) / dim)


def pure_state(ket) -> DensityMatrix:
    """|psi><psi| from a (normalized or not) state vector."""
    v = np.asarray(ket, dtype=complex).ravel()
    n = np.linalg.norm(v)
    if n == 0:
        raise ValueError("zero vector")
    v = v / n
    return DensityMatrix(np.outer(v, v.conj()))


def tensor(a, b):
    """Kronecker product of two states or two operators, (system, env) ordering."""
    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        return DensityMatrix(np.kron(a.matrix, b.matrix))
    if isinstance(a, HermitianOperator) and isinstance(b, HermitianOperator):
        return HermitianOperator(np.kron(a.matrix, b.matrix))
    raise TypeError("tensor expects two DensityMatrix or two HermitianOperator")


def partial_trace(rho: DensityMatrix, dims: tuple[int, int], keep: str) -> DensityMatrix:
    """Reduced state of one factor of a bipartite system.

    ``dims = (d_s, d_e)`` with (system, env) Kronecker ordering; ``keep`` is
    ``"s"`` or ``"e"``.
    """
    d_s, d_e = int(dims[0]), int(dims[1])
    if d_s * d_e != rho.dim:
        raise DimensionError("bad factorization")
    r = rho.matrix.reshape(d_s, d_e, d_s, d_e)
    if keep == "s":
        out = np.einsum("aebe->ab", r)
    elif keep == "e":
        out = np.einsum("aeaf->ef", r)
    else:
        raise ValueError("keep must be 's' or 'e'")
    return DensityMatrix(0.5 * (out + out.conj().T))


def unitary_at(h: HermitianOperator, t: float) -> np.ndarray:
    """U = exp(-i h t); closed form for 2x2, eigendecomposition otherwise."""
    m = h.matrix
    if h.dim == 2:
        c = 0.5 * float(np.real(np.trace(m)))
        a = m - c * np.eye(2)
        # a = r * (unit vector . sigma); r^2 = det-free invariant
        r = np.sqrt(max(float(np.real(a[0, 0] * a[0, 0] + a[0, 1] * a[1, 0])), 0.0))
        phase = np.exp(-1j * c * t)
        if r * abs(t) < 1e-300:
            return phase * (np.eye(2) - 1j * a * t)
        return phase * (np.cos(r * t) * np.eye(2) - 1j * np.sin(r * t) / r * a)
    w, v = np.linalg.eigh(m)
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def evolve_unitary(rho: DensityMatrix, h: HermitianOperator, t: float) -> DensityMatrix:
    """U rho U^dagger with U = exp(-i h t)."""
    if rho.dim != h.dim:
        raise DimensionError("state and Hamiltonian dimensions differ")
    u = unitary_at(h, t)
    out = u @ rho.matrix @ u.conj().T
    return DensityMatrix(0.5 * (out + out.conj().T))


def trace_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    """Half the sum of absolute eigenvalues of a - b."""
    if a.dim != b.dim:
        raise DimensionError("states have different dimensions")
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(a.matrix - b.matrix))))
