"""Small dense linear algebra for qubit registers.

Tensor ordering is S (x) A1 (x) A2 everywhere: the leftmost factor is the most
significant bit of the flat index, so basis index ``k = 4*s + 2*a1 + a2``.
Single-qubit basis state 0 is the +1 eigenstate of sigma_z.
"""
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import BadFactorization, DimensionMismatch, InvalidState, NonHermitianInput


@dataclass(frozen=True)
class Tolerances:
    hermiticity: float = 1e-10
    # density matrices are held to a tighter symmetry bound than generators
    state_hermiticity: float = 1e-12
    unitarity: float = 1e-11
    trace: float = 1e-12
    positivity: float = 1e-10
    # qubit-level positivity slack |c|^2 <= p(1-p) + slack
    coherence: float = 1e-12


TOL = Tolerances()

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def kron(*mats):
    """Kronecker product of one or more matrices, left to right."""
    if not mats:
        raise ValueError("kron needs at least one matrix")
    return reduce(np.kron, (np.asarray(m, dtype=complex) for m in mats))


def dagger(a):
    return np.conj(np.asarray(a)).T


def commutator_norm(a, b):
    """Largest entry modulus of [a, b]."""
    return float(np.abs(a @ b - b @ a).max())


def is_hermitian(h, tol=TOL.hermiticity):
    h = np.asarray(h)
    return h.ndim == 2 and h.shape[0] == h.shape[1] and np.abs(h - dagger(h)).max() <= tol


def hermitian_expm(h, t):
    """Return exp(-i h t) for Hermitian ``h`` via its eigendecomposition.

    U = V diag(exp(-i lambda t)) V^dagger, which is unitary to rounding error
    regardless of the norm of ``h t``.
    """
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h):
        raise NonHermitianInput("generator is not Hermitian within %g" % TOL.hermiticity)
    # symmetrize so eigh sees exactly Hermitian input
    evals, evecs = np.linalg.eigh(0.5 * (h + dagger(h)))
    return (evecs * np.exp(-1j * evals * t)) @ dagger(evecs)


def _qubit_count(dim):
    if dim not in (4, 8):
        raise BadFactorization(f"expected a 4x4 or 8x8 operator on qubits, got dimension {dim}")
    return 3 if dim == 8 else 2


def partial_trace(rho, keep):
    """Trace out every qubit not listed in ``keep``.

    ``rho`` is 4x4 (two qubits) or 8x8 (S, A1, A2). ``keep`` is a subsystem
    index or a sequence of indices, 0 being the system qubit.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise BadFactorization(f"expected a square matrix, got shape {rho.shape}")
    n = _qubit_count(rho.shape[0])
    keep = sorted({keep} if np.isscalar(keep) else set(keep))
    if not keep or keep[0] < 0 or keep[-1] >= n:
        raise BadFactorization(f"keep={keep} invalid for {n} qubits")

    t = rho.reshape((2,) * (2 * n))
    # trace the highest axes first so lower axis numbers stay valid
    for q in reversed(range(n)):
        if q not in keep:
            m = t.ndim // 2
            t = np.trace(t, axis1=q, axis2=q + m)
    d = 2 ** len(keep)
    return t.reshape(d, d)


def trace_distance(a, b):
    """Half the sum of absolute eigenvalues of a - b."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.shape} vs {b.shape}")
    diff = a - b
    evals = np.linalg.eigvalsh(0.5 * (diff + dagger(diff)))
    return float(min(1.0, 0.5 * np.abs(evals).sum()))


def check_density_matrix(rho, tol=TOL):
    """Raise InvalidState unless ``rho`` is Hermitian, unit trace and PSD."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidState(f"not square: {rho.shape}")
    herm = np.abs(rho - dagger(rho)).max()
    if herm > tol.state_hermiticity:
        raise InvalidState(f"hermiticity violated by {herm:.3e}")
    tr = abs(np.trace(rho) - 1.0)
    if tr > tol.trace:
        raise InvalidState(f"trace off by {tr:.3e}")
    lam = np.linalg.eigvalsh(0.5 * (rho + dagger(rho))).min()
    if lam < -tol.positivity:
        raise InvalidState(f"negative eigenvalue {lam:.3e}")
    return rho


def is_density_matrix(rho, tol=TOL):
    try:
        check_density_matrix(rho, tol)
    except InvalidState:
        return False
    return True


def random_hermitian(dim, rng, scale=1.0):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * 0.5 * (a + dagger(a))


def random_density_matrix(dim, rng, rank=None):
    """Random mixed state from a Ginibre matrix (rank ``rank``, default full)."""
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ dagger(g)
    return rho / np.trace(rho).real
