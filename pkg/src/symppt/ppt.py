"""Partial transposes, the T^(r) and R^(r) matrices, and PPT verdicts.

Layout of T^(r) and of the columns of R^(r): a row label is ``(mu, i)`` with
``mu`` a length-r Pauli multi-index (base 4, first index most significant)
and ``i`` a length ``N-2r`` bit string (base 2), ``mu``-major::

    row = lin4(mu) * 2**(N-2r) + lin2(i)

With this layout ``R^dagger PT(N-r:r) R = 2**-(N-r) T^(r)`` holds exactly,
where the partial transpose acts on the last r qubits.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .states import embed_symmetric
from .symmetric import PAULIS
from .tensor import SymmetricTensor, tensor_from_state, validate_density

DEFAULT_TOL = 1e-10

# tr(s^mu s^tau s^nu s^tau'), indexed [mu, tau, nu, tau']
_TRACE4 = np.einsum("aij,bjk,ckl,dli->abcd", PAULIS, PAULIS, PAULIS, PAULIS)


def _check_r(n: int, r: int) -> None:
    if not 1 <= r <= n // 2:
        raise DomainError(f"bipartition size r must satisfy 1 <= r <= {n // 2} for N={n}, got {r}")


def partial_transpose(op: np.ndarray, n: int, r: int) -> np.ndarray:
    """Transpose the last ``r`` qubits of a ``2**N x 2**N`` operator."""
    op = np.asarray(op)
    if op.shape != (2**n, 2**n):
        raise DomainError(f"expected a {2**n}x{2**n} operator for N={n}, got {op.shape}")
    if not 0 <= r <= n:
        raise DomainError(f"r must satisfy 0 <= r <= {n}, got {r}")
    a, b = 2 ** (n - r), 2**r
    return op.reshape(a, b, a, b).transpose(0, 3, 2, 1).reshape(2**n, 2**n)


def r_matrix(n: int, r: int) -> np.ndarray:
    """Unitary R^(r) with entries ``2**(-r/2) prod delta(a_k, i_k) prod sigma^{mu_k}_{a_{N-2r+k}, a_{N-r+k}}``.

    The first ``N-2r`` qubits go into Kronecker deltas; qubit ``N-2r+k`` is
    paired with transposed qubit ``N-r+k`` through ``sigma^{mu_k}``.
    """
    _check_r(n, r)
    m = n - 2 * r
    letters = iter(string.ascii_letters)
    a = [next(letters) for _ in range(n)]
    mu = [next(letters) for _ in range(r)]
    i = [next(letters) for _ in range(m)]
    operands, subs = [], []
    eye = np.eye(2)
    for k in range(m):
        operands.append(eye)
        subs.append(a[k] + i[k])
    for k in range(r):
        operands.append(PAULIS)
        subs.append(mu[k] + a[m + k] + a[m + r + k])
    spec = ",".join(subs) + "->" + "".join(a + mu + i)
    out = np.einsum(spec, *operands)
    return out.reshape(2**n, 2**n) / 2 ** (r / 2)


def t_matrix(x: SymmetricTensor, r: int) -> np.ndarray:
    """T^(r): ``X_{tau mu nu} prod_k sigma^{tau_k}_{i_k, i'_k}`` summed over the ``N-2r`` tau's.

    For ``r = N/2`` this is the real symmetric matrix ``T_{mu, nu} = X_{mu nu}``.
    """
    n = x.n
    _check_r(n, r)
    m = n - 2 * r
    arr = x.full().astype(complex if m else float)
    for _ in range(m):
        arr = np.tensordot(arr, PAULIS, axes=([0], [0]))
    mu_ax = list(range(r))
    nu_ax = list(range(r, 2 * r))
    i_ax = [2 * r + 2 * k for k in range(m)]
    ip_ax = [2 * r + 2 * k + 1 for k in range(m)]
    arr = arr.transpose(mu_ax + i_ax + nu_ax + ip_ax)
    return arr.reshape(2**n, 2**n)


def _pt_of_state(rho: np.ndarray, r: int) -> np.ndarray:
    n = rho.shape[0] - 1
    return partial_transpose(embed_symmetric(rho, n), n, r)


def similarity_residual(rho: np.ndarray, r: int, x: SymmetricTensor | None = None) -> float:
    """``max |R^dagger PT(N-r:r) R - 2**-(N-r) T^(r)|`` for a Dicke-basis state."""
    rho = validate_density(rho)
    n = rho.shape[0] - 1
    _check_r(n, r)
    if x is None:
        x = tensor_from_state(rho)
    rm = r_matrix(n, r)
    lhs = rm.conj().T @ _pt_of_state(rho, r) @ rm
    return float(np.max(np.abs(lhs - t_matrix(x, r) / 2 ** (n - r))))


def spectrum_deviation(rho: np.ndarray, r: int, x: SymmetricTensor | None = None) -> float:
    """Max deviation between sorted spectra of PT(N-r:r) and ``2**-(N-r) T^(r)``."""
    rho = validate_density(rho)
    n = rho.shape[0] - 1
    _check_r(n, r)
    if x is None:
        x = tensor_from_state(rho)
    pt_eigs = np.linalg.eigvalsh(_pt_of_state(rho, r))
    t_eigs = np.linalg.eigvalsh(t_matrix(x, r)) / 2 ** (n - r)
    return float(np.max(np.abs(pt_eigs - t_eigs)))


def trace_identity_check(y: np.ndarray, tol: float = 1e-12) -> float:
    """Max violation of ``1/4 y_{tau tau'} tr(s^mu s^tau s^nu s^tau') = y_{mu nu}``.

    ``y`` must be real symmetric 4x4 with ``y_11 + y_22 + y_33 = y_00``.
    """
    y = np.asarray(y, dtype=float)
    if y.shape != (4, 4):
        raise DomainError(f"y must be 4x4, got {y.shape}")
    if np.max(np.abs(y - y.T)) > tol:
        raise DomainError("y must be symmetric")
    if abs(y[1, 1] + y[2, 2] + y[3, 3] - y[0, 0]) > tol:
        raise DomainError("y must satisfy y_11 + y_22 + y_33 = y_00")
    lhs = np.einsum("bd,abcd->ac", y, _TRACE4) / 4
    return float(np.max(np.abs(lhs - y)))


@dataclass(frozen=True)
class CriterionResult:
    r: int
    lam: float
    min_eigenvalue: float
    passed: bool
    similarity_residual: float | None = None


@dataclass(frozen=True)
class CriterionReport:
    n: int
    tol: float
    results: tuple[CriterionResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(res.passed for res in self.results)

    @property
    def sufficient(self) -> bool:
        """PPT is also sufficient for separability only for 2 and 3 qubits."""
        return self.n in (2, 3)


def evaluate_criteria(
    rho: np.ndarray, tol: float = DEFAULT_TOL, check_similarity: bool = True
) -> CriterionReport:
    """Run ``T^(r) >= 0`` for every ``1 <= r <= N/2``; N=1 gives an empty report."""
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    rho = validate_density(rho)
    n = rho.shape[0] - 1
    if n < 2:
        return CriterionReport(n, tol)
    x = tensor_from_state(rho)
    results = []
    for r in range(1, n // 2 + 1):
        lam_min = float(np.linalg.eigvalsh(t_matrix(x, r))[0])
        results.append(
            CriterionResult(
                r=r,
                lam=1 / 2 ** (n - r),
                min_eigenvalue=lam_min,
                passed=lam_min >= -tol,
                similarity_residual=similarity_residual(rho, r, x) if check_similarity else None,
            )
        )
    return CriterionReport(n, tol, tuple(results))
