"""Correlation matrices C^(r) and their Schur-complement relation to T.

``C^(r)_{mu, nu} = X_{mu nu 0...0} - X_{mu 0...0} X_{nu 0...0}`` for length-r
multi-indices ``mu, nu`` in base-4 lexicographic order.  Its first row and
column vanish; the remaining block ``S^(r)`` is the Schur complement of the
upper-left ``4**r`` block of T (the T matrix of the reduced 2r-qubit state)
with respect to its ``(0, 0)`` entry, which equals 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .ppt import DEFAULT_TOL, t_matrix
from .tensor import SymmetricTensor, partial_trace_tensor, tensor_from_state


def correlation_matrix(x: SymmetricTensor, r: int) -> np.ndarray:
    """The ``4**r x 4**r`` real correlation matrix C^(r) of a tensor."""
    if not 1 <= r <= x.n // 2:
        raise DomainError(f"r must satisfy 1 <= r <= {x.n // 2} for N={x.n}, got {r}")
    # X_{mu nu 0..0} is the T matrix of the 2r-qubit reduction
    second = t_matrix(partial_trace_tensor(x, 2 * r), r)
    first = second[:, 0]
    return second - np.outer(first, first)


def schur_block(x: SymmetricTensor, r: int) -> np.ndarray:
    """``S^(r)``: C^(r) without its identically-zero first row and column."""
    return correlation_matrix(x, r)[1:, 1:]


def reduced_block_extract(t: np.ndarray, r: int, n: int) -> np.ndarray:
    """Upper-left ``4**r`` block of the equal-bipartition T matrix of an N-qubit state."""
    if n % 2:
        raise DomainError(f"equal-bipartition T needs N even, got N={n}")
    if not 1 <= r <= n // 2:
        raise DomainError(f"r must satisfy 1 <= r <= {n // 2}, got {r}")
    if t.shape != (4 ** (n // 2), 4 ** (n // 2)):
        raise DomainError(f"T has shape {t.shape}, expected {(4 ** (n // 2),) * 2}")
    return t[: 4**r, : 4**r]


@dataclass(frozen=True)
class SchurCheck:
    r: int
    block_min_eigenvalue: float
    schur_min_eigenvalue: float
    block_passed: bool
    schur_passed: bool

    @property
    def agree(self) -> bool:
        return self.block_passed == self.schur_passed


def schur_equivalence_check(rho: np.ndarray, r: int, tol: float = DEFAULT_TOL) -> SchurCheck:
    """Compare ``T(rho_2r) >= 0`` against ``S^(r) >= 0`` for the same state.

    Positivity is preserved by the Schur complement, spectra are not; only the
    two verdicts are expected to coincide.
    """
    x = tensor_from_state(rho)
    block = t_matrix(partial_trace_tensor(x, 2 * r), r)
    s = schur_block(x, r)
    lb = float(np.linalg.eigvalsh(block)[0])
    ls = float(np.linalg.eigvalsh(s)[0])
    return SchurCheck(r, lb, ls, lb >= -tol, ls >= -tol)
