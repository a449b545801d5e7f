"""Dicke basis, symmetric-subspace isometry, Pauli matrices and S-operators.

Conventions used everywhere in the package:

* computational basis index ``b = b1 b2 ... bN`` with qubit 1 as the most
  significant bit;
* Dicke columns ordered by excitation count ``k`` (number of qubits in
  ``|1>``), ``k = 0`` first.  In angular-momentum language ``m = j - k``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, sqrt
from typing import Sequence

import numpy as np

from .errors import DomainError

PAULIS = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
PAULIS.setflags(write=False)


def pauli(mu: int) -> np.ndarray:
    """Return the 2x2 Pauli matrix ``sigma^mu`` (0 = identity, 1..3 = x, y, z)."""
    if mu not in (0, 1, 2, 3):
        raise DomainError(f"Pauli index must be in 0..3, got {mu!r}")
    return PAULIS[mu].copy()


def multiset_key(index: Sequence[int]) -> tuple[int, int, int, int]:
    """Counts ``(k0, k1, k2, k3)`` of each Pauli label in a multi-index."""
    counts = [0, 0, 0, 0]
    for mu in index:
        if mu not in (0, 1, 2, 3):
            raise DomainError(f"Pauli index must be in 0..3, got {mu!r}")
        counts[mu] += 1
    return tuple(counts)  # type: ignore[return-value]


def key_to_index(key: Sequence[int]) -> tuple[int, ...]:
    """Canonical (sorted) multi-index representing a multiset key."""
    return tuple(mu for mu in range(4) for _ in range(key[mu]))


def all_keys(n: int) -> list[tuple[int, int, int, int]]:
    """All multiset keys of rank ``n`` in a fixed order (C(n+3, 3) of them)."""
    return [
        (n - k1 - k2 - k3, k1, k2, k3)
        for k1 in range(n + 1)
        for k2 in range(n + 1 - k1)
        for k3 in range(n + 1 - k1 - k2)
    ]


def multiplicity(key: Sequence[int]) -> int:
    """Number of distinct full multi-indices with the given multiset key."""
    n = sum(key)
    out = 1
    for k in key:
        out *= comb(n, k)
        n -= k
    return out


def dicke_state(n: int, k: int) -> np.ndarray:
    """Dicke state ``|n, k>`` as a vector of length ``2**n``."""
    if n < 0:
        raise DomainError(f"N must be non-negative, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"excitation number k must satisfy 0 <= k <= {n}, got {k}")
    vec = np.zeros(2**n, dtype=complex)
    amp = 1.0 / sqrt(comb(n, k))
    for ones in combinations(range(n), k):
        # qubit q (0-based) is bit n-1-q
        vec[sum(1 << (n - 1 - q) for q in ones)] = amp
    return vec


@lru_cache(maxsize=32)
def _isometry(n: int) -> np.ndarray:
    weights = np.array([bin(b).count("1") for b in range(2**n)])
    p = np.zeros((2**n, n + 1))
    p[np.arange(2**n), weights] = 1.0
    p /= np.sqrt(p.sum(axis=0))
    p = p.astype(complex)
    p.setflags(write=False)
    return p


def symmetric_isometry(n: int) -> np.ndarray:
    """The ``2**n x (n+1)`` isometry whose k-th column is ``dicke_state(n, k)``.

    The returned array is read-only and shared between callers.
    """
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")
    return _isometry(n)


def pauli_string_apply(index: Sequence[int], vecs: np.ndarray) -> np.ndarray:
    """Apply ``sigma^{mu_1} x ... x sigma^{mu_N}`` to the columns of ``vecs``.

    Works on a ``2**N`` vector or a ``2**N x m`` stack without ever forming
    the Kronecker product: a Pauli string maps ``|b>`` to a phase times
    ``|b xor mask>``.
    """
    n = len(index)
    dim = 2**n
    b = np.arange(dim)
    flip = 0
    phase = np.ones(dim, dtype=complex)
    for q, mu in enumerate(index):
        bit = (b >> (n - 1 - q)) & 1
        if mu == 1:
            flip |= 1 << (n - 1 - q)
        elif mu == 2:
            flip |= 1 << (n - 1 - q)
            # sigma_y|0> = i|1>, sigma_y|1> = -i|0>
            phase *= np.where(bit == 0, 1j, -1j)
        elif mu == 3:
            phase *= np.where(bit == 0, 1.0, -1.0)
        elif mu != 0:
            raise DomainError(f"Pauli index must be in 0..3, got {mu!r}")
    out = np.empty_like(vecs, dtype=complex)
    if vecs.ndim == 1:
        out[b ^ flip] = phase * vecs
    else:
        out[b ^ flip] = phase[:, None] * vecs
    return out


def s_operator(index: Sequence[int]) -> np.ndarray:
    """Projection ``P^dagger (sigma^{mu_1} x ... x sigma^{mu_N}) P`` onto the Dicke basis."""
    index = tuple(index)
    if len(index) < 1:
        raise DomainError("multi-index must have length N >= 1")
    if not any(index):
        # P^dagger P is the identity; avoid the rounding of 1/sqrt(C(N,k))**2 * C(N,k)
        return np.eye(len(index) + 1, dtype=complex)
    p = symmetric_isometry(len(index))
    return p.conj().T @ pauli_string_apply(index, p)


@lru_cache(maxsize=4096)
def _s_operator_for_key(key: tuple[int, int, int, int]) -> np.ndarray:
    s = s_operator(key_to_index(key))
    s.setflags(write=False)
    return s


def s_operator_for_key(key: Sequence[int]) -> np.ndarray:
    """S-operator addressed by multiset key; cached and read-only."""
    return _s_operator_for_key(tuple(int(k) for k in key))
