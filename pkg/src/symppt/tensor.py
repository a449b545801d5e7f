"""Real symmetric tensor representation of spin-j (symmetric N-qubit) states.

A state ``rho`` on the Dicke basis is encoded by ``X_{mu_1...mu_N} =
tr(rho S_{mu_1...mu_N})`` and recovered by
``rho = 2**-N * sum_{mu} X_mu S_mu`` over all ``4**N`` full indices.  Because
``X`` is fully symmetric it is stored compactly, one value per multiset key
``(k0, k1, k2, k3)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .errors import ConsistencyError, DomainError, ValidationError
from .symmetric import all_keys, multiplicity, multiset_key, s_operator_for_key

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
IMAG_DROP_TOL = 1e-12
IMAG_ERROR_TOL = 1e-9


def validate_density(rho: np.ndarray, n: int | None = None) -> np.ndarray:
    """Check that ``rho`` is a valid Dicke-basis density matrix and return it as complex.

    Raises ValidationError if it is not square, not Hermitian to 1e-12, does
    not have unit trace to 1e-12, or has an eigenvalue below -1e-10.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValidationError(f"density matrix must be square, got shape {rho.shape}")
    if n is not None and rho.shape[0] != n + 1:
        raise ValidationError(f"expected a {n + 1}x{n + 1} matrix for N={n}, got {rho.shape}")
    if rho.shape[0] < 2:
        raise ValidationError("density matrix must describe at least one qubit")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > HERMITIAN_TOL:
        raise ValidationError(f"matrix is not Hermitian (deviation {herm:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1) > TRACE_TOL:
        raise ValidationError(f"trace must be 1, got {tr.real:.15g}")
    lam = np.linalg.eigvalsh(rho)[0]
    if lam < -PSD_TOL:
        raise ValidationError(f"matrix is not positive semidefinite (min eigenvalue {lam:.3e})")
    return rho


@dataclass(frozen=True)
class SymmetricTensor:
    """Rank-N real symmetric tensor keyed by multiset ``(k0, k1, k2, k3)``."""

    n: int
    values: Mapping[tuple[int, int, int, int], float] = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"tensor rank must be >= 1, got {self.n}")
        vals = {tuple(int(c) for c in k): float(v) for k, v in self.values.items()}
        missing = set(all_keys(self.n)) - set(vals)
        if missing or len(vals) != len(all_keys(self.n)):
            raise ValidationError(f"tensor of rank {self.n} has missing or extra keys")
        object.__setattr__(self, "values", MappingProxyType(vals))

    def __getitem__(self, index: Sequence[int]) -> float:
        """Entry at a full multi-index of length N (any order)."""
        if len(index) != self.n:
            raise DomainError(f"expected {self.n} indices, got {len(index)}")
        return self.values[multiset_key(index)]

    def at_key(self, key: Sequence[int]) -> float:
        return self.values[tuple(key)]

    def __add__(self, other: "SymmetricTensor") -> "SymmetricTensor":
        if other.n != self.n:
            raise DomainError("cannot add tensors of different rank")
        return SymmetricTensor(self.n, {k: v + other.values[k] for k, v in self.values.items()})

    def __mul__(self, scalar: float) -> "SymmetricTensor":
        return SymmetricTensor(self.n, {k: scalar * v for k, v in self.values.items()})

    __rmul__ = __mul__

    def full(self) -> np.ndarray:
        """Expand to the dense ``(4,)*N`` array."""
        return _expand(self)

    def max_abs_diff(self, other: "SymmetricTensor") -> float:
        return max(abs(v - other.values[k]) for k, v in self.values.items())

    @classmethod
    def from_function(cls, n: int, func) -> "SymmetricTensor":
        """Build from ``func(index)`` evaluated on one canonical index per key."""
        from .symmetric import key_to_index

        return cls(n, {k: float(func(key_to_index(k))) for k in all_keys(n)})


@lru_cache(maxsize=16)
def _key_lookup(n: int) -> tuple[np.ndarray, list[tuple[int, int, int, int]]]:
    """Per full index (flattened, base-4 big endian) the position of its key."""
    keys = all_keys(n)
    pos = {k: i for i, k in enumerate(keys)}
    digits = np.indices((4,) * n).reshape(n, -1)
    counts = np.stack([(digits == a).sum(axis=0) for a in range(4)])
    code = (counts[1] * (n + 1) + counts[2]) * (n + 1) + counts[3]
    table = np.empty((n + 1) ** 3, dtype=np.intp)
    for k, i in pos.items():
        table[(k[1] * (n + 1) + k[2]) * (n + 1) + k[3]] = i
    lookup = table[code]
    lookup.setflags(write=False)
    return lookup, keys


def _expand(x: SymmetricTensor) -> np.ndarray:
    lookup, keys = _key_lookup(x.n)
    compact = np.array([x.values[k] for k in keys])
    return compact[lookup].reshape((4,) * x.n)


def tensor_from_state(rho: np.ndarray) -> SymmetricTensor:
    """Tensor ``X`` with entries ``tr(rho S_mu)`` for a Dicke-basis density matrix."""
    rho = validate_density(rho)
    n = rho.shape[0] - 1
    values = {}
    worst = 0.0
    for key in all_keys(n):
        # tr(rho S) = sum_ij rho_ij S_ji
        val = np.sum(rho * s_operator_for_key(key).T)
        worst = max(worst, abs(val.imag))
        values[key] = val.real
    if worst > IMAG_ERROR_TOL:
        raise ConsistencyError(f"tensor entries have imaginary part {worst:.3e}")
    return SymmetricTensor(n, values)


def state_from_tensor(x: SymmetricTensor, tol: float = 1e-12) -> np.ndarray:
    """Reconstruct the Dicke-basis density matrix, summing over keys with multiplicities."""
    norm = x.values[(x.n, 0, 0, 0)]
    if abs(norm - 1) > tol:
        raise ValidationError(f"tensor is not normalised: X_0...0 = {norm!r}")
    rho = np.zeros((x.n + 1, x.n + 1), dtype=complex)
    for key, val in x.values.items():
        if val != 0.0:
            rho += multiplicity(key) * val * s_operator_for_key(key)
    return rho / 2**x.n


def contraction_check(x: SymmetricTensor) -> float:
    """Largest violation of ``sum_{a=1..3} X_{a a mu...} = X_{0 0 mu...}`` over all tails."""
    if x.n < 2:
        raise DomainError("contraction property needs rank >= 2")
    worst = 0.0
    for tail in all_keys(x.n - 2):
        def at(extra):
            return x.values[tuple(t + e for t, e in zip(tail, extra))]

        lhs = at((0, 2, 0, 0)) + at((0, 0, 2, 0)) + at((0, 0, 0, 2))
        worst = max(worst, abs(lhs - at((2, 0, 0, 0))))
    return worst


def partial_trace_tensor(x: SymmetricTensor, k: int) -> SymmetricTensor:
    """Tensor of the k-qubit reduced state: pad every index with ``N - k`` zeros."""
    if not 1 <= k <= x.n:
        raise DomainError(f"k must satisfy 1 <= k <= {x.n}, got {k}")
    pad = x.n - k
    return SymmetricTensor(k, {key: x.values[(key[0] + pad, *key[1:])] for key in all_keys(k)})
