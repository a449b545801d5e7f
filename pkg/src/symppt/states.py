"""State generators: spin coherent states, classical mixtures, Dicke/GHZ fixtures,
seeded random states and the embedding into the ``2**N`` computational space.

A Bloch vector ``(theta, phi)`` maps to the single-qubit state
``cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>``, so that ``<sigma^mu> = n_mu``
with ``n = (1, sin t cos p, sin t sin p, cos t)``.  The spin-j coherent state is
its N-fold tensor power; on the Dicke basis (``k = j - m``) its amplitudes are
``sqrt(C(N,k)) cos(theta/2)^(N-k) (e^{i phi} sin(theta/2))^k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt
from typing import Sequence

import numpy as np

from .errors import DomainError, ValidationError
from .symmetric import symmetric_isometry
from .tensor import SymmetricTensor, validate_density


@dataclass(frozen=True)
class BlochVector:
    theta: float
    phi: float = 0.0

    @property
    def n(self) -> np.ndarray:
        """Four-vector ``(1, nx, ny, nz)``."""
        st = np.sin(self.theta)
        return np.array([1.0, st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)])

    def qubit(self) -> np.ndarray:
        return np.array(
            [np.cos(self.theta / 2), np.exp(1j * self.phi) * np.sin(self.theta / 2)]
        )


@dataclass(frozen=True)
class ClassicalMixture:
    weights: tuple[float, ...]
    vectors: tuple[BlochVector, ...]

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if len(self.weights) != len(self.vectors) or not len(self.weights):
            raise ValidationError("mixture needs one weight per Bloch vector and at least one component")
        if np.any(w < 0):
            raise ValidationError("mixture weights must be non-negative")
        if abs(w.sum() - 1) > 1e-12:
            raise ValidationError(f"mixture weights must sum to 1, got {w.sum()!r}")


def coherent_state(n: int, b: BlochVector) -> np.ndarray:
    """Spin-N/2 coherent state as a Dicke-basis vector of length ``N+1``."""
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")
    c, s = np.cos(b.theta / 2), np.exp(1j * b.phi) * np.sin(b.theta / 2)
    return np.array([sqrt(comb(n, k)) * c ** (n - k) * s**k for k in range(n + 1)])


def embed_symmetric(state: np.ndarray, n: int) -> np.ndarray:
    """Map a Dicke-basis vector (``P v``) or matrix (``P rho P^dagger``) into ``2**N`` space."""
    state = np.asarray(state, dtype=complex)
    if state.shape[0] != n + 1 or state.ndim not in (1, 2) or (state.ndim == 2 and state.shape[1] != n + 1):
        raise DomainError(f"expected dimension {n + 1} for N={n}, got shape {state.shape}")
    p = symmetric_isometry(n)
    if state.ndim == 1:
        return p @ state
    return p @ state @ p.conj().T


def project_symmetric(op: np.ndarray, n: int) -> tuple[np.ndarray, float]:
    """Project a ``2**N`` operator onto the Dicke basis.

    Returns ``(P^dagger op P, residual)`` where the residual is the max-abs
    distance between ``op`` and its re-embedded projection.
    """
    op = np.asarray(op, dtype=complex)
    if op.shape != (2**n, 2**n):
        raise DomainError(f"expected a {2**n}x{2**n} matrix for N={n}, got {op.shape}")
    p = symmetric_isometry(n)
    small = p.conj().T @ op @ p
    return small, float(np.max(np.abs(p @ small @ p.conj().T - op)))


def pure_density(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def classical_density(n: int, mixture: ClassicalMixture) -> tuple[np.ndarray, SymmetricTensor]:
    """Density matrix and tensor of a convex mixture of coherent states.

    The matrix is ``sum_i w_i |alpha_i><alpha_i|``; the tensor is built
    independently as ``sum_i w_i n_i x ... x n_i``.
    """
    rho = np.zeros((n + 1, n + 1), dtype=complex)
    for w, b in zip(mixture.weights, mixture.vectors):
        rho += w * pure_density(coherent_state(n, b))

    def entry(index):
        return sum(w * np.prod(b.n[list(index)]) for w, b in zip(mixture.weights, mixture.vectors))

    return rho, SymmetricTensor.from_function(n, entry)


def random_density(n: int, seed=None) -> np.ndarray:
    """``G G^dagger / tr(G G^dagger)`` for a seeded complex Gaussian ``(N+1)x(N+1)`` matrix."""
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n + 1, n + 1)) + 1j * rng.standard_normal((n + 1, n + 1))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    return (rho + rho.conj().T) / 2


def random_bloch(rng: np.random.Generator) -> BlochVector:
    """Bloch vector uniformly distributed on the sphere."""
    return BlochVector(float(np.arccos(rng.uniform(-1, 1))), float(rng.uniform(0, 2 * np.pi)))


def random_classical(n: int, m: int, seed=None) -> ClassicalMixture:
    """``m`` uniform Bloch vectors with flat Dirichlet weights."""
    if n < 1 or m < 1:
        raise DomainError(f"need N >= 1 and m >= 1, got N={n}, m={m}")
    rng = np.random.default_rng(seed)
    vectors = tuple(random_bloch(rng) for _ in range(m))
    w = rng.dirichlet(np.ones(m))
    w = w / w.sum()
    return ClassicalMixture(tuple(float(x) for x in w), vectors)


def dicke_density(n: int, k: int) -> np.ndarray:
    if not 0 <= k <= n:
        raise DomainError(f"excitation number k must satisfy 0 <= k <= {n}, got {k}")
    rho = np.zeros((n + 1, n + 1), dtype=complex)
    rho[k, k] = 1
    return rho


def ghz_vector(n: int) -> np.ndarray:
    """``(|k=0> + |k=N>)/sqrt(2)`` on the Dicke basis."""
    if n < 2:
        raise DomainError(f"GHZ needs N >= 2, got {n}")
    psi = np.zeros(n + 1, dtype=complex)
    psi[0] = psi[n] = 1 / sqrt(2)
    return psi


def ghz_density(n: int) -> np.ndarray:
    return pure_density(ghz_vector(n))


# --- declarative state specs --------------------------------------------------------


@dataclass(frozen=True)
class Coherent:
    n: int
    theta: float
    phi: float = 0.0

    def density(self) -> np.ndarray:
        return pure_density(coherent_state(self.n, BlochVector(self.theta, self.phi)))


@dataclass(frozen=True)
class Dicke:
    n: int
    k: int

    def density(self) -> np.ndarray:
        return dicke_density(self.n, self.k)


@dataclass(frozen=True)
class GHZ:
    n: int

    def density(self) -> np.ndarray:
        return ghz_density(self.n)


@dataclass(frozen=True)
class Mixture:
    n: int
    mixture: ClassicalMixture

    def density(self) -> np.ndarray:
        return classical_density(self.n, self.mixture)[0]


@dataclass(frozen=True)
class RandomDensity:
    n: int
    seed: int

    def density(self) -> np.ndarray:
        return random_density(self.n, self.seed)


@dataclass(frozen=True)
class RandomClassical:
    n: int
    m: int
    seed: int

    def density(self) -> np.ndarray:
        return classical_density(self.n, random_classical(self.n, self.m, self.seed))[0]


@dataclass(frozen=True)
class Explicit:
    n: int
    matrix: np.ndarray

    def density(self) -> np.ndarray:
        return validate_density(self.matrix, self.n)


StateSpec = Coherent | Dicke | GHZ | Mixture | RandomDensity | RandomClassical | Explicit


def spec_from_dict(d: dict, default_seed: int = 0) -> StateSpec:
    """Parse the ``spec`` object of a state document.

    ``{"kind": "coherent", "N": 5, "theta": 1.0, "phi": 0.3}``,
    ``{"kind": "dicke", "N": 4, "k": 2}``, ``{"kind": "ghz", "N": 4}``,
    ``{"kind": "mixture", "N": 2, "components": [[w, theta, phi], ...]}``,
    ``{"kind": "random_density", "N": 3, "seed": 1}``,
    ``{"kind": "random_classical", "N": 6, "m": 30, "seed": 7}``.
    """
    try:
        kind = d["kind"]
        n = int(d["N"])
        if kind == "coherent":
            return Coherent(n, float(d["theta"]), float(d.get("phi", 0.0)))
        if kind == "dicke":
            return Dicke(n, int(d["k"]))
        if kind == "ghz":
            return GHZ(n)
        if kind == "mixture":
            comps = [tuple(float(v) for v in c) for c in d["components"]]
            return Mixture(
                n,
                ClassicalMixture(
                    tuple(c[0] for c in comps),
                    tuple(BlochVector(c[1], c[2] if len(c) > 2 else 0.0) for c in comps),
                ),
            )
        if kind == "random_density":
            return RandomDensity(n, int(d.get("seed", default_seed)))
        if kind == "random_classical":
            return RandomClassical(n, int(d["m"]), int(d.get("seed", default_seed)))
    except (KeyError, TypeError, IndexError) as exc:
        raise ValidationError(f"malformed state spec {d!r}: {exc}") from exc
    raise ValidationError(f"unknown state kind {d.get('kind')!r}")


def spec_to_dict(spec: StateSpec) -> dict:
    if isinstance(spec, Coherent):
        return {"kind": "coherent", "N": spec.n, "theta": spec.theta, "phi": spec.phi}
    if isinstance(spec, Dicke):
        return {"kind": "dicke", "N": spec.n, "k": spec.k}
    if isinstance(spec, GHZ):
        return {"kind": "ghz", "N": spec.n}
    if isinstance(spec, Mixture):
        comps = [[w, b.theta, b.phi] for w, b in zip(spec.mixture.weights, spec.mixture.vectors)]
        return {"kind": "mixture", "N": spec.n, "components": comps}
    if isinstance(spec, RandomDensity):
        return {"kind": "random_density", "N": spec.n, "seed": spec.seed}
    if isinstance(spec, RandomClassical):
        return {"kind": "random_classical", "N": spec.n, "m": spec.m, "seed": spec.seed}
    raise ValidationError("explicit matrices have no spec form")

