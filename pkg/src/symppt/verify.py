"""Batch runner over the numerical identities the package relies on."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlations import correlation_matrix, schur_equivalence_check
from .ppt import r_matrix, similarity_residual, spectrum_deviation, t_matrix, trace_identity_check
from .states import classical_density, random_classical, random_density
from .tensor import contraction_check, state_from_tensor, tensor_from_state

MAX_N = 10

THRESHOLDS = {
    "similarity": 1e-11,
    "spectrum": 1e-10,
    "r_unitarity": 1e-12,
    "round_trip": 1e-11,
    "contraction": 1e-12,
    "trace_identity": 1e-13,
    "schur_equivalence": 0.0,  # number of disagreements
    "classical_necessity": None,  # uses the user tolerance
}


@dataclass(frozen=True)
class PropertyResult:
    name: str
    cases: int
    worst: float
    threshold: float
    passed: bool


def _random_admissible_y(rng: np.random.Generator) -> np.ndarray:
    y = rng.standard_normal((4, 4))
    y = y + y.T
    y[0, 0] = y[1, 1] + y[2, 2] + y[3, 3]
    return y


def run_suite(
    n_max: int = 6,
    seeds: int = 5,
    tol: float = 1e-10,
    seed: int = 0,
    extra_states: list[np.ndarray] | None = None,
) -> list[PropertyResult]:
    """Evaluate every property for ``2 <= N <= n_max`` on ``seeds`` random states per N.

    ``extra_states`` are Dicke-basis density matrices folded into the
    similarity, spectrum, round-trip and contraction sweeps.
    """
    if not 2 <= n_max <= MAX_N:
        raise ValueError(f"n_max must be between 2 and {MAX_N}")
    rng = np.random.default_rng(seed)
    worst = {name: 0.0 for name in THRESHOLDS}
    cases = {name: 0 for name in THRESHOLDS}

    def record(name, value):
        worst[name] = max(worst[name], value)
        cases[name] += 1

    states = [random_density(n, rng.integers(2**32)) for n in range(2, n_max + 1) for _ in range(seeds)]
    states += list(extra_states or [])
    for rho in states:
        n = rho.shape[0] - 1
        x = tensor_from_state(rho)
        record("round_trip", float(np.max(np.abs(state_from_tensor(x) - rho))))
        if n >= 2:
            record("contraction", contraction_check(x))
        for r in range(1, n // 2 + 1):
            record("similarity", similarity_residual(rho, r, x))
            record("spectrum", spectrum_deviation(rho, r, x))
            if n % 2 == 0:
                chk = schur_equivalence_check(rho, r, tol)
                margin = min(abs(chk.block_min_eigenvalue), abs(chk.schur_min_eigenvalue))
                if margin > 1e-8:
                    record("schur_equivalence", 0.0 if chk.agree else 1.0)

    for n in range(2, n_max + 1):
        for r in range(1, n // 2 + 1):
            rm = r_matrix(n, r)
            record("r_unitarity", float(np.max(np.abs(rm.conj().T @ rm - np.eye(2**n)))))

    for _ in range(10 * seeds):
        record("trace_identity", trace_identity_check(_random_admissible_y(rng)))

    neg_min = 0.0
    for n in range(2, n_max + 1, 2):
        for _ in range(seeds):
            mix = random_classical(n, int(rng.integers(1, 51)), rng.integers(2**32))
            _, x = classical_density(n, mix)
            for r in range(1, n // 2 + 1):
                neg_min = min(neg_min, float(np.linalg.eigvalsh(t_matrix(x, r))[0]))
                neg_min = min(neg_min, float(np.linalg.eigvalsh(correlation_matrix(x, r))[0]))
                cases["classical_necessity"] += 1
    worst["classical_necessity"] = -neg_min

    out = []
    for name, limit in THRESHOLDS.items():
        limit = tol if limit is None else limit
        out.append(PropertyResult(name, cases[name], worst[name], limit, worst[name] <= limit))
    return out
