"""Independent brute-force oracles shared by the test modules.

Nothing here calls into the code paths under test except ``dicke_state``,
which is checked separately against enumeration.
"""

from functools import reduce
from itertools import product

import numpy as np
import pytest

SIGMA = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def kron_all(mats):
    return reduce(np.kron, mats, np.ones((1, 1), dtype=complex))


def pauli_string(index):
    return kron_all([SIGMA[m] for m in index])


def dicke_oracle(n, k):
    vec = np.zeros(2**n, dtype=complex)
    hits = [b for b in range(2**n) if bin(b).count("1") == k]
    vec[hits] = 1 / np.sqrt(len(hits))
    return vec


def isometry_oracle(n):
    return np.stack([dicke_oracle(n, k) for k in range(n + 1)], axis=1)


def embed_oracle(rho):
    n = rho.shape[0] - 1
    p = isometry_oracle(n)
    return p @ rho @ p.conj().T


def pauli_expectation(big, index):
    return np.trace(big @ pauli_string(index))


def tensor_entry_oracle(rho, index):
    """X_index = <sigma^{mu_1} x ... x sigma^{mu_N}> on the embedded state."""
    return pauli_expectation(embed_oracle(rho), index)


def pt_oracle(big, n, r):
    """Partial transpose of the last r qubits by explicit index loops."""
    dim = 2**n
    mask = 2**r - 1
    out = np.empty_like(big)
    for a in range(dim):
        for b in range(dim):
            a1, a2 = a >> r, a & mask
            b1, b2 = b >> r, b & mask
            out[a, b] = big[(a1 << r) | b2, (b1 << r) | a2]
    return out


def partial_trace_last(big, n, k):
    """Trace out the last n-k qubits."""
    d1, d2 = 2**k, 2 ** (n - k)
    return np.einsum("ajbj->ab", big.reshape(d1, d2, d1, d2))


def r_oracle(n, r, pairing=None):
    """R^(r) from its entry formula; ``pairing[k]`` is the transposed qubit paired with qubit n-2r+k."""
    m = n - 2 * r
    pairing = pairing or [m + r + k for k in range(r)]
    out = np.zeros((2**n, 2**n), dtype=complex)
    for a in product((0, 1), repeat=n):
        row = int("".join(map(str, a)), 2)
        for mu in product(range(4), repeat=r):
            for i in product((0, 1), repeat=m):
                col = (int("".join(map(str, mu)), 4) if r else 0) * 2**m + (int("".join(map(str, i)), 2) if m else 0)
                val = 1.0 + 0j
                for k in range(m):
                    val *= a[k] == i[k]
                for k in range(r):
                    val *= SIGMA[mu[k]][a[m + k], a[pairing[k]]]
                out[row, col] = val / 2 ** (r / 2)
    return out


def random_pure(rng, dim):
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def qubit_power(vec, n):
    return reduce(np.kron, [np.asarray(vec, dtype=complex)] * n, np.ones(1, dtype=complex))


@pytest.fixture
def rng():
    return np.random.default_rng(20160624)


# acceptance summary ---------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
