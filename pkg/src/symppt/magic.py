"""Bell and magic bases obtained from the columns of R^(N/2), and concurrences.

Three phase conventions are offered for ``N = 2r``:

``raw``
    Columns of R^(r) as they are: column ``mu`` is ``prod_k sigma^{mu_k}``
    laid out over qubit pairs ``(k, k + r)``.
``bell``
    Every ``sigma^2`` factor replaced by ``i sigma^2``.  For N=2 these are the
    four Bell states, for N=4 the sixteen generalized Bell states.
``magic``
    A basis whose vectors all satisfy ``sigma_y^{xN} conj(e) = c e`` with one
    common phase c (-1 for N=2, +1 for N=4), so the
    (generalized) concurrence of ``psi = sum a_i e_i`` is ``|sum a_i^2|``.
    For N=2 the last three raw columns are multiplied by ``-i``.  For N=4 the
    bell columns labelled ``(mu1, mu2)`` with ``|mu1 - mu2|`` odd are
    multiplied by ``i``.  The odd-difference set is the 8-column set
    fixed by the conjugation condition: the pairs with difference 1 give
    only six columns, and ``(0, 3)``, ``(3, 0)`` must be included too
    (``magic_phase_classes`` recomputes this from the condition itself).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

import numpy as np

from .errors import DomainError, ValidationError
from .ppt import r_matrix
from .symmetric import pauli_string_apply

NORM_TOL = 1e-10


class Convention(str, Enum):
    RAW_R = "raw"
    BELL_TILDE = "bell"
    MAGIC = "magic"


@dataclass(frozen=True)
class BasisFamily:
    n: int
    convention: Convention
    labels: tuple[tuple[int, ...], ...]
    matrix: np.ndarray  # columns are the basis vectors

    @property
    def vectors(self) -> list[np.ndarray]:
        return [self.matrix[:, c] for c in range(self.matrix.shape[1])]


def _labels(r: int) -> list[tuple[int, ...]]:
    return list(product(range(4), repeat=r))


def basis_family(n: int, convention: Convention | str = Convention.RAW_R) -> BasisFamily:
    convention = Convention(convention)
    if n % 2 or n < 2:
        raise DomainError(f"basis families need an even N >= 2, got {n}")
    if convention is Convention.MAGIC and n not in (2, 4):
        raise DomainError(f"magic phases are only defined for N in (2, 4), got {n}")
    r = n // 2
    labels = _labels(r)
    mat = r_matrix(n, r).copy()
    if convention is Convention.MAGIC and n == 2:
        mat[:, 1:] *= -1j
    elif convention is not Convention.RAW_R:
        for c, lab in enumerate(labels):
            mat[:, c] *= 1j ** lab.count(2)
        if convention is Convention.MAGIC:
            for c, (m1, m2) in enumerate(labels):
                if abs(m1 - m2) % 2 == 1:
                    mat[:, c] *= 1j
    mat.setflags(write=False)
    return BasisFamily(n, convention, tuple(labels), mat)


def spin_flip(psi: np.ndarray) -> np.ndarray:
    """``sigma_y^{xN} conj(psi)``."""
    n = int(np.log2(len(psi)))
    return pauli_string_apply((2,) * n, np.conj(psi))


def magic_phase_classes(family: BasisFamily) -> np.ndarray:
    """Per column the phase c with ``sigma_y^{xN} conj(e) = c e``."""
    out = []
    for v in family.vectors:
        flipped = spin_flip(v)
        out.append(np.vdot(v, flipped))
    return np.array(out)


def _unit(psi: np.ndarray, dim: int) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (dim,):
        raise ValidationError(f"expected a vector of length {dim}, got shape {psi.shape}")
    if abs(np.linalg.norm(psi) - 1) > NORM_TOL:
        raise ValidationError(f"state must have unit norm, got {np.linalg.norm(psi):.12g}")
    return psi


def concurrence_magic(psi: np.ndarray) -> float:
    """Two-qubit pure-state concurrence ``|sum a_i^2|`` in the magic basis."""
    psi = _unit(psi, 4)
    alpha = basis_family(2, Convention.MAGIC).matrix.conj().T @ psi
    return float(abs(np.sum(alpha**2)))


def generalized_concurrence_magic(psi: np.ndarray) -> float:
    """Four-qubit generalized concurrence ``|sum_{i=1}^{16} a_i^2|``."""
    psi = _unit(psi, 16)
    alpha = basis_family(4, Convention.MAGIC).matrix.conj().T @ psi
    return float(abs(np.sum(alpha**2)))


def wootters_oracle(psi: np.ndarray) -> float:
    """``|<psi| sigma_y x sigma_y |psi*>|`` computed directly on the computational basis."""
    psi = _unit(psi, 4)
    sy = np.array([[0, -1j], [1j, 0]])
    return float(abs(psi.conj() @ np.kron(sy, sy) @ psi.conj()))
