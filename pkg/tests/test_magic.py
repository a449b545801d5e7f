from itertools import product

import numpy as np
import pytest

from conftest import SIGMA, random_pure
from symppt.errors import DomainError, ValidationError
from symppt.magic import (
    Convention,
    basis_family,
    concurrence_magic,
    generalized_concurrence_magic,
    magic_phase_classes,
    spin_flip,
    wootters_oracle,
)
from symppt.ppt import r_matrix

S2 = 1 / np.sqrt(2)
BELL_STATES = [
    np.array([1, 0, 0, 1]) * S2,
    np.array([1, 0, 0, -1]) * S2,
    np.array([0, 1, 1, 0]) * S2,
    np.array([0, 1, -1, 0]) * S2,
]
HILL_WOOTTERS = [
    np.array([1, 0, 0, 1]) * S2,
    1j * np.array([1, 0, 0, -1]) * S2,
    1j * np.array([0, 1, 1, 0]) * S2,
    np.array([0, 1, -1, 0]) * S2,
]


def reduced_first_half(vec, n):
    d = 2 ** (n // 2)
    m = vec.reshape(d, d)
    return m @ m.conj().T


def equal_up_to_phase(a, b):
    return abs(abs(np.vdot(a, b)) - 1) <= 1e-12


def matches_up_to_order_and_phase(family, targets):
    return all(any(equal_up_to_phase(v, t) for v in family.vectors) for t in targets)


@pytest.mark.parametrize("n,conv", [(2, c) for c in Convention] + [(4, c) for c in Convention] + [(6, "bell")])
def test_orthonormal_and_maximally_entangled(n, conv):
    fam = basis_family(n, conv)
    m = fam.matrix
    assert np.max(np.abs(m.conj().T @ m - np.eye(2**n))) <= 1e-12
    d = 2 ** (n // 2)
    for v in fam.vectors:
        assert np.max(np.abs(reduced_first_half(v, n) - np.eye(d) / d)) <= 1e-12


def test_raw_is_r_matrix():
    np.testing.assert_array_equal(basis_family(2, "raw").matrix, r_matrix(2, 1))
    assert basis_family(4, "raw").labels[5] == (1, 1)


def test_bell_convention_gives_bell_states():
    fam = basis_family(2, Convention.BELL_TILDE)
    for v in fam.vectors:
        assert np.max(np.abs(v.imag)) == 0
    assert matches_up_to_order_and_phase(fam, BELL_STATES)


def test_magic_convention_matches_hill_wootters():
    fam = basis_family(2, Convention.MAGIC)
    # columns are ordered by Pauli label (I, x, y, z); the Hill-Wootters order is (e1, e3, e4, e2).
    # Only real signs may differ, since sum a_i^2 is insensitive to them but not to factors of i.
    for v, hw in zip(fam.vectors, [HILL_WOOTTERS[k] for k in (0, 2, 3, 1)]):
        ratio = np.vdot(hw, v)
        assert abs(ratio - 1) <= 1e-12 or abs(ratio + 1) <= 1e-12


def test_bell_n4_generalized_bell_states():
    fam = basis_family(4, "bell")
    for (m1, m2), v in zip(fam.labels, fam.vectors):
        t1 = SIGMA[m1] * (1j if m1 == 2 else 1)
        t2 = SIGMA[m2] * (1j if m2 == 2 else 1)
        expected = np.einsum("ac,bd->abcd", t1, t2).reshape(16) / 2
        np.testing.assert_allclose(v, expected, atol=1e-15)


def test_magic_phase_selection_is_the_conjugation_condition():
    """The 8 rephased N=4 columns are exactly those whose spin-flip phase differs from the rest."""
    bell = basis_family(4, "bell")
    phases = magic_phase_classes(bell)
    assert np.allclose(np.abs(phases), 1)
    minority = {lab for lab, c in zip(bell.labels, phases) if abs(c + 1) < 1e-12}
    majority = {lab for lab, c in zip(bell.labels, phases) if abs(c - 1) < 1e-12}
    assert len(minority) == 8 and len(majority) == 8
    assert minority == {lab for lab in product(range(4), repeat=2) if abs(lab[0] - lab[1]) % 2 == 1}
    diff_one = {lab for lab in product(range(4), repeat=2) if abs(lab[0] - lab[1]) == 1}
    assert len(diff_one) == 6 and diff_one < minority
    np.testing.assert_allclose(magic_phase_classes(basis_family(4, "magic")), 1, atol=1e-12)
    np.testing.assert_allclose(magic_phase_classes(basis_family(2, "magic")), -1, atol=1e-12)


def test_magic_unsupported():
    with pytest.raises(DomainError):
        basis_family(6, "magic")
    with pytest.raises(DomainError):
        basis_family(3, "raw")


def test_concurrence_examples():
    bell = BELL_STATES[0]
    assert wootters_oracle(bell) == pytest.approx(1, abs=1e-12)
    assert concurrence_magic(bell) == pytest.approx(1, abs=1e-10)
    product_state = np.kron([1, 0], [S2, S2])
    assert concurrence_magic(product_state) == pytest.approx(0, abs=1e-12)
    t = np.pi / 8
    psi = np.array([np.cos(t), 0, 0, np.sin(t)])
    assert wootters_oracle(psi) == pytest.approx(np.sin(2 * t), abs=1e-12)
    assert concurrence_magic(psi) == pytest.approx(np.sin(np.pi / 4), abs=1e-10)
    assert wootters_oracle(np.array([0, 1, 0, 0])) == 0
    assert wootters_oracle(BELL_STATES[3]) == pytest.approx(1, abs=1e-12)


def test_concurrence_random(rng):
    for _ in range(200):
        psi = random_pure(rng, 4)
        assert abs(concurrence_magic(psi) - wootters_oracle(psi)) <= 1e-10


def test_generalized_concurrence_bell_pairs():
    bell = BELL_STATES[0].reshape(2, 2)
    # Bell pairs on qubits (1,3) and (2,4)
    psi = np.einsum("ac,bd->abcd", bell, bell).reshape(16)
    assert generalized_concurrence_magic(psi) == pytest.approx(1, abs=1e-12)
    prod = np.zeros(16)
    prod[0] = 1
    assert generalized_concurrence_magic(prod) == pytest.approx(0, abs=1e-12)


def test_generalized_concurrence_matches_spin_flip(rng):
    for _ in range(50):
        psi = random_pure(rng, 16)
        oracle = abs(np.vdot(psi, spin_flip(psi)))
        assert generalized_concurrence_magic(psi) == pytest.approx(oracle, abs=1e-12)


def test_norm_validation():
    with pytest.raises(ValidationError):
        concurrence_magic(np.array([1, 1, 0, 0]))
    with pytest.raises(ValidationError):
        wootters_oracle(np.ones(3) / np.sqrt(3))
