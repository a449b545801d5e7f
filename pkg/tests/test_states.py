import numpy as np
import pytest

from conftest import SIGMA, qubit_power
from symppt.errors import DomainError, ValidationError
from symppt.states import (
    GHZ,
    BlochVector,
    ClassicalMixture,
    Coherent,
    Dicke,
    RandomClassical,
    classical_density,
    coherent_state,
    embed_symmetric,
    ghz_vector,
    random_bloch,
    random_classical,
    random_density,
    spec_from_dict,
    spec_to_dict,
)
from symppt.symmetric import dicke_state
from symppt.tensor import tensor_from_state, validate_density


def test_coherent_examples():
    np.testing.assert_allclose(coherent_state(4, BlochVector(0.0, 1.2)), np.eye(5)[0], atol=1e-15)
    np.testing.assert_allclose(np.abs(coherent_state(2, BlochVector(np.pi, 0.0))), np.eye(3)[2], atol=1e-15)
    np.testing.assert_allclose(coherent_state(2, BlochVector(np.pi / 2, 0.0)), [0.5, 1 / np.sqrt(2), 0.5], atol=1e-15)


def test_single_qubit_coherent():
    b = BlochVector(0.9, 2.1)
    np.testing.assert_allclose(coherent_state(1, b), b.qubit(), atol=1e-15)
    assert np.linalg.norm(coherent_state(7, b)) == pytest.approx(1, abs=1e-14)


def test_embed_examples():
    np.testing.assert_allclose(embed_symmetric(coherent_state(3, BlochVector(0.0)), 3), np.eye(8)[0], atol=1e-15)
    for k in range(4):
        np.testing.assert_allclose(embed_symmetric(np.eye(4)[k], 3), dicke_state(3, k))
    plus = np.array([1, 1]) / np.sqrt(2)
    np.testing.assert_allclose(
        embed_symmetric(coherent_state(2, BlochVector(np.pi / 2)), 2), np.kron(plus, plus), atol=1e-15
    )
    with pytest.raises(DomainError):
        embed_symmetric(np.ones(3), 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_coherent_is_tensor_power(n, rng):
    for _ in range(50):
        b = random_bloch(rng)
        emb = embed_symmetric(coherent_state(n, b), n)
        assert np.max(np.abs(emb - qubit_power(b.qubit(), n))) <= 1e-12


def test_bloch_moments(rng):
    for _ in range(50):
        b = random_bloch(rng)
        q = b.qubit()
        moments = [np.vdot(q, s @ q) for s in SIGMA]
        np.testing.assert_allclose(moments, b.n, atol=1e-13)
        assert np.sum(b.n[1:] ** 2) == pytest.approx(1, abs=1e-14)


def test_classical_single_component():
    b = BlochVector(0.0, 0.0)
    rho, x = classical_density(3, ClassicalMixture((1.0,), (b,)))
    np.testing.assert_allclose(rho, np.diag([1, 0, 0, 0]), atol=1e-15)
    assert x[(3, 3, 3)] == 1 and x[(0, 0, 3)] == 1 and x[(1, 0, 0)] == 0


def test_classical_antipodal():
    mix = ClassicalMixture((0.5, 0.5), (BlochVector(0.0), BlochVector(np.pi)))
    _, x = classical_density(2, mix)
    assert x[(0, 0)] == pytest.approx(1)
    assert x[(3, 3)] == pytest.approx(1)
    assert x[(0, 3)] == pytest.approx(0, abs=1e-15)
    assert x[(1, 1)] == pytest.approx(0, abs=1e-15)
    assert x[(2, 2)] == pytest.approx(0, abs=1e-15)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_classical_routes_agree(n):
    for seed in range(5):
        rho, x = classical_density(n, random_classical(n, 12, seed))
        validate_density(rho, n)
        assert tensor_from_state(rho).max_abs_diff(x) <= 1e-12


def test_mixture_validation():
    with pytest.raises(ValidationError):
        ClassicalMixture((1.2, -0.2), (BlochVector(0), BlochVector(1)))
    with pytest.raises(ValidationError):
        ClassicalMixture((0.5, 0.4), (BlochVector(0), BlochVector(1)))


def test_random_generators_deterministic():
    np.testing.assert_array_equal(random_density(3, 9), random_density(3, 9))
    rho = random_density(3, 9)
    validate_density(rho, 3)
    mix = random_classical(4, 10, 5)
    assert mix == random_classical(4, 10, 5)
    assert sum(mix.weights) == pytest.approx(1, abs=1e-12)
    assert min(mix.weights) >= 0


def test_named_states():
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    np.testing.assert_allclose(embed_symmetric(ghz_vector(2), 2), bell, atol=1e-15)
    np.testing.assert_allclose(embed_symmetric(np.eye(3)[1], 2), [0, 1 / np.sqrt(2), 1 / np.sqrt(2), 0], atol=1e-15)
    ghz4 = np.zeros(16)
    ghz4[[0, 15]] = 1 / np.sqrt(2)
    np.testing.assert_allclose(embed_symmetric(ghz_vector(4), 4), ghz4, atol=1e-15)


def test_spec_round_trip():
    for spec in [Coherent(3, 0.2, 0.1), Dicke(4, 2), GHZ(4), RandomClassical(4, 5, 2)]:
        again = spec_from_dict(spec_to_dict(spec))
        assert again == spec
        validate_density(again.density(), spec.n)
    with pytest.raises(ValidationError):
        spec_from_dict({"kind": "nope", "N": 2})
    with pytest.raises(ValidationError):
        spec_from_dict({"kind": "dicke", "N": 2})
