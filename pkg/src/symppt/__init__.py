"""Classicality (full separability) certification for symmetric multi-qubit states.

The state of N qubits restricted to the symmetric subspace is handled as a
spin-N/2 density matrix on the Dicke basis, converted to its real symmetric
Pauli tensor, and tested against the partial-transpose criteria expressed as
``T^(r) >= 0`` and against the correlation matrices ``C^(r) >= 0``.
"""

__version__ = "0.1.0"

from .correlations import correlation_matrix, reduced_block_extract, schur_block, schur_equivalence_check
from .errors import ConsistencyError, DomainError, SymPPTError, ValidationError
from .magic import (
    BasisFamily,
    Convention,
    basis_family,
    concurrence_magic,
    generalized_concurrence_magic,
    wootters_oracle,
)
from .ppt import (
    CriterionReport,
    CriterionResult,
    evaluate_criteria,
    partial_transpose,
    r_matrix,
    similarity_residual,
    spectrum_deviation,
    t_matrix,
    trace_identity_check,
)
from .states import (
    BlochVector,
    ClassicalMixture,
    classical_density,
    coherent_state,
    embed_symmetric,
    ghz_density,
    ghz_vector,
    dicke_density,
    random_classical,
    random_density,
)
from .symmetric import dicke_state, pauli, s_operator, symmetric_isometry
from .tensor import (
    SymmetricTensor,
    contraction_check,
    partial_trace_tensor,
    state_from_tensor,
    tensor_from_state,
)
