"""Exact combinatorics for irreducible Specht modules of type A Hecke algebras at q = -1."""

__version__ = "0.1.0"

from specht.errors import CacheCorruptionError, DomainError, LLTInvariantError
from specht.partitions import (
    Partition,
    broken_witness,
    conjugate,
    dominates,
    enumerate_in_box,
    enumerate_unbroken_doubly_singular_cores,
    format_partition,
    hook_length,
    hook_lengths,
    is_broken,
    is_doubly_singular,
    is_e_core,
    is_e_jm,
    is_e_regular,
    is_prime,
    jm_violation,
    last_repeat_row,
    parse_partition,
)
from specht.laurent import LaurentPolynomial, bar_symmetric_part, quantum_integer
from specht.fock import (
    FockVector,
    addable_nodes,
    apply_divided_power,
    e_core,
    first_approximation,
    ladder_sequence,
    removable_nodes,
    residue,
)
from specht.llt import (
    Block,
    BlockCache,
    DecompositionRow,
    canonical_basis_block,
    decomposition_row,
    default_cache,
    row_sum_at_one,
)
from specht.classify import (
    CertificateStep,
    ClassificationReport,
    Status,
    Verdict,
    certify,
    classify_all,
    is_char0_irreducible,
)
