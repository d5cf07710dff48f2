"""(m;2) Sector-Disk and Partial-MDS array codes."""

from .codec import ArrayCode, ErasurePattern, StripeArray, Undecodable, decode, encode, parity_positions, syndrome
from .construction import (
    CodeParams,
    DeltaInputs,
    InvalidParameters,
    ParityCheckMatrix,
    Variant,
    build_H,
    build_H_prime,
    build_lemma_matrix,
    build_parity_check,
    delta_closed_form,
    delta_nonzero_condition,
    validate,
)
from .galois import AlgebraMismatch, Element, GaloisField, field_new
from .linalg import Matrix, determinant, is_invertible, rank, solve
from .ring import QuotientRing, ring_new
from .verify import VerificationReport, check_lemma, figure1_scenarios, verify

__version__ = "0.1.0"
