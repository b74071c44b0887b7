"""SIC-POVM fiducial vectors and the extended Clifford group in small dimensions."""

from .analysis import (
    ConjectureReport,
    FiducialReport,
    StabilizerResult,
    apply,
    conjecture_scan,
    conjugate,
    d3_representative,
    diag_order3,
    eigenspace_dims,
    exact_fiducial,
    is_eigenvector,
    orbit_stats,
    stabilizer,
    verify_fiducial,
    zauner_check,
)
from .clifford import (
    CliffordElement,
    canonicalize,
    clifford_trace,
    compose,
    decompose_nonprime,
    element_order,
    enumerate_group,
    group_order,
    identity,
    inverse,
    is_canonical_order3,
    is_prime_matrix,
    kernel_elements,
    power,
    synthesize,
    validate_element,
)
from .errors import SicError
from .search import SearchConfig, SearchOutcome, polish, search_fiducial, sic_defect
from .weyl import OperatorMatrix, displacement, overlap_table, symplectic_form

__version__ = "0.1.0"
