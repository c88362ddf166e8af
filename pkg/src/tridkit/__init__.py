"""Breakdown-free determinants and inverses of general tridiagonal matrices."""

from .core import (
    MinorTables,
    Sufficiency,
    TridiagonalMatrix,
    determinant,
    is_centrosymmetric,
    is_nonsingular_sufficient,
    is_positive_definite_symmetric,
    leading_minors,
    minor_tables,
    trailing_minors,
)
from .errors import (
    BreakdownEncountered,
    DimensionError,
    DimensionMismatch,
    IndexOutOfRange,
    NotSymmetricError,
    ParseError,
    SingularMatrixError,
)
from .inverse import (
    HadamardFactors,
    InverseMatrix,
    SignedOffdiagonals,
    hadamard_factors,
    hadamard_recombine,
    inverse_entry,
    inverse_entry_kumar,
    invert,
    invert_huang,
    zero_structure,
)
from .oracle import dense_determinant, dense_inverse, submatrix_minor, to_dense
from .scalars import Counted, FlopCounter, ScaledFloat
from .textio import format_tridiag, parse_tridiag, read_tridiag

__version__ = "0.1.0"
