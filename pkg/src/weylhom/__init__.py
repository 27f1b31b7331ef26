"""weylhom: exact Hom spaces between Weyl modules of Schur algebras over GF(p),
with a machine check of the first-row stabilization property and an
independent symmetric-group oracle."""

from . import tableaux as _tableaux
from . import weyl as _weyl
from .gfp import (
    InconsistentSystemError,
    MatrixGFp,
    NonPrimeModulusError,
    binom_mod,
    kernel_basis,
    multinomial_mod,
)
from .homspace import (
    HomElement,
    StabilizationReport,
    hom_dim,
    phi_eval,
    phi_eval_terms,
    relation_matrix,
    stabilize_hom,
    verify_stabilization,
)
from .polyalg import ExpansionLimitError, dp_comult, dp_mult, dprime, mono
from .shapes import (
    all_partitions,
    composition,
    dominates,
    parse_partition,
    partition,
    stabilize,
    transpose,
    weyl_dimension,
)
from .specht import oracle_compare, specht_hom_dim, specht_rep
from .tableaux import Tableau, enumerate_standard, from_row_entries, is_class_a
from .weyl import (
    WeylCoords,
    relation_generators,
    standard_image_matrix,
    straighten,
    two_row_straighten,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop all memoized straightening engines, enumerations, and Hom results."""
    from . import homspace as _homspace
    from . import specht as _specht

    _weyl.clear_caches()
    _tableaux.clear_caches()
    _homspace.clear_caches()
    _specht.clear_caches()
