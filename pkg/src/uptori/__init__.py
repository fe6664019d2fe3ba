"""Universal partial words, cycles, matrices and tori.

A partial object over ``{0..a-1}`` may hold the wildcard ``◊`` (stored as
``-1``), which matches any letter.  It is *universal* for a window shape when
every total pattern of that shape is covered exactly once.
"""

from .construct import (
    Placement,
    RotationSequence,
    build_m_us,
    build_m_W,
    build_no_diamondicity,
    certify_m_us,
    lift,
    lift_family,
    locate,
    mu,
    torus_from_family,
)
from .errors import UptoriError
from .families import (
    CutSet,
    Family,
    enumerate_slicings,
    probe_equal_slicings,
    slice_word,
    verify_family,
)
from .generate import (
    alternating_debruijn,
    count_debruijn_bruteforce,
    debruijn_cycle,
    is_alternating_debruijn,
    perfect_necklace,
    unroll_alternating,
)
from .grids import (
    MATRIX,
    TORUS,
    PartialGrid,
    WindowShape,
    canonical_form,
    grid_coverage,
    subarray,
    triviality,
    verify_upmatrix,
    verify_uptorus,
    window_diamond_counts,
)
from .ledger import DIAMOND, CoverageLedger, Triviality, VerificationReport
from .search import Catalog, SearchSpec, search, search_nontrivial
from .words import (
    CyclicPartialWord,
    PartialWord,
    coverage_ledger,
    diamondicity_of,
    verify_upcycle,
    verify_upword,
)

__all__ = [name for name in dir() if not name.startswith("_")]
