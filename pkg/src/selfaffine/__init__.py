"""Exact connectedness tests for planar self-affine sets T(A, D v).

A is a 2x2 integer expanding matrix with characteristic polynomial
x^2 + b x + c and D a set of integers. Connectedness is decided two ways:
closed-form criteria in (b, c, m), and an exact lattice computation of T - T.
"""

from .algebra import (
    CollinearDigitSet,
    LatticePoint,
    NotExpandingError,
    Quadratic,
    ResourceLimitError,
    apply_A,
    is_expanding,
    min_eigen_modulus_at_least_two,
    mirror,
    spectral_data,
)
from .criteria import (
    HrpExpansion,
    Source,
    Status,
    Verdict,
    classify_consecutive,
    classify_nonconsecutive,
    conjecture_threshold,
    hrp_expansion,
    verify_expansion,
)
from .neighbors import (
    DifferenceSet,
    enumerate_neighbors,
    hata_connected,
    is_member,
    survivor_set,
    transition,
)
from .render import RasterConfig, rasterize, write_image
from .series import alpha_beta, alpha_beta_closed, tilde_sums

__version__ = "0.1.0"
