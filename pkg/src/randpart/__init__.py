"""Exact machinery for random partition measures.

Layers, bottom up:

- ``partitions``: partitions, half-integer configurations, rim hooks.
- ``series`` / ``symfunc``: exact truncated series, Schur polynomials,
  symmetric group characters.
- ``schur_measure``: determinantal kernel and brute-force correlation oracle.
- ``toda``: tau sequences and the bilinear lattice check.
- ``thetas`` / ``npoint`` / ``uniform``: theta functions, n-point formulas,
  Frobenius correlations, limit shape and the geometric-multiplicity sampler.
- ``cli``: the ``randpart`` command line tool.
"""

from .errors import DomainError, NumericGuardError
from .partitions import (
    EMPTY,
    FrobeniusCoords,
    HalfInt,
    Partition,
    contains,
    enumerate_partitions,
    frobenius,
    hooks_and_contents,
    iter_partitions,
    rim_hook_removals,
    rim_hooks,
    s_set_prefix,
)
from .series import TruncSeries
from .symfunc import MiwaParams, character, h_coeffs, miwa_from_alphabet, schur, skew_schur
from .schur_measure import (
    JCoeffs,
    SchurParams,
    correlation,
    correlation_oracle,
    j_coeffs,
    kernel_entry,
    plancherel_params,
    weight,
    z_measure_params,
)
from .toda import TauSequence, tau_sequence, toda_bilinear_check
from .thetas import ThetaContext, qpochhammer, theta3, theta3_product, theta11, theta11_product, theta_deriv
from .npoint import NPointRequest, NPointValue, npoint_direct, npoint_theta, qdiff_residual
from .uniform import (
    ExpectedSize,
    bulk_limit,
    expected_size,
    frobenius_corr_enum,
    frobenius_corr_integral,
    sample,
    sample_many,
    vershik,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
