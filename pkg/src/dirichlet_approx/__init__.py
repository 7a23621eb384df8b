"""Weighted Dirichlet spaces on the unit disk: local and measure-weighted
Dirichlet integrals, summability-kernel polynomial approximants, and
superharmonic-weight area integrals."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .approx import (
    ConvergenceRecord,
    build_fn,
    build_fn_rearranged,
    build_pn,
    convergence_run,
    counterexample_run,
    taylor_tail_fn,
)
from .kernels import (
    WeightArray,
    apply_to_g,
    fejer,
    table_array,
    taylor_truncation,
    validate,
    vallee_poussin,
)
from .local import LocalDecomposition, decompose, lemma_poly_ratio, local_norm_sq
from .measures import (
    AtomicMeasure,
    CircleMeasure,
    DiskDensityMeasure,
    DiskMeasure,
    dirac,
    dirichlet_mu,
    dmu_norm_sq,
    uniform_circle,
)
from .series import (
    CoefficientSeries,
    Kind,
    as_disk_point,
    derivative,
    evaluate,
    h2_norm_sq,
    make_family,
)
from .superharm import (
    PowerWeight,
    SuperharmonicWeight,
    area_dirichlet,
    identity_check,
    omega_eval,
    power_weight_comparison,
)
