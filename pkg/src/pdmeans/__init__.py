"""Two-variable matrix means on the positive definite cone and the
(weak) log-majorization relations between them."""
from pdmeans.linalg_core import (
    ConvergenceError,
    DimensionError,
    DomainError,
    HermitianMatrix,
    NotPositiveDefiniteError,
    PositiveDefiniteMatrix,
    SpectralDecomposition,
    Spectrum,
    congruence,
    eig_h,
    eig_settings,
    fun_h,
    hermitian_part,
    loewner_leq,
    power_h,
    random_pd,
    read_matrix,
    singular_values,
    write_matrix,
)
from pdmeans.majorization import (
    MajorizationVerdict,
    PositiveTuple,
    matrix_wlog,
    sorted_spectrum,
    weak_log_majorizes,
)
from pdmeans.means import (
    MeanKind,
    log_euclidean,
    mean,
    metric_geometric,
    power_deformed,
    riemannian_distance,
    spectral_geometric,
    wasserstein,
    wasserstein_alt,
    wasserstein_distance,
)

__version__ = "0.1.0"
