"""Certified vertex bounds for k-regular graphs with small second eigenvalue,
plus exhaustive enumeration and classification of the extremal graphs."""

__version__ = "0.1.0"

from .atlas import AtlasEntry, RootOf, atlas_all, atlas_graph, circulant
from .bounds import (
    BoundCertificate,
    IntervalSplit,
    bound_from_function,
    f_big,
    f_hat,
    linear_bound,
    m_min,
    machine_bound,
    shift_expand,
    two_term_bound,
    y_poly,
)
from .chebyshev import (
    ChebCombo,
    MonoPoly,
    alpha,
    from_mono,
    sup_on_interval,
    to_mono,
    v_eval,
    v_table,
)
from .enumeration import (
    CanonicalForm,
    ClassificationReport,
    canonical_form,
    classify,
    enumerate_labeled,
    enumerate_regular,
)
from .errors import (
    BudgetExceeded,
    DisconnectedGraph,
    Graph6Error,
    InfeasibleCertificate,
    NoFeasiblePoint,
    NotRegular,
    SpecgapError,
    UnknownName,
)
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .optimizer import OptimizerConfig, optimize_nterm, table_bounds
from .spectra import (
    Graph,
    Spectrum,
    adjacency_eigensystem,
    adjacency_spectrum,
    is_connected,
    is_regular,
    mu1,
    spectral_measure_moments,
    trace_formula_check,
)

__all__ = [
    "AtlasEntry",
    "BoundCertificate",
    "BudgetExceeded",
    "CanonicalForm",
    "ChebCombo",
    "ClassificationReport",
    "DisconnectedGraph",
    "Graph",
    "Graph6Error",
    "InfeasibleCertificate",
    "IntervalSplit",
    "MonoPoly",
    "NoFeasiblePoint",
    "NotRegular",
    "OptimizerConfig",
    "RootOf",
    "SpecgapError",
    "Spectrum",
    "UnknownName",
    "adjacency_eigensystem",
    "adjacency_spectrum",
    "alpha",
    "atlas_all",
    "atlas_graph",
    "bound_from_function",
    "canonical_form",
    "circulant",
    "classify",
    "enumerate_labeled",
    "enumerate_regular",
    "f_big",
    "f_hat",
    "from_mono",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "is_regular",
    "linear_bound",
    "m_min",
    "machine_bound",
    "mu1",
    "optimize_nterm",
    "shift_expand",
    "spectral_measure_moments",
    "sup_on_interval",
    "table_bounds",
    "to_mono",
    "trace_formula_check",
    "two_term_bound",
    "v_eval",
    "v_table",
    "y_poly",
]
