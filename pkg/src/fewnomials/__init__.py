"""Certified counting and isolation of positive roots of fewnomial systems."""
from .bounds import (
    BoundReport,
    FormulaId,
    component_bounds,
    explicit_component_bound,
    khovanski_bound,
    kprime_bound,
    line_curve_bound,
    polygon_class_bound,
    pyramidal_bound,
    trinomial_m_bound,
)
from .config import DEFAULT_CONFIG, ConfigError, IsolationConfig, PrecisionPolicy
from .core import (
    DimensionError,
    DomainError,
    Fewnomial,
    FewnomialSystem,
    RootCertificate,
    Status,
    Term,
    evaluate,
    evaluate_exact,
    evaluate_interval,
    interval_jacobian_nonsingular,
    krawczyk_certify,
)
from .curve import curvature_numerator, feature_bound, trinomial_inflection_condition
from .interval import Box, IntervalR
from .polytope import (
    Polygon2,
    PolygonClass,
    classify_pair,
    edge_root_bound,
    is_pyramidal,
    minkowski_sum,
    mixed_volume_zero,
    newton_polygon,
)
from .solver import (
    ConsistencyError,
    NotPyramidalError,
    PipelineReport,
    count_report,
    haas_family,
    solve,
    solve_pyramidal,
    solve_trinomial_pair,
)
from .sysfile import ParseError, format_system, parse_system
from .transform import MonomialMap, canonicalize_pair
from .univariate import (
    RealExpPoly,
    TOneMinusTForm,
    certified_bound_trinomial,
    descartes_bound,
    isolate_positive_roots,
    isolate_roots,
    reduce_pair,
    rolle_root_bound,
)

__version__ = "0.1.0"
