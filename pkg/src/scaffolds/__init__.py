"""Scaffold tensors over association schemes and their planar duals."""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    InvalidInput,
    InvalidRewrite,
    ResourceLimit,
    ScaffoldError,
    UnsupportedOperation,
    ValidationError,
)
from .groups import AbelianGroup, character_value, dual_group, make_abelian_group  # noqa: F401
from .schemes import (  # noqa: F401
    BMElement,
    Scheme,
    bm_to_matrix,
    check_p_polynomial,
    check_q_polynomial,
    intersection_numbers,
    krein_parameters,
    scheme_from_relations,
)
from .translation import TranslationScheme, dual_scheme, eigen_data, translation_scheme  # noqa: F401
from .diagrams import (  # noqa: F401
    Diagram,
    Edge,
    build_diagram,
    dual_diagram,
    reduce_parallel,
    reduce_series,
    trace_faces,
)
from .evaluate import (  # noqa: F401
    ScaffoldTensor,
    elimination_order,
    eval_bruteforce,
    eval_elimination,
    inner_product,
)
from .duality import (  # noqa: F401
    CoeffTensor,
    DualityReport,
    apply_psi,
    character_coefficients,
    dualize_combination,
    gamma_residual,
    verify_duality,
)
