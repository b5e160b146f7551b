"""Lyapunov graphs and templates of nonsingular Smale flows on 3-manifolds."""

from nsflow._core import (
    BalanceViolation,
    BoundaryReport,
    ClosedComponent,
    Diagnostic,
    LyapunovGraph,
    S3Condition,
    S3Report,
    SummandReport,
    SurfaceComponent,
    Template,
    TemplateVertexReport,
    build_lemma34,
    build_lorenz,
    build_prop35,
    build_section5,
    check_lemma41,
    check_s3,
    check_template_vertex,
    cycle_rank,
    enumerate_small_templates,
    find_matrix_with_k,
    is_irreducible,
    kernel_dim,
    mod2_reduce,
    nsf_balance_check,
    reachable_by_nonzero,
    ssft_k,
    summand_lower_bound,
    surgery_connect,
    template_genus,
    thicken_boundary,
    validate_abstract,
    validate_template,
    vanishing_zero_edges,
    vertex_residual,
)

__all__ = [
    "BalanceViolation",
    "BoundaryReport",
    "ClosedComponent",
    "Diagnostic",
    "LyapunovGraph",
    "S3Condition",
    "S3Report",
    "SummandReport",
    "SurfaceComponent",
    "Template",
    "TemplateVertexReport",
    "build_lemma34",
    "build_lorenz",
    "build_prop35",
    "build_section5",
    "check_lemma41",
    "check_s3",
    "check_template_vertex",
    "cycle_rank",
    "enumerate_small_templates",
    "find_matrix_with_k",
    "is_irreducible",
    "kernel_dim",
    "mod2_reduce",
    "nsf_balance_check",
    "reachable_by_nonzero",
    "ssft_k",
    "summand_lower_bound",
    "surgery_connect",
    "template_genus",
    "thicken_boundary",
    "validate_abstract",
    "validate_template",
    "vanishing_zero_edges",
    "vertex_residual",
]
