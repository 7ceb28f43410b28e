"""Combinatorics of translation quivers and roots of their translation.

The package bundles four toolboxes that share one quiver type:

* :mod:`tauroot.quiver` — finite colored multidigraphs with JSON/DOT
  round trips, underlying-graph Dynkin classification and reference
  Dynkin orientations;
* :mod:`tauroot.ztranslation` — the stable translation quiver over an
  acyclic generator, automorphisms commuting with its translation,
  l-th roots of the inverse translation, root search, slices and the
  cyclic normal form of a root;
* :mod:`tauroot.mckay` — McKay quivers of cyclic weight systems,
  hereditariness of idempotent quotients, subset-sum multiplicities
  and two-level/three-level endomorphism quivers;
* :mod:`tauroot.cyreduce` — doubling a presented algebra into the
  quiver of the sum with its shift, with a hereditariness proxy and a
  reduction report;
* :mod:`tauroot.shiftedsum` — abstract builders for quivers of shifted
  sums from middle-term multiplicity tables.

The command line surface lives in :mod:`tauroot.cli` (entry point
``tauroot``).
"""

from .errors import (
    ArrowNotPreserved,
    BadPartition,
    BadRange,
    BadRemovedSet,
    CyclicGenerator,
    DanglingArrow,
    DuplicateArrowRecord,
    DuplicateVertex,
    MarginTooSmall,
    MissingB,
    NonPositiveMult,
    NormalFormViolated,
    NotABijection,
    NotARoot,
    NotHereditary,
    NotSemisimple,
    NotSL,
    ParseError,
    QuiverError,
    SchemaError,
    SigmaNotBijective,
    SymmetryViolated,
    VertexNotKept,
    WrongDimension,
)
from .quiver import (
    Arrow,
    ColoredQuiver,
    DynkinLabel,
    UnderlyingGraph,
    arrow_bundles,
    deserialize,
    dynkin_classify,
    dynkin_quiver,
    graph_automorphism_extends,
    parse_dot,
    quiver,
    quiver_from_obj,
    serialize,
    to_dot,
)
from .ztranslation import (
    NormalFormPartition,
    TQAutomorphism,
    ZQVertex,
    ZWindow,
    autom_from_obj,
    autom_to_obj,
    build_window,
    check_root_normal_form,
    construct_F_section,
    find_normal_form_partition,
    find_tau_roots,
    is_F_section,
    is_root_of_tau,
    is_section,
    is_valid_autom,
    no_backward_arrows,
    root_from_normal_form,
    section_quiver,
    sigma_orbits,
    tau_inverse,
    validate_autom,
    zq_name,
)
from .mckay import (
    ARAngle,
    CyclicWeights,
    ar_angle,
    h_quiver_d3,
    h_quiver_d4,
    is_hereditary_quotient,
    mckay_quiver,
    normalize_kept,
    subset_sum_count,
)
from .cyreduce import (
    AlgebraPresentation,
    ReductionReport,
    Relation,
    cy_reduce_quiver,
    hereditary_proxy_check,
    prime,
    reduction_report,
)
from .shiftedsum import (
    ARSummandData,
    build_even_quiver,
    build_odd_quiver,
    star_quiver,
    validate_ar_symmetry,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "QuiverError",
    "ArrowNotPreserved",
    "BadPartition",
    "BadRange",
    "BadRemovedSet",
    "CyclicGenerator",
    "DanglingArrow",
    "DuplicateArrowRecord",
    "DuplicateVertex",
    "MarginTooSmall",
    "MissingB",
    "NonPositiveMult",
    "NormalFormViolated",
    "NotABijection",
    "NotARoot",
    "NotHereditary",
    "NotSemisimple",
    "NotSL",
    "ParseError",
    "SchemaError",
    "SigmaNotBijective",
    "SymmetryViolated",
    "VertexNotKept",
    "WrongDimension",
    # quiver
    "Arrow",
    "ColoredQuiver",
    "DynkinLabel",
    "UnderlyingGraph",
    "arrow_bundles",
    "deserialize",
    "dynkin_classify",
    "dynkin_quiver",
    "graph_automorphism_extends",
    "parse_dot",
    "quiver",
    "quiver_from_obj",
    "serialize",
    "to_dot",
    # ztranslation
    "NormalFormPartition",
    "TQAutomorphism",
    "ZQVertex",
    "ZWindow",
    "autom_from_obj",
    "autom_to_obj",
    "build_window",
    "check_root_normal_form",
    "construct_F_section",
    "find_normal_form_partition",
    "find_tau_roots",
    "is_F_section",
    "is_root_of_tau",
    "is_section",
    "is_valid_autom",
    "no_backward_arrows",
    "root_from_normal_form",
    "section_quiver",
    "sigma_orbits",
    "tau_inverse",
    "validate_autom",
    "zq_name",
    # mckay
    "ARAngle",
    "CyclicWeights",
    "ar_angle",
    "h_quiver_d3",
    "h_quiver_d4",
    "is_hereditary_quotient",
    "mckay_quiver",
    "normalize_kept",
    "subset_sum_count",
    # cyreduce
    "AlgebraPresentation",
    "ReductionReport",
    "Relation",
    "cy_reduce_quiver",
    "hereditary_proxy_check",
    "prime",
    "reduction_report",
    # shiftedsum
    "ARSummandData",
    "build_even_quiver",
    "build_odd_quiver",
    "star_quiver",
    "validate_ar_symmetry",
]
