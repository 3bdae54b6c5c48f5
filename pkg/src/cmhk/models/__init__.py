"""
Objetos estruturais do cmhk.

Submódulos:
- cm_space: espaços quadráticos CM, calibres e a lei das duas classes
- filtered_cm: espaços CM filtrados, classe do período e bondade
- phi_module: φ-módulos filtrados, polígonos e certificado de admissibilidade
- lubin_tate: o módulo D_π e suas verificações
"""

from .cm_space import (
    TRIVIAL,
    NONTRIVIAL,
    CMQuadraticSpace,
    CMAction,
    trace_form_gram,
    cm_action,
    adjoint_check,
    gauge_recover,
    cm_classify,
    cm_compare,
    milnor_audit,
    random_gauges,
)
from .filtered_cm import (
    NORM,
    NON_NORM,
    FilteredCMSpace,
    GoodnessReport,
    AggregateVerdict,
    validate_symmetric,
    tensor,
    fundamental,
    hodge_min,
    period_norm_class,
    goodness,
    goodness_from_forms,
    aggregate_blocks,
    tensor_generators,
    decompose_symmetric,
    to_phi_module,
)
from .phi_module import (
    CERTIFIED_ADMISSIBLE,
    CERTIFIED_INADMISSIBLE,
    UNKNOWN,
    FilteredPhiModule,
    phi_power_matrix,
    newton_polygon_module,
    hodge_polygon,
    admissibility_certificate,
    dieudonne_manin_type,
    base_change,
    f_action_embed,
)
from .lubin_tate import (
    LubinTateModule,
    build_D_pi,
    verify_structure,
    verify_polygons,
    commutant_dimension,
    cyclic_vector_check,
    random_eisenstein,
    lubin_tate_tower,
    lubin_tate_grid,
)

__all__ = [
    'TRIVIAL',
    'NONTRIVIAL',
    'CMQuadraticSpace',
    'CMAction',
    'trace_form_gram',
    'cm_action',
    'adjoint_check',
    'gauge_recover',
    'cm_classify',
    'cm_compare',
    'milnor_audit',
    'random_gauges',
    'NORM',
    'NON_NORM',
    'FilteredCMSpace',
    'GoodnessReport',
    'AggregateVerdict',
    'validate_symmetric',
    'tensor',
    'fundamental',
    'hodge_min',
    'period_norm_class',
    'goodness',
    'goodness_from_forms',
    'aggregate_blocks',
    'tensor_generators',
    'decompose_symmetric',
    'to_phi_module',
    'CERTIFIED_ADMISSIBLE',
    'CERTIFIED_INADMISSIBLE',
    'UNKNOWN',
    'FilteredPhiModule',
    'phi_power_matrix',
    'newton_polygon_module',
    'hodge_polygon',
    'admissibility_certificate',
    'dieudonne_manin_type',
    'base_change',
    'f_action_embed',
    'LubinTateModule',
    'build_D_pi',
    'verify_structure',
    'verify_polygons',
    'commutant_dimension',
    'cyclic_vector_check',
    'random_eisenstein',
    'lubin_tate_tower',
    'lubin_tate_grid',
]
