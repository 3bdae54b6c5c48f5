"""
Corpos p-ádicos como torres explícitas com modelo global exato.

Submódulos:
- tower: torres, elementos, Frobenius e resíduos
- involution: involuções e corpo fixo
- norms: traço, norma, quadrados, normas e símbolo de reciprocidade
- dwork: testemunha do caso moderadamente ramificado
- catalog: extensões quadráticas padrão
"""

from .tower import PadicTower, PadicElement, Subfield
from .involution import Involution, build_involution
from .norms import (
    QuadraticExtension,
    TraceNorm,
    trace_norm,
    is_square,
    is_norm,
    reciprocity_symbol,
    norm_class_representatives,
    norm_class_audit,
    with_precision_retry,
)
from .dwork import DworkReport, dwork_tame_witness, frobenius_sign, root_tower
from .catalog import STANDARD_EXTENSIONS, standard_extension, default_unramified_polynomial

__all__ = [
    'PadicTower',
    'PadicElement',
    'Subfield',
    'Involution',
    'build_involution',
    'QuadraticExtension',
    'TraceNorm',
    'trace_norm',
    'is_square',
    'is_norm',
    'reciprocity_symbol',
    'norm_class_representatives',
    'norm_class_audit',
    'with_precision_retry',
    'DworkReport',
    'dwork_tame_witness',
    'frobenius_sign',
    'root_tower',
    'STANDARD_EXTENSIONS',
    'standard_extension',
    'default_unramified_polynomial',
]
