"""
Camada de serviço do cmhk.

Submódulos:
- serialization: conversão dos relatórios para JSON
- pipeline_service: o pipeline decomposição → blocos → agregação → redução p-ádica
"""

from .serialization import to_jsonable, build_report, dump_report
from .pipeline_service import (
    DATA_ONLY,
    GaugePair,
    PipelineRequest,
    BlockResult,
    PipelineReport,
    PipelineService,
    hyperbolic_form,
    run_pipeline,
)

__all__ = [
    'to_jsonable',
    'build_report',
    'dump_report',
    'DATA_ONLY',
    'GaugePair',
    'PipelineRequest',
    'BlockResult',
    'PipelineReport',
    'PipelineService',
    'hyperbolic_form',
    'run_pipeline',
]
