"""Submódulo para leitura e validação dos documentos JSON de entrada."""

from .documents import (
    DocumentLoader,
    validate_document,
    malformed_document,
    parse_form,
    parse_hodge,
    parse_tower,
    parse_extension,
    parse_element,
    parse_layer,
    parse_cm_space,
    parse_filtered_cm,
    parse_phi_module,
    parse_algebra,
    dump_document,
)

__all__ = [
    'DocumentLoader',
    'validate_document',
    'malformed_document',
    'parse_form',
    'parse_hodge',
    'parse_tower',
    'parse_extension',
    'parse_element',
    'parse_layer',
    'parse_cm_space',
    'parse_filtered_cm',
    'parse_phi_module',
    'parse_algebra',
    'dump_document',
]
