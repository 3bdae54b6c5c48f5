import json

import numpy as np
import pytest
from sympy import QQ

from cmhk.api import build_report, dump_report, to_jsonable
from cmhk.data import (
    DocumentLoader,
    dump_document,
    parse_algebra,
    parse_cm_space,
    parse_element,
    parse_extension,
    parse_filtered_cm,
    parse_form,
    parse_hodge,
    parse_phi_module,
    parse_tower,
    validate_document,
)
from cmhk.exceptions import DomainError
from cmhk.forms import HodgeNumbers, PlaceQ, QuadraticFormQ, hilbert_symbol
from cmhk.kernel.polygons import LowerPolygon
from cmhk.models import CERTIFIED_ADMISSIBLE, NONTRIVIAL, admissibility_certificate, cm_classify

SQRT5_DESCRIPTOR = {
    'p': 5,
    'eis_poly': [[1], [0], [-5]],
    'images': [[[1], [0]], [[0], [-1]]],
}


def test_validate_document():
    """Testa objeto não JSON e chaves ausentes."""
    assert validate_document({'p': 5}, ['p']) == (True, [])
    valid, errors = validate_document({'g': [1]}, ['g', 'r'])
    assert not valid and len(errors) == 1
    assert not validate_document([1, 2], ['p'])[0]


def test_loader_reads_files(tmp_path):
    """Testa a leitura de arquivo e a recusa de JSON inválido."""
    path = tmp_path / 'form.json'
    path.write_text(json.dumps({'diagonal': [1, '1/2']}), encoding='utf-8')
    document = DocumentLoader().load(str(path))
    assert parse_form(document).gram == [[QQ(1), QQ(0)], [QQ(0), QQ(1, 2)]]

    broken = tmp_path / 'broken.json'
    broken.write_text('{"gram": [', encoding='utf-8')
    with pytest.raises(DomainError):
        DocumentLoader().load(str(broken))
    with pytest.raises(DomainError):
        DocumentLoader().loads('nada')


def test_parse_form_variants():
    """Testa Gram explícita e documento sem Gram."""
    assert parse_form({'gram': [[0, 1], [1, 0]]}).dim == 2
    with pytest.raises(DomainError):
        parse_form({'entries': [1]})


def test_parse_hodge_formats():
    """Testa Hodge como objeto e como lista de pares."""
    assert parse_hodge({'1': 1, '-1': 1, '0': 2}).s_m() == 1
    assert parse_hodge([[3, 2], [0, 1]]).s_m() == 2
    assert parse_hodge(None) == HodgeNumbers()
    with pytest.raises(DomainError):
        parse_hodge({'um': 1})


def test_parse_extension_by_name_and_descriptor():
    """Testa o catálogo e o descritor explícito de Q5(√5)."""
    named = parse_extension({'name': 'Q5(sqrt5)'})
    explicit = parse_extension(SQRT5_DESCRIPTOR, 20)
    assert named.is_ramified and explicit.is_ramified
    assert explicit.tower.precision == 20
    assert not explicit.is_norm(explicit.tower.scalar(2))
    with pytest.raises(DomainError):
        parse_extension({'p': 5})


def test_parse_tower_and_element():
    """Testa a torre sem polinômio não ramificado e elementos escalares ou em coordenadas."""
    tower = parse_tower({'p': 3, 'f': 2, 'eis_poly': [[1], [-3]]})
    assert (tower.e, tower.f) == (1, 2)
    assert parse_element(tower, '1/3').valuation() == -1
    assert parse_element(tower, [0, 1]) == tower.x()
    with pytest.raises(DomainError):
        parse_tower({'p': 3})


def test_parse_cm_space_forms():
    """Testa as duas formas do documento de espaço CM."""
    space = parse_cm_space({'extension': {'name': 'Q5(sqrt5)'}, 'gauge': 2})
    assert cm_classify(space) == NONTRIVIAL
    tower = {key: value for key, value in SQRT5_DESCRIPTOR.items() if key != 'images'}
    other = parse_cm_space({'tower': tower, 'star': {'images': SQRT5_DESCRIPTOR['images']}, 'gauge': 2})
    assert cm_classify(other) == NONTRIVIAL
    with pytest.raises(DomainError):
        parse_cm_space({'extension': {'name': 'Q5(sqrt5)'}})


def test_parse_filtered_cm_and_phi_module():
    """Testa espaço CM filtrado e φ-módulo a partir de documentos."""
    space = parse_filtered_cm({'d': 2, 'star_perm': [1, 0], 'weights': [1, -1]})
    assert space.weights == (1, -1)
    module = parse_phi_module({
        'layer': {'p': 5},
        'frob_matrix': [[0, 5], [1, 0]],
        'hodge_jumps': [[0, 1], [1, 1]],
    })
    assert admissibility_certificate(module).status == CERTIFIED_ADMISSIBLE


def test_parse_algebra_variants():
    """Testa (g, r) direto e por componentes."""
    assert parse_algebra({'g': [1, 0, 1], 'r': [-1, 0]}).degree == 2
    assert parse_algebra({'components': [[[1, 0, 1], [-1, 0]], [[1, 0, 2], [-1, 0]]]}).degree == 4
    with pytest.raises(DomainError):
        parse_algebra({'g': [1, 0, 1]})


def test_to_jsonable_conversions():
    """Testa racionais, polígonos, formas, lugares e tipos numpy."""
    assert to_jsonable(QQ(1, 2)) == '1/2'
    assert to_jsonable(QQ(-3)) == -3
    assert to_jsonable(np.int64(7)) == 7
    assert to_jsonable(np.bool_(True)) is True
    assert to_jsonable(PlaceQ.parse('real')) == str(PlaceQ.parse('real'))
    assert to_jsonable(LowerPolygon.from_points([(0, 1), (2, 0)])) == [[0, 1], [2, 0]]
    assert to_jsonable(QuadraticFormQ.from_diagonal([1, '2/3'])) == {'gram': [[1, 0], [0, '2/3']]}
    assert to_jsonable(HodgeNumbers.from_pairs([(1, 1), (-1, 1)])) == {'-1': 1, '1': 1}
    assert to_jsonable({3: (QQ(1), {4})}) == {'3': [1, [4]]}


def test_report_envelope():
    """Testa o envelope comum e a ordenação das chaves."""
    report = build_report('hilbert', hilbert_symbol(2, 5, 5), True, seed=7)
    assert report == {'version': report['version'], 'seed': 7, 'command': 'hilbert', 'passed': True, 'result': -1}
    text = dump_report(report)
    assert list(json.loads(text)) == sorted(report)
    assert dump_document({'b': 1, 'a': 2}) == '{"a": 2, "b": 1}'


@pytest.mark.parametrize('parser, document', [
    (parse_filtered_cm, {'d': 'two', 'star_perm': [1, 0], 'weights': [1, -1]}),
    (parse_filtered_cm, {'d': 2, 'star_perm': [1, 0], 'weights': None}),
    (parse_tower, {'p': 'cinco', 'eis_poly': [[1], [-5]]}),
    (parse_algebra, {'components': [[1, 0, 1]]}),
    (parse_cm_space, {'tower': SQRT5_DESCRIPTOR, 'star': {}, 'gauge': 2}),
    (parse_hodge, [[1]]),
])
def test_malformed_documents_raise_domain_error(parser, document):
    """Testa que tipos errados e chaves ausentes viram DomainError."""
    with pytest.raises(DomainError):
        parser(document)
