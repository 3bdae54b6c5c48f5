import json

import pytest

from cmhk.__main__ import main, setup_parser


def _write(tmp_path, name, document):
    path = tmp_path / name
    path.write_text(json.dumps(document), encoding='utf-8')
    return str(path)


def _json_output(capsys):
    return json.loads(capsys.readouterr().out)


def test_parser_commands():
    """Testa os subcomandos registrados."""
    args = setup_parser().parse_args(['hilbert', '-a', '2', '-b', '5', '-p', '5'])
    assert (args.command, args.a, args.b, args.place) == ('hilbert', '2', '5', '5')
    assert args.seed == 42


def test_hilbert_plain_output(capsys):
    """Testa o símbolo impresso sozinho na saída padrão."""
    assert main(['hilbert', '-a', '2', '-b', '5', '-p', '5']) == 0
    assert capsys.readouterr().out.strip() == '-1'


def test_hilbert_json_with_oracle(capsys):
    """Testa o envelope JSON com a conferência do oráculo."""
    assert main(['hilbert', '-a', '3', '-b', '3', '-p', '3', '--oracle', '--json']) == 0
    report = _json_output(capsys)
    assert report['command'] == 'hilbert'
    assert report['result'] == {'symbol': -1, 'oracle': -1}
    assert report['passed'] is True


@pytest.mark.parametrize('argv', [
    ['qform'],
    ['hilbert', '-a', '0', '-b', '1', '-p', '5'],
    ['tower', '--name', 'Q9(nada)'],
    ['comando-inexistente'],
])
def test_usage_errors_exit_with_two(argv, capsys):
    """Testa erros de uso e de entrada: código 2."""
    assert main(argv) == 2


@pytest.mark.parametrize('command, document', [
    ('filtered-cm', {'d': 'two', 'star_perm': [1, 0], 'weights': [1, -1]}),
    ('filtered-cm', {'d': 2, 'star_perm': 'ab', 'weights': [1, -1]}),
    ('pipeline', {'g': [1, 0, 1], 'r': [-1, 0], 'p': 'cinco'}),
    ('pipeline', {'g': [1, 0, 1], 'r': [-1, 0], 'p': 5, 'gauges': [7]}),
    ('decompose', {'g': [1, 0, 1], 'r': [-1, 0], 'p': 'cinco'}),
    ('decompose', [1, 2, 3]),
    ('phi', {'layer': {'p': 'x'}, 'frob_matrix': [[1]], 'hodge_jumps': [[0, 1]]}),
    ('tower', {'p': 5, 'f': 'um', 'eis_poly': [[1], [-5]]}),
    ('cm', {'tower': {'p': 5, 'eis_poly': [[1], [0], [-5]]}, 'star': {}, 'gauge': 2}),
])
def test_malformed_documents_exit_with_two(tmp_path, capsys, command, document):
    """Testa documentos com tipos errados: código 2 e mensagem na saída de erro."""
    path = _write(tmp_path, 'malformed.json', document)
    assert main([command, '--file', path]) == 2
    assert 'Erro:' in capsys.readouterr().err


def test_tower_list(capsys):
    """Testa a listagem do catálogo."""
    assert main(['tower', '--list', '--json']) == 0
    assert 'Q2(i)' in _json_output(capsys)['result']['extensions']


def test_tower_element_inverse(capsys):
    """Testa valorização, resíduo e inverso de um elemento da torre."""
    assert main(['tower', '--name', 'Q3-unram2', '--element', '[1, 1]', '--json']) == 0
    element = _json_output(capsys)['result']['element']
    assert element['valuation'] == 0
    assert element['inverse_ok'] is True


def test_norm_test_element(capsys):
    """Testa 2 fora das normas de Q5(√5)."""
    assert main(['norm-test', '--name', 'Q5(sqrt5)', '--element', '2', '--json']) == 0
    result = _json_output(capsys)['result']
    assert result['is_norm'] is False


def test_norm_audit_samples_random_elements_and_representatives(capsys):
    """Testa a auditoria com 40 elementos aleatórios mais os 4 representantes de Q5^×/(Q5^×)²."""
    assert main(['norm-test', '--name', 'Q5(sqrt5)', '--audit', '--json']) == 0
    row = _json_output(capsys)['result']['audit'][0]
    assert row['elements'] == 44
    assert row['classes'] == 2
    assert row['multiplicative'] is True


def test_qform_file_text_output(tmp_path, capsys):
    """Testa a saída em tabela para uma forma diagonal."""
    path = _write(tmp_path, 'form.json', {'diagonal': [1, 1, 1, 1]})
    assert main(['qform', '--file', path]) == 0
    out = capsys.readouterr().out
    assert 'APROVADO' in out


def test_phi_module_file(tmp_path, capsys):
    """Testa o certificado de um φ-módulo isoclino."""
    path = _write(tmp_path, 'phi.json', {
        'layer': {'p': 5},
        'frob_matrix': [[0, 5], [1, 0]],
        'hodge_jumps': [[0, 1], [1, 1]],
    })
    assert main(['phi', '--file', path, '--json']) == 0
    assert _json_output(capsys)['result']['certificate']['status'] == 'certified_admissible'


def test_lubin_tate_verify(capsys):
    """Testa D_π para Q5(√5) com verificação completa."""
    assert main(['lt', '-p', '5', '--e', '2', '--verify', '--json']) == 0
    result = _json_output(capsys)['result']
    assert result['rank'] == 2
    assert result['commutant_dimension'] == 2


def test_decompose_cyclotomic(capsys):
    """Testa Φ5 em p = 11: quatro fatores lineares, dois blocos hiperbólicos."""
    assert main(['decompose', '--cyclotomic', '5', '-p', '11', '-N', '10', '--json']) == 0
    result = _json_output(capsys)['result']
    assert len(result['factors']) == 4
    assert result['swapped'] == 2
    assert [block['kind'] for block in result['blocks']] == ['hyperbolic', 'hyperbolic']


def test_pipeline_failure_names_block(tmp_path, capsys):
    """Testa o código 1 e o bloco com falha na saída de erro."""
    path = _write(tmp_path, 'pipeline.json', {
        'g': [1, 1, 1, 1, 1],
        'r': [1, 0, 0, 0, 0],
        'p': 2,
        'precision': 10,
        'gauges': [{'a_B': 1, 'a_Z': 2}],
        'hodge': {'0': 4},
    })
    assert main(['pipeline', '--file', path, '--json']) == 1
    captured = capsys.readouterr()
    assert 'Bloco com falha: 0' in captured.err
    report = json.loads(captured.out)
    assert report['passed'] is False
    assert report['result']['failed_block'] == 0


def test_json_output_is_stable(capsys):
    """Testa a saída --json idêntica em duas execuções com a mesma semente."""
    argv = ['filtered-cm', '--random', '5', '--seed', '11', '--json']
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
