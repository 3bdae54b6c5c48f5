"""
cmhk: invariantes de formas quadráticas, corpos p-ádicos e φ-módulos CM.

Submódulos:
- kernel: números, polinômios, matrizes, polígonos e Hensel
- forms: formas quadráticas sobre Q, símbolo de Hilbert e critérios
- padic: torres p-ádicas, involuções, normas e reciprocidade
- models: espaços CM, espaços CM filtrados, φ-módulos e Lubin-Tate
- decomposition: decomposição global-local de álgebras com involução
- data: leitura dos documentos JSON
- api: serialização e o pipeline ponta a ponta
- utils: tabelas para a CLI
"""

__version__ = '0.1.0'
