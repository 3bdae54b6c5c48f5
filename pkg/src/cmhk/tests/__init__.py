# Este arquivo é necessário para que o Python reconheça este diretório como um pacote
# e para que os testes possam ser descobertos pelo pytest
