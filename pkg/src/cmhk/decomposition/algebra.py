"""Decomposição local de uma álgebra com involução Q[x]/(g).

Em um primo p, Q_p[x]/(g) é o produto dos corpos Q_p[x]/(g_i) dados pelos
fatores p-ádicos de g; a involução x ↦ r(x) permuta os fatores como uma
composição de transposições disjuntas. Pares trocados viram blocos
hiperbólicos; fatores fixos viram blocos CM.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Poly, cyclotomic_poly, n_order, totient

from ..exceptions import DomainError, HenselRefusal, PrecisionError, StructureError
from ..kernel.hensel import hensel_factor
from ..kernel.numbers import padic_valuation, reduce_mod
from ..kernel.polynomials import (
    X,
    divisible_by_prime_power,
    factor_mod_p,
    from_poly,
    integer_coeffs,
    poly_mul_int,
    poly_sub_int,
    squarefree_witness_mod_p,
    to_poly,
)
from ..padic import QuadraticExtension, PadicTower

# Configuração de logging
logger = logging.getLogger(__name__)

HYPERBOLIC = 'hyperbolic'
CM = 'cm'
TOWER_UNAVAILABLE = 'tower unavailable'


def _poly(coeffs: Sequence[Any]) -> Poly:
    return to_poly(coeffs, X)


@dataclass(frozen=True)
class GlobalCMAlgebra:
    """Álgebra Q[x]/(g) com a involução x ↦ r(x)."""
    g: Tuple[int, ...]
    r: Tuple[Any, ...]

    def __post_init__(self):
        g = integer_coeffs(self.g)
        if len(g) < 2 or g[0] != 1:
            raise DomainError(f"g deve ser mônico de grau ≥ 1: {list(self.g)}")
        object.__setattr__(self, 'g', tuple(g))
        g_poly = _poly(g)
        if g_poly.gcd(g_poly.diff(X)).degree() > 0:
            msg = f"g não é livre de quadrados sobre Q: {g}"
            logger.error(msg)
            raise StructureError(msg, 'squarefree')
        r_poly = _poly(self.r).rem(g_poly)
        object.__setattr__(self, 'r', tuple(from_poly(r_poly)))
        if not g_poly.compose(r_poly).rem(g_poly).is_zero:
            msg = "r(x) não é raiz de g: x ↦ r(x) não define um homomorfismo"
            logger.error(msg)
            raise StructureError(msg, 'homomorphism')
        if r_poly.compose(r_poly).rem(g_poly) != _poly([1, 0]).rem(g_poly):
            msg = "r(r(x)) ≢ x mod g"
            logger.error(msg)
            raise StructureError(msg, 'order_two')
        if r_poly == _poly([1, 0]).rem(g_poly):
            msg = "A involução é a identidade"
            logger.error(msg)
            raise StructureError(msg, 'non_trivial')

    @property
    def degree(self) -> int:
        return len(self.g) - 1

    def g_poly(self) -> Poly:
        return _poly(self.g)

    def r_poly(self) -> Poly:
        return _poly(self.r)

    @classmethod
    def from_components(cls, components: Sequence[Tuple[Sequence[int], Sequence[Any]]]) -> 'GlobalCMAlgebra':
        """Cola componentes (g_i, r_i) pelo teorema chinês dos restos.

        Args:
            components: pares (g_i, r_i) com os g_i dois a dois coprimos.

        Returns:
            Álgebra com g = Π g_i e r ≡ r_i mod g_i.
        """
        if not components:
            raise DomainError("Nenhuma componente")
        g_total = _poly(components[0][0])
        r_total = _poly(components[0][1]).rem(g_total)
        for g_i, r_i in components[1:]:
            g_next, r_next = _poly(g_i), _poly(r_i)
            s, _, h = g_total.gcdex(g_next)
            if h.degree() > 0:
                msg = "Componentes não são coprimas"
                logger.error(msg)
                raise DomainError(msg)
            correction = ((r_next - r_total) * s).rem(g_next)
            r_total = r_total + g_total * correction
            g_total = g_total * g_next
            r_total = r_total.rem(g_total)
        return cls(tuple(integer_coeffs(from_poly(g_total))), tuple(from_poly(r_total)))


def cyclotomic_algebra(m: int) -> GlobalCMAlgebra:
    """Q(ζ_m) com a conjugação complexa x ↦ x^{m-1}."""
    if m < 3:
        raise DomainError(f"m deve ser ao menos 3: {m}")
    g = [int(c) for c in Poly(cyclotomic_poly(m, X), X).all_coeffs()]
    return GlobalCMAlgebra(tuple(g), tuple([1] + [0] * (m - 1)))


# ---------------------------------------------------------------------------
# Aritmética em (Z/p^N)[x]/(h), h mônico
# ---------------------------------------------------------------------------

def _mod_coeffs(coeffs: Sequence[Any], modulus: int) -> List[int]:
    return [reduce_mod(c, modulus) for c in coeffs]


def _poly_rem(a: List[int], h: Sequence[int], modulus: int) -> List[int]:
    a = [c % modulus for c in a]
    n = len(h) - 1
    while len(a) > n:
        lead = a[0]
        if lead:
            for k in range(1, len(h)):
                a[k] = (a[k] - lead * h[k]) % modulus
        a.pop(0)
    return [0] * (n - len(a)) + a


def _compose_rem(outer: Sequence[int], inner: Sequence[int], h: Sequence[int], modulus: int) -> List[int]:
    """outer(inner(x)) mod (h, modulus) por Horner."""
    acc = [0]
    for c in outer:
        acc = _poly_rem(poly_mul_int(acc, inner), h, modulus)
        acc[-1] = (acc[-1] + c) % modulus
    return _poly_rem(acc, h, modulus)


def _residue_valuation(coeffs: Sequence[int], p: int, precision: int) -> int:
    """Menor valorização dos coeficientes, truncada em ``precision``."""
    values = [padic_valuation(c, p) for c in coeffs if c % (p ** precision)]
    return min(values) if values else precision


@dataclass(frozen=True)
class LocalFactor:
    """Fator p-ádico mônico de g com seus dados locais (quando determináveis)."""
    coeffs: Tuple[int, ...]
    e: Optional[int]
    f: Optional[int]
    exact: bool
    shift: Optional[int] = None
    supplied: bool = False

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class LocalFactorSet:
    """Fatores locais; ``orbit[i]`` é o índice da imagem do fator i pela involução."""
    p: int
    precision: int
    factors: Tuple[LocalFactor, ...]
    orbit: Optional[Tuple[int, ...]] = None

    def tag(self, i: int) -> str:
        if self.orbit is None:
            return 'pending'
        j = self.orbit[i]
        return 'fixed' if j == i else f'swapped-with({j})'

    @property
    def swapped_pairs(self) -> List[Tuple[int, int]]:
        if self.orbit is None:
            return []
        return [(i, j) for i, j in enumerate(self.orbit) if i < j]

    @property
    def fixed(self) -> List[int]:
        if self.orbit is None:
            return []
        return [i for i, j in enumerate(self.orbit) if i == j]


def _is_eisenstein(coeffs: Sequence[int], p: int) -> bool:
    if len(coeffs) < 2 or coeffs[0] != 1:
        return False
    tail = coeffs[1:]
    return all(c % p == 0 for c in tail) and tail[-1] % (p * p) != 0


def _taylor_shift(coeffs: Sequence[int], shift: int) -> List[int]:
    """Coeficientes de h(y + shift)."""
    shifted = _poly(coeffs).compose(_poly([1, shift]))
    return integer_coeffs(from_poly(shifted))


def _verify_supplied(algebra: GlobalCMAlgebra, p: int, precision: int,
                     supplied: Sequence[Dict[str, Any]]) -> List[LocalFactor]:
    modulus = p ** precision
    factors = []
    for item in supplied:
        coeffs = integer_coeffs(item['coeffs'] if isinstance(item, dict) else item)
        if not coeffs or coeffs[0] != 1:
            raise DomainError(f"Fator fornecido não mônico: {coeffs}")
        shift = item.get('shift') if isinstance(item, dict) else None
        e = f = None
        if shift is not None:
            shift = int(shift)
            if not _is_eisenstein(_taylor_shift(coeffs, shift), p):
                msg = f"Fator {coeffs} deslocado por {shift} não é de Eisenstein"
                logger.error(msg)
                raise DomainError(msg)
            e, f = len(coeffs) - 1, 1
        exact = _poly(algebra.g).rem(_poly(coeffs)).is_zero
        factors.append(LocalFactor(tuple(coeffs), e, f, exact, shift, supplied=True))

    product = [1]
    for factor in factors:
        product = poly_mul_int(product, list(factor.coeffs))
    if len(product) != len(algebra.g) or not divisible_by_prime_power(poly_sub_int(product, algebra.g), modulus):
        msg = f"Produto dos fatores fornecidos não é ≡ g mod {p}^{precision}"
        logger.error(msg)
        raise DomainError(msg)
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            res = _poly(factors[i].coeffs).resultant(_poly(factors[j].coeffs))
            if padic_valuation(res, p) > 0:
                msg = f"Resultante dos fatores {i} e {j} não é unidade em {p}"
                logger.error(msg)
                raise DomainError(msg)
    return factors


def local_factors(algebra: GlobalCMAlgebra, p: int, precision: int,
                  supplied_factors: Optional[Sequence[Any]] = None) -> LocalFactorSet:
    """Fatores p-ádicos de g por Hensel a partir da fatoração mod p.

    Args:
        algebra: álgebra global.
        p: primo.
        precision: expoente N da precisão dos fatores.
        supplied_factors: fatoração fornecida (regime ramificado); cada item é
            uma lista de coeficientes ou ``{"coeffs": [...], "shift": s}`` com
            h(y + s) de Eisenstein.

    Returns:
        ``LocalFactorSet`` com a órbita pendente.
    """
    if precision < 1:
        raise DomainError(f"Precisão deve ser positiva: {precision}")
    witness = squarefree_witness_mod_p(list(algebra.g), p)
    if witness != [1]:
        if supplied_factors is None:
            msg = f"g mod {p} não é livre de quadrados; mdc(g, g') = {witness}"
            logger.error(msg)
            raise HenselRefusal(msg, witness)
        factors = _verify_supplied(algebra, p, precision, supplied_factors)
        logger.info(f"Fatoração fornecida aceita em p={p}: {len(factors)} fatores")
        return LocalFactorSet(p, precision, tuple(factors))

    _, seeds = factor_mod_p(list(algebra.g), p)
    lifted = hensel_factor(list(algebra.g), seeds, p, precision)
    g_poly = algebra.g_poly()
    factors = tuple(
        LocalFactor(tuple(c), 1, len(c) - 1, g_poly.rem(_poly(c)).is_zero)
        for c in lifted
    )
    logger.info(f"Fatoração em p={p}: graus {[factor.degree for factor in factors]}")
    return LocalFactorSet(p, precision, factors)


def involution_orbits(factor_set: LocalFactorSet, r: Sequence[Any]) -> LocalFactorSet:
    """Preenche a órbita: i ↦ j único com g_j(r(x)) ≡ 0 mod (g_i, p^N).

    Fatores fixos devem herdar uma involução não trivial (r(x) ≢ x).
    """
    p, precision = factor_set.p, factor_set.precision
    modulus = p ** precision
    try:
        r_mod = _mod_coeffs(r, modulus)
    except DomainError:
        msg = f"r não é p-integral em p={p}"
        logger.error(msg)
        raise DomainError(msg)
    orbit = []
    for i, factor_i in enumerate(factor_set.factors):
        h = [c % modulus for c in factor_i.coeffs]
        valuations = [
            _residue_valuation(_compose_rem([c % modulus for c in factor_j.coeffs], r_mod, h, modulus), p, precision)
            for factor_j in factor_set.factors
        ]
        hits = [j for j, v in enumerate(valuations) if v >= 1]
        if len(hits) != 1:
            msg = f"Imagem do fator {i} não é única à precisão {precision}: valorizações {valuations}"
            logger.error(msg)
            raise PrecisionError(msg, precision)
        j = hits[0]
        if not factor_set.factors[j].supplied and valuations[j] < precision:
            msg = f"Fator {i} mapeado em {j} apenas até {p}^{valuations[j]}"
            logger.error(msg)
            raise PrecisionError(msg, precision)
        orbit.append(j)

    if any(orbit[orbit[i]] != i for i in range(len(orbit))):
        msg = f"A órbita não é uma involução: {orbit}"
        logger.error(msg)
        raise StructureError(msg, 'orbit_involution')
    for i, j in enumerate(orbit):
        if i != j:
            continue
        h = [c % modulus for c in factor_set.factors[i].coeffs]
        difference = _poly_rem(poly_sub_int(r_mod, [1, 0]), h, modulus)
        if not any(difference):
            msg = f"Involução induzida trivial no fator fixo {i}"
            logger.error(msg)
            raise StructureError(msg, 'nontrivial_induced_involution')
    logger.debug(f"Órbita em p={p}: {orbit}")
    return LocalFactorSet(p, precision, factor_set.factors, tuple(orbit))


@dataclass(frozen=True)
class Block:
    """Bloco do plano ortogonal."""
    kind: str
    factors: Tuple[int, ...]
    rank: int
    e: Optional[int] = None
    f: Optional[int] = None
    tower_status: Optional[str] = None
    descriptor: Optional[Dict[str, Any]] = field(default=None, compare=False)


@dataclass(frozen=True)
class BlockPlan:
    p: int
    blocks: Tuple[Block, ...]
    swapped: int

    @property
    def hyperbolic_ranks(self) -> List[int]:
        return [block.rank for block in self.blocks if block.kind == HYPERBOLIC]

    @property
    def cm_blocks(self) -> List[Block]:
        return [block for block in self.blocks if block.kind == CM]


def _nested_layer(coeffs_asc: Sequence[Any], f: int) -> List[List[Any]]:
    return [list(coeffs_asc) + [0] * (f - len(coeffs_asc))]


def _tower_descriptor(factor: LocalFactor, r: Sequence[Any], p: int) -> Optional[Dict[str, Any]]:
    """Descritor de torre e involução para um fator fixo exato."""
    if not factor.exact:
        return None
    h_poly = _poly(factor.coeffs)
    r_poly = _poly(r)
    if factor.shift is None and factor.e == 1:
        f = factor.degree
        image = [c for c in reversed(from_poly(r_poly.rem(h_poly)))]
        return {
            'p': p, 'f': f, 'unram_poly': list(factor.coeffs), 'eis_poly': [[1], [-p]],
            'images': [_nested_layer(image, f), _nested_layer([p], f)],
        }
    if factor.shift is not None:
        shift = factor.shift
        eis = _taylor_shift(factor.coeffs, shift)
        e = len(eis) - 1
        # y = x - shift  ↦  r(y + shift) - shift
        y_image = (r_poly.compose(_poly([1, shift])) - shift).rem(_poly(eis))
        coords = list(reversed(from_poly(y_image)))
        coords += [0] * (e - len(coords))
        return {
            'p': p, 'f': 1, 'unram_poly': [1, -1], 'eis_poly': [[c] for c in eis],
            'images': [[[1]] + [[0]] * (e - 1), [[c] for c in coords]],
        }
    return None


def orthogonal_blocks(factor_set: LocalFactorSet, r: Sequence[Any]) -> BlockPlan:
    """Plano de blocos: pares trocados primeiro (pelo menor índice), depois fatores fixos."""
    if factor_set.orbit is None:
        raise DomainError("Órbita ainda não calculada")
    blocks = []
    for i, j in factor_set.swapped_pairs:
        blocks.append(Block(HYPERBOLIC, (i, j), 2 * factor_set.factors[i].degree))
    for i in factor_set.fixed:
        factor = factor_set.factors[i]
        descriptor = _tower_descriptor(factor, r, factor_set.p)
        status = 'available' if descriptor is not None else TOWER_UNAVAILABLE
        if descriptor is None:
            logger.warning(f"Fator fixo {i} sem torre exata: bloco apenas com dados de grau")
        blocks.append(Block(CM, (i,), factor.degree, factor.e, factor.f, status, descriptor))
    plan = BlockPlan(factor_set.p, tuple(blocks), len(factor_set.swapped_pairs))
    logger.info(f"Plano em p={factor_set.p}: {len(blocks)} blocos ({plan.swapped} hiperbólicos)")
    return plan


def block_extension(block: Block, precision: Optional[int] = None) -> QuadraticExtension:
    """Extensão quadrática (torre + involução) de um bloco CM com torre disponível."""
    if block.descriptor is None:
        raise DomainError(f"Bloco {block.factors} sem torre ({TOWER_UNAVAILABLE})")
    d = block.descriptor
    tower = PadicTower(d['p'], d['f'], d['unram_poly'], d['eis_poly'], precision)
    return QuadraticExtension.from_images(tower, d['images'])


def decompose(algebra: GlobalCMAlgebra, p: int, precision: int,
              supplied_factors: Optional[Sequence[Any]] = None) -> Tuple[LocalFactorSet, BlockPlan]:
    """Fatores, órbitas e plano de blocos em uma única chamada."""
    factor_set = involution_orbits(local_factors(algebra, p, precision, supplied_factors), algebra.r)
    return factor_set, orthogonal_blocks(factor_set, algebra.r)


def cyclotomic_oracle(m: int, p: int) -> int:
    """Número de fatores de Φ_m sobre Q_p (p ∤ m): φ(m) / ord_m(p)."""
    if m % p == 0:
        raise DomainError(f"p = {p} divide m = {m}")
    return int(totient(m)) // int(n_order(p, m))
