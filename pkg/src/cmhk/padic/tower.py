"""Torres p-ádicas com modelo global exato.

Uma torre F ⊃ L ⊃ Q_p é apresentada por um polinômio inteiro mônico ``u`` de
grau f, irredutível mod p (camada não ramificada L = Q_p[x]/(u)), e por um
polinômio de Eisenstein ``E`` de grau e com coeficientes em L
(F = L[y]/(E)). O modelo global Q[x, y]/(u, E) é exato: traços, normas e
matrizes de Gram são racionais; a truncagem p-ádica só entra nas decisões
(valorização, quadrados, normas).

Coordenadas de um elemento: base x^i y^j (i < f, j < e), índice plano
k = j*f + i. Polinômios (``unram_poly``, ``eis_poly``) usam coeficientes em
ordem decrescente; coordenadas de elementos da camada são crescentes.
"""

import itertools
import logging
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import QQ, ZZ, isprime
from sympy.polys.galoistools import gf_pow_mod, gf_strip

from ..config import get_default_precision
from ..exceptions import DomainError, PrecisionError
from ..kernel.matrices import rational_solve
from ..kernel.numbers import (
    numerator,
    padic_valuation,
    reduce_mod,
    symmetric_residue,
    to_rational,
)
from ..kernel.polynomials import integer_coeffs, is_irreducible_mod_p, rational_coeffs

# Configuração de logging
logger = logging.getLogger(__name__)


class Subfield(Enum):
    """Subcorpos alvo de traço e norma."""
    BASE = 'base'
    LAYER = 'layer'
    FIXED = 'fixed'


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class PadicTower:
    """Extensão finita de Q_p como camada não ramificada mais camada de Eisenstein."""

    def __init__(self, p: int, f: int, unram_poly: Sequence[Any], eis_poly: Sequence[Sequence[Any]],
                 precision: Optional[int] = None):
        """Inicializa e valida a torre.

        Args:
            p: primo residual.
            f: grau residual.
            unram_poly: polinômio mônico inteiro de grau f, irredutível mod p.
            eis_poly: coeficientes de E em y (decrescentes); cada coeficiente é
                um polinômio em x (decrescente) com coeficientes racionais.
            precision: precisão absoluta N (v(p) = 1); padrão da configuração.
        """
        if not isprime(p):
            raise DomainError(f"p = {p} não é primo")
        self.p = int(p)
        self.f = int(f)
        self.precision = int(precision) if precision is not None else get_default_precision()
        if self.precision <= 0:
            raise DomainError(f"Precisão deve ser positiva: {self.precision}")

        unram = integer_coeffs(unram_poly)
        if len(unram) - 1 != self.f or self.f < 1:
            raise DomainError(f"Polinômio não ramificado deve ter grau f = {f}: {unram}")
        if unram[0] != 1:
            raise DomainError(f"Polinômio não ramificado deve ser mônico: {unram}")
        if not is_irreducible_mod_p(unram, self.p):
            msg = f"Polinômio não ramificado {unram} é redutível mod {self.p}"
            logger.error(msg)
            raise DomainError(msg)
        self.unram_poly: Tuple[int, ...] = tuple(unram)
        self._u = [QQ(c) for c in reversed(unram)]

        if len(eis_poly) < 2:
            raise DomainError("Polinômio de Eisenstein deve ter grau ao menos 1")
        self.e = len(eis_poly) - 1
        self.d = self.e * self.f
        coeffs = [self._layer_from_desc(c) for c in eis_poly]
        if coeffs[0] != self._layer_one():
            raise DomainError("Polinômio de Eisenstein deve ser mônico")
        self._eis = tuple(reversed(coeffs))
        self._check_eisenstein()
        logger.debug(f"Torre construída: p={self.p}, f={self.f}, e={self.e}, N={self.precision}")

    # ------------------------------------------------------------------ camada
    def _layer_one(self) -> Tuple[Any, ...]:
        return tuple(QQ(1) if i == 0 else QQ(0) for i in range(self.f))

    def _layer_zero(self) -> Tuple[Any, ...]:
        return tuple(QQ(0) for _ in range(self.f))

    def _layer_reduce(self, coeffs: List[Any]) -> Tuple[Any, ...]:
        coeffs = list(coeffs) + [QQ(0)] * max(0, self.f - len(coeffs))
        for k in range(len(coeffs) - 1, self.f - 1, -1):
            c = coeffs[k]
            if c != 0:
                coeffs[k] = QQ(0)
                for i in range(self.f):
                    if self._u[i] != 0:
                        coeffs[k - self.f + i] -= c * self._u[i]
        return tuple(coeffs[:self.f])

    def _layer_from_desc(self, coeffs: Sequence[Any]) -> Tuple[Any, ...]:
        values = rational_coeffs(coeffs)
        return self._layer_reduce(list(reversed(values)))

    def _layer_mul(self, a: Sequence[Any], b: Sequence[Any]) -> Tuple[Any, ...]:
        prod = [QQ(0)] * (2 * self.f - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb != 0:
                    prod[i + j] += ca * cb
        return self._layer_reduce(prod)

    def _layer_is_zero(self, a: Sequence[Any]) -> bool:
        return all(c == 0 for c in a)

    def _layer_valuation(self, a: Sequence[Any]) -> Optional[int]:
        values = [padic_valuation(c, self.p) for c in a if c != 0]
        return min(values) if values else None

    def _check_eisenstein(self) -> None:
        for j in range(self.e):
            v = self._layer_valuation(self._eis[j])
            if j == 0 and v != 1:
                msg = f"Coeficiente constante de E deve ter valorização exatamente 1 (obtido {v})"
                logger.error(msg)
                raise DomainError(msg)
            if v is not None and v < 1:
                msg = f"Coeficiente de y^{j} de E tem valorização {v} < 1: não é Eisenstein"
                logger.error(msg)
                raise DomainError(msg)

    # ---------------------------------------------------------- aritmética
    def _blocks(self, flat: Sequence[Any]) -> List[Tuple[Any, ...]]:
        return [tuple(flat[j * self.f:(j + 1) * self.f]) for j in range(self.e)]

    def _mul_flat(self, a: Sequence[Any], b: Sequence[Any]) -> Tuple[Any, ...]:
        blocks_a, blocks_b = self._blocks(a), self._blocks(b)
        prod = [list(self._layer_zero()) for _ in range(2 * self.e - 1)]
        for j, aj in enumerate(blocks_a):
            if self._layer_is_zero(aj):
                continue
            for k, bk in enumerate(blocks_b):
                if self._layer_is_zero(bk):
                    continue
                term = self._layer_mul(aj, bk)
                prod[j + k] = [x + y for x, y in zip(prod[j + k], term)]
        for m in range(2 * self.e - 2, self.e - 1, -1):
            c = prod[m]
            if self._layer_is_zero(c):
                continue
            prod[m] = list(self._layer_zero())
            for j in range(self.e):
                if not self._layer_is_zero(self._eis[j]):
                    term = self._layer_mul(c, self._eis[j])
                    prod[m - self.e + j] = [x - y for x, y in zip(prod[m - self.e + j], term)]
        return tuple(c for block in prod[:self.e] for c in block)

    # ---------------------------------------------------------- construtores
    def element(self, coords: Sequence[Any], precision: Optional[int] = None) -> 'PadicElement':
        """Elemento a partir de coordenadas planas (tamanho d) ou aninhadas (e listas de f)."""
        if coords and isinstance(coords[0], (list, tuple)):
            if len(coords) > self.e or any(len(block) > self.f for block in coords):
                raise DomainError(f"Coordenadas aninhadas excedem e={self.e}, f={self.f}")
            flat = []
            for j in range(self.e):
                block = list(coords[j]) if j < len(coords) else []
                flat.extend(block + [0] * (self.f - len(block)))
            coords = flat
        if len(coords) != self.d:
            raise DomainError(f"Esperadas {self.d} coordenadas, recebidas {len(coords)}")
        return PadicElement(self, tuple(to_rational(c) for c in coords), precision)

    def scalar(self, value: Any) -> 'PadicElement':
        coords = [QQ(0)] * self.d
        coords[0] = to_rational(value)
        return PadicElement(self, tuple(coords))

    def zero(self) -> 'PadicElement':
        return self.scalar(0)

    def one(self) -> 'PadicElement':
        return self.scalar(1)

    def from_layer(self, layer_coords: Sequence[Any], precision: Optional[int] = None) -> 'PadicElement':
        """Mergulha um elemento da camada (coordenadas crescentes em x)."""
        coords = list(self._layer_reduce([to_rational(c) for c in layer_coords])) + [QQ(0)] * (self.d - self.f)
        return PadicElement(self, tuple(coords), precision)

    def x(self) -> 'PadicElement':
        """Gerador da camada não ramificada."""
        if self.f == 1:
            return self.scalar(-self._u[0])
        return self.from_layer([0, 1])

    def y(self) -> 'PadicElement':
        """Uniformizador (raiz do polinômio de Eisenstein)."""
        if self.e == 1:
            return self.from_layer([-c for c in self._eis[0]])
        coords = [QQ(0)] * self.d
        coords[self.f] = QQ(1)
        return PadicElement(self, tuple(coords))

    def basis(self) -> List['PadicElement']:
        result = []
        for k in range(self.d):
            coords = [QQ(0)] * self.d
            coords[k] = QQ(1)
            result.append(PadicElement(self, tuple(coords)))
        return result

    def eisenstein_coefficients(self) -> List[Tuple[Any, ...]]:
        """Coeficientes a_0, ..., a_e de E (crescentes em y), como coordenadas da camada."""
        return list(self._eis)

    def with_precision(self, precision: int) -> 'PadicTower':
        return PadicTower(self.p, self.f, list(self.unram_poly), self.describe()['eis_poly'], precision)

    @cached_property
    def layer(self) -> 'PadicTower':
        """A camada não ramificada como torre com e = 1."""
        return PadicTower(self.p, self.f, list(self.unram_poly), [[1], [-self.p]], self.precision)

    @property
    def residue_cardinality(self) -> int:
        return self.p ** self.f

    @property
    def key(self) -> Tuple:
        return (self.p, self.unram_poly, self._eis)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PadicTower) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"PadicTower(p={self.p}, f={self.f}, e={self.e}, N={self.precision})"

    def describe(self) -> Dict[str, Any]:
        """Descritor serializável (polinômios em ordem decrescente)."""
        def layer_desc(coords):
            values = list(reversed(coords))
            while len(values) > 1 and values[0] == 0:
                values.pop(0)
            return values
        return {
            'p': self.p,
            'f': self.f,
            'unram_poly': list(self.unram_poly),
            'eis_poly': [layer_desc(c) for c in reversed(self._eis)],
            'precision': self.precision,
        }

    # ---------------------------------------------------------- estruturas
    def multiplication_matrix(self, z: 'PadicElement') -> List[List[Any]]:
        """Matriz (d x d, racional) da multiplicação por ``z`` na base padrão."""
        columns = [self._mul_flat(z.coords, b.coords) for b in self.basis()]
        return [[columns[k][i] for k in range(self.d)] for i in range(self.d)]

    @cached_property
    def basis_traces(self) -> Tuple[Any, ...]:
        """Tr_{F/Q}(b_k) para cada elemento da base padrão."""
        traces = []
        for b in self.basis():
            traces.append(sum((self._mul_flat(b.coords, c.coords)[k] for k, c in enumerate(self.basis())), QQ(0)))
        return tuple(traces)

    def rational_trace(self, z: 'PadicElement'):
        return sum((c * t for c, t in zip(z.coords, self.basis_traces)), QQ(0))

    # ---------------------------------------------------------- Frobenius
    def _layer_eval(self, coeffs_desc: Sequence[Any], r: Sequence[Any]) -> Tuple[Any, ...]:
        acc = self._layer_zero()
        for c in coeffs_desc:
            acc = self._layer_mul(acc, r)
            acc = tuple(a + (QQ(c) if i == 0 else QQ(0)) for i, a in enumerate(acc))
        return acc

    def _layer_inverse(self, a: Sequence[Any]) -> Tuple[Any, ...]:
        columns = []
        basis = [tuple(QQ(1) if i == k else QQ(0) for i in range(self.f)) for k in range(self.f)]
        for b in basis:
            columns.append(self._layer_mul(a, b))
        matrix = [[columns[k][i] for k in range(self.f)] for i in range(self.f)]
        return tuple(rational_solve(matrix, list(self._layer_one())))

    def _layer_generator(self) -> Tuple[Any, ...]:
        if self.f == 1:
            return (-self._u[0],)
        return self._layer_reduce([QQ(0), QQ(1)])

    @cached_property
    def frobenius_image(self) -> Tuple[Tuple[Any, ...], Optional[int]]:
        """Imagem de x pelo Frobenius: raiz de u congruente a x^p mod p.

        Returns:
            Par (coordenadas na camada, precisão), com precisão ``None`` quando a
            raiz foi reconhecida exatamente no modelo global.
        """
        unram = list(self.unram_poly)
        derivative = [c * (len(unram) - 1 - i) for i, c in enumerate(unram[:-1])]
        r = self._layer_one()
        generator = self._layer_generator()
        for _ in range(self.p):
            r = self._layer_mul(r, generator)
        if self._layer_is_zero(self._layer_eval(unram, r)):
            return r, None

        modulus = self.p ** self.precision
        r = tuple(QQ(reduce_mod(c, modulus)) for c in r)
        reached = 1
        while reached < 2 * self.precision:
            value = self._layer_eval(unram, r)
            slope = self._layer_eval(derivative, r)
            step = self._layer_mul(value, self._layer_inverse(slope))
            r = tuple(QQ(reduce_mod(a - b, modulus)) for a, b in zip(r, step))
            reached *= 2
        candidate = tuple(QQ(symmetric_residue(numerator(c), modulus)) for c in r)
        if self._layer_is_zero(self._layer_eval(unram, candidate)):
            logger.debug(f"Frobenius reconhecido exatamente: {candidate}")
            return candidate, None
        logger.debug(f"Frobenius aproximado à precisão {self.precision}")
        return candidate, self.precision

    @cached_property
    def _frobenius_powers(self) -> List[Tuple[Any, ...]]:
        r, _ = self.frobenius_image
        powers = [self._layer_one()]
        for _ in range(1, self.f):
            powers.append(self._layer_mul(powers[-1], r))
        return powers

    def frobenius_lift(self, z: 'PadicElement') -> 'PadicElement':
        """Frobenius absoluto aplicado a um elemento da camada não ramificada."""
        if not z.in_layer():
            msg = "Frobenius só está definido aqui para elementos da camada não ramificada"
            logger.error(msg)
            raise DomainError(msg)
        _, frob_precision = self.frobenius_image
        acc = [QQ(0)] * self.f
        for c, power in zip(z.coords[:self.f], self._frobenius_powers):
            if c != 0:
                acc = [a + c * b for a, b in zip(acc, power)]
        precision = z.precision
        if frob_precision is not None and not z.is_zero:
            shift = min(0, min(padic_valuation(c, self.p) for c in z.coords[:self.f] if c != 0))
            bound = frob_precision + shift
            precision = bound if precision is None else min(precision, bound)
        return self.from_layer(acc, precision)

    def frobenius_power(self, z: 'PadicElement', k: int) -> 'PadicElement':
        for _ in range(k % self.f if self.frobenius_image[1] is None else k):
            z = self.frobenius_lift(z)
        return z

    # ---------------------------------------------------------- resíduos
    def residue_is_square(self, residue: Sequence[int]) -> bool:
        """Decide se um elemento não nulo do corpo residual F_q é quadrado."""
        if all(c % self.p == 0 for c in residue):
            raise DomainError("Resíduo nulo não tem caráter quadrático")
        if self.p == 2:
            return True
        return self.residue_power(residue, (self.residue_cardinality - 1) // 2) == [1]

    def residue_power(self, residue: Sequence[int], exponent: int) -> List[int]:
        """Potência no corpo residual; devolve coeficientes decrescentes (formato galoistools)."""
        modulus = [c % self.p for c in self.unram_poly]
        base = gf_strip([int(c) % self.p for c in reversed(residue)])
        return [int(c) for c in gf_pow_mod(base, exponent, modulus, self.p, ZZ)]

    def ideal_exponents(self, level: int) -> List[int]:
        """Expoentes m_j com π^level O_F = ⊕_j p^{m_j} O_L y^j."""
        return [max(0, _ceil_div(level - j, self.e)) for j in range(self.e)]

    def residue_key(self, z: 'PadicElement', level: int) -> Tuple[int, ...]:
        """Forma canônica de ``z`` (inteiro) módulo π^level."""
        exponents = self.ideal_exponents(level)
        key = []
        for k, c in enumerate(z.coords):
            modulus = self.p ** exponents[k // self.f]
            key.append(reduce_mod(c, modulus) if modulus > 1 else 0)
        return tuple(key)

    def residue_representatives(self, level: int, units_only: bool = False) -> Iterator['PadicElement']:
        """Representantes de O_F/π^level (opcionalmente apenas unidades)."""
        exponents = self.ideal_exponents(level)
        ranges = [range(self.p ** exponents[k // self.f]) for k in range(self.d)]
        for coords in itertools.product(*ranges):
            if units_only and all(c % self.p == 0 for c in coords[:self.f]):
                continue
            yield PadicElement(self, tuple(QQ(c) for c in coords))


class PadicElement:
    """Elemento de uma torre: coordenadas racionais exatas ou truncadas (``precision``)."""

    __slots__ = ('tower', 'coords', 'precision')

    def __init__(self, tower: PadicTower, coords: Tuple[Any, ...], precision: Optional[int] = None):
        self.tower = tower
        self.coords = coords
        self.precision = precision

    # ---------------------------------------------------------- utilidades
    def _coerce(self, other: Any) -> 'PadicElement':
        if isinstance(other, PadicElement):
            if other.tower != self.tower:
                raise DomainError("Elementos de torres diferentes")
            return other
        return self.tower.scalar(other)

    @staticmethod
    def _min_precision(a: Optional[int], b: Optional[int]) -> Optional[int]:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def _apparent_valuation(self):
        if self.is_zero:
            return QQ(self.precision) if self.precision is not None else None
        return self._coordinate_valuation()

    def _coordinate_valuation(self):
        tower = self.tower
        best = None
        for j, block in enumerate(tower._blocks(self.coords)):
            v = tower._layer_valuation(block)
            if v is None:
                continue
            candidate = QQ(v) + QQ(j, tower.e)
            if best is None or candidate < best:
                best = candidate
        return best

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_exact(self) -> bool:
        return self.precision is None

    def in_layer(self) -> bool:
        return all(c == 0 for c in self.coords[self.tower.f:])

    def layer_coords(self) -> Tuple[Any, ...]:
        return self.coords[:self.tower.f]

    # ---------------------------------------------------------- aritmética
    def __add__(self, other: Any) -> 'PadicElement':
        other = self._coerce(other)
        coords = tuple(a + b for a, b in zip(self.coords, other.coords))
        return PadicElement(self.tower, coords, self._min_precision(self.precision, other.precision))

    __radd__ = __add__

    def __neg__(self) -> 'PadicElement':
        return PadicElement(self.tower, tuple(-c for c in self.coords), self.precision)

    def __sub__(self, other: Any) -> 'PadicElement':
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> 'PadicElement':
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> 'PadicElement':
        other = self._coerce(other)
        coords = self.tower._mul_flat(self.coords, other.coords)
        precision = None
        if self.precision is not None or other.precision is not None:
            va, vb = self._apparent_valuation(), other._apparent_valuation()
            bounds = []
            if self.precision is not None and vb is not None:
                bounds.append(self.precision + vb)
            if other.precision is not None and va is not None:
                bounds.append(other.precision + va)
            precision = int(min(bounds)) if bounds else self._min_precision(self.precision, other.precision)
        return PadicElement(self.tower, coords, precision)

    __rmul__ = __mul__

    def inverse(self) -> 'PadicElement':
        if self.is_zero:
            raise DomainError("Inverso de zero")
        matrix = self.tower.multiplication_matrix(self)
        coords = rational_solve(matrix, list(self.tower.one().coords))
        precision = None
        if self.precision is not None:
            v = self.valuation()
            precision = int(self.precision - 2 * v)
        return PadicElement(self.tower, tuple(coords), precision)

    def __truediv__(self, other: Any) -> 'PadicElement':
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> 'PadicElement':
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> 'PadicElement':
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.tower.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PadicElement):
            return self.tower == other.tower and self.coords == other.coords
        try:
            return self == self.tower.scalar(other)
        except Exception:
            return False

    def __hash__(self) -> int:
        return hash((self.tower.key, self.coords))

    def __repr__(self) -> str:
        tag = '' if self.precision is None else f", N={self.precision}"
        return f"PadicElement({[str(c) for c in self.coords]}{tag})"

    # ---------------------------------------------------------- valorização
    def valuation(self):
        """Valorização em (1/e)Z, normalizada por v(p) = 1."""
        if self.is_zero:
            if self.precision is None:
                raise DomainError("Valorização de zero não está definida")
            raise PrecisionError(f"Elemento indistinguível de zero à precisão {self.precision}", self.precision)
        v = self._coordinate_valuation()
        if self.precision is not None and v >= self.precision:
            raise PrecisionError(f"Valorização {v} não certificada à precisão {self.precision}", self.precision)
        return v

    def normalized_valuation(self) -> int:
        """Valorização na normalização de F (v(π) = 1)."""
        return int(self.valuation() * self.tower.e)

    def unit_part(self) -> Tuple[int, 'PadicElement']:
        """Decompõe ``self = π^m * u``; devolve ``(m, u)``."""
        m = self.normalized_valuation()
        return m, self * (self.tower.y() ** (-m))

    def residue(self) -> Tuple[int, ...]:
        """Resíduo de uma unidade no corpo residual (coordenadas crescentes mod p)."""
        if self.valuation() != 0:
            raise DomainError("Resíduo definido apenas para unidades")
        return tuple(reduce_mod(c, self.tower.p) for c in self.coords[:self.tower.f])

    def agrees_with(self, other: 'PadicElement', precision: int) -> bool:
        """Congruência módulo p^precision."""
        difference = self - other
        if difference.is_zero:
            return True
        return difference._coordinate_valuation() >= precision

    def is_integral(self) -> bool:
        return self.is_zero or self._coordinate_valuation() >= 0
