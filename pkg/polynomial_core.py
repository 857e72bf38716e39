"""
Polynomial Core - petpatch
Aritmética exata de polinômios multivariados sobre Q, variáveis de carta,
graduações, ordens monomiais e polinômios de Laurent
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from types import MappingProxyType
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from exceptions import (
    ChartMismatchError,
    DegenerateInputError,
    MissingAssignmentError,
    PolynomialFormatError,
)

CHART = "chart"
HOMOG = "homog"

LEX = "lex"
GREVLEX = "grevlex"
T_FIRST = "tFirstThenGrevlex"
SCHEMES = (LEX, GREVLEX, T_FIRST)

INHOMOGENEOUS = "inhomogeneous"

Exponent = Tuple[int, ...]
Number = Union[int, Fraction]


@dataclass(frozen=True)
class VarId:
    """Variável z_{ij} de uma carta ou a variável de homogeneização t"""
    kind: str
    i: int = 0
    j: int = 0

    @classmethod
    def chart(cls, i: int, j: int) -> "VarId":
        return cls(CHART, i, j)

    @classmethod
    def homog(cls) -> "VarId":
        return cls(HOMOG)

    @property
    def position(self) -> Tuple[int, int]:
        return (self.i, self.j)

    def precedence_key(self) -> Tuple[int, int]:
        """Precedência por colunas: z_{ij} vem antes de z_{i'j'} se (j,i) < (j',i')"""
        return (self.j, self.i)

    def __str__(self) -> str:
        if self.kind == HOMOG:
            return "t"
        return f"z[{self.i}][{self.j}]"


@dataclass(frozen=True)
class PolynomialRing:
    """Anel Q[z] das variáveis livres de uma carta, opcionalmente com t.

    As variáveis ficam em ordem crescente de precedência (índice 0 é a menor).
    Quando homogeneizado, t ocupa a última posição dos expoentes.
    """
    label: str
    variables: Tuple[VarId, ...]
    homogenized: bool = False
    _index: Dict[VarId, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        keys = [v.precedence_key() for v in self.variables]
        if any(v.kind != CHART for v in self.variables):
            raise DegenerateInputError("Variáveis do anel devem ser variáveis de carta")
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise DegenerateInputError("Variáveis do anel devem estar ordenadas por (j,i) e sem repetição")
        index = {v: k for k, v in enumerate(self.variables)}
        if self.homogenized:
            index[VarId.homog()] = len(self.variables)
        object.__setattr__(self, "_index", index)

    @classmethod
    def for_positions(cls, label: str, positions: Iterable[Tuple[int, int]]) -> "PolynomialRing":
        ordered = sorted(set(positions), key=lambda p: (p[1], p[0]))
        return cls(label, tuple(VarId.chart(i, j) for i, j in ordered))

    @property
    def nvars(self) -> int:
        """Número de variáveis da carta (sem t)"""
        return len(self.variables)

    @property
    def width(self) -> int:
        return self.nvars + (1 if self.homogenized else 0)

    @property
    def all_variables(self) -> Tuple[VarId, ...]:
        if self.homogenized:
            return self.variables + (VarId.homog(),)
        return self.variables

    def with_homog(self) -> "PolynomialRing":
        if self.homogenized:
            return self
        return PolynomialRing(self.label, self.variables, True)

    def base(self) -> "PolynomialRing":
        if not self.homogenized:
            return self
        return PolynomialRing(self.label, self.variables, False)

    def index(self, var: VarId) -> int:
        try:
            return self._index[var]
        except KeyError:
            raise ChartMismatchError(f"Variável {var} não pertence à carta {self.label}") from None

    def has(self, var: VarId) -> bool:
        return var in self._index

    def unit_exponent(self, var: VarId, power: int = 1) -> Exponent:
        exps = [0] * self.width
        exps[self.index(var)] = power
        return tuple(exps)

    def zero(self) -> "Polynomial":
        return Polynomial(self)

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Number) -> "Polynomial":
        return Polynomial(self, {(0,) * self.width: c})

    def var(self, var: VarId) -> "Polynomial":
        return Polynomial(self, {self.unit_exponent(var): 1})

    def z(self, i: int, j: int) -> "Polynomial":
        return self.var(VarId.chart(i, j))

    def t(self) -> "Polynomial":
        return self.var(VarId.homog())


@dataclass(frozen=True)
class TermOrder:
    """Ordem monomial: lex, grevlex ou t primeiro e depois grevlex"""
    scheme: str = GREVLEX

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"Ordem monomial desconhecida: {self.scheme}")

    def key(self, ring: PolynomialRing) -> Callable[[Exponent], tuple]:
        return _order_key(self.scheme, ring.nvars, ring.homogenized)


DEFAULT_ORDER = TermOrder(GREVLEX)


@lru_cache(maxsize=None)
def _order_key(scheme: str, nvars: int, homogenized: bool) -> Callable[[Exponent], tuple]:
    # t é a menor variável em lex e grevlex
    if scheme == LEX:
        idx = tuple(range(nvars - 1, -1, -1)) + ((nvars,) if homogenized else ())
        return lambda e: tuple(e[k] for k in idx)

    if scheme == GREVLEX or not homogenized:
        idx = ((nvars,) if homogenized else ()) + tuple(range(nvars))
        return lambda e: (sum(e),) + tuple(-e[k] for k in idx)

    idx = tuple(range(nvars))
    return lambda e: (sum(e), e[nvars]) + tuple(-e[k] for k in idx)


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(map(operator.add, a, b))


class Polynomial:
    """Polinômio exato: mapa de expoentes para coeficientes racionais não nulos"""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Optional[Mapping[Exponent, Number]] = None):
        self.ring = ring
        self._hash = None
        clean: Dict[Exponent, Fraction] = {}
        for exp, coef in (terms or {}).items():
            if len(exp) != ring.width:
                raise ChartMismatchError(f"Expoente {exp} incompatível com a carta {ring.label}")
            c = Fraction(coef)
            if c:
                clean[tuple(exp)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, ring: PolynomialRing, terms: Dict[Exponent, Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p.ring = ring
        p._hash = None
        p._terms = terms
        return p

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ChartMismatchError(
                    f"Operandos em cartas diferentes: {self.ring.label} e {other.ring.label}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = _add_exp(ea, eb)
                s = terms.get(exp, 0) + ca * cb
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        return Polynomial._raw(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DegenerateInputError("Expoente negativo")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def scale(self, c: Number) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: v * c for e, v in self._terms.items()})

    def shift(self, exp: Exponent, c: Number = 1) -> "Polynomial":
        """Multiplica pelo termo c·x^exp"""
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {_add_exp(e, exp): v * c for e, v in self._terms.items()})

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def support(self) -> Tuple[VarId, ...]:
        used = set()
        for exp in self._terms:
            used.update(k for k, e in enumerate(exp) if e)
        return tuple(v for k, v in enumerate(self.ring.all_variables) if k in used)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.ring.width, Fraction(0))

    def sorted_terms(self, order: TermOrder = DEFAULT_ORDER, descending: bool = True) -> List[Tuple[Exponent, Fraction]]:
        key = order.key(self.ring)
        return sorted(self._terms.items(), key=lambda item: key(item[0]), reverse=descending)

    def leading_term(self, order: TermOrder = DEFAULT_ORDER) -> Tuple[Exponent, Fraction]:
        if not self._terms:
            raise DegenerateInputError("Polinômio zero não tem termo líder")
        key = order.key(self.ring)
        exp = max(self._terms, key=key)
        return exp, self._terms[exp]

    def leading_monomial(self, order: TermOrder = DEFAULT_ORDER) -> Exponent:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: TermOrder = DEFAULT_ORDER) -> Fraction:
        return self.leading_term(order)[1]

    def monic(self, order: TermOrder = DEFAULT_ORDER) -> "Polynomial":
        return self.scale(1 / self.leading_coefficient(order))

    def normalized(self, order: TermOrder = DEFAULT_ORDER) -> "Polynomial":
        """Coeficientes inteiros sem conteúdo e coeficiente líder positivo"""
        if not self._terms:
            return self
        den = reduce(lcm, (c.denominator for c in self._terms.values()), 1)
        num = reduce(gcd, (c.numerator for c in self._terms.values()), 0)
        factor = Fraction(den, num)
        if self.leading_coefficient(order) < 0:
            factor = -factor
        return self.scale(factor)

    def evaluate(self, point: Mapping[VarId, Number]) -> Fraction:
        values = []
        for var in self.ring.all_variables:
            values.append(point.get(var))
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for k, e in enumerate(exp):
                if e:
                    if values[k] is None:
                        raise MissingAssignmentError(
                            f"Ponto sem valor para {self.ring.all_variables[k]}"
                        )
                    term *= Fraction(values[k]) ** e
            total += term
        return total

    def derivative(self, var: VarId) -> "Polynomial":
        k = self.ring.index(var)
        terms: Dict[Exponent, Fraction] = {}
        for exp, c in self._terms.items():
            if exp[k]:
                new = list(exp)
                new[k] -= 1
                terms[tuple(new)] = c * exp[k]
        return Polynomial._raw(self.ring, terms)

    def homogenize(self) -> "Polynomial":
        """Multiplica cada termo de grau d por t^(D-d), com D o grau máximo"""
        if not self._terms:
            raise DegenerateInputError("homogenize: polinômio zero")
        if self.ring.homogenized:
            raise DegenerateInputError("homogenize exige polinômio apenas nas variáveis da carta")
        top = self.total_degree()
        ring = self.ring.with_homog()
        return Polynomial._raw(ring, {exp + (top - sum(exp),): c for exp, c in self._terms.items()})

    def dehomogenize(self) -> "Polynomial":
        """Substitui t=1"""
        if not self.ring.homogenized:
            return self
        ring = self.ring.base()
        terms: Dict[Exponent, Fraction] = {}
        for exp, c in self._terms.items():
            key = exp[:-1]
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return Polynomial._raw(ring, terms)

    def lowest_form(self) -> "Polynomial":
        """Soma dos termos de grau total mínimo"""
        if not self._terms:
            raise DegenerateInputError("lowest_form: polinômio zero")
        low = min(sum(e) for e in self._terms)
        return Polynomial._raw(self.ring, {e: c for e, c in self._terms.items() if sum(e) == low})

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        names = [str(v) for v in self.ring.all_variables]
        display = _display_indices(self.ring)
        pieces = []
        for idx, (exp, c) in enumerate(self.sorted_terms(DEFAULT_ORDER)):
            factors = []
            magnitude = abs(c)
            monomial = []
            for k in display:
                e = exp[k]
                if e == 1:
                    monomial.append(names[k])
                elif e > 1:
                    monomial.append(f"{names[k]}^{e}")
            if magnitude != 1 or not monomial:
                factors.append(_fraction_text(magnitude))
            factors.extend(monomial)
            body = "*".join(factors)
            if idx == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.ring.label}: {self.to_text()})"


def _display_indices(ring: PolynomialRing) -> List[int]:
    # variáveis da maior para a menor; t é a menor
    order = list(range(ring.nvars - 1, -1, -1))
    if ring.homogenized:
        order.append(ring.nvars)
    return order


def _fraction_text(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Operação exata add/sub/mul entre polinômios da mesma carta"""
    if a.ring != b.ring:
        raise ChartMismatchError(f"Operandos em cartas diferentes: {a.ring.label} e {b.ring.label}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Operação desconhecida: {op}")


def substitute_affine(p: Polynomial, sub: Mapping[VarId, Polynomial]) -> Polynomial:
    """Substituição simultânea de variáveis por polinômios da mesma carta"""
    ring = p.ring
    images: Dict[int, Polynomial] = {}
    for var, image in sub.items():
        if image.ring != ring:
            raise ChartMismatchError(
                f"Imagem de {var} está na carta {image.ring.label}, esperado {ring.label}"
            )
        images[ring.index(var)] = image
    if not images:
        return p

    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power(k: int, e: int) -> Polynomial:
        if (k, e) not in powers:
            powers[(k, e)] = images[k] if e == 1 else power(k, e - 1) * images[k]
        return powers[(k, e)]

    result = ring.zero()
    grouped: Dict[Exponent, Dict[Exponent, Fraction]] = {}
    for exp, c in p.terms.items():
        moving = tuple(e if k in images else 0 for k, e in enumerate(exp))
        fixed = tuple(0 if k in images else e for k, e in enumerate(exp))
        grouped.setdefault(moving, {})[fixed] = c

    for moving, rest in grouped.items():
        factor = ring.one()
        for k, e in enumerate(moving):
            if e:
                factor = factor * power(k, e)
        result = result + factor * Polynomial._raw(ring, dict(rest))
    return result


def homogenize(p: Polynomial) -> Polynomial:
    return p.homogenize()


def lowest_form(p: Polynomial) -> Polynomial:
    return p.lowest_form()


_TERM_RE = re.compile(r"[+-]?[^+-]+")
_VAR_RE = re.compile(r"^z\[(\d+)\]\[(\d+)\](?:\^(\d+))?$")
_T_RE = re.compile(r"^t(?:\^(\d+))?$")
_NUM_RE = re.compile(r"^(\d+)(?:/(\d+))?$")


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Lê o formato de texto exato, por exemplo `-1/2*z[3][1]^2*z[1][1] + z[4][1]`"""
    compact = text.replace(" ", "")
    if not compact:
        raise PolynomialFormatError("Polinômio vazio")
    result = ring.zero()
    consumed = 0
    for match in _TERM_RE.finditer(compact):
        if match.start() != consumed:
            raise PolynomialFormatError(f"Texto inválido perto de '{compact[consumed:]}'")
        consumed = match.end()
        token = match.group(0)
        sign = -1 if token.startswith("-") else 1
        body = token.lstrip("+-")
        coef = Fraction(sign)
        exps = [0] * ring.width
        for factor in body.split("*"):
            var_match = _VAR_RE.match(factor)
            t_match = _T_RE.match(factor)
            num_match = _NUM_RE.match(factor)
            if var_match:
                i, j, e = var_match.groups()
                exps[ring.index(VarId.chart(int(i), int(j)))] += int(e or 1)
            elif t_match:
                exps[ring.index(VarId.homog())] += int(t_match.group(1) or 1)
            elif num_match:
                num, den = num_match.groups()
                if den is not None and int(den) == 0:
                    raise PolynomialFormatError("Denominador zero")
                coef *= Fraction(int(num), int(den or 1))
            else:
                raise PolynomialFormatError(f"Fator inválido: '{factor}'")
        result = result + Polynomial(ring, {tuple(exps): coef})
    if consumed != len(compact):
        raise PolynomialFormatError(f"Texto inválido perto de '{compact[consumed:]}'")
    return result


@dataclass(frozen=True)
class Grading:
    """Peso inteiro (vetor de posto r) por variável da carta"""
    rank: int
    weights: Tuple[Tuple[VarId, Tuple[int, ...]], ...]

    def weight(self, var: VarId) -> Tuple[int, ...]:
        if var.kind == HOMOG:
            return (0,) * self.rank
        for v, w in self.weights:
            if v == var:
                return w
        raise DegenerateInputError(f"Graduação sem peso para {var}")

    @classmethod
    def coarse(cls, chart) -> "Grading":
        """deg z_{ij} = i - w(j)"""
        w = chart.w.one_line
        return cls(1, tuple((v, (v.i - w[v.j - 1],)) for v in chart.ring.variables))

    @classmethod
    def torus(cls, chart) -> "Grading":
        """deg z_{ij} = e_i - e_{w(j)}"""
        w = chart.w.one_line
        n = len(w)
        weights = []
        for v in chart.ring.variables:
            vec = [0] * n
            vec[v.i - 1] += 1
            vec[w[v.j - 1] - 1] -= 1
            weights.append((v, tuple(vec)))
        return cls(n, tuple(weights))


def grade_degree(p: Polynomial, g: Grading) -> Union[Tuple[int, ...], str]:
    """Grau comum dos termos, ou INHOMOGENEOUS"""
    if p.is_zero():
        raise DegenerateInputError("grade_degree: polinômio zero")
    table = [g.weight(v) for v in p.ring.all_variables]
    degrees = set()
    for exp in p.terms:
        deg = [0] * g.rank
        for k, e in enumerate(exp):
            if e:
                for r in range(g.rank):
                    deg[r] += e * table[k][r]
        degrees.add(tuple(deg))
        if len(degrees) > 1:
            return INHOMOGENEOUS
    return degrees.pop()


@dataclass(frozen=True)
class LaurentPoly:
    """Polinômio de Laurent inteiro em chi, pares (expoente, coeficiente) ordenados"""
    coefficients: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in d.items() if c)))

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(((0, 1),))

    @classmethod
    def one_minus_chi(cls, d: int) -> "LaurentPoly":
        return cls.from_dict({0: 1}) - cls.from_dict({d: 1})

    @classmethod
    def product_one_minus(cls, degrees: Iterable[int]) -> "LaurentPoly":
        result = cls.one()
        for d in degrees:
            result = result * cls.one_minus_chi(d)
        return result

    def as_dict(self) -> Dict[int, int]:
        return dict(self.coefficients)

    def pairs(self) -> List[List[int]]:
        return [[e, c] for e, c in self.coefficients]

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = self.as_dict()
        for e, c in other.coefficients:
            d[e] = d.get(e, 0) + c
        return LaurentPoly.from_dict(d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.coefficients))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        d: Dict[int, int] = {}
        for ea, ca in self.coefficients:
            for eb, cb in other.coefficients:
                d[ea + eb] = d.get(ea + eb, 0) + ca * cb
        return LaurentPoly.from_dict(d)

    def evaluate(self, x: Number) -> Fraction:
        x = Fraction(x)
        return sum((c * x ** e for e, c in self.coefficients), Fraction(0))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self.coefficients):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "χ" if e == 1 else f"χ^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if idx == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)


# Polinômios inteiros univariados em eta, listas de coeficientes do grau 0 para cima

def uni_normalize(p: Sequence[int]) -> List[int]:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def uni_add(a: Sequence[int], b: Sequence[int]) -> List[int]:
    size = max(len(a), len(b))
    return uni_normalize([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(size)])


def uni_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return uni_normalize(out)


def uni_shift(p: Sequence[int], k: int) -> List[int]:
    return uni_normalize([0] * k + list(p)) if p else []


def uni_one_minus_eta_power(d: int) -> List[int]:
    """1 - eta^d"""
    if d == 0:
        return []
    out = [0] * (d + 1)
    out[0] = 1
    out[d] = -1
    return out


def uni_eval(p: Sequence[int], x: int) -> int:
    return sum(c * x ** k for k, c in enumerate(p))


def uni_divide_one_minus_eta(p: Sequence[int]) -> Tuple[List[int], int]:
    """Divide por (1 - eta); retorna (quociente, p(1)). O quociente só é exato com p(1) = 0"""
    p = uni_normalize(p)
    if not p:
        return [], 0
    # p = (1 - eta) q + r  com q_k = soma dos coeficientes até k
    quotient = []
    running = 0
    for c in p[:-1]:
        running += c
        quotient.append(running)
    remainder = running + p[-1]
    return uni_normalize(quotient), remainder


def uni_to_text(p: Sequence[int], var: str = "η") -> str:
    p = uni_normalize(p)
    if not p:
        return "0"
    pieces = []
    for k, c in enumerate(p):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces)
