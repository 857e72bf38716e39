"""
Groebner Engine - petpatch
Divisão multivariada, algoritmo de Buchberger, ideais iniciais,
numeradores de séries de Hilbert e dimensão de Krull
"""

import heapq
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from exceptions import ChartMismatchError, DegenerateInputError, InternalInconsistencyError
from logging_system import get_logger, log_function_call
from polynomial_core import (
    DEFAULT_ORDER,
    Exponent,
    Polynomial,
    PolynomialRing,
    TermOrder,
    uni_add,
    uni_divide_one_minus_eta,
    uni_eval,
    uni_mul,
    uni_one_minus_eta_power,
    uni_shift,
)

logger = get_logger(__name__)

EMPTY = "empty"

Terms = Dict[Exponent, Fraction]


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _sub_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


@dataclass
class _Element:
    """Elemento de base mônico com monômio líder em cache"""
    lead: Exponent
    terms: Terms


def _reduce_terms(terms: Terms, basis: Sequence[_Element], key) -> Terms:
    """Forma normal completa de terms módulo basis (monômios líderes em basis)"""
    work = dict(terms)
    heap = []
    queued = set()

    def push(exp):
        if exp not in queued:
            queued.add(exp)
            heapq.heappush(heap, (tuple(-x for x in key(exp)), exp))

    for exp in work:
        push(exp)

    remainder: Terms = {}
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = work.get(m)
        if c is None:
            continue
        divisor = None
        for element in basis:
            if _divides(element.lead, m):
                divisor = element
                break
        if divisor is None:
            remainder[m] = c
            del work[m]
            continue
        shift = _sub_exp(m, divisor.lead)
        for e, a in divisor.terms.items():
            ne = tuple(x + y for x, y in zip(e, shift))
            value = work.get(ne, 0) - c * a
            if value:
                work[ne] = value
                push(ne)
            else:
                work.pop(ne, None)
    return remainder


def _make_element(terms: Terms, key) -> _Element:
    lead = max(terms, key=key)
    lc = terms[lead]
    return _Element(lead, {e: c / lc for e, c in terms.items()})


def _s_terms(f: _Element, g: _Element) -> Terms:
    lcm = _lcm(f.lead, g.lead)
    sf = _sub_exp(lcm, f.lead)
    sg = _sub_exp(lcm, g.lead)
    out: Terms = {}
    for e, c in f.terms.items():
        out[tuple(x + y for x, y in zip(e, sf))] = c
    for e, c in g.terms.items():
        ne = tuple(x + y for x, y in zip(e, sg))
        value = out.get(ne, 0) - c
        if value:
            out[ne] = value
        else:
            out.pop(ne, None)
    return out


def _buchberger_terms(generators: Sequence[Terms], key, use_coprime: bool = True, use_chain: bool = True) -> List[_Element]:
    basis: List[_Element] = []
    for terms in generators:
        reduced = _reduce_terms(terms, basis, key)
        if reduced:
            basis.append(_make_element(reduced, key))

    if any(sum(el.lead) == 0 for el in basis):
        width = len(basis[0].lead)
        return [_Element((0,) * width, {(0,) * width: Fraction(1)})]

    heap = []
    pending = set()

    def add_pair(i, j):
        lcm = _lcm(basis[i].lead, basis[j].lead)
        heapq.heappush(heap, (key(lcm), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            add_pair(i, j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        fi, fj = basis[i], basis[j]
        if use_coprime and _coprime(fi.lead, fj.lead):
            continue
        if use_chain:
            lcm = _lcm(fi.lead, fj.lead)
            skip = False
            for k, fk in enumerate(basis):
                if k in (i, j) or not _divides(fk.lead, lcm):
                    continue
                if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                    skip = True
                    break
            if skip:
                continue
        h = _reduce_terms(_s_terms(fi, fj), basis, key)
        if not h:
            continue
        element = _make_element(h, key)
        if sum(element.lead) == 0:
            return [element]
        basis.append(element)
        new = len(basis) - 1
        for k in range(new):
            add_pair(k, new)

    return _interreduce(basis, key)


def _interreduce(basis: List[_Element], key) -> List[_Element]:
    ordered = sorted(basis, key=lambda el: key(el.lead))
    minimal: List[_Element] = []
    for el in ordered:
        if not any(_divides(other.lead, el.lead) for other in minimal):
            minimal.append(el)

    reduced = []
    for idx, el in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = {e: c for e, c in el.terms.items() if e != el.lead}
        tail = _reduce_terms(tail, others, key)
        tail[el.lead] = Fraction(1)
        reduced.append(_Element(el.lead, tail))
    return sorted(reduced, key=lambda el: key(el.lead))


class Ideal:
    """Ideal gerado por polinômios de uma carta, com cache de bases de Gröbner"""

    def __init__(self, ring: PolynomialRing, generators: Sequence[Polynomial] = ()):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ChartMismatchError(
                    f"Gerador na carta {g.ring.label}, ideal na carta {ring.label}"
                )
            if not g.is_zero():
                gens.append(g)
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._gb_cache: Dict[TermOrder, Tuple[Polynomial, ...]] = {}
        self._lock = threading.Lock()

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["_lock"]
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.Lock()

    def groebner_basis(self, order: TermOrder = DEFAULT_ORDER) -> Tuple[Polynomial, ...]:
        with self._lock:
            if order not in self._gb_cache:
                key = order.key(self.ring)
                elements = _buchberger_terms([dict(g.terms) for g in self.generators], key)
                self._gb_cache[order] = tuple(Polynomial(self.ring, el.terms) for el in elements)
                logger.debug(
                    f"Base de Gröbner ({order.scheme}) com {len(elements)} elementos "
                    f"para {len(self.generators)} geradores na carta {self.ring.label}"
                )
            return self._gb_cache[order]

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].total_degree() == 0

    def contains(self, p: Polynomial, order: TermOrder = DEFAULT_ORDER) -> bool:
        return normal_form(p, list(self.groebner_basis(order)), order).is_zero() if self.generators else p.is_zero()

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise ChartMismatchError("Soma de ideais em cartas diferentes")
        return Ideal(self.ring, self.generators + other.generators)

    def __repr__(self) -> str:
        return f"Ideal({self.ring.label}, {len(self.generators)} geradores)"


def normal_form(p: Polynomial, G: Sequence[Polynomial], order: TermOrder = DEFAULT_ORDER) -> Polynomial:
    """Resto da divisão de p por G; determinístico dada a ordem e a ordem de G"""
    if not G:
        raise DegenerateInputError("normal_form exige G não vazio")
    key = order.key(p.ring)
    basis = []
    for g in G:
        if g.ring != p.ring:
            raise ChartMismatchError(f"Divisor na carta {g.ring.label}, dividendo em {p.ring.label}")
        if g.is_zero():
            raise DegenerateInputError("normal_form exige divisores não nulos")
        basis.append(_make_element(dict(g.terms), key))
    return Polynomial(p.ring, _reduce_terms(dict(p.terms), basis, key))


@log_function_call()
def buchberger(I: Ideal, order: TermOrder = DEFAULT_ORDER) -> List[Polynomial]:
    """Base de Gröbner reduzida (mônica, inter-reduzida) de I; fica em cache no ideal"""
    return list(I.groebner_basis(order))


def is_groebner_basis(G: Sequence[Polynomial], order: TermOrder = DEFAULT_ORDER) -> bool:
    """Critério de Buchberger: todo S-polinômio reduz a zero"""
    if not G:
        return True
    key = order.key(G[0].ring)
    basis = [_make_element(dict(g.terms), key) for g in G]
    for j in range(len(basis)):
        for i in range(j):
            if _reduce_terms(_s_terms(basis[i], basis[j]), basis, key):
                return False
    return True


def initial_ideal(I: Ideal, order: TermOrder = DEFAULT_ORDER) -> List[Exponent]:
    """Geradores mínimos do ideal dos termos líderes da base reduzida"""
    if not I.generators:
        return []
    return [g.leading_monomial(order) for g in I.groebner_basis(order)]


def _minimalize(gens) -> FrozenSet[Exponent]:
    unique = sorted(set(gens), key=sum)
    kept: List[Exponent] = []
    for m in unique:
        if not any(_divides(k, m) for k in kept):
            kept.append(m)
    return frozenset(kept)


def hilbert_numerator(monomial_gens: Sequence[Exponent], nvars: int) -> List[int]:
    """Numerador de Hilb(S/I, eta) sobre (1-eta)^nvars para I monomial"""
    gens = _minimalize(tuple(m[:nvars]) for m in monomial_gens)
    return list(_numerator(gens))


@lru_cache(maxsize=200000)
def _numerator(gens: FrozenSet[Exponent]) -> Tuple[int, ...]:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()

    width = len(next(iter(gens)))
    counts = [0] * width
    for g in gens:
        for k, e in enumerate(g):
            if e:
                counts[k] += 1

    if max(counts) <= 1:
        result = [1]
        for g in sorted(gens):
            result = uni_mul(result, uni_one_minus_eta_power(sum(g)))
        return tuple(result)

    var = counts.index(max(counts))
    e = min(g[var] for g in gens if g[var])
    pivot = tuple(e if k == var else 0 for k in range(width))

    left = _minimalize(list(gens) + [pivot])
    right = _minimalize(
        tuple(x - min(x, p) for x, p in zip(g, pivot)) for g in gens
    )
    return tuple(uni_add(_numerator(left), uni_shift(list(_numerator(right)), e)))


@dataclass
class HilbertData:
    """Dados de Hilbert do quociente"""
    raw_numerator: List[int]
    nvars: int
    dimension: Union[int, str]
    h_polynomial: List[int]
    homogeneous_input: bool = True
    expected_dimension: Optional[int] = None
    diagnostics: List[str] = field(default_factory=list)

    @property
    def multiplicity(self) -> int:
        return uni_eval(self.h_polynomial, 1)

    @property
    def dimension_mismatch(self) -> bool:
        return self.expected_dimension is not None and self.dimension != self.expected_dimension


@log_function_call()
def hilbert_of_quotient(I: Ideal, expected_dim: Optional[int] = None, order: TermOrder = DEFAULT_ORDER) -> HilbertData:
    """Numerador, dimensão e h-polinômio de S/I via o ideal inicial"""
    nvars = I.ring.nvars
    homogeneous = all(g.is_homogeneous() for g in I.generators)
    raw = hilbert_numerator(initial_ideal(I, order), nvars)
    diagnostics = []
    if not homogeneous:
        diagnostics.append("inhomogeneous-input: dados de Hilbert descrevem o ideal dos termos líderes")

    if not raw:
        data = HilbertData(raw, nvars, EMPTY, [], homogeneous, expected_dim, diagnostics)
        if expected_dim is not None:
            diagnostics.append(f"dimension-mismatch: esperado {expected_dim}, esquema vazio")
        return data

    h = list(raw)
    root_multiplicity = 0
    while True:
        quotient, value_at_one = uni_divide_one_minus_eta(h)
        if value_at_one != 0:
            break
        h = quotient
        root_multiplicity += 1

    dimension = nvars - root_multiplicity
    if dimension < 0 or uni_mul(h, _one_minus_eta_to(root_multiplicity)) != raw:
        raise InternalInconsistencyError(
            f"Divisão do numerador {raw} por (1-η)^{root_multiplicity} não é exata"
        )

    if expected_dim is not None and expected_dim != dimension:
        diagnostics.append(f"dimension-mismatch: esperado {expected_dim}, calculado {dimension}")
        logger.warning(
            f"Dimensão {dimension} difere da esperada {expected_dim} na carta {I.ring.label}"
        )

    return HilbertData(raw, nvars, dimension, h, homogeneous, expected_dim, diagnostics)


def _one_minus_eta_to(k: int) -> List[int]:
    result = [1]
    for _ in range(k):
        result = uni_mul(result, [1, -1])
    return result


def krull_dimension(I: Ideal) -> Union[int, str]:
    """Dimensão do quociente; EMPTY para o ideal unidade"""
    return hilbert_of_quotient(I).dimension


def ideals_equal(a: Ideal, b: Ideal, order: TermOrder = DEFAULT_ORDER) -> bool:
    """Igualdade por pertinência mútua via formas normais"""
    return all(b.contains(g, order) for g in a.generators) and all(
        a.contains(g, order) for g in b.generators
    )
