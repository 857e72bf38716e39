"""
Patch Ideals - petpatch
Cartas Z^(w) e geradores dos ideais de patch: Peterson, Hessenberg/Springer,
Richardson e Peterson-Schubert, com recentralização por pontos de U_P
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from exceptions import (
    BruhatViolationError,
    CompositionMismatchError,
    InternalInconsistencyError,
    InvalidHessenbergFunctionError,
    NotAFixedPointError,
    SizeMismatchError,
)
from groebner_engine import Ideal
from logging_system import get_logger
from polynomial_core import (
    DEFAULT_ORDER,
    Grading,
    Number,
    Polynomial,
    PolynomialRing,
    VarId,
    substitute_affine,
)
from weyl_group import (
    NORTHWEST,
    SOUTHWEST,
    Composition,
    Permutation,
    block_split,
    bruhat_leq,
    composition_of,
    essential_set,
    rank_matrix,
)

logger = get_logger(__name__)

PETERSON = "peterson"
HESSENBERG = "hessenberg"
RICHARDSON = "richardson"
PETERSON_SCHUBERT = "peterson-schubert"

SET_THEORETIC_NOTE = "set-theoretic, radicality not guaranteed"

Matrix = Tuple[Tuple[Fraction, ...], ...]


# ============================================================================
# Cartas
# ============================================================================

@dataclass(frozen=True)
class PatchChart:
    """Carta w U_- : 1 em (w(j), j), zero à direita do pivô de cada linha"""
    w: Permutation
    free_positions: Tuple[Tuple[int, int], ...]
    ring: PolynomialRing

    @property
    def n(self) -> int:
        return self.w.n

    def entry(self, i: int, j: int) -> Polynomial:
        """Entrada (i, j) da matriz genérica Z^(w)"""
        if self.ring.has(VarId.chart(i, j)):
            return self.ring.z(i, j)
        if self.w(j) == i:
            return self.ring.one()
        return self.ring.zero()

    def column(self, j: int) -> List[Polynomial]:
        return [self.entry(i, j) for i in range(1, self.n + 1)]

    def origin(self) -> Dict[VarId, int]:
        return {v: 0 for v in self.ring.variables}

    def coarse_grading(self) -> Grading:
        return Grading.coarse(self)

    def torus_grading(self) -> Grading:
        return Grading.torus(self)


def make_chart(w: Permutation) -> PatchChart:
    """Carta com as C(n,2) posições livres {(i,j): j < w^-1(i)}"""
    inv = w.inverse()
    free = [(i, j) for i in range(1, w.n + 1) for j in range(1, inv(i))]
    ring = PolynomialRing.for_positions(f"Z^({w})", free)
    positions = tuple(v.position for v in ring.variables)
    return PatchChart(w, positions, ring)


# ============================================================================
# Conjuntos de geradores
# ============================================================================

@dataclass(frozen=True)
class GeneratorSet:
    """Lista ordenada de geradores com etiquetas de procedência"""
    chart: PatchChart
    gens: Tuple[Tuple[str, Polynomial], ...]
    family: str
    set_theoretic: bool = False
    expected_dim: Optional[int] = None
    notes: Tuple[str, ...] = ()
    graded: bool = False

    @property
    def polynomials(self) -> List[Polynomial]:
        return [p for _, p in self.gens]

    @property
    def tags(self) -> List[str]:
        return [tag for tag, _ in self.gens]

    def __len__(self) -> int:
        return len(self.gens)

    def ideal(self) -> Ideal:
        return Ideal(self.chart.ring, self.polynomials)

    def to_json_dict(self) -> Dict:
        variables = self.chart.ring.variables
        generators = []
        for tag, poly in self.gens:
            terms = []
            for exp, c in poly.sorted_terms(DEFAULT_ORDER):
                powers = [[k, e] for k, e in enumerate(exp) if e]
                terms.append([c.numerator, c.denominator, powers])
            generators.append({"tag": tag, "terms": terms})
        return {
            "n": self.chart.n,
            "w": list(self.chart.w.one_line),
            "family": self.family,
            "vars": [[v.i, v.j] for v in variables],
            "generators": generators,
        }


@dataclass(frozen=True)
class AlphaTable:
    """Solução α_{j,ℓ} do sistema unitriangular, por coluna"""
    values: Tuple[Tuple[Tuple[int, int], Polynomial], ...]

    def as_dict(self) -> Dict[Tuple[int, int], Polynomial]:
        return dict(self.values)

    def get(self, j: int, ell: int) -> Polynomial:
        return self.as_dict()[(j, ell)]

    def check_locality(self) -> bool:
        """α_{j,ℓ} só usa variáveis z_{t,r} com r <= j"""
        return all(
            all(v.j <= j for v in poly.support()) for (j, _), poly in self.values
        )


# ============================================================================
# Hessenberg
# ============================================================================

def _to_matrix(rows: Sequence[Sequence[Number]]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


@dataclass(frozen=True)
class HessenbergSpec:
    """Matriz H, função h e, opcionalmente, o tipo de Jordan que gerou H"""
    matrix: Matrix
    hfunc: Tuple[int, ...]
    jordan_type: Optional[Tuple[int, ...]] = None
    mode: str = HESSENBERG

    def __post_init__(self):
        n = len(self.hfunc)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise SizeMismatchError(f"Matriz H deve ser {n}x{n}, compatível com h={self.hfunc}")
        h = self.hfunc
        if self.mode == "springer":
            if any(h[i - 1] != i for i in range(1, n + 1)):
                raise InvalidHessenbergFunctionError(
                    f"Modo Springer exige h(i)=i; recebido h={h}"
                )
        elif self.mode == HESSENBERG:
            for i in range(1, n + 1):
                if not i <= h[i - 1] <= n:
                    raise InvalidHessenbergFunctionError(
                        f"Hess(H,h)=∅ a menos que h(i)>=i; h({i})={h[i - 1]} com n={n}"
                    )
                if i < n and h[i] < h[i - 1]:
                    raise InvalidHessenbergFunctionError(
                        f"h deve ser fracamente crescente: h({i})={h[i - 1]} > h({i + 1})={h[i]}"
                    )
        else:
            raise InvalidHessenbergFunctionError(f"Modo desconhecido: {self.mode}")

    @property
    def n(self) -> int:
        return len(self.hfunc)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Number]], hfunc: Sequence[int]) -> "HessenbergSpec":
        hfunc = tuple(hfunc)
        mode = "springer" if hfunc == tuple(range(1, len(hfunc) + 1)) else HESSENBERG
        return cls(_to_matrix(rows), hfunc, None, mode)

    @classmethod
    def regular_nilpotent(cls, n: int, hfunc: Sequence[int] = None) -> "HessenbergSpec":
        """N com 1's na superdiagonal (N e_{k+1} = e_k); h padrão i -> min(i+1, n) é Peterson"""
        if hfunc is None:
            hfunc = tuple(min(i + 1, n) for i in range(1, n + 1))
        return cls.from_matrix(_nilpotent_rows((n,)), hfunc)

    @classmethod
    def peterson_divisor(cls, n: int, j: int) -> "HessenbergSpec":
        """Família H_j: h(i)=i+1 exceto h(j)=j"""
        hfunc = tuple(i if i == j else min(i + 1, n) for i in range(1, n + 1))
        return cls.regular_nilpotent(n, hfunc)

    @classmethod
    def springer(cls, jordan_type: Sequence[int]) -> "HessenbergSpec":
        parts = tuple(jordan_type)
        if not parts or any(p < 1 for p in parts):
            raise InvalidHessenbergFunctionError(f"Tipo de Jordan inválido: {parts}")
        n = sum(parts)
        return cls(_to_matrix(_nilpotent_rows(parts)), tuple(range(1, n + 1)), parts, "springer")

    @classmethod
    def nilpotent(cls, jordan_type: Sequence[int], hfunc: Optional[Sequence[int]] = None) -> "HessenbergSpec":
        """Nilpotente na forma de Jordan com h arbitrária; h ausente ou identidade cai em Springer"""
        parts = tuple(jordan_type)
        n = sum(parts)
        if hfunc is None or tuple(hfunc) == tuple(range(1, n + 1)):
            return cls.springer(parts)
        if not parts or any(p < 1 for p in parts):
            raise InvalidHessenbergFunctionError(f"Tipo de Jordan inválido: {parts}")
        return cls.from_matrix(_nilpotent_rows(parts), hfunc)

    @classmethod
    def regular_semisimple(cls, n: int, hfunc: Sequence[int]) -> "HessenbergSpec":
        rows = [[i + 1 if i == k else 0 for k in range(n)] for i in range(n)]
        return cls.from_matrix(rows, hfunc)

    def expected_dimension(self) -> Optional[int]:
        """Dimensão conhecida: Σ(h(i)-i) para nilpotente regular e semisimples regular; n(λ) para Springer"""
        if self.jordan_type is not None:
            lam = sorted(self.jordan_type, reverse=True)
            return sum(k * part for k, part in enumerate(lam))
        if self._is_regular_nilpotent() or self._is_regular_semisimple():
            return sum(h - i for i, h in enumerate(self.hfunc, start=1))
        return None

    def _is_regular_nilpotent(self) -> bool:
        return self.matrix == _to_matrix(_nilpotent_rows((self.n,)))

    def _is_regular_semisimple(self) -> bool:
        diag = [self.matrix[i][i] for i in range(self.n)]
        off = all(self.matrix[i][k] == 0 for i in range(self.n) for k in range(self.n) if i != k)
        return off and len(set(diag)) == self.n

    def contains_fixed_point(self, w: Permutation) -> bool:
        """wB ∈ Hess(H,h) se e somente se H e_{w(j)} ∈ span(e_{w(1)},...,e_{w(h(j))})"""
        for j in range(1, self.n + 1):
            allowed = {w(ell) for ell in range(1, self.hfunc[j - 1] + 1)}
            col = w(j) - 1
            for row in range(self.n):
                if self.matrix[row][col] != 0 and row + 1 not in allowed:
                    return False
        return True


def _nilpotent_rows(parts: Sequence[int]) -> List[List[int]]:
    n = sum(parts)
    rows = [[0] * n for _ in range(n)]
    start = 0
    for size in parts:
        for k in range(start, start + size - 1):
            rows[k][k + 1] = 1
        start += size
    return rows


def _h_times_column(spec: HessenbergSpec, column: List[Polynomial]) -> List[Polynomial]:
    ring = column[0].ring
    out = []
    for row in spec.matrix:
        acc = ring.zero()
        for coef, entry in zip(row, column):
            if coef and entry:
                acc = acc + entry.scale(coef)
        out.append(acc)
    return out


def alpha_table(chart: PatchChart, spec: HessenbergSpec) -> AlphaTable:
    """Resolve H·Z_j = Σ α_{j,ℓ} Z_ℓ pelas linhas w(1..h(j)) via substituição direta"""
    w = chart.w
    values = []
    for j in range(1, chart.n + 1):
        h = spec.hfunc[j - 1]
        if h >= chart.n:
            continue
        hz = _h_times_column(spec, chart.column(j))
        alphas: List[Polynomial] = []
        for ell in range(1, h + 1):
            row = w(ell)
            pivot = chart.entry(row, ell)
            if pivot != 1:
                raise InternalInconsistencyError(
                    f"Subsistema não unitriangular na coluna {j}, linha {row}"
                )
            acc = hz[row - 1]
            for t, alpha in enumerate(alphas, start=1):
                entry = chart.entry(row, t)
                if entry:
                    acc = acc - alpha * entry
            alphas.append(acc)
            values.append(((j, ell), acc))
    return AlphaTable(tuple(values))


def _row_generators(chart: PatchChart, spec: HessenbergSpec, tag_kind: str) -> List[Tuple[str, Polynomial]]:
    table = alpha_table(chart, spec).as_dict()
    w = chart.w
    out = []
    for j in range(1, chart.n + 1):
        h = spec.hfunc[j - 1]
        if h >= chart.n:
            continue
        hz = _h_times_column(spec, chart.column(j))
        solved_rows = {w(ell) for ell in range(1, h + 1)}
        for k in range(1, chart.n + 1):
            if k in solved_rows:
                continue
            g = -hz[k - 1]
            for ell in range(1, h + 1):
                entry = chart.entry(k, ell)
                if entry:
                    g = g + table[(j, ell)] * entry
            if g:
                out.append((f"{tag_kind}({k},{j})", g.normalized()))
    return out


def peterson_generators(wP: Permutation) -> GeneratorSet:
    """Os C(n-1,2) geradores g_{k,j} de I_{w_P,Pet_n}"""
    composition_of(wP)
    chart = make_chart(wP)
    spec = HessenbergSpec.regular_nilpotent(wP.n)
    gens = _row_generators(chart, spec, PETERSON)
    logger.debug(f"Pet_{wP.n} em {wP}: {len(gens)} geradores")
    return GeneratorSet(chart, tuple(gens), PETERSON, expected_dim=wP.n - 1, graded=True)


def hessenberg_generators(spec: HessenbergSpec, w: Permutation, require_fixed_point: bool = True) -> GeneratorSet:
    """Geradores (a menos de radical) de Hess(H,h) na carta de w"""
    if spec.n != w.n:
        raise SizeMismatchError(f"H tem tamanho {spec.n}, w={w} tem tamanho {w.n}")
    if require_fixed_point and not spec.contains_fixed_point(w):
        raise NotAFixedPointError(
            f"wB ∉ Hess(H,h) para w={w}: exige H e_(w(j)) ∈ span(e_(w(1)),...,e_(w(h(j))))"
        )
    chart = make_chart(w)
    gens = _row_generators(chart, spec, HESSENBERG)
    return GeneratorSet(
        chart,
        tuple(gens),
        HESSENBERG,
        set_theoretic=True,
        expected_dim=spec.expected_dimension(),
        notes=(SET_THEORETIC_NOTE,),
    )


# ============================================================================
# Recentralização por U_P
# ============================================================================

@dataclass(frozen=True)
class GroupPoint:
    """b ∈ U_P: blocos unipotentes de Toeplitz, parâmetros q_1..q_{m-1} por bloco"""
    composition: Composition
    block_params: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        params = tuple(tuple(Fraction(q) for q in block) for block in self.block_params)
        object.__setattr__(self, "block_params", params)
        if len(params) != self.composition.k or any(
            len(block) != size - 1 for block, size in zip(params, self.composition.parts)
        ):
            raise CompositionMismatchError(
                f"Parâmetros {self.block_params} não correspondem à composição {self.composition}"
            )

    @classmethod
    def from_flat(cls, composition: Composition, flat: Sequence[Number]) -> "GroupPoint":
        """Lista achatada q's bloco a bloco"""
        needed = sum(p - 1 for p in composition.parts)
        if len(flat) != needed:
            raise CompositionMismatchError(
                f"Composição {composition} exige {needed} parâmetros, recebidos {len(flat)}"
            )
        blocks, pos = [], 0
        for size in composition.parts:
            blocks.append(tuple(flat[pos:pos + size - 1]))
            pos += size - 1
        return cls(composition, tuple(blocks))

    @classmethod
    def identity(cls, composition: Composition) -> "GroupPoint":
        return cls(composition, tuple((0,) * (p - 1) for p in composition.parts))

    def flat(self) -> List[Fraction]:
        return [q for block in self.block_params for q in block]

    def is_identity(self) -> bool:
        return not any(self.flat())

    def entry(self, i: int, k: int) -> Fraction:
        for start, size, params in zip(self.composition.offsets(), self.composition.parts, self.block_params):
            if start < i <= start + size:
                if not start < k <= start + size:
                    return Fraction(0)
                d = k - i
                if d == 0:
                    return Fraction(1)
                return params[d - 1] if d > 0 else Fraction(0)
        return Fraction(0)

    def inverse(self) -> "GroupPoint":
        blocks = []
        for params in self.block_params:
            # c_0 = 1, c_k = -Σ_{i=1..k} q_i c_{k-i}
            c = [Fraction(1)]
            for k in range(1, len(params) + 1):
                c.append(-sum(params[i - 1] * c[k - i] for i in range(1, k + 1)))
            blocks.append(tuple(c[1:]))
        return GroupPoint(self.composition, tuple(blocks))

    def label(self, wP: Permutation) -> str:
        if self.is_identity():
            return str(wP)
        params = ",".join(str(q) for q in self.flat())
        return f"b({params})·{wP}"


def recenter(G: GeneratorSet, b: GroupPoint) -> GeneratorSet:
    """Mudança de coordenadas z_{ij} -> z_{ij} + Σ_{k>i} b_{ik} Z_{kj}; a origem passa a ser (b·w_P)B"""
    chart = G.chart
    composition = composition_of(chart.w)
    if composition != b.composition:
        raise CompositionMismatchError(
            f"Composição de b ({b.composition}) difere da composição de w_P={chart.w} ({composition})"
        )
    if b.is_identity():
        return G

    sub = {}
    for var in chart.ring.variables:
        i, j = var.position
        image = chart.ring.z(i, j)
        for k in range(i + 1, chart.n + 1):
            coef = b.entry(i, k)
            if coef:
                entry = chart.entry(k, j)
                if entry:
                    image = image + entry.scale(coef)
        sub[var] = image

    gens = tuple(
        (tag if tag.startswith("recentered(") else f"recentered({tag})", substitute_affine(p, sub))
        for tag, p in G.gens
    )
    return GeneratorSet(chart, gens, G.family, G.set_theoretic, G.expected_dim, G.notes, graded=False)


# ============================================================================
# Richardson
# ============================================================================

class _MinorCache:
    """Determinantes de submatrizes de Z^(w), expansão pela primeira coluna com memo"""

    def __init__(self, chart: PatchChart):
        self.chart = chart
        self._memo: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Polynomial] = {}

    def det(self, rows: Tuple[int, ...], cols: Tuple[int, ...]) -> Polynomial:
        key = (rows, cols)
        if key in self._memo:
            return self._memo[key]
        ring = self.chart.ring
        if len(rows) == 1:
            result = self.chart.entry(rows[0], cols[0])
        else:
            result = ring.zero()
            for pos, r in enumerate(rows):
                entry = self.chart.entry(r, cols[0])
                if not entry:
                    continue
                minor = self.det(rows[:pos] + rows[pos + 1:], cols[1:])
                if not minor:
                    continue
                term = entry * minor
                result = result - term if pos % 2 else result + term
        self._memo[key] = result
        return result


def _rank_minors(chart: PatchChart, perm: Permutation, orientation: str, prune: bool, cache: _MinorCache) -> List[Tuple[str, Polynomial]]:
    n = chart.n
    ranks = rank_matrix(perm, orientation)
    boxes = (
        essential_set(perm, orientation)
        if prune
        else [(i, j) for j in range(1, n + 1) for i in range(1, n + 1)]
    )
    label = "minorSW" if orientation == SOUTHWEST else "minorNW"
    out = []
    for i, j in boxes:
        size = ranks.at(i, j) + 1
        row_pool = range(i, n + 1) if orientation == SOUTHWEST else range(1, i + 1)
        if size > len(row_pool) or size > j:
            continue
        for rows in combinations(row_pool, size):
            for cols in combinations(range(1, j + 1), size):
                minor = cache.det(rows, cols)
                if minor:
                    out.append((f"{label}({i},{j},{size})", minor.normalized()))
    return out


def richardson_generators(w: Permutation, u: Permutation, v: Permutation, prune: bool = False) -> GeneratorSet:
    """J_{w,u} + J^{w,v}: menores sudoeste de posto de u e noroeste de posto de v em Z^(w)"""
    if not (bruhat_leq(v, w) and bruhat_leq(w, u)):
        raise BruhatViolationError(
            f"wB ∈ X_u^v se e somente se v<=w<=u (em Bruhat); recebido v={v}, w={w}, u={u}"
        )
    chart = make_chart(w)
    cache = _MinorCache(chart)
    gens = _rank_minors(chart, u, SOUTHWEST, prune, cache) + _rank_minors(chart, v, NORTHWEST, prune, cache)
    return GeneratorSet(chart, tuple(gens), RICHARDSON, expected_dim=u.length() - v.length())


# ============================================================================
# Peterson-Schubert
# ============================================================================

def _check_schubert_pair(wQ: Permutation, wP: Permutation) -> Composition:
    composition_of(wQ)
    composition = composition_of(wP)
    if not bruhat_leq(wQ, wP):
        raise BruhatViolationError(f"Exige w_Q <= w_P em Bruhat; recebido w_Q={wQ}, w_P={wP}")
    return composition


def peterson_schubert_generators(wQ: Permutation, wP: Permutation) -> GeneratorSet:
    """I_{w_Q,X_{w_P}} + I_{w_Q,Pet_n}"""
    composition = _check_schubert_pair(wQ, wP)
    schubert = richardson_generators(wQ, wP, Permutation.identity(wQ.n))
    peterson = peterson_generators(wQ)
    return GeneratorSet(
        schubert.chart,
        schubert.gens + peterson.gens,
        PETERSON_SCHUBERT,
        expected_dim=wQ.n - composition.k,
    )


def _embed(p: Polynomial, target: PolynomialRing, offset: int) -> Polynomial:
    indices = [
        target.index(VarId.chart(v.i + offset, v.j + offset)) for v in p.ring.variables
    ]
    terms = {}
    for exp, c in p.terms.items():
        new = [0] * target.width
        for k, e in enumerate(exp):
            new[indices[k]] += e
        terms[tuple(new)] = c
    return Polynomial(target, terms)


def peterson_schubert_block_form(wQ: Permutation, wP: Permutation) -> GeneratorSet:
    """I_{w_Q,X_{w_P}} + Σ_j Î_{w_Q^(j),Pet_{i_j}}, com os ideais de bloco deslocados na diagonal"""
    composition = _check_schubert_pair(wQ, wP)
    schubert = richardson_generators(wQ, wP, Permutation.identity(wQ.n))
    blocks = block_split(wQ, composition)
    if isinstance(blocks, str):
        raise InternalInconsistencyError(
            f"w_Q={wQ} <= w_P={wP} deveria ser bloco-diagonal para a composição {composition}"
        )
    gens = list(schubert.gens)
    for offset, block in zip(composition.offsets(), blocks):
        for tag, p in peterson_generators(block).gens:
            gens.append((f"block{offset}:{tag}", _embed(p, schubert.chart.ring, offset)))
    return GeneratorSet(
        schubert.chart,
        tuple(gens),
        PETERSON_SCHUBERT,
        expected_dim=wQ.n - composition.k,
    )
