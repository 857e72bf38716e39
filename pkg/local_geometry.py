"""
Local Geometry - petpatch
Invariantes locais num ponto: critério jacobiano, cone tangente, h-polinômio,
multiplicidade, K-polinômio e os levantamentos de lugares singulares
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from functools import reduce
from typing import List, Mapping, Optional, Sequence, Tuple

from exceptions import (
    CrossCheckError,
    DegenerateInputError,
    InhomogeneousGeneratorError,
    MissingAssignmentError,
    PointNotOnVarietyError,
)
from groebner_engine import Ideal, hilbert_of_quotient, krull_dimension
from logging_system import get_logger, log_function_call
from patch_ideals import (
    PETERSON,
    GeneratorSet,
    GroupPoint,
    peterson_generators,
    peterson_schubert_generators,
    recenter,
)
from polynomial_core import (
    DEFAULT_ORDER,
    INHOMOGENEOUS,
    T_FIRST,
    Grading,
    LaurentPoly,
    Polynomial,
    TermOrder,
    VarId,
    grade_degree,
    uni_eval,
    uni_to_text,
)
from task_manager_service import TaskManager
from weyl_group import (
    PATTERN_321,
    Composition,
    Permutation,
    block_split,
    bruhat_leq,
    composition_of,
    contains_pattern,
    enumerate_parabolics,
    has_singular_pattern,
    smooth_list,
)

logger = get_logger(__name__)

CONE_ORDER = TermOrder(T_FIRST)


@dataclass
class JacobianReport:
    """Jacobiana avaliada num ponto, posto exato e veredicto de lisura"""
    matrix: List[List[Fraction]]
    rank: int
    nvars: int
    expected_dim: Optional[int] = None

    @property
    def smooth(self) -> Optional[bool]:
        if self.expected_dim is None:
            return None
        return self.rank == self.nvars - self.expected_dim


@dataclass
class LocalReport:
    """Relatório local num ponto de uma variedade"""
    point: str
    family: str
    smooth: bool
    jacobian_rank: int
    tangent_cone: List[Polynomial]
    h_polynomial: List[int]
    multiplicity: int
    dimension: object
    k_polynomial: Optional[LaurentPoly] = None
    k_factors: List[int] = field(default_factory=list)
    set_theoretic: bool = False
    diagnostics: List[str] = field(default_factory=list)
    findings: List[str] = field(default_factory=list)

    def h_text(self) -> str:
        return uni_to_text(self.h_polynomial)


def _bareiss_rank(rows: List[List[int]]) -> int:
    """Posto por eliminação sem frações (Bareiss)"""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, len(m)):
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * m[rank][col] - m[rank][c] * m[r][col]) // prev
            m[r][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == len(m):
            break
    return rank


def jacobian_at(G: GeneratorSet, point: Mapping[VarId, int], expected_dim: Optional[int] = None) -> JacobianReport:
    """Derivadas parciais exatas avaliadas no ponto"""
    variables = G.chart.ring.variables
    missing = [str(v) for v in variables if v not in point]
    if missing:
        raise MissingAssignmentError(f"Ponto sem valor para {', '.join(missing)}")
    matrix = []
    for p in G.polynomials:
        matrix.append([p.derivative(v).evaluate(point) for v in variables])
    integer_rows = []
    for row in matrix:
        scale = reduce(lcm, (x.denominator for x in row), 1)
        integer_rows.append([int(x * scale) for x in row])
    rank = _bareiss_rank(integer_rows)
    if expected_dim is None:
        expected_dim = G.expected_dim
    return JacobianReport(matrix, rank, len(variables), expected_dim)


@log_function_call()
def tangent_cone(G: GeneratorSet) -> List[Polynomial]:
    """Geradores do cone tangente na origem da carta (formas de menor grau de uma base padrão)"""
    for tag, p in G.gens:
        if p.constant_term() != 0:
            raise PointNotOnVarietyError(
                f"A origem não está no esquema: gerador {tag} tem termo constante {p.constant_term()}"
            )
    if not G.gens:
        return []

    # a base grevlex homogeneizada gera I^h, saturado em t
    affine = G.ideal().groebner_basis()
    ring = G.chart.ring.with_homog()
    homogenized = Ideal(ring, [p.homogenize() for p in affine])
    basis = homogenized.groebner_basis(CONE_ORDER)

    seen = set()
    cone = []
    for g in basis:
        low = g.dehomogenize().lowest_form().normalized()
        if low not in seen:
            seen.add(low)
            cone.append(low)
    key = DEFAULT_ORDER.key(G.chart.ring)
    return sorted(cone, key=lambda p: key(p.leading_monomial()))


def _h_shape_diagnostics(h: Sequence[int]) -> List[str]:
    out = []
    if not h:
        return out
    peak = h.index(max(h))
    unimodal = all(h[k] <= h[k + 1] for k in range(peak)) and all(
        h[k] >= h[k + 1] for k in range(peak, len(h) - 1)
    )
    log_concave = all(h[k] * h[k] >= h[k - 1] * h[k + 1] for k in range(1, len(h) - 1))
    symmetric = list(h) == list(reversed(h))
    out.append(f"unimodal={str(unimodal).lower()}")
    out.append(f"log_concave={str(log_concave).lower()}")
    out.append(f"symmetric={str(symmetric).lower()}")
    if not symmetric:
        out.append("gorenstein_obstructed=true")
    return out


@log_function_call()
def local_report(G: GeneratorSet, expected_dim: Optional[int] = None, point_label: str = None) -> LocalReport:
    """Jacobiana, cone tangente, dados de Hilbert do cone e K-polinômio na origem"""
    if expected_dim is None:
        expected_dim = G.expected_dim
    label = point_label or str(G.chart.w)

    cone = tangent_cone(G)
    jac = jacobian_at(G, G.chart.origin(), expected_dim)
    hilbert = hilbert_of_quotient(Ideal(G.chart.ring, cone), expected_dim)
    diagnostics = list(hilbert.diagnostics)
    findings = []

    h = hilbert.h_polynomial
    multiplicity = uni_eval(h, 1)
    smooth = jac.smooth if jac.smooth is not None else (h == [1])

    if (h == [1]) != smooth and not G.set_theoretic:
        raise CrossCheckError(
            f"Critério jacobiano (posto {jac.rank}) e h-polinômio {uni_to_text(h)} discordam em {label}"
        )
    if G.set_theoretic:
        diagnostics.append("smooth w.r.t. the given equations")

    if any(c < 0 for c in h):
        finding = f"conjecture-counterexample: h-polinômio {uni_to_text(h)} com coeficiente negativo em {label}"
        findings.append(finding)
        logger.warning(finding, extra={"point": label, "family": G.family})

    diagnostics.extend(_h_shape_diagnostics(h))

    k_poly, k_factors = None, []
    if G.family == PETERSON and G.graded:
        k_factors = k_polynomial_degrees(G, G.chart.coarse_grading())
        k_poly = LaurentPoly.product_one_minus(k_factors)

    return LocalReport(
        point=label,
        family=G.family,
        smooth=smooth,
        jacobian_rank=jac.rank,
        tangent_cone=cone,
        h_polynomial=h,
        multiplicity=multiplicity,
        dimension=hilbert.dimension,
        k_polynomial=k_poly,
        k_factors=k_factors,
        set_theoretic=G.set_theoretic,
        diagnostics=diagnostics,
        findings=findings,
    )


# ============================================================================
# K-polinômios
# ============================================================================

def k_polynomial_factors(wP: Permutation) -> List[int]:
    """Expoentes d dos fatores (1 - χ^d) da fórmula fechada"""
    composition_of(wP)
    n = wP.n
    degrees = []
    for j in range(1, n - 1):
        used = {wP(i) for i in range(1, j + 2)}
        for k in range(1, n + 1):
            if k not in used:
                degrees.append(k + 1 - wP(j))
    return degrees


def k_polynomial_formula(wP: Permutation) -> LaurentPoly:
    """Π_{j=1}^{n-2} Π_{k ∉ w_P(1..j+1)} (1 - χ^{k+1-w_P(j)})"""
    return LaurentPoly.product_one_minus(k_polynomial_factors(wP))


def k_polynomial_degrees(G: GeneratorSet, g: Grading) -> List[int]:
    if g.rank != 1:
        raise DegenerateInputError(f"K-polinômio em χ exige graduação de posto 1; recebido posto {g.rank}")
    degrees = []
    for tag, p in G.gens:
        deg = grade_degree(p, g)
        if deg == INHOMOGENEOUS:
            raise InhomogeneousGeneratorError(f"Gerador {tag} não é homogêneo na graduação dada")
        degrees.append(deg[0])
    return degrees


def k_polynomial_from_degrees(G: GeneratorSet, g: Grading) -> LaurentPoly:
    """Π (1 - χ^{deg g_i}) para uma interseção completa graduada"""
    return LaurentPoly.product_one_minus(k_polynomial_degrees(G, g))


# ============================================================================
# Levantamentos
# ============================================================================

@dataclass
class FixedPointVerdict:
    """Veredictos de um ponto fixo w_P de Pet_n"""
    composition: Composition
    w: Permutation
    pattern_singular: bool
    list_singular: bool
    jacobian_singular: bool
    report: Optional[LocalReport] = None
    k_formula: Optional[LaurentPoly] = None


@dataclass
class SurveyResult:
    """Classificação de todos os pontos fixos de Pet_n"""
    n: int
    verdicts: List[FixedPointVerdict]

    @property
    def singular(self) -> List[Permutation]:
        return [v.w for v in self.verdicts if v.jacobian_singular]

    @property
    def smooth(self) -> List[Permutation]:
        return [v.w for v in self.verdicts if not v.jacobian_singular]


def _survey_task(payload: Tuple[Tuple[int, ...], Tuple[int, ...], bool]) -> FixedPointVerdict:
    parts, one_line, with_local = payload
    wP = Permutation(one_line)
    G = peterson_generators(wP)
    jac = jacobian_at(G, G.chart.origin(), wP.n - 1)
    report = local_report(G, wP.n - 1) if with_local else None
    return FixedPointVerdict(
        composition=Composition(parts),
        w=wP,
        pattern_singular=has_singular_pattern(wP),
        list_singular=wP not in smooth_list(wP.n),
        jacobian_singular=not jac.smooth,
        report=report,
        k_formula=k_polynomial_formula(wP),
    )


@log_function_call()
def peterson_singular_survey(n: int, with_local: bool = False, jobs: int = 1) -> SurveyResult:
    """Compara padrão, lista lisa e posto jacobiano em cada ponto fixo de Pet_n"""
    if n < 2:
        raise DegenerateInputError("peterson_singular_survey exige n >= 2")
    payloads = [(c.parts, w.one_line, with_local) for c, w in enumerate_parabolics(n)]
    verdicts = TaskManager(jobs).map(_survey_task, payloads, labels=[str(w) for _, w in enumerate_parabolics(n)])

    for v in verdicts:
        if not (v.pattern_singular == v.list_singular == v.jacobian_singular):
            raise CrossCheckError(
                f"Veredictos discordam em {v.w}: padrão={v.pattern_singular}, "
                f"lista={v.list_singular}, jacobiano={v.jacobian_singular}"
            )
        if v.report is not None and v.report.smooth == v.jacobian_singular:
            raise CrossCheckError(f"Relatório local e jacobiano discordam em {v.w}")
    logger.info(f"Pet_{n}: {sum(v.jacobian_singular for v in verdicts)} pontos fixos singulares")
    return SurveyResult(n, verdicts)


@dataclass
class StratumVerdict:
    """Veredicto de um estrato w_Q <= w_P em R_{w_P}"""
    wQ: Permutation
    blocks: List[Permutation]
    pattern_singular: bool
    jacobian_singular: bool


@dataclass
class PetersonSchubertSurvey:
    """Classificação de R_{w_P} = X_{w_P} ∩ Pet_n"""
    wP: Permutation
    globally_singular: bool
    strata: List[StratumVerdict]

    @property
    def singular_strata(self) -> List[Permutation]:
        return [s.wQ for s in self.strata if s.jacobian_singular]


def _stratum_task(payload: Tuple[Tuple[int, ...], Tuple[int, ...]]) -> StratumVerdict:
    q_line, p_line = payload
    wQ, wP = Permutation(q_line), Permutation(p_line)
    blocks = block_split(wQ, composition_of(wP))
    if isinstance(blocks, str):
        raise CrossCheckError(f"w_Q={wQ} <= w_P={wP} mas w_Q não é bloco-diagonal")
    G = peterson_schubert_generators(wQ, wP)
    jac = jacobian_at(G, G.chart.origin())
    return StratumVerdict(
        wQ=wQ,
        blocks=list(blocks),
        pattern_singular=any(has_singular_pattern(b) for b in blocks),
        jacobian_singular=not jac.smooth,
    )


@log_function_call()
def peterson_schubert_survey(wP: Permutation, jobs: int = 1) -> PetersonSchubertSurvey:
    """Singularidade global por 321 e por estrato via blocos de w_Q, conferidos pelo jacobiano"""
    composition_of(wP)
    lower = [w for _, w in enumerate_parabolics(wP.n) if bruhat_leq(w, wP)]
    strata = TaskManager(jobs).map(
        _stratum_task, [(w.one_line, wP.one_line) for w in lower], labels=[str(w) for w in lower]
    )
    for s in strata:
        if s.pattern_singular != s.jacobian_singular:
            raise CrossCheckError(
                f"Estrato {s.wQ} em R_{wP}: padrão={s.pattern_singular}, jacobiano={s.jacobian_singular}"
            )
    globally = contains_pattern(wP, PATTERN_321)
    if globally != any(s.jacobian_singular for s in strata):
        raise CrossCheckError(
            f"R_{wP}: critério 321={globally} discorda dos estratos singulares {[str(s.wQ) for s in strata if s.jacobian_singular]}"
        )
    return PetersonSchubertSurvey(wP, globally, strata)


# ============================================================================
# Sonda de semicontinuidade
# ============================================================================

@dataclass
class ProbeSample:
    """Uma amostra b·w_P B"""
    label: str
    params: List[Fraction]
    h_polynomial: List[int]
    multiplicity: int
    mult_bound_ok: bool
    coefficient_bound_ok: bool


@dataclass
class ProbeReport:
    """Dados empíricos de multiplicidade ao longo do estrato de w_P"""
    wP: Permutation
    base_h: List[int]
    base_multiplicity: int
    samples: List[ProbeSample]
    findings: List[str] = field(default_factory=list)

    @property
    def all_bounded(self) -> bool:
        return all(s.mult_bound_ok for s in self.samples)

    @property
    def coefficientwise_bounded(self) -> bool:
        return all(s.coefficient_bound_ok for s in self.samples)

    @property
    def constant_on_stratum(self) -> bool:
        return all(s.h_polynomial == self.base_h for s in self.samples)


def _coefficientwise_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    size = max(len(a), len(b))
    return all(
        (a[k] if k < len(a) else 0) <= (b[k] if k < len(b) else 0) for k in range(size)
    )


def _draw_params(rng: random.Random, count: int, low: int, high: int) -> List[int]:
    while True:
        params = [rng.randint(low, high) for _ in range(count)]
        if any(params):
            return params


def _probe_task(payload) -> Tuple[List[int], int]:
    one_line, params = payload
    wP = Permutation(one_line)
    b = GroupPoint.from_flat(composition_of(wP), params)
    G = recenter(peterson_generators(wP), b)
    report = local_report(G, wP.n - 1, b.label(wP))
    return report.h_polynomial, report.multiplicity


@log_function_call()
def semicontinuity_probe(
    wP: Permutation,
    samples: int = 5,
    seed: int = 1,
    param_range: Tuple[int, int] = (-3, 3),
    jobs: int = 1,
) -> ProbeReport:
    """Recentraliza em pontos aleatórios b·w_P B e compara com os dados em w_P B"""
    composition = composition_of(wP)
    base = local_report(peterson_generators(wP), wP.n - 1)
    count = sum(p - 1 for p in composition.parts)
    rng = random.Random(seed)

    draws = [
        _draw_params(rng, count, *param_range) if count else [] for _ in range(samples)
    ]
    results = TaskManager(jobs).map(
        _probe_task, [(wP.one_line, d) for d in draws], labels=[f"sample{k}" for k in range(samples)]
    )

    report = ProbeReport(wP, base.h_polynomial, base.multiplicity, [])
    for params, (h, mult) in zip(draws, results):
        b = GroupPoint.from_flat(composition, params)
        sample = ProbeSample(
            label=b.label(wP),
            params=b.flat(),
            h_polynomial=h,
            multiplicity=mult,
            mult_bound_ok=mult <= base.multiplicity,
            coefficient_bound_ok=_coefficientwise_leq(h, base.h_polynomial),
        )
        report.samples.append(sample)
        if not sample.mult_bound_ok or not sample.coefficient_bound_ok:
            finding = (
                f"semicontinuity-violation: {sample.label} tem h={uni_to_text(h)} "
                f"contra h={uni_to_text(base.h_polynomial)} em {wP}"
            )
            report.findings.append(finding)
            logger.warning(finding, extra={"point": sample.label})
        if any(c < 0 for c in h):
            finding = f"conjecture-counterexample: h={uni_to_text(h)} em {sample.label}"
            report.findings.append(finding)
            logger.warning(finding, extra={"point": sample.label})
    return report


def patch_dimension(G: GeneratorSet):
    """Dimensão de Krull do patch (EMPTY se vazio)"""
    return krull_dimension(G.ideal())
