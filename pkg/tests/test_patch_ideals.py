import re
from fractions import Fraction
from math import comb

import pytest
import sympy

from conftest import perm, poly, to_sympy
from exceptions import (
    BruhatViolationError,
    CompositionMismatchError,
    InvalidHessenbergFunctionError,
    NotAFixedPointError,
    SizeMismatchError,
)
from groebner_engine import EMPTY, Ideal, ideals_equal, krull_dimension
from patch_ideals import (
    HESSENBERG,
    PETERSON,
    SET_THEORETIC_NOTE,
    GroupPoint,
    HessenbergSpec,
    alpha_table,
    hessenberg_generators,
    make_chart,
    peterson_generators,
    peterson_schubert_block_form,
    peterson_schubert_generators,
    recenter,
    richardson_generators,
)
from polynomial_core import INHOMOGENEOUS, grade_degree
from weyl_group import Composition, Permutation, bruhat_leq, enumerate_parabolics


def _normalized_set(ring, texts):
    return {poly(ring, t).normalized() for t in texts}


def test_chart_free_positions():
    assert make_chart(perm("2143")).free_positions == ((1, 1), (3, 1), (4, 1), (3, 2), (4, 2), (3, 3))
    assert make_chart(Permutation.longest(3)).free_positions == ((1, 1), (2, 1), (1, 2))
    for n in range(1, 6):
        for _, w in enumerate_parabolics(n):
            assert len(make_chart(w).free_positions) == comb(n, 2)


def test_chart_entries(chart_2143):
    column = chart_2143.column(2)
    ring = chart_2143.ring
    assert column == [ring.one(), ring.zero(), ring.z(3, 2), ring.z(4, 2)]


def test_alpha_table_on_2143(chart_2143):
    ring = chart_2143.ring
    table = alpha_table(chart_2143, HessenbergSpec.regular_nilpotent(4))
    assert table.get(1, 1) == ring.z(3, 1)
    assert table.get(1, 2) == 1 - ring.z(3, 1) * ring.z(1, 1)
    assert table.get(2, 3) == poly(ring, "-z[4][1]*z[3][2] + z[4][2]*z[3][2]*z[1][1]")
    assert table.check_locality()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_alpha_solves_pivot_rows(n):
    spec = HessenbergSpec.regular_nilpotent(n)
    for _, w in enumerate_parabolics(n):
        chart = make_chart(w)
        table = alpha_table(chart, spec)
        assert table.check_locality()
        for j in range(1, n - 1):
            for k in (w(ell) for ell in range(1, j + 2)):
                shifted = chart.entry(k + 1, j) if k < n else chart.ring.zero()
                combo = sum(
                    (table.get(j, ell) * chart.entry(k, ell) for ell in range(1, j + 2)),
                    chart.ring.zero(),
                )
                assert combo == shifted


def test_peterson_generators_on_2143(chart_2143):
    G = peterson_generators(perm("2143"))
    ring = G.chart.ring
    expected = _normalized_set(ring, [
        "z[4][1] - z[3][2] - z[3][1]^2 + z[3][1]*z[3][2]*z[1][1]",
        "z[4][1]*z[3][1] + z[4][2] - z[4][2]*z[3][1]*z[1][1]",
        "z[4][2] - z[3][1]*z[3][2] + z[3][2]^2*z[1][1] + z[4][1]*z[3][2]*z[3][3] - z[4][2]*z[3][2]*z[3][3]*z[1][1]",
    ])
    assert set(G.polynomials) == expected
    assert G.tags == ["peterson(3,1)", "peterson(4,1)", "peterson(3,2)"]
    assert G.family == PETERSON
    assert G.expected_dim == 3


def test_peterson_generator_at_identity_maps_to_quantum_relation():
    G = peterson_generators(Permutation.identity(3))
    ring = G.chart.ring
    expected = poly(ring, "z[2][1]*z[3][1] + z[3][1]*z[3][2] - z[2][1]^2*z[3][2]").normalized()
    assert G.polynomials == [expected]

    expr, _ = to_sympy(G.polynomials[0])
    x1, x2, q1 = sympy.symbols("x1 x2 q1")
    z21, z31, z32 = sympy.symbols("z21 z31 z32")
    image = sympy.expand(expr.subs({z21: -(x1 + x2), z31: x1 * x2 + q1, z32: -x1}, simultaneous=True))
    relation = sympy.expand(x1 ** 3 - 2 * x1 * q1 - x2 * q1)
    assert image in (relation, -relation)


def test_peterson_small_cases():
    assert len(peterson_generators(perm("21"))) == 0
    assert len(peterson_generators(perm("1"))) == 0
    with pytest.raises(NotAFixedPointError):
        peterson_generators(perm("1342"))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_peterson_generator_count_and_degrees(n):
    for _, w in enumerate_parabolics(n):
        G = peterson_generators(w)
        assert len(G) == comb(n - 1, 2)
        grading = G.chart.coarse_grading()
        for tag, p in G.gens:
            k, j = map(int, re.match(r"peterson\((\d+),(\d+)\)", tag).groups())
            degree = grade_degree(p, grading)
            assert degree != INHOMOGENEOUS
            assert degree == (k + 1 - w(j),)
            assert degree != (0,)
            assert p.constant_term() == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_peterson_patch_dimension(n):
    for _, w in enumerate_parabolics(n):
        assert krull_dimension(peterson_generators(w).ideal()) == n - 1


def test_hessenberg_with_peterson_data_reproduces_peterson(pet4):
    spec = HessenbergSpec.regular_nilpotent(4)
    for text, G in pet4.items():
        H = hessenberg_generators(spec, perm(text))
        assert H.polynomials == G.polynomials
        assert H.family == HESSENBERG
        assert H.set_theoretic
        assert SET_THEORETIC_NOTE in H.notes


def test_hessenberg_validation():
    with pytest.raises(InvalidHessenbergFunctionError):
        HessenbergSpec.regular_nilpotent(3, (2, 1, 3))
    with pytest.raises(InvalidHessenbergFunctionError):
        HessenbergSpec.regular_nilpotent(3, (1, 3, 2))
    with pytest.raises(SizeMismatchError):
        HessenbergSpec.from_matrix([[0, 1], [0, 0]], (2, 3, 3))
    with pytest.raises(SizeMismatchError):
        hessenberg_generators(HessenbergSpec.regular_nilpotent(3), perm("2143"))


def test_springer_fiber_of_type_21():
    spec = HessenbergSpec.springer((2, 1))
    assert spec.expected_dimension() == 1
    G = hessenberg_generators(spec, perm("132"))
    ring = G.chart.ring
    assert set(G.polynomials) == _normalized_set(
        ring, ["z[2][1]^2", "z[2][1]*z[3][1]", "z[2][1]*z[2][2] - z[2][2]^2*z[3][1]"]
    )
    ideal = G.ideal()
    assert krull_dimension(ideal) == 1
    assert not ideal.contains(ring.z(2, 1))
    assert ideal.contains((ring.z(2, 2) * ring.z(3, 1)) ** 2)


def test_jordan_type_with_wider_hfunc():
    spec = HessenbergSpec.nilpotent((2, 1), (2, 3, 3))
    assert spec.mode == HESSENBERG
    assert spec.jordan_type is None
    assert spec.expected_dimension() is None
    G = hessenberg_generators(spec, perm("132"))
    assert G.tags == ["hessenberg(2,1)"]
    assert set(G.polynomials) == _normalized_set(G.chart.ring, ["z[2][1]^2 - z[2][1]*z[2][2]*z[3][1]"])
    assert krull_dimension(G.ideal()) == 2


@pytest.mark.parametrize("hfunc", [None, (1, 2, 3)])
def test_jordan_type_with_identity_is_springer(hfunc):
    assert HessenbergSpec.nilpotent((2, 1), hfunc) == HessenbergSpec.springer((2, 1))


def test_springer_requires_fixed_point():
    spec = HessenbergSpec.springer((2, 1))
    assert not spec.contains_fixed_point(perm("213"))
    with pytest.raises(NotAFixedPointError):
        hessenberg_generators(spec, perm("213"))


def test_regular_semisimple_patches():
    spec = HessenbergSpec.regular_semisimple(3, (2, 3, 3))
    assert spec.expected_dimension() == 2
    at_id = hessenberg_generators(spec, Permutation.identity(3))
    ring = at_id.chart.ring
    assert at_id.polynomials == [poly(ring, "z[2][1]*z[3][2] - 2*z[3][1]").normalized()]
    at_w0 = hessenberg_generators(spec, Permutation.longest(3))
    ring = at_w0.chart.ring
    assert at_w0.polynomials == [poly(ring, "2*z[1][1] - z[2][1]*z[1][2]").normalized()]
    assert krull_dimension(at_w0.ideal()) == 2


@pytest.mark.parametrize("n", [3, 4, 5])
def test_peterson_divisors_have_codimension_one(n):
    w0, ident = Permutation.longest(n), Permutation.identity(n)
    for j in range(1, n):
        spec = HessenbergSpec.peterson_divisor(n, j)
        assert spec.hfunc[j - 1] == j
        assert spec.expected_dimension() == n - 2
        assert not spec.contains_fixed_point(w0)
        with pytest.raises(NotAFixedPointError):
            hessenberg_generators(spec, w0)
        # a bandeira padrão é N-estável, logo está em todo H_j
        G = hessenberg_generators(spec, ident)
        assert krull_dimension(G.ideal()) == n - 2


def test_first_divisor_misses_big_cell():
    # N·F_1 ⊂ F_1 força F_1 = <e_1>, e a carta de w_0 tem entrada 1 em (n,1)
    spec = HessenbergSpec.peterson_divisor(4, 1)
    assert spec.hfunc == (1, 3, 4, 4)
    G = hessenberg_generators(spec, Permutation.longest(4), require_fixed_point=False)
    assert G.ideal().is_unit()
    assert krull_dimension(G.ideal()) == EMPTY


def test_group_point_inverse():
    b = GroupPoint.from_flat(Composition((2, 2)), [1, 2])
    assert b.inverse().flat() == [-1, -2]
    c = GroupPoint.from_flat(Composition((3, 1)), [2, -1])
    # c_1 = -q_1, c_2 = -q_2 + q_1^2
    assert c.inverse().flat() == [-2, 5]
    with pytest.raises(CompositionMismatchError):
        GroupPoint.from_flat(Composition((3, 1)), [1])


def test_recenter_shifts_origin():
    w = perm("213")
    G = peterson_generators(w)
    b = GroupPoint.from_flat(Composition((2, 1)), [1])
    R = recenter(G, b)
    assert b.label(w) == "b(1)·213"
    assert all(p.constant_term() == 0 for p in R.polynomials)
    assert all(tag.startswith("recentered(") for tag in R.tags)
    assert not R.graded
    assert [p.total_degree() for p in R.polynomials] == [p.total_degree() for p in G.polynomials]


def test_recenter_identity_and_inverse():
    w = perm("3214")
    G = peterson_generators(w)
    assert recenter(G, GroupPoint.identity(Composition((3, 1)))) is G
    b = GroupPoint.from_flat(Composition((3, 1)), [Fraction(1, 2), -1])
    back = recenter(recenter(G, b), b.inverse())
    assert back.polynomials == G.polynomials
    with pytest.raises(CompositionMismatchError):
        recenter(G, GroupPoint.identity(Composition((2, 2))))


def test_richardson_small_cases():
    ident2 = Permutation.identity(2)
    G = richardson_generators(ident2, ident2, ident2)
    assert G.polynomials == [G.chart.ring.z(2, 1)]

    w0 = Permutation.longest(3)
    empty = richardson_generators(Permutation.identity(3), w0, Permutation.identity(3))
    assert len(empty) == 0
    assert krull_dimension(empty.ideal()) == 3

    v = perm("132")
    G = richardson_generators(v, w0, v)
    assert ideals_equal(G.ideal(), Ideal(G.chart.ring, [G.chart.ring.z(2, 2)]))
    assert krull_dimension(G.ideal()) == 2
    assert G.expected_dim == 2


def test_richardson_requires_bruhat_interval():
    with pytest.raises(BruhatViolationError):
        richardson_generators(Permutation.identity(3), Permutation.identity(3), perm("132"))


def test_richardson_pruning_keeps_ideal():
    elements = [perm(t) for t in ("123", "132", "213", "231", "312", "321")]
    for w in elements:
        for u in elements:
            for v in elements:
                if bruhat_leq(v, w) and bruhat_leq(w, u):
                    full = richardson_generators(w, u, v)
                    pruned = richardson_generators(w, u, v, prune=True)
                    assert len(pruned) <= len(full)
                    assert ideals_equal(full.ideal(), pruned.ideal())


def test_richardson_minors_are_torus_homogeneous():
    w, u, v = perm("2143"), Permutation.longest(4), Permutation.identity(4)
    for u_, v_ in ((u, v), (perm("3412"), perm("1243"))):
        G = richardson_generators(w, u_, v_)
        grading = G.chart.torus_grading()
        assert all(grade_degree(p, grading) != INHOMOGENEOUS for p in G.polynomials)


def test_richardson_dimension_matches_length_difference():
    w = perm("2143")
    for u in (perm("4321"), perm("3412"), perm("2143")):
        for v in (perm("1234"), perm("2134"), perm("2143")):
            G = richardson_generators(w, u, v)
            expected = u.length() - v.length()
            assert krull_dimension(G.ideal()) == expected


def test_peterson_schubert_top_stratum_is_peterson():
    w0 = Permutation.longest(3)
    G = peterson_schubert_generators(w0, w0)
    assert G.polynomials == peterson_generators(w0).polynomials


def test_peterson_schubert_dimension():
    w = perm("2143")
    G = peterson_schubert_generators(w, w)
    assert G.expected_dim == 2
    assert krull_dimension(G.ideal()) == 2


def test_peterson_schubert_requires_lower_stratum():
    with pytest.raises(BruhatViolationError):
        peterson_schubert_generators(perm("4321"), perm("2143"))
    with pytest.raises(NotAFixedPointError):
        peterson_schubert_generators(perm("1342"), perm("4321"))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_block_form_presents_same_ideal(n):
    parabolics = [w for _, w in enumerate_parabolics(n)]
    for wP in parabolics:
        for wQ in parabolics:
            if bruhat_leq(wQ, wP):
                direct = peterson_schubert_generators(wQ, wP)
                block = peterson_schubert_block_form(wQ, wP)
                assert ideals_equal(direct.ideal(), block.ideal())


@pytest.mark.slow
def test_block_form_presents_same_ideal_n5():
    parabolics = [w for _, w in enumerate_parabolics(5)]
    for wP in parabolics:
        for wQ in parabolics:
            if bruhat_leq(wQ, wP):
                assert ideals_equal(
                    peterson_schubert_generators(wQ, wP).ideal(),
                    peterson_schubert_block_form(wQ, wP).ideal(),
                )


def test_generator_set_json_shape(chart_2143):
    doc = peterson_generators(perm("2143")).to_json_dict()
    assert doc["n"] == 4
    assert doc["w"] == [2, 1, 4, 3]
    assert doc["vars"] == [[1, 1], [3, 1], [4, 1], [3, 2], [4, 2], [3, 3]]
    first = doc["generators"][0]
    assert first["tag"] == "peterson(3,1)"
    assert all(len(term) == 3 for term in first["terms"])
    assert EMPTY == "empty"
