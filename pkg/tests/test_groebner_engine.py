import sympy
import pytest

from conftest import poly, to_sympy
from exceptions import DegenerateInputError
from groebner_engine import (
    EMPTY,
    Ideal,
    buchberger,
    hilbert_numerator,
    hilbert_of_quotient,
    ideals_equal,
    initial_ideal,
    is_groebner_basis,
    krull_dimension,
    normal_form,
)
from patch_ideals import make_chart
from polynomial_core import uni_mul
from weyl_group import Permutation

EXAMPLE_2143 = [
    "z[4][1] - z[3][2] - z[3][1]^2 + z[3][1]*z[3][2]*z[1][1]",
    "z[4][1]*z[3][1] + z[4][2] - z[4][2]*z[3][1]*z[1][1]",
    "z[4][2] - z[3][1]*z[3][2] + z[3][2]^2*z[1][1] + z[4][1]*z[3][2]*z[3][3] - z[4][2]*z[3][2]*z[3][3]*z[1][1]",
]


def _sympy_basis(polys):
    exprs, symbols = [], None
    for p in polys:
        expr, symbols = to_sympy(p)
        exprs.append(expr)
    gens = list(reversed(symbols))
    basis = sympy.groebner(exprs, *gens, order="grevlex", domain="QQ")
    return {sympy.Poly(e, *gens).monic().as_expr() for e in basis.exprs}, gens


def test_linear_basis_is_reduced(chart_id3):
    ring = chart_id3.ring
    z21, z31 = ring.z(2, 1), ring.z(3, 1)
    assert buchberger(Ideal(ring, [z21, z21 + z31])) == [z21, z31]


def test_basis_matches_sympy_on_example(chart_2143):
    ring = chart_2143.ring
    gens = [poly(ring, text) for text in EXAMPLE_2143]
    ours = buchberger(Ideal(ring, gens))
    expected, symbols = _sympy_basis(gens)
    assert {sympy.Poly(to_sympy(g)[0], *symbols).monic().as_expr() for g in ours} == expected
    assert all(g.leading_coefficient() == 1 for g in ours)


def test_basis_is_groebner_and_idempotent(chart_2143):
    ring = chart_2143.ring
    ideal = Ideal(ring, [poly(ring, text) for text in EXAMPLE_2143])
    basis = buchberger(ideal)
    assert is_groebner_basis(basis)
    assert buchberger(Ideal(ring, basis)) == basis
    assert not is_groebner_basis([poly(ring, "z[3][1]^2 - z[1][1]"), poly(ring, "z[3][1]*z[1][1] - 1")])


def test_normal_form(chart_id3):
    ring = chart_id3.ring
    G = [poly(ring, "z[2][1]^2 - z[3][1]")]
    assert normal_form(poly(ring, "z[2][1]^3"), G) == poly(ring, "z[2][1]*z[3][1]")
    with pytest.raises(DegenerateInputError):
        normal_form(ring.one(), [])


def test_unit_ideal(chart_id3):
    ring = chart_id3.ring
    ideal = Ideal(ring, [poly(ring, "z[2][1]"), poly(ring, "z[2][1] - 1")])
    assert ideal.is_unit()
    assert buchberger(ideal) == [ring.one()]
    assert krull_dimension(ideal) == EMPTY


def test_zero_ideal_has_full_dimension(chart_id3):
    ideal = Ideal(chart_id3.ring, [chart_id3.ring.zero()])
    assert ideal.generators == ()
    assert krull_dimension(ideal) == 3
    assert hilbert_of_quotient(ideal).h_polynomial == [1]


def test_initial_ideal_of_principal_ideal(chart_id3):
    ring = chart_id3.ring
    ideal = Ideal(ring, [poly(ring, "z[2][1]^2 - z[3][1]")])
    assert initial_ideal(ideal) == [poly(ring, "z[2][1]^2").leading_monomial()]


def test_hilbert_numerator_of_monomial_ideals():
    assert hilbert_numerator([], 3) == [1]
    assert hilbert_numerator([(1, 0, 0)], 3) == [1, -1]
    assert hilbert_numerator([(2, 0, 0)], 3) == [1, 0, -1]
    # xy, yz, xz: três pontos coordenados
    assert hilbert_numerator([(1, 1, 0), (0, 1, 1), (1, 0, 1)], 3) == [1, 0, -3, 2]


def test_hilbert_data_of_cone(chart_id3):
    ring = chart_id3.ring
    data = hilbert_of_quotient(Ideal(ring, [poly(ring, "z[2][1]*z[3][1] + z[3][1]*z[3][2]")]), expected_dim=2)
    assert data.dimension == 2
    assert data.h_polynomial == [1, 1]
    assert data.multiplicity == 2
    assert not data.dimension_mismatch
    assert data.diagnostics == []


def test_dimension_mismatch_is_reported(chart_id3):
    ring = chart_id3.ring
    data = hilbert_of_quotient(Ideal(ring, [poly(ring, "z[2][1]")]), expected_dim=1)
    assert data.dimension == 2
    assert data.dimension_mismatch
    assert any(d.startswith("dimension-mismatch") for d in data.diagnostics)


def test_inhomogeneous_input_is_flagged(chart_2143):
    ring = chart_2143.ring
    data = hilbert_of_quotient(Ideal(ring, [poly(ring, text) for text in EXAMPLE_2143]))
    assert not data.homogeneous_input
    assert any(d.startswith("inhomogeneous-input") for d in data.diagnostics)


def test_complete_intersection_numerator():
    chart = make_chart(Permutation((2, 1, 3, 4)))
    ring = chart.ring
    cone = Ideal(ring, [poly(ring, "z[3][2] - z[4][1]"), poly(ring, "z[4][2]"), poly(ring, "z[4][1]^2")])
    data = hilbert_of_quotient(cone)
    assert data.raw_numerator == uni_mul(uni_mul([1, -1], [1, -1]), [1, 0, -1])
    assert data.dimension == 3
    assert data.h_polynomial == [1, 1]


def test_krull_dimension_of_example_patch(chart_2143):
    ring = chart_2143.ring
    assert krull_dimension(Ideal(ring, [poly(ring, text) for text in EXAMPLE_2143])) == 3


def test_ideal_equality_ignores_presentation(chart_id3):
    ring = chart_id3.ring
    a = Ideal(ring, [poly(ring, "z[2][1]"), poly(ring, "z[3][1]")])
    b = Ideal(ring, [poly(ring, "z[2][1] + z[3][1]"), poly(ring, "z[2][1] - z[3][1]")])
    c = Ideal(ring, [poly(ring, "z[2][1]")])
    assert ideals_equal(a, b)
    assert not ideals_equal(a, c)
    assert (c + Ideal(ring, [poly(ring, "z[3][1]")])).contains(poly(ring, "z[2][1]*z[3][2] + z[3][1]"))
