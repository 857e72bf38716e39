import pytest
import sympy

from logging_system import setup_petpatch_logging
from patch_ideals import make_chart, peterson_generators
from polynomial_core import parse_polynomial
from weyl_group import Permutation, parse_permutation


@pytest.fixture(autouse=True, scope="session")
def _quiet_logging():
    setup_petpatch_logging()


def perm(text):
    return parse_permutation(text)


def poly(ring, text):
    return parse_polynomial(text, ring)


def to_sympy(p):
    """Expressão sympy com símbolos z_i_j; a ordem dos geradores segue a precedência do anel"""
    symbols = [sympy.Symbol(f"z{v.i}{v.j}") for v in p.ring.variables]
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(symbols, exp):
            term *= s ** e
        expr += term
    return expr, symbols


@pytest.fixture
def chart_2143():
    return make_chart(Permutation((2, 1, 4, 3)))


@pytest.fixture
def chart_id3():
    return make_chart(Permutation.identity(3))


@pytest.fixture
def chart_w0_3():
    return make_chart(Permutation.longest(3))


@pytest.fixture(scope="session")
def pet4():
    """Geradores de Peterson nos oito pontos fixos de Pet_4"""
    return {
        text: peterson_generators(perm(text))
        for text in ("1234", "1243", "1324", "1432", "2134", "2143", "3214", "4321")
    }
