import pytest

from farekit.fare.polynomial import render_polynomial
from farekit.schemas.exceptions import RenderingError
from farekit.schemas.fare import FareMultiset, FarePolynomial, PolynomialForm
from farekit.schemas.group import CoeffGroup

Z5 = CoeffGroup.cyclic(5)


def multiset(counts: dict[int, int], group: CoeffGroup = Z5) -> FareMultiset:
    return FareMultiset.from_counts({group.element(value): count for value, count in counts.items()})


@pytest.mark.parametrize('counts,additive,multiplicative', [
    ({0: 4, 1: 6, 4: 6}, '4+6x+6x^4', 'x^4(x-1)^6(x-4)^6'),
    ({0: 2, 2: 2}, '2+2x^2', 'x^2(x-2)^2'),
    ({0: 16}, '16', 'x^16'),
    ({3: 1}, 'x^3', '(x-3)'),
    ({1: 1, 2: 3}, 'x+3x^2', '(x-1)(x-2)^3'),
    ({}, '0', '1'),
])
def test_cyclic_renderings(counts, additive, multiplicative):
    values = multiset(counts)

    assert render_polynomial(values, PolynomialForm.ADDITIVE) == additive
    assert render_polynomial(values, PolynomialForm.MULTIPLICATIVE) == multiplicative


def test_terms_follow_canonical_order():
    values = FareMultiset([Z5.element(v) for v in (4, 0, 4, 1, 0)])
    assert render_polynomial(values, PolynomialForm.ADDITIVE) == '2+x+2x^4'


def test_non_cyclic_group():
    klein = CoeffGroup.parse('2x2')
    values = FareMultiset.from_counts({klein.zero(): 1, klein.element(1, 1): 2})

    assert render_polynomial(values, PolynomialForm.ADDITIVE) == '1+2x^(1,1)'
    with pytest.raises(RenderingError):
        render_polynomial(values, PolynomialForm.MULTIPLICATIVE)


def test_degree_is_the_number_of_colorings():
    values = multiset({0: 4, 1: 6, 4: 6})
    assert FarePolynomial.of(values, PolynomialForm.MULTIPLICATIVE).degree == 16
