from farekit.schemas.exceptions import RenderingError
from farekit.schemas.fare import FareMultiset, FarePolynomial, PolynomialForm
from farekit.schemas.group import GroupElement


def _power(base: str, exponent: str) -> str:
    return base if exponent == '1' else f'{base}^{exponent}'


def _additive_term(value: GroupElement, count: int) -> str:
    if value.is_zero():
        return str(count)
    coefficient = '' if count == 1 else str(count)
    exponent = str(value.residues[0]) if value.group.is_cyclic else str(value)
    return coefficient + _power('x', exponent)


def _multiplicative_factor(value: GroupElement, count: int) -> str:
    base = 'x' if value.is_zero() else f'(x-{value})'
    return _power(base, str(count))


def render_polynomial(multiset: FareMultiset, form: PolynomialForm) -> str:
    """
    Renders a fare multiset as a polynomial, terms in ascending order of the fare value.
    Additive: Σ x^value. Multiplicative: Π (x - value), only for cyclic coefficient groups.
    """
    polynomial = FarePolynomial.of(multiset, form)
    match form:
        case PolynomialForm.ADDITIVE:
            if not polynomial.terms:
                return '0'
            return '+'.join(_additive_term(value, count) for value, count in polynomial.terms)
        case PolynomialForm.MULTIPLICATIVE:
            if any(not value.group.is_cyclic for value, _ in polynomial.terms):
                raise RenderingError('Multiplicative fare polynomials need a cyclic coefficient group')
            if not polynomial.terms:
                return '1'
            return ''.join(_multiplicative_factor(value, count) for value, count in polynomial.terms)
