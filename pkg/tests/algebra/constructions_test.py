import pytest

from farekit.algebra import alexander_biquandle, conjugation_biquandle, is_quandle, verify, wada_biquandle
from farekit.algebra.constructions import GroupTable, cyclic_group_table, symmetric_group_table, \
    validate_group_table
from farekit.schemas.exceptions import InvalidGroupTableError, NonUnitParameterError


@pytest.mark.parametrize('m,t,s', [(3, 2, 1), (4, 1, 3), (5, 2, 3), (6, 5, 1), (7, 3, 3)])
def test_alexander_biquandles_are_valid(m, t, s):
    biquandle = alexander_biquandle(m, t, s)

    assert biquandle.size == m
    assert verify(biquandle).valid


def test_alexander_with_s_one_is_quandle():
    assert is_quandle(alexander_biquandle(5, 2, 1))
    assert not is_quandle(alexander_biquandle(5, 2, 3))


def test_alexander_needs_units():
    with pytest.raises(NonUnitParameterError):
        alexander_biquandle(6, 2, 1)
    with pytest.raises(NonUnitParameterError):
        alexander_biquandle(6, 1, 3)


@pytest.mark.parametrize('table', [cyclic_group_table(4), symmetric_group_table(3)],
                         ids=['Z4', 'S3'])
def test_group_constructions_are_valid(table):
    for n in (1, 2):
        conjugation = conjugation_biquandle(table, n)
        assert verify(conjugation).valid
        assert is_quandle(conjugation)
    assert verify(wada_biquandle(table)).valid


def test_conjugation_of_abelian_group_is_trivial():
    quandle = conjugation_biquandle(cyclic_group_table(5))
    assert all(quandle.under(x, y) == x for x, y in quandle.pairs())


def test_symmetric_group_table():
    group = GroupTable(symmetric_group_table(3))

    assert group.order == 6
    assert group.identity == 1
    assert all(group.mul(a, group.inverse(a)) == 1 for a in range(1, 7))
    # S3 is not abelian
    assert any(group.mul(a, b) != group.mul(b, a) for a in range(1, 7) for b in range(1, 7))


@pytest.mark.parametrize('table', [
    ((1, 2), (2, 2)),
    ((2, 1), (1, 1)),
    ((1, 2, 3), (2, 3, 1)),
    ((1, 2, 3), (2, 1, 3), (3, 3, 1)),
])
def test_invalid_group_tables(table):
    with pytest.raises(InvalidGroupTableError):
        validate_group_table(table)
