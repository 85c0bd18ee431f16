import pytest

from farekit.schemas.exceptions import FareParseError, GroupSpecError, UnsupportedFareError
from farekit.schemas.fare import FareKind, FareTable
from farekit.schemas.group import CoeffGroup


@pytest.mark.parametrize('spec,moduli', [('5', (5,)), ('2x2', (2, 2)), ('Z2xZ3', (2, 3)), ('Z4 ⊕ Z6', (4, 6))])
def test_group_specs(spec, moduli):
    group = CoeffGroup.parse(spec)

    assert group.moduli == moduli
    assert len(list(group.elements())) == group.order


@pytest.mark.parametrize('spec', ['', 'x', 'Zq', '1', '0', '2x'])
def test_bad_group_specs(spec):
    with pytest.raises(GroupSpecError):
        CoeffGroup.parse(spec)


def test_group_arithmetic():
    group = CoeffGroup.parse('2x3')
    x = group.element(1, 2)

    assert (x + x) == group.element(0, 1)
    assert (x - x).is_zero()
    assert 3 * x == group.element(1, 0)
    assert str(x) == '(1,2)'
    assert str(CoeffGroup.cyclic(5).element(7)) == '2'


def test_fare_table_access(hopf_complete_fare):
    assert hopf_complete_fare.size == 2
    assert str(hopf_complete_fare(1, 2)) == '4'
    assert str(hopf_complete_fare(2, 2)) == '2'
    assert list(hopf_complete_fare.domain()) == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_fare_file_round_trip(tmp_path, klein_fare, printed_through_fare):
    for fare in (klein_fare, printed_through_fare):
        path = str(tmp_path / 'phi.fare')
        fare.dump_file(path)
        assert FareTable.load_file(path) == fare


@pytest.mark.parametrize('text', [
    '',
    '1 -> 0\n',
    'fare order=3 kind=plain group=2 n=2\n',
    'fare order=1 kind=through group=2 n=2\n1 -> 0\n2 -> 1\n',
    'fare order=1 kind=plain group=q n=2\n1 -> 0\n2 -> 1\n',
    'fare order=1 kind=plain group=2 n=2\n1 -> 0\n',
    'fare order=1 kind=plain group=2 n=2\n1 -> 0\n3 -> 1\n',
    'fare order=1 kind=plain group=2x2 n=1\n1 -> 0\n',
    'fare order=2 kind=complete group=5 n=1\n1 -> 0\n',
    'fare order=1 kind=plain group=2 n=1\n1 => 0\n',
])
def test_fare_parse_errors(text):
    with pytest.raises(FareParseError):
        FareTable.loads(text)


def test_fare_comments_and_plain_values():
    fare = FareTable.loads('# 1-fare\nfare order=1 kind=plain group=2x2 n=2\n1 -> (1, 0)\n2 -> 0,1  # second\n')
    assert [value.residues for value in fare.values] == [(1, 0), (0, 1)]


def test_unsupported_order_kind():
    with pytest.raises(UnsupportedFareError):
        FareTable.zero(CoeffGroup.cyclic(2), 2, 2, FareKind.PLAIN)
