from pytest import fixture

from farekit.algebra.constructions import alexander_biquandle
from farekit.catalog.index import load
from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.fare import FareKind, FareTable
from farekit.schemas.group import CoeffGroup


@fixture(scope='session')
def trefoil_biquandle() -> FiniteBiquandle:
    return FiniteBiquandle(((2, 2, 2), (1, 1, 1), (3, 3, 3)),
                           ((2, 3, 1), (3, 1, 2), (1, 2, 3)), name='trefoil example')


@fixture(scope='session')
def three_biquandle() -> FiniteBiquandle:
    # 1-fare example, also the biquandle of the link table
    return FiniteBiquandle(((2, 2, 1), (1, 1, 2), (3, 3, 3)),
                           ((2, 2, 2), (1, 1, 1), (3, 3, 3)), name='three')


@fixture(scope='session')
def klein_biquandle() -> FiniteBiquandle:
    return FiniteBiquandle(((3, 1, 3), (2, 2, 2), (1, 3, 1)),
                           ((3, 3, 3), (2, 2, 2), (1, 1, 1)), name='klein example')


@fixture(scope='session')
def swap_biquandle() -> FiniteBiquandle:
    return FiniteBiquandle(((2, 2), (1, 1)), ((2, 2), (1, 1)), name='swap')


@fixture(scope='session')
def four_quandle() -> FiniteBiquandle:
    return FiniteBiquandle(((1, 3, 4, 2), (4, 2, 1, 3), (2, 4, 3, 1), (3, 1, 2, 4)),
                           ((1, 1, 1, 1), (2, 2, 2, 2), (3, 3, 3, 3), (4, 4, 4, 4)), name='four')


@fixture(scope='session')
def broken_z6_biquandle() -> FiniteBiquandle:
    # over table row 3 makes the column map of 4 non-injective
    return FiniteBiquandle(((1, 3, 4, 2), (2, 4, 3, 1), (3, 1, 2, 4), (4, 2, 1, 3)),
                           ((1, 1, 1, 1), (4, 4, 4, 4), (2, 2, 2, 3), (3, 3, 3, 3)), name='z6 example')


@fixture(scope='session')
def z6_biquandle() -> FiniteBiquandle:
    # broken_z6_biquandle with over table row 3, column 4 set to 2
    return FiniteBiquandle(((1, 3, 4, 2), (2, 4, 3, 1), (3, 1, 2, 4), (4, 2, 1, 3)),
                           ((1, 1, 1, 1), (4, 4, 4, 4), (2, 2, 2, 2), (3, 3, 3, 3)), name='z6 example, corrected')


@fixture(scope='session')
def broken_crooked_biquandle() -> FiniteBiquandle:
    # the same table for both operations, column 1 of the under table is not a bijection
    table = ((1, 3, 4, 2), (2, 4, 1, 3), (1, 3, 2, 4), (4, 2, 3, 1))
    return FiniteBiquandle(table, table, name='crooked example')


@fixture(scope='session')
def crooked_biquandle() -> FiniteBiquandle:
    return FiniteBiquandle(((3, 1, 4, 2), (2, 4, 1, 3), (1, 3, 2, 4), (4, 2, 3, 1)),
                           ((1, 3, 4, 2), (2, 4, 1, 3), (1, 3, 2, 4), (4, 2, 3, 1)), name='crooked example, corrected')


@fixture(scope='session')
def klein_fare() -> FareTable:
    return FareTable.from_values([(1, 0), (0, 1), (1, 0)], CoeffGroup.parse('2x2'), 1, FareKind.PLAIN)


@fixture(scope='session')
def hopf_complete_fare() -> FareTable:
    return FareTable.from_matrix([[0, 4], [4, 2]], CoeffGroup.cyclic(5))


@fixture(scope='session')
def printed_through_fare() -> FareTable:
    return FareTable.from_matrix([[0, 0, 3, 0], [0, 0, 3, 0], [2, 2, 0, 2], [0, 0, 3, 0]],
                                 CoeffGroup.cyclic(5), FareKind.THROUGH)


@fixture(scope='session')
def printed_z6_fare() -> FareTable:
    return FareTable.from_matrix([[3, 1, 4, 1], [5, 0, 3, 3], [2, 3, 0, 0], [5, 3, 0, 3]],
                                 CoeffGroup.cyclic(6), FareKind.THROUGH)


@fixture(scope='session')
def printed_crooked_fare() -> FareTable:
    return FareTable.from_matrix([[1, 3, 4, 2], [3, 1, 1, 0], [0, 2, 4, 2], [1, 4, 3, 4]],
                                 CoeffGroup.cyclic(5), FareKind.CROOKED)


@fixture(scope='session')
def link_table_fare() -> FareTable:
    return FareTable.from_matrix([[0, 0, 3], [0, 0, 3], [1, 1, 0]], CoeffGroup.cyclic(5))


@fixture(scope='session',
         params=['trefoil', 'three', 'klein', 'swap', 'alexander(3,2,2)'],
         ids=[f'Biquandle: {name}' for name in ['trefoil', 'three', 'klein', 'swap', 'alexander(3,2,2)']])
def small_biquandle(request, trefoil_biquandle, three_biquandle, klein_biquandle, swap_biquandle) \
        -> FiniteBiquandle:
    match request.param:
        case 'trefoil':
            return trefoil_biquandle
        case 'three':
            return three_biquandle
        case 'klein':
            return klein_biquandle
        case 'swap':
            return swap_biquandle
        case 'alexander(3,2,2)':
            return alexander_biquandle(3, 2, 2)
        case _:
            raise ValueError(f'Unknown biquandle: {request.param}')


FILE_DIAGRAMS = ['0_1', '0_1_kink', '0_1_bigon', 'U2', '3_1', '3_1_kink', '3_1_bigon',
                 '4_1', '4_1_kink', '4_1_bigon', 'L2a1', 'vHopf']


@fixture(scope='session', params=FILE_DIAGRAMS, ids=[f'Diagram: {name}' for name in FILE_DIAGRAMS])
def catalog_diagram(request):
    return load(request.param)


VARIANT_FAMILIES = {
    '0_1': ['0_1', '0_1_kink', '0_1_bigon'],
    '3_1': ['3_1', '3_1_kink', '3_1_bigon'],
    '4_1': ['4_1', '4_1_kink', '4_1_bigon'],
}


@fixture(scope='session', params=list(VARIANT_FAMILIES), ids=[f'Knot: {name}' for name in VARIANT_FAMILIES])
def variant_family(request):
    return [load(name) for name in VARIANT_FAMILIES[request.param]]
