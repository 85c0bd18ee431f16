from farekit.catalog.index import load
from farekit.homset.search import enumerate_colorings
from farekit.schemas.coloring import Coloring
from farekit.schemas.fare import AxiomSource, FareKind, FareTable
from farekit.schemas.group import CoeffGroup
from farekit.utilities.validation import _check_all_semiarcs_colored, _check_colors_in_range, \
    _check_crossing_relations, validate_coloring, validate_fare


def raises_assertion(check, *args) -> bool:
    try:
        check(*args)
    except AssertionError:
        return True
    return False


def test_check_coloring_right(small_biquandle, catalog_diagram):
    for coloring in enumerate_colorings(catalog_diagram, small_biquandle):
        try:
            validate_coloring(coloring, catalog_diagram, small_biquandle)
        except AssertionError as e:
            raise AssertionError(f'Coloring {coloring} of {catalog_diagram.name} failed validation', e)


def test_check_coloring_wrong(trefoil_biquandle):
    diagram = load('3_1')
    coloring = next(iter(enumerate_colorings(diagram, trefoil_biquandle))).as_dict()

    missing = Coloring.of({s: c for s, c in coloring.items() if s != 1})
    assert raises_assertion(_check_all_semiarcs_colored, missing.as_dict(), diagram)

    outside = Coloring.of(coloring | {1: 4})
    assert raises_assertion(_check_colors_in_range, outside.as_dict(), trefoil_biquandle)

    # c2 = -c1 at the first crossing, so changing c2 alone breaks it
    broken = coloring | {2: coloring[2] % 3 + 1}
    assert raises_assertion(_check_crossing_relations, broken, diagram, trefoil_biquandle)
    assert raises_assertion(validate_coloring, Coloring.of(broken), diagram, trefoil_biquandle)


def test_check_fare_right(klein_biquandle, klein_fare, swap_biquandle, hopf_complete_fare):
    validate_fare(klein_fare, klein_biquandle)
    validate_fare(hopf_complete_fare, swap_biquandle)


def test_check_fare_wrong(four_quandle, printed_through_fare, swap_biquandle, klein_fare):
    assert raises_assertion(validate_fare, printed_through_fare, four_quandle)
    assert raises_assertion(validate_fare, klein_fare, swap_biquandle)


def test_check_one_fare_sources(three_biquandle):
    fare = FareTable.from_values([0, 0, 1], CoeffGroup.cyclic(2), 1, FareKind.PLAIN)

    validate_fare(fare, three_biquandle, AxiomSource.MOVES)
    assert raises_assertion(validate_fare, fare, three_biquandle, AxiomSource.PRINTED)
