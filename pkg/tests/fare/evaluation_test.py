from itertools import islice

import pytest

from farekit.catalog.index import load
from farekit.fare.enumeration import enumerate_fares
from farekit.fare.evaluation import fare_multiset, total_fare
from farekit.homset.search import enumerate_colorings
from farekit.schemas.fare import FareKind, FareMultiset
from farekit.schemas.group import CoeffGroup


def test_virtual_hopf_link(klein_biquandle, klein_fare):
    group = klein_fare.group
    multiset = fare_multiset(load('vHopf'), klein_biquandle, klein_fare)

    assert multiset.cardinality == 3
    assert multiset.count(group.element(1, 1)) == 2
    assert multiset.count(group.zero()) == 1


def test_unlink_has_zero_fares(klein_biquandle, klein_fare):
    multiset = fare_multiset(load('U2'), klein_biquandle, klein_fare)
    assert multiset == FareMultiset.from_counts({klein_fare.group.zero(): 9})


def test_hopf_link(swap_biquandle, hopf_complete_fare):
    group = hopf_complete_fare.group
    multiset = fare_multiset(load('L2a1'), swap_biquandle, hopf_complete_fare)

    assert multiset == FareMultiset.from_counts({group.element(0): 2, group.element(2): 2})


def test_figure_eight_printed_coloring(four_quandle, printed_through_fare):
    coloring = dict(zip(range(1, 9), (2, 2, 1, 1, 3, 3, 4, 4)))
    assert total_fare(load('4_1'), coloring, printed_through_fare) == CoeffGroup.cyclic(5).element(1)


def test_figure_eight_and_trefoil(four_quandle, printed_through_fare):
    z5 = CoeffGroup.cyclic(5)
    figure_eight = fare_multiset(load('4_1'), four_quandle, printed_through_fare)
    trefoil = fare_multiset(load('3_1'), four_quandle, printed_through_fare)

    assert figure_eight == FareMultiset.from_counts({z5.element(0): 4, z5.element(1): 6, z5.element(4): 6})
    assert trefoil == FareMultiset.from_counts({z5.element(0): 16})


def test_complete_is_through_plus_crooked(catalog_diagram, swap_biquandle, hopf_complete_fare):
    through = hopf_complete_fare.with_kind(FareKind.THROUGH)
    crooked = hopf_complete_fare.with_kind(FareKind.CROOKED)
    for coloring in enumerate_colorings(catalog_diagram, swap_biquandle):
        assert total_fare(catalog_diagram, coloring, hopf_complete_fare) \
               == total_fare(catalog_diagram, coloring, through) + total_fare(catalog_diagram, coloring, crooked)


@pytest.mark.parametrize('order,kind', [(1, FareKind.PLAIN), (2, FareKind.COMPLETE),
                                        (2, FareKind.THROUGH), (2, FareKind.CROOKED)])
@pytest.mark.parametrize('group', ['2', '3'])
def test_invariance_under_moves(small_biquandle, variant_family, order, kind, group):
    for fare in islice(enumerate_fares(small_biquandle, order, kind, CoeffGroup.parse(group)), 12):
        multisets = [fare_multiset(diagram, small_biquandle, fare) for diagram in variant_family]
        assert all(multiset == multisets[0] for multiset in multisets), \
            f'{fare.dumps()} gives {[str(m) for m in multisets]}'


def test_parallel_evaluation_agrees(four_quandle, printed_through_fare):
    diagram = load('4_1')
    assert fare_multiset(diagram, four_quandle, printed_through_fare, jobs=2) \
           == fare_multiset(diagram, four_quandle, printed_through_fare)


def test_size_mismatch(four_quandle, hopf_complete_fare):
    with pytest.raises(AssertionError):
        fare_multiset(load('3_1'), four_quandle, hopf_complete_fare)
