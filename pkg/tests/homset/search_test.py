from itertools import product

import pytest

from farekit.catalog.index import load
from farekit.homset.search import counting_invariant, enumerate_colorings
from farekit.schemas.coloring import Coloring
from farekit.utilities.validation import validate_coloring

SMALL_DIAGRAMS = ['0_1', '0_1_kink', '0_1_bigon', 'U2', '3_1', 'L2a1', 'vHopf']


def brute_force_colorings(diagram, biquandle) -> set[Coloring]:
    found = set()
    for colors in product(biquandle.elements, repeat=diagram.semiarc_count):
        coloring = Coloring.of(dict(zip(diagram.semiarcs, colors)))
        try:
            validate_coloring(coloring, diagram, biquandle)
        except AssertionError:
            continue
        found.add(coloring)
    return found


@pytest.mark.parametrize('name', SMALL_DIAGRAMS)
def test_search_matches_brute_force(small_biquandle, name):
    diagram = load(name)
    homset = enumerate_colorings(diagram, small_biquandle)

    assert len(set(homset)) == len(homset)
    assert set(homset) == brute_force_colorings(diagram, small_biquandle)


def test_homset_is_sorted(small_biquandle):
    homset = enumerate_colorings(load('3_1'), small_biquandle)
    assert list(homset) == sorted(homset)


def test_trefoil_example(trefoil_biquandle):
    assert counting_invariant(load('3_1'), trefoil_biquandle) == 9
    assert counting_invariant(load('0_1_kink'), trefoil_biquandle) == 3


def test_four_element_quandle(four_quandle):
    assert counting_invariant(load('3_1'), four_quandle) == 16
    assert counting_invariant(load('4_1'), four_quandle) == 16


def test_unlinks(small_biquandle):
    n = small_biquandle.size
    assert counting_invariant(load('0_1'), small_biquandle) == n
    assert counting_invariant(load('U2'), small_biquandle) == n * n


def test_counting_invariant_of_variants(small_biquandle, variant_family):
    counts = {counting_invariant(diagram, small_biquandle) for diagram in variant_family}
    assert len(counts) == 1


def test_every_coloring_is_valid(four_quandle):
    diagram = load('4_1_bigon')
    homset = enumerate_colorings(diagram, four_quandle)

    assert len(homset) == 16
    for coloring in homset:
        validate_coloring(coloring, diagram, four_quandle)
