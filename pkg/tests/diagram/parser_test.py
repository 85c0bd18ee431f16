import pytest

from farekit.catalog.index import load
from farekit.diagram.parser import convert_pd, parse_diagram
from farekit.schemas.diagram import Crossing, LinkDiagram
from farekit.schemas.exceptions import DiagramParseError


def test_explicit_format():
    diagram = parse_diagram('# hopf\nX + 1 3 2 4\nX + 4 2 3 1\n', 'hopf')

    assert diagram.crossings == (Crossing(1, 1, 3, 2, 4), Crossing(1, 4, 2, 3, 1))
    assert diagram.components == ((1, 2), (3, 4))
    assert diagram.writhe() == 2


def test_free_loops():
    diagram = parse_diagram('O 1\nO 2')

    assert diagram.crossing_count == 0
    assert diagram.component_count == 2
    assert diagram.semiarcs == (1, 2)


def test_two_semiarcs_enter_each_crossing(catalog_diagram):
    assert catalog_diagram.semiarc_count == 2 * catalog_diagram.crossing_count + len(catalog_diagram.free_loops)


@pytest.mark.parametrize('text,line_number', [
    ('X + 1 2 3', 1),
    ('X * 1 2 3 4', 1),
    ('X + 1 2 2 1\nY 3', 2),
    ('X + 1 2 2 1\nX + a b 3 4', 2),
    ('X + 0 2 2 0', 1),
    ('O 1\nO 1', 2),
    ('X + 1 2 2 1\nX - 1 3 3 4', 2),
    ('O 1\nX + 1 2 2 1', 1),
    ('X + 1 2 3 4', 1),
    ('PD nothing here', 1),
])
def test_parse_errors_carry_line_numbers(text, line_number):
    with pytest.raises(DiagramParseError) as error:
        parse_diagram(text)
    assert error.value.line_number == line_number
    assert str(error.value).startswith(f'line {line_number}:')


def test_pd_trefoil_matches_explicit_file():
    converted = parse_diagram('PD X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]')
    assert converted == load('3_1')


def test_pd_figure_eight_signs():
    diagram = convert_pd([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)])

    assert diagram.crossings == (Crossing(1, 4, 1, 5, 2), Crossing(1, 8, 5, 1, 6),
                                 Crossing(-1, 6, 3, 7, 4), Crossing(-1, 2, 7, 3, 8))
    assert diagram.writhe() == 0
    assert diagram == load('4_1')


def test_pd_labels_should_appear_twice():
    with pytest.raises(DiagramParseError):
        convert_pd([(1, 2, 3, 4)])


def test_dumps_loads(catalog_diagram):
    assert LinkDiagram.loads(catalog_diagram.dumps()) == catalog_diagram
