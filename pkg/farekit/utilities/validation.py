import numpy as np

from farekit.fare.axioms import axiom_system
from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.coloring import Coloring
from farekit.schemas.diagram import LinkDiagram
from farekit.schemas.fare import AxiomSource, FareTable


def validate_coloring(coloring: Coloring, diagram: LinkDiagram, biquandle: FiniteBiquandle) -> None:
    """
    Checks that the coloring is a biquandle coloring of the diagram.
    If there is an error, this function raises AssertionError with an appropriate message.
    If it finishes without any exception, the coloring is correct.
    """
    colors = coloring.as_dict()
    _check_all_semiarcs_colored(colors, diagram)
    _check_colors_in_range(colors, biquandle)
    _check_crossing_relations(colors, diagram, biquandle)


def _check_all_semiarcs_colored(colors: dict[int, int], diagram: LinkDiagram) -> None:
    missing = [s for s in diagram.semiarcs if s not in colors]
    extra = [s for s in colors if s not in diagram.semiarcs]
    assert not missing and not extra, \
        f'Coloring does not match the semiarcs of the diagram: missing {missing}, unknown {extra}'


def _check_colors_in_range(colors: dict[int, int], biquandle: FiniteBiquandle) -> None:
    outside = {s: c for s, c in colors.items() if not 1 <= c <= biquandle.size}
    assert not outside, f'Colors outside 1..{biquandle.size}: {outside}'


def _check_crossing_relations(colors: dict[int, int], diagram: LinkDiagram, biquandle: FiniteBiquandle) -> None:
    for crossing in diagram.crossings:
        u_in, o_in, u_out, o_out = (colors[s] for s in crossing.slots)
        if crossing.is_positive:
            ok = u_out == biquandle.under(u_in, o_out) and o_in == biquandle.over(o_out, u_in)
        else:
            ok = u_in == biquandle.under(u_out, o_in) and o_out == biquandle.over(o_in, u_out)
        assert ok, f'Coloring (u_in, o_in, u_out, o_out) = {(u_in, o_in, u_out, o_out)} breaks crossing {crossing}'


def validate_fare(fare: FareTable, biquandle: FiniteBiquandle, source: AxiomSource = AxiomSource.MOVES) -> None:
    """
    Checks that the table is a fare of the biquandle by substituting it into the fare conditions.
    Raises AssertionError naming the first violated condition.
    """
    _check_fare_shape(fare, biquandle)
    _check_fare_conditions(fare, biquandle, source)


def _check_fare_shape(fare: FareTable, biquandle: FiniteBiquandle) -> None:
    assert fare.size == biquandle.size, \
        f'Fare is defined on {fare.size} elements, the biquandle has {biquandle.size}'


def _check_fare_conditions(fare: FareTable, biquandle: FiniteBiquandle, source: AxiomSource) -> None:
    system = axiom_system(biquandle, fare.order, fare.kind, source)
    for i, m in enumerate(fare.group.moduli):
        residuals = system @ np.array(fare.component(i), dtype=np.int64) % m
        failing = np.flatnonzero(residuals)
        assert failing.size == 0, \
            f'{fare.kind.value} {fare.order}-fare violates {failing.size} of {system.shape[0]} conditions ' \
            f'({source.value}) in component Z_{m}'
