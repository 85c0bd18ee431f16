"""
Routes are the paths of the quiver underlying a diagram: vertices are the classical crossings and
arrows are the semiarcs. Only orders 1 and 2 are supported.
"""
from farekit.schemas.diagram import Crossing, LinkDiagram, Route, RouteKind
from farekit.schemas.exceptions import UnsupportedRouteOrderError, UnsupportedFareError
from farekit.schemas.fare import FareKind

_STEP_KINDS = {
    FareKind.THROUGH: (RouteKind.THROUGH,),
    FareKind.CROOKED: (RouteKind.CROOKED,),
    FareKind.COMPLETE: (RouteKind.THROUGH, RouteKind.CROOKED),
}


def crossing_steps(crossing: Crossing, kind: FareKind) -> list[Route]:
    """
    Order-2 routes whose internal vertex is the given crossing.
    Through steps stay on the strand, crooked steps turn to the other strand.
    """
    if kind not in _STEP_KINDS:
        raise UnsupportedFareError(f'Order-2 routes need a complete, through or crooked kind, got {kind.value}')
    k = 1 if crossing.sign < 0 else 0
    steps = []
    for step_kind in _STEP_KINDS[kind]:
        if step_kind is RouteKind.THROUGH:
            pairs = ((crossing.u_in, crossing.u_out), (crossing.o_in, crossing.o_out))
        else:
            pairs = ((crossing.u_in, crossing.o_out), (crossing.o_in, crossing.u_out))
        steps += [Route(pair, k, (step_kind,)) for pair in pairs]
    return steps


def routes(diagram: LinkDiagram, order: int, kind: FareKind = FareKind.PLAIN) -> list[Route]:
    """
    Collects the routes of the given order.

    :param diagram: the diagram
    :param order: 1 or 2
    :param kind: plain for order 1; complete, through or crooked for order 2
    :return: routes, order 1 sorted by semiarc, order 2 grouped by crossing
    """
    match order:
        case 1:
            bearing = {s for c in diagram.crossings for s in c.in_slots}
            return [Route((s,)) for s in diagram.semiarcs if s in bearing]
        case 2:
            return [step for crossing in diagram.crossings for step in crossing_steps(crossing, kind)]
        case _:
            raise UnsupportedRouteOrderError(f'Routes of order {order} are not supported, use 1 or 2')


def crossing_free_components(diagram: LinkDiagram) -> int:
    return len(diagram.free_loops)
