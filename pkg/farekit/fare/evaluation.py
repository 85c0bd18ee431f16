from typing import Callable, Sequence

from pathos.multiprocessing import ProcessingPool

from farekit.diagram.routes import routes
from farekit.homset.search import enumerate_colorings
from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.coloring import Coloring
from farekit.schemas.diagram import LinkDiagram, Route
from farekit.schemas.fare import FareMultiset, FareTable
from farekit.schemas.group import GroupElement


def _route_sum(args: tuple[Sequence[Route], dict[int, int], FareTable]) -> GroupElement:
    route_list, colors, fare = args
    total = fare.group.zero()
    for route in route_list:
        value = fare(*(colors[s] for s in route.edges))
        total = total + value if route.sign > 0 else total - value
    return total


def total_fare(diagram: LinkDiagram, coloring: Coloring | dict[int, int], fare: FareTable) -> GroupElement:
    """
    Σ (-1)^k φ(colors along the route) over the routes of the fare's order and kind,
    k being the number of negative crossings inside the route
    """
    colors = coloring.as_dict() if isinstance(coloring, Coloring) else coloring
    return _route_sum((routes(diagram, fare.order, fare.kind), colors, fare))


def fare_multiset(diagram: LinkDiagram, biquandle: FiniteBiquandle, fare: FareTable, jobs: int = 1,
                  logger: Callable[[str], None] | None = None) -> FareMultiset:
    """
    Total fares over the whole homset.

    :param diagram: the diagram
    :param biquandle: the coloring biquandle, of the fare's size
    :param fare: the fare
    :param jobs: worker processes, the result does not depend on it
    :param logger: progress reports
    :return: the fare multiset
    """
    assert fare.size == biquandle.size, \
        f'Fare is defined on {fare.size} elements but the biquandle has {biquandle.size}'
    homset = enumerate_colorings(diagram, biquandle)
    route_list = routes(diagram, fare.order, fare.kind)
    tasks = [(route_list, coloring.as_dict(), fare) for coloring in homset]
    if logger is not None:
        logger(f'{diagram.name or "diagram"}: {len(homset)} colorings, {len(route_list)} routes per coloring')

    if jobs > 1 and len(tasks) > 1:
        with ProcessingPool(nodes=jobs) as pool:
            values = pool.map(_route_sum, tasks)
    else:
        values = list(map(_route_sum, tasks))
    return FareMultiset(values)
