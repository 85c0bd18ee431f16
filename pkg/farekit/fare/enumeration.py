from typing import Callable, Iterator

import numpy as np

from farekit.fare.axioms import axiom_system
from farekit.linalg.zmod import kernels_over_group, solve_over_group
from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.fare import AxiomSource, FareKind, FareTable
from farekit.schemas.group import CoeffGroup


def enumerate_fares(biquandle: FiniteBiquandle, order: int, kind: FareKind, group: CoeffGroup,
                    source: AxiomSource = AxiomSource.MOVES,
                    logger: Callable[[str], None] | None = None) -> Iterator[FareTable]:
    """
    Streams every fare of the given order and kind, each one exactly once.

    :param biquandle: the biquandle
    :param order: 1 or 2
    :param kind: plain for order 1; complete, through or crooked for order 2
    :param group: coefficient group
    :param source: where the fare conditions come from
    :param logger: progress reports
    :return: stream of fare tables
    """
    system = axiom_system(biquandle, order, kind, source, logger)
    if logger is not None:
        logger(f'{kind.value} {order}-fares over Z_{group}: {system.shape[0]} distinct conditions '
               f'on {system.shape[1]} unknowns, {count_solutions(system, group)} solutions')
    for values in solve_over_group(system, group):
        yield FareTable(order, kind, group, biquandle.size, values)


def count_solutions(system: np.ndarray, group: CoeffGroup) -> int:
    count = 1
    for description in kernels_over_group(system, group):
        count *= description.size
    return count


def count_fares(biquandle: FiniteBiquandle, order: int, kind: FareKind, group: CoeffGroup,
                source: AxiomSource = AxiomSource.MOVES) -> int:
    return count_solutions(axiom_system(biquandle, order, kind, source), group)


def satisfies(fare: FareTable, biquandle: FiniteBiquandle, source: AxiomSource = AxiomSource.MOVES) -> bool:
    """
    Substitutes the fare values back into the integer system, component by component
    """
    if fare.size != biquandle.size:
        return False
    system = axiom_system(biquandle, fare.order, fare.kind, source)
    for i, m in enumerate(fare.group.moduli):
        values = np.array(fare.component(i), dtype=np.int64)
        if np.any(system @ values % m):
            return False
    return True
