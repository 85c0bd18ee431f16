"""
Through and crooked fares sum to complete fares. A complete fare is decomposable
when it is such a sum; this is decided per cyclic component of the coefficient group.
"""
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from farekit.fare.axioms import axiom_system
from farekit.fare.enumeration import count_solutions
from farekit.linalg.zmod import KernelDescription, kernels_over_group, subgroup_sum_witness
from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.exceptions import UnsupportedFareError
from farekit.schemas.fare import AxiomSource, FareKind, FareTable
from farekit.schemas.group import CoeffGroup, GroupElement


def _from_components(components: Sequence[Sequence[int]], group: CoeffGroup, size: int,
                     kind: FareKind) -> FareTable:
    values = tuple(GroupElement(group, tuple(component[j] for component in components))
                   for j in range(size * size))
    return FareTable(2, kind, group, size, values)


def _split_kernels(biquandle: FiniteBiquandle, group: CoeffGroup, source: AxiomSource) \
        -> tuple[list[KernelDescription], list[KernelDescription]]:
    through = kernels_over_group(axiom_system(biquandle, 2, FareKind.THROUGH, source), group)
    crooked = kernels_over_group(axiom_system(biquandle, 2, FareKind.CROOKED, source), group)
    return through, crooked


def decompose(fare: FareTable, biquandle: FiniteBiquandle, source: AxiomSource = AxiomSource.MOVES) \
        -> tuple[FareTable, FareTable] | None:
    """
    Finds a through fare and a crooked fare summing to the given complete fare.

    :param fare: complete 2-fare
    :param biquandle: the biquandle
    :param source: where the fare conditions come from
    :return: (through, crooked) or None when the fare is indecomposable
    """
    if fare.order != 2 or fare.kind is not FareKind.COMPLETE:
        raise UnsupportedFareError(f'Only complete 2-fares are decomposed, got a {fare.kind.value} {fare.order}-fare')
    through, crooked = _split_kernels(biquandle, fare.group, source)
    through_parts, crooked_parts = [], []
    for i, (k_through, k_crooked) in enumerate(zip(through, crooked)):
        witness = subgroup_sum_witness(fare.component(i), k_through, k_crooked)
        if witness is None:
            return None
        through_parts.append(witness[0])
        crooked_parts.append(witness[1])
    return (_from_components(through_parts, fare.group, fare.size, FareKind.THROUGH),
            _from_components(crooked_parts, fare.group, fare.size, FareKind.CROOKED))


def is_decomposable(fare: FareTable, biquandle: FiniteBiquandle, source: AxiomSource = AxiomSource.MOVES) -> bool:
    return decompose(fare, biquandle, source) is not None


@dataclass(frozen=True)
class ClosureReport:
    group: CoeffGroup
    source: AxiomSource
    through_generators: int
    crooked_generators: int
    counterexamples: tuple[tuple[FareTable, FareTable], ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def check_closure(biquandle: FiniteBiquandle, group: CoeffGroup, source: AxiomSource = AxiomSource.MOVES,
                  limit: int = 3) -> ClosureReport:
    """
    Checks that every sum of a through fare and a crooked fare is a complete fare.
    The complete conditions are linear, so it is enough to test the kernel generators;
    a failing generator g gives the counterexample pair (g, 0) or (0, g).

    :param limit: maximal number of counterexamples to report
    """
    complete = axiom_system(biquandle, 2, FareKind.COMPLETE, source)
    through, crooked = _split_kernels(biquandle, group, source)
    zero = FareTable.zero(group, biquandle.size, 2, FareKind.THROUGH)
    counterexamples = []
    generators = 0, 0
    for i, m in enumerate(group.moduli):
        for kind, description in ((FareKind.THROUGH, through[i]), (FareKind.CROOKED, crooked[i])):
            for generator in description.generators:
                if not np.any(complete @ np.asarray(generator, dtype=np.int64) % m):
                    continue
                components = [list(generator) if j == i else [0] * len(generator) for j in range(group.rank)]
                table = _from_components(components, group, biquandle.size, kind)
                pair = (table, zero.with_kind(FareKind.CROOKED)) if kind is FareKind.THROUGH else (zero, table)
                counterexamples.append(pair)
        generators = generators[0] + len(through[i].generators), generators[1] + len(crooked[i].generators)
    return ClosureReport(group, source, generators[0], generators[1], tuple(counterexamples[:limit]))


@dataclass(frozen=True)
class FareRankSummary:
    through: int
    crooked: int
    complete: int
    through_plus_crooked: int
    decomposable_share: float


def fare_rank_summary(biquandle: FiniteBiquandle, group: CoeffGroup,
                      source: AxiomSource = AxiomSource.MOVES) -> FareRankSummary:
    """
    Numbers of fares of each kind and the size of the through + crooked subgroup,
    |T + K| = |T| |K| / |T ∩ K|
    """
    through_system = axiom_system(biquandle, 2, FareKind.THROUGH, source)
    crooked_system = axiom_system(biquandle, 2, FareKind.CROOKED, source)
    through = count_solutions(through_system, group)
    crooked = count_solutions(crooked_system, group)
    complete = count_solutions(axiom_system(biquandle, 2, FareKind.COMPLETE, source), group)
    both = count_solutions(np.vstack([through_system, crooked_system]), group)
    total = through * crooked // both
    return FareRankSummary(through, crooked, complete, total, total / complete)
