from typing import Callable

from pathos.multiprocessing import ProcessingPool

from farekit.catalog.index import load_path
from farekit.fare.enumeration import enumerate_fares
from farekit.fare.evaluation import fare_multiset
from farekit.pipeline.base import FarePipeline
from farekit.pipeline.exception import InvariantPipelineError
from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.diagram import LinkDiagram
from farekit.schemas.fare import AxiomSource, FareKind, FareMultiset, FareTable
from farekit.schemas.group import CoeffGroup
from farekit.utilities.tables import LinkInvariant
from farekit.utilities.validation import validate_fare


def _link_multiset(args: tuple[LinkDiagram, FiniteBiquandle, FareTable]) -> FareMultiset:
    diagram, biquandle, fare = args
    return fare_multiset(diagram, biquandle, fare)


class DefaultFarePipeline(FarePipeline):
    """
    Default pipeline: resolves the fare, checks it, then evaluates every link
    """

    def __init__(self):
        self._biquandle: FiniteBiquandle | None = None
        self._group: CoeffGroup | None = None
        self._fare: FareTable | tuple[int, FareKind] | None = None
        self._source: AxiomSource = AxiomSource.MOVES
        self._links: list[LinkDiagram | str] = []
        self._jobs: int = 1
        self._across_links: bool = False
        self._validate: bool = True
        self._logger: Callable[[str], None] | None = None

    def biquandle(self, biquandle: FiniteBiquandle) -> 'FarePipeline':
        """
        Mandatory argument.

        :param biquandle: the coloring biquandle
        :return: the pipeline object
        """
        self._biquandle = biquandle
        return self

    def group(self, group: CoeffGroup | str) -> 'FarePipeline':
        self._group = CoeffGroup.parse(group) if isinstance(group, str) else group
        return self

    def fare(self, fare: FareTable | tuple[int, FareKind]) -> 'FarePipeline':
        """
        Mandatory argument.
        """
        self._fare = fare
        return self

    def source(self, source: AxiomSource) -> 'FarePipeline':
        self._source = source
        return self

    def links(self, links: list[LinkDiagram | str]) -> 'FarePipeline':
        self._links = list(links)
        return self

    def jobs(self, jobs: int, across_links: bool = False) -> 'FarePipeline':
        """
        Worker processes, either across the colorings of each link or across the links

        :param jobs: number of processes, 1 evaluates sequentially
        :param across_links: give whole links to the workers
        :return: the pipeline object
        """
        if jobs < 1:
            raise InvariantPipelineError(f'Number of jobs should be positive, got {jobs}')
        self._jobs = jobs
        self._across_links = across_links
        return self

    def validate(self, validate: bool) -> 'FarePipeline':
        self._validate = validate
        return self

    def logger(self, logger: Callable[[str], None] | None) -> 'FarePipeline':
        self._logger = logger
        return self

    def _resolve_fare(self) -> FareTable:
        if self._fare is None:
            raise InvariantPipelineError('Fare is not set')
        if isinstance(self._fare, FareTable):
            if self._fare.size != self._biquandle.size:
                raise InvariantPipelineError(f'Fare is defined on {self._fare.size} elements, '
                                             f'the biquandle has {self._biquandle.size}')
            if self._group is not None and self._group != self._fare.group:
                raise InvariantPipelineError(f'Fare takes values in Z_{self._fare.group}, '
                                             f'but the group Z_{self._group} was requested')
            return self._fare

        order, kind = self._fare
        if self._group is None:
            raise InvariantPipelineError('Coefficient group is needed to enumerate fares')
        for fare in enumerate_fares(self._biquandle, order, kind, self._group, self._source, self._logger):
            if any(not value.is_zero() for value in fare.values):
                return fare
        raise InvariantPipelineError(f'The biquandle has only the zero {kind.value} {order}-fare '
                                     f'over Z_{self._group}')

    def compute(self) -> list[LinkInvariant]:
        if self._biquandle is None:
            raise InvariantPipelineError('Biquandle is not set')
        fare = self._resolve_fare()
        if self._validate:
            validate_fare(fare, self._biquandle, self._source)

        diagrams = [load_path(link, self._logger) if isinstance(link, str) else link for link in self._links]
        if self._across_links and self._jobs > 1 and len(diagrams) > 1:
            with ProcessingPool(nodes=self._jobs) as pool:
                multisets = pool.map(_link_multiset, [(d, self._biquandle, fare) for d in diagrams])
        else:
            multisets = [fare_multiset(d, self._biquandle, fare, self._jobs, self._logger) for d in diagrams]
        return [LinkInvariant(d.name, m.cardinality, m) for d, m in zip(diagrams, multisets)]
