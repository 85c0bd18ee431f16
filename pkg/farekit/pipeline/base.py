from abc import ABC, abstractmethod
from typing import Callable

from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.diagram import LinkDiagram
from farekit.schemas.fare import AxiomSource, FareKind, FareTable
from farekit.schemas.group import CoeffGroup
from farekit.utilities.tables import LinkInvariant


class FarePipeline(ABC):
    """
    Base class of the pipelines computing fare invariants for a list of links
    """

    @abstractmethod
    def biquandle(self, biquandle: FiniteBiquandle) -> 'FarePipeline':
        ...

    @abstractmethod
    def group(self, group: CoeffGroup | str) -> 'FarePipeline':
        ...

    @abstractmethod
    def fare(self, fare: FareTable | tuple[int, FareKind]) -> 'FarePipeline':
        """
        Either a fare table, or (order, kind) to take the first nonzero fare of the enumeration

        :param fare: the fare or its order and kind
        :return: the pipeline object
        """
        ...

    @abstractmethod
    def source(self, source: AxiomSource) -> 'FarePipeline':
        ...

    @abstractmethod
    def links(self, links: list[LinkDiagram | str]) -> 'FarePipeline':
        ...

    @abstractmethod
    def jobs(self, jobs: int, across_links: bool = False) -> 'FarePipeline':
        ...

    @abstractmethod
    def validate(self, validate: bool) -> 'FarePipeline':
        ...

    @abstractmethod
    def logger(self, logger: Callable[[str], None] | None) -> 'FarePipeline':
        ...

    @abstractmethod
    def compute(self) -> list[LinkInvariant]:
        ...
