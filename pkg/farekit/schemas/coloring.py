from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterator

from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.diagram import LinkDiagram


@total_ordering
@dataclass(frozen=True)
class Coloring:
    """
    Assignment semiarc -> element of the biquandle, stored sorted by semiarc id
    """
    assignment: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, 'assignment', tuple(sorted(self.assignment)))

    @staticmethod
    def of(colors: dict[int, int]) -> 'Coloring':
        return Coloring(tuple(colors.items()))

    def __getitem__(self, semiarc: int) -> int:
        return self.as_dict()[semiarc]

    def as_dict(self) -> dict[int, int]:
        return dict(self.assignment)

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(color for _, color in self.assignment)

    def __lt__(self, other: 'Coloring') -> bool:
        return self.colors < other.colors

    def __str__(self):
        return ' '.join(f'{semiarc}:{color}' for semiarc, color in self.assignment)


@dataclass(frozen=True)
class Homset:
    diagram: LinkDiagram
    biquandle: FiniteBiquandle
    colorings: tuple[Coloring, ...] = field(default=())

    def __len__(self):
        return len(self.colorings)

    def __iter__(self) -> Iterator[Coloring]:
        return iter(self.colorings)
