from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from farekit.schemas.exceptions import DiagramParseError
from farekit.schemas.serializable import StrSerializable


class RouteKind(Enum):
    THROUGH = 'through'
    CROOKED = 'crooked'


@dataclass(frozen=True)
class Crossing:
    """
    Classical crossing with its four semiarc slots:
    incoming/outgoing underpass and incoming/outgoing overpass
    """
    sign: int
    u_in: int
    o_in: int
    u_out: int
    o_out: int

    def __post_init__(self):
        assert self.sign in (1, -1), f'Crossing sign should be +1 or -1, got {self.sign}'

    @property
    def in_slots(self) -> tuple[int, int]:
        return self.u_in, self.o_in

    @property
    def out_slots(self) -> tuple[int, int]:
        return self.u_out, self.o_out

    @property
    def slots(self) -> tuple[int, int, int, int]:
        return self.u_in, self.o_in, self.u_out, self.o_out

    @property
    def is_positive(self) -> bool:
        return self.sign > 0

    def __str__(self):
        return f'X {"+" if self.sign > 0 else "-"} {self.u_in} {self.o_in} {self.u_out} {self.o_out}'


@dataclass(frozen=True)
class Route:
    """
    Sequence of semiarcs, consecutive ones meeting head-to-tail at a crossing.
    `kinds` classifies every internal crossing step as through or crooked.
    """
    edges: tuple[int, ...]
    internal_negatives: int = 0
    kinds: tuple[RouteKind, ...] = ()

    @property
    def sign(self) -> int:
        return -1 if self.internal_negatives % 2 else 1

    @property
    def order(self) -> int:
        return len(self.edges)


def check_semiarc_structure(crossings: tuple[Crossing, ...], free_loops: tuple[int, ...]) -> None:
    """
    Every semiarc on a crossing-bearing component appears exactly once as an incoming
    and exactly once as an outgoing slot; free loops appear in no crossing.
    """
    incoming: dict[int, int] = {}
    outgoing: dict[int, int] = {}
    for index, crossing in enumerate(crossings):
        for semiarc in crossing.in_slots:
            if semiarc in incoming:
                raise DiagramParseError(f'Semiarc {semiarc} is used twice as an incoming slot '
                                        f'(crossings {incoming[semiarc] + 1} and {index + 1})')
            incoming[semiarc] = index
        for semiarc in crossing.out_slots:
            if semiarc in outgoing:
                raise DiagramParseError(f'Semiarc {semiarc} is used twice as an outgoing slot '
                                        f'(crossings {outgoing[semiarc] + 1} and {index + 1})')
            outgoing[semiarc] = index

    dangling = sorted(set(incoming) ^ set(outgoing))
    if dangling:
        raise DiagramParseError(f'Dangling semiarcs {dangling}: each should both enter and leave a crossing')
    loops = set(free_loops)
    if len(loops) != len(free_loops) or loops & set(incoming):
        raise DiagramParseError(f'Crossing-free loops {sorted(free_loops)} reuse semiarc ids')


@dataclass(frozen=True)
class LinkDiagram(StrSerializable['LinkDiagram']):
    """
    Oriented classical or virtual link diagram.
    Virtual crossings are not recorded: semiarcs pass through them undivided.
    """
    crossings: tuple[Crossing, ...]
    free_loops: tuple[int, ...] = ()
    name: str = field(default='', compare=False)

    serializer_extension = 'dgm'

    def __post_init__(self):
        object.__setattr__(self, 'crossings', tuple(self.crossings))
        object.__setattr__(self, 'free_loops', tuple(self.free_loops))
        check_semiarc_structure(self.crossings, self.free_loops)

    @cached_property
    def semiarcs(self) -> tuple[int, ...]:
        return tuple(sorted({s for c in self.crossings for s in c.in_slots} | set(self.free_loops)))

    @cached_property
    def successor(self) -> dict[int, int]:
        """
        Next semiarc along the orientation
        """
        following = {loop: loop for loop in self.free_loops}
        for crossing in self.crossings:
            following[crossing.u_in] = crossing.u_out
            following[crossing.o_in] = crossing.o_out
        return following

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """
        Oriented cycles of semiarcs, ordered by their smallest semiarc
        """
        seen = set()
        cycles = []
        for start in self.semiarcs:
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self.successor[start]
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self.successor[current]
            cycles.append(tuple(cycle))
        return tuple(cycles)

    @cached_property
    def component_map(self) -> dict[int, int]:
        return {s: index for index, cycle in enumerate(self.components) for s in cycle}

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def semiarc_count(self) -> int:
        return len(self.semiarcs)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def _serialize(self) -> str:
        lines = [f'# {self.name}'] if self.name else []
        lines += [str(c) for c in self.crossings]
        lines += [f'O {loop}' for loop in self.free_loops]
        return '\n'.join(lines) + '\n'

    @classmethod
    def _deserialize(cls, str_representation: str) -> 'LinkDiagram':
        from farekit.diagram.parser import parse_diagram
        return parse_diagram(str_representation)
