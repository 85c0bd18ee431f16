import re
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterable, Sequence

from sortedcontainers import SortedDict

from farekit.schemas.exceptions import FareParseError, GroupSpecError, UnsupportedFareError
from farekit.schemas.group import CoeffGroup, GroupElement
from farekit.schemas.serializable import StrSerializable


class FareKind(Enum):
    PLAIN = 'plain'
    COMPLETE = 'complete'
    THROUGH = 'through'
    CROOKED = 'crooked'


class AxiomSource(Enum):
    """
    MOVES derives the fare conditions from colored Reidemeister moves,
    PRINTED uses the conditions (i)-(iii) in their transcribed form.
    """
    MOVES = 'moves'
    PRINTED = 'printed'


class PolynomialForm(Enum):
    ADDITIVE = 'additive'
    MULTIPLICATIVE = 'multiplicative'


def check_order_kind(order: int, kind: FareKind) -> None:
    if order == 1 and kind is FareKind.PLAIN:
        return
    if order == 2 and kind in (FareKind.COMPLETE, FareKind.THROUGH, FareKind.CROOKED):
        return
    raise UnsupportedFareError(f'Fares of order {order} and kind {kind.value} are not supported')


_HEADER = re.compile(r'^fare\s+order=(\d)\s+kind=(\w+)\s+group=(\S+)\s+n=(\d+)\s*$')
_VALUE_LINE = re.compile(r'^((?:\d+\s+)*\d+)\s*->\s*\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)?\s*$')


@dataclass(frozen=True)
class FareTable(StrSerializable['FareTable']):
    """
    Map X^order -> A stored row-major: values[index(x_1, ..., x_order)]
    """
    order: int
    kind: FareKind
    group: CoeffGroup
    size: int
    values: tuple[GroupElement, ...]
    name: str = field(default='', compare=False)

    serializer_extension = 'fare'

    def __post_init__(self):
        check_order_kind(self.order, self.kind)
        assert len(self.values) == self.size ** self.order, \
            f'Fare of order {self.order} on {self.size} elements needs {self.size ** self.order} values, ' \
            f'got {len(self.values)}'

    def index(self, *xs: int) -> int:
        result = 0
        for x in xs:
            result = result * self.size + (x - 1)
        return result

    def __call__(self, *xs: int) -> GroupElement:
        return self.values[self.index(*xs)]

    def domain(self) -> Iterable[tuple[int, ...]]:
        return product(range(1, self.size + 1), repeat=self.order)

    def component(self, i: int) -> tuple[int, ...]:
        """
        Residues of the i-th cyclic component, in unknown order
        """
        return tuple(value.residues[i] for value in self.values)

    def __add__(self, other: 'FareTable') -> 'FareTable':
        return FareTable(self.order, FareKind.COMPLETE if self.order == 2 else self.kind, self.group, self.size,
                         tuple(a + b for a, b in zip(self.values, other.values)))

    def with_kind(self, kind: FareKind) -> 'FareTable':
        return FareTable(self.order, kind, self.group, self.size, self.values, self.name)

    @staticmethod
    def from_values(values: Sequence[int | Sequence[int]], group: CoeffGroup, order: int, kind: FareKind,
                    name: str = '') -> 'FareTable':
        size = round(len(values) ** (1 / order))
        elements = tuple(group.element(*(v if isinstance(v, Sequence) else (v,))) for v in values)
        return FareTable(order, kind, group, size, elements, name)

    @staticmethod
    def from_matrix(rows: Sequence[Sequence[int | Sequence[int]]], group: CoeffGroup,
                    kind: FareKind = FareKind.COMPLETE, name: str = '') -> 'FareTable':
        """
        Builds an order-2 fare from a table whose row j column k entry is φ(j, k)
        """
        return FareTable.from_values([v for row in rows for v in row], group, 2, kind, name)

    @staticmethod
    def zero(group: CoeffGroup, size: int, order: int, kind: FareKind) -> 'FareTable':
        return FareTable(order, kind, group, size, (group.zero(),) * size ** order)

    def _serialize(self) -> str:
        lines = [f'fare order={self.order} kind={self.kind.value} group={self.group} n={self.size}']
        for xs in self.domain():
            value = self(*xs)
            lines.append(f'{" ".join(map(str, xs))} -> ({",".join(map(str, value.residues))})')
        return '\n'.join(lines) + '\n'

    @classmethod
    def _deserialize(cls, str_representation: str) -> 'FareTable':
        lines = [line.split('#', 1)[0].strip() for line in str_representation.splitlines()]
        lines = [line for line in lines if line]
        if not lines or (header := _HEADER.match(lines[0])) is None:
            raise FareParseError('Fare file should start with '
                                 '"fare order=<1|2> kind=<plain|complete|through|crooked> group=<m1[xm2...]> n=<size>"')
        order, kind_name, group_spec, size = header.groups()
        order, size = int(order), int(size)
        try:
            kind = FareKind(kind_name)
            group = CoeffGroup.parse(group_spec)
            check_order_kind(order, kind)
        except (ValueError, GroupSpecError, UnsupportedFareError) as e:
            raise FareParseError(f'Bad fare header: {e}')

        entries: dict[tuple[int, ...], GroupElement] = {}
        for line in lines[1:]:
            match = _VALUE_LINE.match(line)
            if match is None:
                raise FareParseError(f'Cannot parse fare line {line!r}')
            xs = tuple(int(v) for v in match.group(1).split())
            residues = tuple(int(v) for v in match.group(2).split(','))
            if len(xs) != order or any(not 1 <= x <= size for x in xs):
                raise FareParseError(f'Domain tuple {xs} does not fit order {order} and n={size}')
            if len(residues) != group.rank:
                raise FareParseError(f'Value {residues} does not fit the group {group}')
            entries[xs] = group.element(*residues)

        missing = [xs for xs in product(range(1, size + 1), repeat=order) if xs not in entries]
        if missing:
            raise FareParseError(f'Fare table misses the tuples {missing}')
        return cls(order, kind, group, size, tuple(entries[xs] for xs in product(range(1, size + 1), repeat=order)))


class FareMultiset:
    """
    Multiset of total fares over a homset, kept in canonical order (ascending residues)
    """

    def __init__(self, values: Iterable[GroupElement] = ()):
        self._counts: SortedDict = SortedDict()
        for value in values:
            self._counts[value] = self._counts.get(value, 0) + 1

    @staticmethod
    def from_counts(counts: dict[GroupElement, int]) -> 'FareMultiset':
        multiset = FareMultiset()
        for value, count in counts.items():
            if count:
                multiset._counts[value] = count
        return multiset

    @property
    def cardinality(self) -> int:
        return sum(self._counts.values())

    def __len__(self):
        return self.cardinality

    def canonical(self) -> list[tuple[GroupElement, int]]:
        return list(self._counts.items())

    def count(self, value: GroupElement) -> int:
        return self._counts.get(value, 0)

    def __eq__(self, other):
        return isinstance(other, FareMultiset) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(tuple(self.canonical()))

    def __str__(self):
        return '{' + ', '.join(f'{count}×{value}' for value, count in self._counts.items()) + '}'

    def __repr__(self):
        return f'FareMultiset({self})'

    def to_json(self) -> list[dict]:
        return [{'value': list(value.residues), 'count': count} for value, count in self._counts.items()]


@dataclass(frozen=True)
class FarePolynomial:
    """
    Root (or exponent) -> multiplicity map, never expanded
    """
    form: PolynomialForm
    terms: tuple[tuple[GroupElement, int], ...]

    @staticmethod
    def of(multiset: FareMultiset, form: PolynomialForm) -> 'FarePolynomial':
        return FarePolynomial(form, tuple(multiset.canonical()))

    @property
    def degree(self) -> int:
        return sum(count for _, count in self.terms)
