import re
from dataclasses import dataclass
from functools import total_ordering
from itertools import product
from math import prod
from typing import Iterator

from farekit.schemas.exceptions import GroupSpecError

_GROUP_SPEC = re.compile(r'^\s*Z?(\d+)((?:\s*[x⊕+]\s*Z?\d+)*)\s*$')


@dataclass(frozen=True)
class CoeffGroup:
    """
    Finite abelian group Z_m1 ⊕ ... ⊕ Z_mk given by its cyclic moduli.
    The empty moduli sequence is the trivial group.
    """
    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'moduli', tuple(int(m) for m in self.moduli))
        for m in self.moduli:
            if m < 2:
                raise GroupSpecError(f'Every modulus should be at least 2, got {m} in {self.moduli}')

    @staticmethod
    def parse(spec: str) -> 'CoeffGroup':
        """
        Parses group specs like `5`, `2x2`, `Z2xZ2`

        :param spec: text of the form m1[xm2...]
        :return: the parsed group
        """
        if _GROUP_SPEC.match(spec) is None:
            raise GroupSpecError(f'Group spec should look like m1[xm2...], got {spec!r}')
        moduli = tuple(int(m) for m in re.findall(r'\d+', spec))
        return CoeffGroup(moduli)

    @staticmethod
    def cyclic(m: int) -> 'CoeffGroup':
        return CoeffGroup((m,))

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def is_cyclic(self) -> bool:
        return len(self.moduli) <= 1

    def zero(self) -> 'GroupElement':
        return GroupElement(self, (0,) * len(self.moduli))

    def element(self, *residues: int) -> 'GroupElement':
        return GroupElement(self, tuple(r % m for r, m in zip(residues, self.moduli, strict=True)))

    def elements(self) -> Iterator['GroupElement']:
        for residues in product(*(range(m) for m in self.moduli)):
            yield GroupElement(self, residues)

    def __str__(self):
        return 'x'.join(map(str, self.moduli)) if self.moduli else '1'


@total_ordering
@dataclass(frozen=True)
class GroupElement:
    group: CoeffGroup
    residues: tuple[int, ...]

    def __post_init__(self):
        residues = tuple(int(r) for r in self.residues)
        assert len(residues) == len(self.group.moduli), \
            f'Element {residues} does not fit the group {self.group}'
        object.__setattr__(self, 'residues', tuple(r % m for r, m in zip(residues, self.group.moduli)))

    def __add__(self, other: 'GroupElement') -> 'GroupElement':
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.residues, other.residues)))

    def __neg__(self) -> 'GroupElement':
        return GroupElement(self.group, tuple(-a for a in self.residues))

    def __sub__(self, other: 'GroupElement') -> 'GroupElement':
        return self + (-other)

    def __mul__(self, k: int) -> 'GroupElement':
        return GroupElement(self.group, tuple(k * a for a in self.residues))

    __rmul__ = __mul__

    def __lt__(self, other: 'GroupElement') -> bool:
        return self.residues < other.residues

    def is_zero(self) -> bool:
        return not any(self.residues)

    def __str__(self):
        if self.group.is_cyclic:
            return str(self.residues[0]) if self.residues else '0'
        return '(' + ','.join(map(str, self.residues)) + ')'
