from dataclasses import dataclass, field
from typing import Iterator

from farekit.schemas.exceptions import MalformedTableError
from farekit.schemas.serializable import StrSerializable

Table = tuple[tuple[int, ...], ...]


def _as_table(rows, name: str) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(table)
    if n == 0:
        raise MalformedTableError(f'The {name} table is empty')
    for x, row in enumerate(table, start=1):
        if len(row) != n:
            raise MalformedTableError(f'Row {x} of the {name} table has {len(row)} entries, expected {n}')
        for y, value in enumerate(row, start=1):
            if not 1 <= value <= n:
                raise MalformedTableError(f'Entry ({x},{y}) of the {name} table is {value}, expected 1..{n}')
    return table


@dataclass(frozen=True)
class FiniteBiquandle(StrSerializable['FiniteBiquandle']):
    """
    Finite set {1..n} with the under operation x ▷ y and the over operation x ▷̄ y,
    stored as 1-indexed operation tables: under_table[x-1][y-1] = x ▷ y.
    The axioms are not checked here, see `farekit.algebra.verify`.
    """
    under_table: Table
    over_table: Table
    name: str = field(default='', compare=False)

    serializer_extension = 'bq'

    def __post_init__(self):
        under = _as_table(self.under_table, 'under')
        over = _as_table(self.over_table, 'over')
        if len(under) != len(over):
            raise MalformedTableError(f'Tables have different sizes: {len(under)} and {len(over)}')
        object.__setattr__(self, 'under_table', under)
        object.__setattr__(self, 'over_table', over)

    @property
    def size(self) -> int:
        return len(self.under_table)

    @property
    def elements(self) -> range:
        return range(1, self.size + 1)

    def under(self, x: int, y: int) -> int:
        return self.under_table[x - 1][y - 1]

    def over(self, x: int, y: int) -> int:
        return self.over_table[x - 1][y - 1]

    def switch(self, x: int, y: int) -> tuple[int, int]:
        """
        The map S(x, y) = (y ▷̄ x, x ▷ y)
        """
        return self.over(y, x), self.under(x, y)

    def pairs(self) -> Iterator[tuple[int, int]]:
        return ((x, y) for x in self.elements for y in self.elements)

    def _serialize(self) -> str:
        lines = [str(self.size)]
        lines += [' '.join(map(str, row)) for row in self.under_table]
        lines.append('')
        lines += [' '.join(map(str, row)) for row in self.over_table]
        return '\n'.join(lines) + '\n'

    @classmethod
    def _deserialize(cls, str_representation: str) -> 'FiniteBiquandle':
        lines = [line.split('#', 1)[0].strip() for line in str_representation.splitlines()]
        lines = [line for line in lines if line]
        if not lines:
            raise MalformedTableError('Empty biquandle file')
        try:
            n = int(lines[0])
            rows = [[int(v) for v in line.split()] for line in lines[1:]]
        except ValueError as e:
            raise MalformedTableError(f'Non-integer entry in biquandle file: {e}')
        if n < 1 or len(rows) != 2 * n:
            raise MalformedTableError(f'Expected 2*{n} table rows after the size line, got {len(rows)}')
        return cls(tuple(map(tuple, rows[:n])), tuple(map(tuple, rows[n:])))


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple[int, ...]

    def __str__(self):
        return f'axiom ({self.axiom}) fails at {self.witness}'


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[AxiomViolation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def failed_axioms(self) -> set[str]:
        return {violation.axiom for violation in self.violations}


@dataclass(frozen=True)
class InverseMaps:
    """
    Inverse tables: inv_beta[y-1][x-1] is the z with z ▷ y = x, inv_alpha[y-1][x-1] is the z with z ▷̄ y = x,
    inv_switch maps a pair p to the pair q with S(q) = p.
    The coloring search only reads inv_beta and inv_alpha; inv_switch is exported for callers that undo S.
    """
    inv_beta: Table
    inv_alpha: Table
    inv_switch: dict[tuple[int, int], tuple[int, int]]

    def beta_inverse(self, y: int, x: int) -> int:
        return self.inv_beta[y - 1][x - 1]

    def alpha_inverse(self, y: int, x: int) -> int:
        return self.inv_alpha[y - 1][x - 1]
