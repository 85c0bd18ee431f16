"""
Standard biquandle structures: Alexander biquandles on Z_m, conjugation quandles and the Wada
biquandle of a finite group. Groups are given by 1-indexed multiplication tables.
"""
from itertools import permutations
from math import gcd

from farekit.schemas.biquandle import FiniteBiquandle, Table
from farekit.schemas.exceptions import InvalidGroupTableError, NonUnitParameterError


class GroupTable:
    """
    Finite group {1..n} with product table[a-1][b-1] = a * b
    """

    def __init__(self, table):
        self.table: Table = tuple(tuple(int(v) for v in row) for row in table)
        self.order = len(self.table)
        validate_group_table(self.table)
        self.identity = next(e for e in range(1, self.order + 1)
                             if all(self.mul(e, a) == a for a in range(1, self.order + 1)))
        self._inverses = {a: next(b for b in range(1, self.order + 1) if self.mul(a, b) == self.identity)
                          for a in range(1, self.order + 1)}

    def mul(self, a: int, b: int) -> int:
        return self.table[a - 1][b - 1]

    def inverse(self, a: int) -> int:
        return self._inverses[a]

    def power(self, a: int, k: int) -> int:
        base = a if k >= 0 else self.inverse(a)
        result = self.identity
        for _ in range(abs(k)):
            result = self.mul(result, base)
        return result


def validate_group_table(table: Table) -> None:
    n = len(table)
    elements = range(1, n + 1)
    if n == 0 or any(len(row) != n for row in table):
        raise InvalidGroupTableError('Group table should be a non-empty square table')
    if any(not 1 <= v <= n for row in table for v in row):
        raise InvalidGroupTableError(f'Group table entries should lie in 1..{n}')

    def mul(a, b):
        return table[a - 1][b - 1]

    identities = [e for e in elements if all(mul(e, a) == a == mul(a, e) for a in elements)]
    if not identities:
        raise InvalidGroupTableError('Group table has no identity element')
    e = identities[0]
    for a in elements:
        if not any(mul(a, b) == e == mul(b, a) for b in elements):
            raise InvalidGroupTableError(f'Element {a} has no inverse')
    for a in elements:
        for b in elements:
            for c in elements:
                if mul(mul(a, b), c) != mul(a, mul(b, c)):
                    raise InvalidGroupTableError(f'Product is not associative at ({a}, {b}, {c})')


def cyclic_group_table(m: int) -> Table:
    return tuple(tuple((a + b) % m + 1 for b in range(m)) for a in range(m))


def symmetric_group_table(k: int) -> Table:
    """
    Table of the symmetric group S_k, permutations numbered in lexicographic order (identity first),
    product (p * q)(i) = p(q(i))
    """
    perms = sorted(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms, start=1)}
    return tuple(tuple(index[tuple(p[q[i]] for i in range(k))] for q in perms) for p in perms)


def alexander_biquandle(m: int, t: int, s: int) -> FiniteBiquandle:
    """
    Biquandle on Z_m with x ▷ y = tx + (s - t)y and x ▷̄ y = sx, where residue r is labelled r + 1.

    :param m: modulus
    :param t: unit of Z_m
    :param s: unit of Z_m
    :return: the biquandle
    """
    if gcd(t, m) != 1 or gcd(s, m) != 1:
        raise NonUnitParameterError(f'Both t={t} and s={s} should be units modulo {m}')
    under = tuple(tuple((t * x + (s - t) * y) % m + 1 for y in range(m)) for x in range(m))
    over = tuple(tuple((s * x) % m + 1 for _ in range(m)) for x in range(m))
    return FiniteBiquandle(under, over, name=f'Alexander(m={m}, t={t}, s={s})')


def conjugation_biquandle(table: Table, n: int = 1) -> FiniteBiquandle:
    """
    Quandle x ▷ y = y^{-n} x y^n, x ▷̄ y = x of a group
    """
    group = GroupTable(table)
    elements = range(1, group.order + 1)
    under = tuple(tuple(group.mul(group.mul(group.power(y, -n), x), group.power(y, n)) for y in elements)
                  for x in elements)
    over = tuple(tuple(x for _ in elements) for x in elements)
    return FiniteBiquandle(under, over, name=f'Conj(n={n})')


def wada_biquandle(table: Table) -> FiniteBiquandle:
    """
    x ▷ y = y^{-1} x y^{-1}, x ▷̄ y = x^{-1}
    """
    group = GroupTable(table)
    elements = range(1, group.order + 1)
    under = tuple(tuple(group.mul(group.mul(group.inverse(y), x), group.inverse(y)) for y in elements)
                  for x in elements)
    over = tuple(tuple(group.inverse(x) for _ in elements) for x in elements)
    return FiniteBiquandle(under, over, name='Wada')
