"""
Exact linear algebra over Z_m (m not necessarily prime) and over direct sums of cyclic groups.

Kernels are parametrised through the Howell normal form, which is unique for a given row span
even when m has zero divisors, so kernel elements can be enumerated without duplicates.
"""
from dataclasses import dataclass
from itertools import product
from math import gcd, prod
from typing import Iterator, Sequence

import numpy as np

from farekit.schemas.group import CoeffGroup, GroupElement

Residues = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ZmodMatrix:
    """
    Integer matrix with entries reduced modulo `modulus`
    """
    entries: np.ndarray
    modulus: int

    def __post_init__(self):
        assert self.modulus >= 2, f'Modulus should be at least 2, got {self.modulus}'
        entries = np.asarray(self.entries, dtype=np.int64)
        if entries.ndim == 1:
            entries = entries.reshape(1, -1) if entries.size else entries.reshape(0, 0)
        object.__setattr__(self, 'entries', entries % self.modulus)

    @staticmethod
    def zeros(rows: int, cols: int, modulus: int) -> 'ZmodMatrix':
        return ZmodMatrix(np.zeros((rows, cols), dtype=np.int64), modulus)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other):
        return isinstance(other, ZmodMatrix) \
            and self.modulus == other.modulus \
            and self.entries.shape == other.entries.shape \
            and bool(np.all(self.entries == other.entries))

    def __repr__(self):
        return f'ZmodMatrix(modulus={self.modulus}, entries={self.entries.tolist()})'


@dataclass(frozen=True)
class KernelDescription:
    """
    Duplicate-free parametrisation of a kernel: {Σ c_i g_i : 0 <= c_i < orders[i]}
    """
    generators: tuple[Residues, ...]
    orders: tuple[int, ...]
    modulus: int
    cols: int

    @property
    def size(self) -> int:
        return prod(self.orders)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """
    :return: (g, s, t) with g = gcd(a, b) = s * a + t * b
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _normalising_unit(a: int, m: int) -> int:
    """
    Finds a unit u of Z_m such that u * a = gcd(a, m) (mod m)
    """
    g = gcd(a, m)
    m_reduced = m // g
    u = pow(a // g, -1, m_reduced) if m_reduced > 1 else 1
    while gcd(u, m) != 1:
        u += m_reduced
    return u % m


def howell_form(matrix: ZmodMatrix) -> ZmodMatrix:
    """
    Computes the Howell normal form of the matrix: an echelon form whose pivots divide the modulus,
    whose entries above every pivot are reduced into [0, pivot), and whose rows with zeros in the
    first j columns span every element of the row span having that property.
    Zero rows are dropped.

    :param matrix: the matrix over Z_m
    :return: the canonical matrix with the same row span
    """
    m = matrix.modulus
    work = [row.copy() for row in matrix.entries]
    pivot_row = 0
    for j in range(matrix.cols):
        if pivot_row >= len(work):
            break
        for i in range(pivot_row + 1, len(work)):
            b = int(work[i][j])
            if b == 0:
                continue
            a = int(work[pivot_row][j])
            g, s, t = _xgcd(a, b)
            u, v = -(b // g), a // g
            upper = (s * work[pivot_row] + t * work[i]) % m
            lower = (u * work[pivot_row] + v * work[i]) % m
            work[pivot_row], work[i] = upper, lower

        a = int(work[pivot_row][j])
        if a == 0:
            continue
        work[pivot_row] = _normalising_unit(a, m) * work[pivot_row] % m
        pivot = int(work[pivot_row][j])
        for i in range(pivot_row):
            q = int(work[i][j]) // pivot
            if q:
                work[i] = (work[i] - q * work[pivot_row]) % m
        # the annihilator row keeps the Howell property for the following columns
        annihilator = (m // pivot) * work[pivot_row] % m
        if annihilator.any():
            work.append(annihilator)
        pivot_row += 1

    if pivot_row == 0:
        return ZmodMatrix.zeros(0, matrix.cols, m)
    return ZmodMatrix(np.array(work[:pivot_row], dtype=np.int64), m)


def _leading_index(row: np.ndarray) -> int:
    nonzero = np.flatnonzero(row)
    return int(nonzero[0]) if nonzero.size else len(row)


def kernel(matrix: ZmodMatrix) -> KernelDescription:
    """
    Solves M x = 0 over Z_m.
    The Howell form of [M^T | I] contains the kernel as the rows with vanishing left block.

    :param matrix: the system matrix, one row per equation
    :return: kernel parametrisation enumerating every solution exactly once
    """
    m = matrix.modulus
    equations, unknowns = matrix.entries.shape
    augmented = np.hstack([matrix.entries.T, np.eye(unknowns, dtype=np.int64)])
    howell = howell_form(ZmodMatrix(augmented, m))

    generators = []
    orders = []
    for row in howell.entries:
        if row[:equations].any():
            continue
        tail = row[equations:]
        pivot = int(tail[_leading_index(tail)])
        generators.append(tuple(int(v) for v in tail))
        orders.append(m // pivot)
    return KernelDescription(tuple(generators), tuple(orders), m, unknowns)


def enumerate_kernel(description: KernelDescription) -> Iterator[Residues]:
    """
    Streams every kernel element exactly once, in mixed-radix order of the generator coefficients
    """
    if not description.generators:
        yield (0,) * description.cols
        return
    generators = np.array(description.generators, dtype=np.int64)
    for coefficients in product(*(range(order) for order in description.orders)):
        vector = np.asarray(coefficients, dtype=np.int64) @ generators % description.modulus
        yield tuple(int(v) for v in vector)


def kernels_over_group(matrix: np.ndarray, group: CoeffGroup) -> list[KernelDescription]:
    """
    Integer systems decouple over the cyclic components of the group, so each Z_mi is solved apart
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    return [kernel(ZmodMatrix(matrix, m)) for m in group.moduli]


def _component_product(kernels: Sequence[KernelDescription]) -> Iterator[tuple[Residues, ...]]:
    if not kernels:
        yield ()
        return
    for head in enumerate_kernel(kernels[0]):
        for tail in _component_product(kernels[1:]):
            yield (head,) + tail


def solve_over_group(matrix: np.ndarray, group: CoeffGroup) -> Iterator[tuple[GroupElement, ...]]:
    """
    Streams every x in A^unknowns with M x = 0, where A is the direct sum of cyclic groups.

    :param matrix: integer matrix (rows are equations), entries may be negative
    :param group: coefficient group
    :return: stream of solutions, one GroupElement per unknown
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    unknowns = matrix.shape[1]
    for components in _component_product(kernels_over_group(matrix, group)):
        yield tuple(GroupElement(group, tuple(component[j] for component in components))
                    for j in range(unknowns))


def subgroup_sum_witness(target: Sequence[int], first: KernelDescription, second: KernelDescription) \
        -> tuple[Residues, Residues] | None:
    """
    Decides whether target = a + b with a in the first kernel and b in the second one.
    Rows (g | g) for the first generators and (h | 0) for the second ones are brought to Howell form;
    reducing (target | 0) over the left block leaves (0 | -a).

    :return: the pair (a, b) or None if the target is outside the sum
    """
    m = first.modulus
    n = first.cols
    assert second.modulus == m and second.cols == n and len(target) == n, \
        'Kernels and target should share modulus and dimension'
    target = np.asarray(target, dtype=np.int64) % m
    zeros = np.zeros(n, dtype=np.int64)

    rows = [np.concatenate([g, g]) for g in np.asarray(first.generators, dtype=np.int64).reshape(-1, n)] \
        + [np.concatenate([h, zeros]) for h in np.asarray(second.generators, dtype=np.int64).reshape(-1, n)]
    if not rows:
        return (tuple(zeros.tolist()), tuple(zeros.tolist())) if not target.any() else None

    howell = howell_form(ZmodMatrix(np.array(rows), m))
    vector = np.concatenate([target, zeros])
    for row in howell.entries:
        j = _leading_index(row)
        if j >= n:
            break
        pivot = int(row[j])
        if int(vector[j]) % pivot:
            return None
        vector = (vector - (int(vector[j]) // pivot) * row) % m
    if vector[:n].any():
        return None

    a = -vector[n:] % m
    b = (target - a) % m
    return tuple(int(v) for v in a), tuple(int(v) for v in b)


def in_subgroup_sum(target: Sequence[int], first: KernelDescription, second: KernelDescription) -> bool:
    return subgroup_sum_witness(target, first, second) is not None
