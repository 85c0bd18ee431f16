from itertools import product

import numpy as np
import pytest

from farekit.linalg.zmod import ZmodMatrix, enumerate_kernel, howell_form, in_subgroup_sum, kernel, \
    solve_over_group, subgroup_sum_witness
from farekit.schemas.group import CoeffGroup


def brute_force_kernel(matrix: np.ndarray, m: int) -> set[tuple[int, ...]]:
    return {x for x in product(range(m), repeat=matrix.shape[1])
            if not np.any(matrix @ np.array(x, dtype=np.int64) % m)}


@pytest.mark.parametrize('m', [2, 4, 5, 6, 12])
@pytest.mark.parametrize('seed', range(6))
def test_kernel_matches_brute_force(m, seed):
    rng = np.random.default_rng(seed)
    rows, cols = rng.integers(1, 5), rng.integers(1, 5)
    matrix = rng.integers(0, m, size=(rows, cols))

    description = kernel(ZmodMatrix(matrix, m))
    solutions = list(enumerate_kernel(description))

    assert len(solutions) == len(set(solutions)) == description.size
    assert set(solutions) == brute_force_kernel(matrix, m)


def test_howell_form_keeps_annihilator_rows():
    assert howell_form(ZmodMatrix(np.array([[2, 1]]), 4)) == ZmodMatrix(np.array([[2, 1], [0, 2]]), 4)
    assert howell_form(ZmodMatrix(np.array([[4]]), 6)) == ZmodMatrix(np.array([[2]]), 6)


def test_howell_form_is_canonical():
    # same row span, different generators
    first = ZmodMatrix(np.array([[1, 2, 3], [0, 2, 4]]), 6)
    second = ZmodMatrix(np.array([[1, 4, 7], [0, 4, 2], [1, 2, 3]]), 6)
    assert howell_form(first) == howell_form(second)


def test_zero_matrix():
    assert howell_form(ZmodMatrix.zeros(2, 3, 5)).rows == 0
    assert kernel(ZmodMatrix.zeros(0, 3, 5)).size == 125


def test_solve_over_product_group():
    group = CoeffGroup.parse('2x3')
    solutions = list(solve_over_group(np.array([[1, 1]]), group))

    # x + y = 0 in Z2 ⊕ Z3 leaves y = -x
    assert len(solutions) == group.order
    assert all((x + y).is_zero() for x, y in solutions)


def test_subgroup_sum_witness():
    # first kernel: vectors (0, t), second kernel: vectors (t, 0)
    first = kernel(ZmodMatrix(np.array([[1, 0]]), 5))
    second = kernel(ZmodMatrix(np.array([[0, 1]]), 5))

    a, b = subgroup_sum_witness((2, 3), first, second)

    assert a == (0, 3)
    assert b == (2, 0)


def test_subgroup_sum_rejects_outside_target():
    line = kernel(ZmodMatrix(np.array([[1, 0]]), 5))

    assert not in_subgroup_sum((1, 0), line, line)
    assert in_subgroup_sum((0, 4), line, line)


@pytest.mark.parametrize('seed', range(4))
def test_subgroup_sum_matches_brute_force(seed):
    rng = np.random.default_rng(100 + seed)
    m = 6
    first_matrix = rng.integers(0, m, size=(2, 3))
    second_matrix = rng.integers(0, m, size=(2, 3))
    first = kernel(ZmodMatrix(first_matrix, m))
    second = kernel(ZmodMatrix(second_matrix, m))

    sums = {tuple((np.array(a) + np.array(b)) % m)
            for a in enumerate_kernel(first) for b in enumerate_kernel(second)}
    for target in product(range(m), repeat=3):
        witness = subgroup_sum_witness(target, first, second)
        assert (witness is not None) == (tuple(target) in sums)
        if witness is not None:
            a, b = witness
            assert not np.any(first_matrix @ np.array(a) % m)
            assert not np.any(second_matrix @ np.array(b) % m)
            assert tuple((np.array(a) + np.array(b)) % m) == tuple(target)
