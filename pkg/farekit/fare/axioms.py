"""
Integer linear systems whose solutions over A are the fares of a biquandle.

Columns index the fare values φ(x) (order 1) or φ(x, y) (order 2, row-major).
Two sources of equations are supported, see `AxiomSource`.
"""
from collections import defaultdict
from typing import Callable, Iterator

import numpy as np

from farekit.diagram.moves import ReidemeisterMove, Tangle, reidemeister_moves
from farekit.diagram.routes import crossing_steps
from farekit.homset.search import solve_colorings
from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.fare import AxiomSource, FareKind, check_order_kind

# sparse row: column -> integer coefficient
Row = dict[int, int]
Term = tuple[int, tuple[int, ...]]


def _column(size: int, xs: tuple[int, ...]) -> int:
    result = 0
    for x in xs:
        result = result * size + (x - 1)
    return result


def _contributions(tangle: Tangle, colors: dict[int, int], order: int, kind: FareKind) -> list[Term]:
    if order == 1:
        return [(1, (colors[s],)) for s in tangle.semiarcs]
    terms = []
    for crossing in tangle.crossings:
        for route in crossing_steps(crossing, kind):
            terms.append((route.sign, tuple(colors[s] for s in route.edges)))
    return terms


def _boundary(tangle: Tangle, colors: dict[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple((colors[i], colors[o]) for i, o in tangle.strands)


def move_rows(biquandle: FiniteBiquandle, order: int, kind: FareKind,
              moves: list[ReidemeisterMove] | None = None,
              logger: Callable[[str], None] | None = None) -> Iterator[tuple[str, tuple[int, ...], Row]]:
    """
    Invariance conditions read off colored move tangles.
    Every coloring of the tangle before the move is paired with the coloring after the move
    that has the same colors on the boundary; the row is the total fare before minus after.

    :return: stream of (condition, incoming boundary colors, row)
    """
    n = biquandle.size
    for move in moves if moves is not None else reidemeister_moves():
        after: dict[tuple, list[dict[int, int]]] = defaultdict(list)
        for colors in solve_colorings(move.after.crossings, move.after.semiarcs, biquandle):
            after[_boundary(move.after, colors)].append(colors)

        for colors in solve_colorings(move.before.crossings, move.before.semiarcs, biquandle):
            signature = _boundary(move.before, colors)
            matches = after.get(signature, [])
            if len(matches) != 1:
                if logger is not None:
                    logger(f'Move {move.name}: boundary colors {signature} have {len(matches)} colorings '
                           f'after the move, skipped')
                continue
            row: Row = defaultdict(int)
            for coefficient, xs in _contributions(move.before, colors, order, kind):
                row[_column(n, xs)] += coefficient
            for coefficient, xs in _contributions(move.after, matches[0], order, kind):
                row[_column(n, xs)] -= coefficient
            yield move.condition, tuple(c for c, _ in signature), row


def printed_rows(biquandle: FiniteBiquandle, order: int, kind: FareKind) \
        -> Iterator[tuple[str, tuple[int, ...], Row]]:
    """
    Conditions (i)-(iii) as written in the fare definitions, over all x, y, z
    """
    n = biquandle.size
    terms = _PRINTED[(order, kind)]
    for condition, arity in (('i', 1), ('ii', 2), ('iii', 3)):
        for xs in np.ndindex(*(n,) * arity):
            witness = tuple(int(x) + 1 for x in xs)
            row: Row = defaultdict(int)
            for coefficient, values in terms[condition](biquandle, *witness):
                row[_column(n, values)] += coefficient
            yield condition, witness, row


def axiom_system(biquandle: FiniteBiquandle, order: int, kind: FareKind,
                 source: AxiomSource = AxiomSource.MOVES,
                 logger: Callable[[str], None] | None = None) -> np.ndarray:
    """
    Builds the integer system whose kernel over A is the set of fares.

    :param biquandle: the biquandle
    :param order: 1 or 2
    :param kind: plain for order 1; complete, through or crooked for order 2
    :param source: where the conditions come from
    :param logger: receives notes on skipped move colorings
    :return: integer matrix without duplicate or zero rows, n^order columns
    """
    check_order_kind(order, kind)
    cols = biquandle.size ** order
    match source:
        case AxiomSource.MOVES:
            rows = move_rows(biquandle, order, kind, logger=logger)
        case AxiomSource.PRINTED:
            rows = printed_rows(biquandle, order, kind)
        case _:
            raise ValueError(f'Unknown axiom source {source}')

    dense = []
    for _, _, row in rows:
        vector = np.zeros(cols, dtype=np.int64)
        for column, coefficient in row.items():
            vector[column] += coefficient
        if vector.any():
            dense.append(vector)
    if not dense:
        return np.zeros((0, cols), dtype=np.int64)
    return np.unique(np.array(dense), axis=0)


# conditions as transcribed, each one a list of (sign, argument tuple)

def _plain_iii(b: FiniteBiquandle, x: int, y: int, z: int) -> list[Term]:
    u, o = b.under, b.over
    return [(1, (y,)), (1, (u(x, y),)), (1, (o(x, y),)),
            (-1, (o(z, x),)), (-1, (u(x, z),)), (-1, (u(o(y, x), o(z, x)),))]


def _complete_iii(b: FiniteBiquandle, x: int, y: int, z: int) -> list[Term]:
    u, o = b.under, b.over
    xy, yx, yz, zy, xz, zx = u(x, y), o(y, x), u(y, z), o(z, y), u(x, z), o(z, x)
    left = [(x, y), (x, xy), (yx, y), (yx, xy),
            (y, z), (y, yz), (zy, z), (zy, yz),
            (xy, zy), (xy, u(xy, zy)), (o(zy, xy), zy), (o(zy, xy), u(xy, zy))]
    right = [(x, z), (x, xz), (zx, z), (zx, xz),
             (yx, zx), (yx, u(yx, zx)), (o(zx, yx), zx), (o(zx, yx), u(yx, zx)),
             (xz, yz), (xz, u(xz, yz)), (o(yz, xz), yz), (o(yz, xz), u(xz, yz))]
    return [(1, pair) for pair in left] + [(-1, pair) for pair in right]


def _through_iii(b: FiniteBiquandle, x: int, y: int, z: int) -> list[Term]:
    u, o = b.under, b.over
    xy, yx, yz, zy, xz, zx = u(x, y), o(y, x), u(y, z), o(z, y), u(x, z), o(z, x)
    left = [(x, xy), (yx, y), (y, yz), (zy, z), (xy, u(xy, zy)), (o(zy, xy), zy)]
    right = [(x, xz), (zx, z), (yx, u(yx, zx)), (o(zx, yx), zx), (xz, u(xz, yz)), (o(yz, xz), yz)]
    return [(1, pair) for pair in left] + [(-1, pair) for pair in right]


def _crooked_iii(b: FiniteBiquandle, x: int, y: int, z: int) -> list[Term]:
    u, o = b.under, b.over
    xy, yx, yz, zy, xz, zx = u(x, y), o(y, x), u(y, z), o(z, y), u(x, z), o(z, x)
    left = [(x, y), (yx, xy), (y, z), (zy, yz), (xy, zy), (o(zy, xy), u(xy, zy))]
    right = [(x, z), (zx, xz), (yx, zx), (o(zx, yx), u(yx, zx)), (xz, yz), (o(yz, xz), u(xz, yz))]
    return [(1, pair) for pair in left] + [(-1, pair) for pair in right]


def _kink_pairs(b: FiniteBiquandle, x: int) -> list[Term]:
    w = b.under(x, x)
    return [(1, (x, w)), (1, (w, x))]


_PRINTED: dict[tuple[int, FareKind], dict[str, Callable[..., list[Term]]]] = {
    (1, FareKind.PLAIN): {
        'i': lambda b, x: [(1, (b.under(x, x),)), (1, (x,))],
        'ii': lambda b, x, y: [(1, (x,)), (1, (y,)), (1, (b.under(x, y),)), (1, (b.over(y, x),))],
        'iii': _plain_iii,
    },
    (2, FareKind.COMPLETE): {
        'i': lambda b, x: [(1, (x, x)), (1, (b.under(x, x), b.under(x, x)))] + _kink_pairs(b, x),
        'ii': lambda b, x, y: [(1, (x, y)), (1, (x, b.under(x, y))), (1, (b.over(y, x), y)),
                               (1, (b.over(y, x), b.under(x, y))),
                               (-1, (y, x)), (-1, (b.under(x, y), x)), (-1, (y, b.over(y, x))),
                               (-1, (b.under(x, y), b.over(y, x)))],
        'iii': _complete_iii,
    },
    (2, FareKind.THROUGH): {
        'i': _kink_pairs,
        'ii': lambda b, x, y: [(1, (x, b.under(x, y))), (1, (b.over(y, x), y)),
                               (-1, (b.under(x, y), x)), (-1, (y, b.over(y, x)))],
        'iii': _through_iii,
    },
    (2, FareKind.CROOKED): {
        'i': _kink_pairs,
        'ii': lambda b, x, y: [(1, (x, y)), (1, (b.over(y, x), b.under(x, y))),
                               (-1, (y, x)), (-1, (b.under(x, y), b.over(y, x)))],
        'iii': _crooked_iii,
    },
}
