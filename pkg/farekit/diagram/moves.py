"""
Oriented Reidemeister moves as pairs of tangles, and their insertion into diagrams.

The generating set is: the four type I kinks (sign x which pass comes first), the four type II
moves (parallel or antiparallel strands x sign of the first crossing met by the under strand)
and the braid-like type III move with three positive crossings.
"""
from dataclasses import dataclass
from itertools import chain

from farekit.schemas.diagram import Crossing, LinkDiagram


@dataclass(frozen=True)
class Tangle:
    """
    Piece of a diagram: crossings plus boundary strands given as (entering semiarc, leaving semiarc).
    A strand without crossings inside the tangle enters and leaves through the same semiarc.
    """
    crossings: tuple[Crossing, ...]
    strands: tuple[tuple[int, int], ...]

    @property
    def semiarcs(self) -> tuple[int, ...]:
        return tuple(sorted(set(chain.from_iterable(c.slots for c in self.crossings))
                            | set(chain.from_iterable(self.strands))))


@dataclass(frozen=True)
class ReidemeisterMove:
    name: str
    condition: str
    before: Tangle
    after: Tangle


def _kink(sign: int, over_first: bool) -> Tangle:
    if over_first:
        crossing = Crossing(sign, u_in=2, o_in=1, u_out=3, o_out=2)
    else:
        crossing = Crossing(sign, u_in=1, o_in=2, u_out=2, o_out=3)
    return Tangle((crossing,), ((1, 3),))


def _bigon(sign: int, parallel: bool) -> Tangle:
    # under strand 1 -> 2 -> 3, over strand 4 -> 5 -> 6
    if parallel:
        crossings = (Crossing(sign, u_in=1, o_in=4, u_out=2, o_out=5),
                     Crossing(-sign, u_in=2, o_in=5, u_out=3, o_out=6))
    else:
        crossings = (Crossing(sign, u_in=1, o_in=5, u_out=2, o_out=6),
                     Crossing(-sign, u_in=2, o_in=4, u_out=3, o_out=5))
    return Tangle(crossings, ((1, 3), (4, 6)))


def _braid_triangle(left_first: bool) -> Tangle:
    # strands top 1 -> 3, middle 4 -> 6, bottom 7 -> 9; sigma_1 sigma_2 sigma_1 or sigma_2 sigma_1 sigma_2
    if left_first:
        crossings = (Crossing(1, u_in=4, o_in=1, u_out=5, o_out=2),
                     Crossing(1, u_in=7, o_in=2, u_out=8, o_out=3),
                     Crossing(1, u_in=8, o_in=5, u_out=9, o_out=6))
    else:
        crossings = (Crossing(1, u_in=7, o_in=4, u_out=12, o_out=11),
                     Crossing(1, u_in=12, o_in=1, u_out=9, o_out=10),
                     Crossing(1, u_in=11, o_in=10, u_out=6, o_out=3))
    return Tangle(crossings, ((1, 3), (4, 6), (7, 9)))


def reidemeister_moves() -> list[ReidemeisterMove]:
    moves = []
    for sign in (1, -1):
        for over_first in (False, True):
            moves.append(ReidemeisterMove(f'I{"+" if sign > 0 else "-"}{"o" if over_first else "u"}', 'i',
                                          _kink(sign, over_first), Tangle((), ((1, 1),))))
    for parallel in (True, False):
        for sign in (1, -1):
            moves.append(ReidemeisterMove(f'II{"d" if parallel else "r"}{"+" if sign > 0 else "-"}', 'ii',
                                          _bigon(sign, parallel), Tangle((), ((1, 1), (4, 4)))))
    moves.append(ReidemeisterMove('III+', 'iii', _braid_triangle(True), _braid_triangle(False)))
    return moves


def _fresh_ids(diagram: LinkDiagram, count: int) -> list[int]:
    start = max(diagram.semiarcs, default=0) + 1
    return list(range(start, start + count))


def _redirect_head(crossings: list[Crossing], semiarc: int, replacement: int) -> None:
    """
    Makes the crossing entered by `semiarc` be entered by `replacement` instead
    """
    for index, c in enumerate(crossings):
        if c.u_in == semiarc:
            crossings[index] = Crossing(c.sign, replacement, c.o_in, c.u_out, c.o_out)
            return
        if c.o_in == semiarc:
            crossings[index] = Crossing(c.sign, c.u_in, replacement, c.u_out, c.o_out)
            return


def _split(diagram: LinkDiagram, crossings: list[Crossing], free_loops: list[int], semiarc: int, fresh: int) -> int:
    """
    Prepares the end piece of a split semiarc: a free loop closes up on itself,
    otherwise the fresh id takes over the head of the semiarc.
    """
    if semiarc in free_loops:
        free_loops.remove(semiarc)
        return semiarc
    _redirect_head(crossings, semiarc, fresh)
    return fresh


def insert_kink(diagram: LinkDiagram, semiarc: int, sign: int = 1, over_first: bool = False) -> LinkDiagram:
    """
    Adds a type I kink on the given semiarc
    """
    assert semiarc in diagram.semiarcs, f'Unknown semiarc {semiarc}'
    loop, fresh = _fresh_ids(diagram, 2)
    crossings = list(diagram.crossings)
    free_loops = list(diagram.free_loops)
    end = _split(diagram, crossings, free_loops, semiarc, fresh)
    if over_first:
        crossings.append(Crossing(sign, u_in=loop, o_in=semiarc, u_out=end, o_out=loop))
    else:
        crossings.append(Crossing(sign, u_in=semiarc, o_in=loop, u_out=loop, o_out=end))
    return LinkDiagram(tuple(crossings), tuple(free_loops), name=diagram.name)


def insert_bigon(diagram: LinkDiagram, under: int, over: int, sign: int = 1, parallel: bool = True) -> LinkDiagram:
    """
    Pushes the `over` semiarc across the `under` one with a type II move.
    Semiarcs that do not bound a common face are first brought together by detour moves,
    which do not change colorings or routes.
    """
    assert under != over and {under, over} <= set(diagram.semiarcs), \
        f'Type II move needs two distinct semiarcs of the diagram, got {under} and {over}'
    u_mid, u_fresh, o_mid, o_fresh = _fresh_ids(diagram, 4)
    crossings = list(diagram.crossings)
    free_loops = list(diagram.free_loops)
    u_end = _split(diagram, crossings, free_loops, under, u_fresh)
    o_end = _split(diagram, crossings, free_loops, over, o_fresh)
    if parallel:
        crossings += [Crossing(sign, u_in=under, o_in=over, u_out=u_mid, o_out=o_mid),
                      Crossing(-sign, u_in=u_mid, o_in=o_mid, u_out=u_end, o_out=o_end)]
    else:
        crossings += [Crossing(sign, u_in=under, o_in=o_mid, u_out=u_mid, o_out=o_end),
                      Crossing(-sign, u_in=u_mid, o_in=over, u_out=u_end, o_out=o_mid)]
    return LinkDiagram(tuple(crossings), tuple(free_loops), name=diagram.name)
