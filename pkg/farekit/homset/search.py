from itertools import product
from typing import Iterator, Sequence

from farekit.algebra.verification import inverse_maps
from farekit.schemas.biquandle import FiniteBiquandle, InverseMaps
from farekit.schemas.coloring import Coloring, Homset
from farekit.schemas.diagram import Crossing, LinkDiagram

SlotColors = tuple[int, int, int, int]


def crossing_colorings(crossing: Crossing, biquandle: FiniteBiquandle, maps: InverseMaps) -> list[SlotColors]:
    """
    Every valid coloring of a single crossing, as colors of (u_in, o_in, u_out, o_out).
    The incoming pair determines the outgoing one:
    at a positive crossing u_out = u_in ▷ o_out and o_in = o_out ▷̄ u_in,
    at a negative crossing u_in = u_out ▷ o_in and o_out = o_in ▷̄ u_out.
    """
    candidates = []
    for u_in, o_in in biquandle.pairs():
        if crossing.is_positive:
            o_out = maps.alpha_inverse(u_in, o_in)
            u_out = biquandle.under(u_in, o_out)
        else:
            u_out = maps.beta_inverse(o_in, u_in)
            o_out = biquandle.over(o_in, u_out)
        candidates.append((u_in, o_in, u_out, o_out))
    return candidates


def _extend(slots: SlotColors, colors: SlotColors, assigned: dict[int, int]) -> list[int] | None:
    """
    Assigns the colors of a crossing candidate, returns the newly assigned semiarcs
    or None (with `assigned` untouched) if the candidate conflicts
    """
    added = []
    for semiarc, color in zip(slots, colors):
        current = assigned.get(semiarc)
        if current is None:
            assigned[semiarc] = color
            added.append(semiarc)
        elif current != color:
            for s in added:
                del assigned[s]
            return None
    return added


def solve_colorings(crossings: Sequence[Crossing], semiarcs: Sequence[int],
                    biquandle: FiniteBiquandle) -> Iterator[dict[int, int]]:
    """
    Depth-first search for all colorings of a set of crossings.
    The next crossing is always the one with the most colored slots, so crossings whose
    incoming pair is known are resolved without branching.
    Semiarcs that meet no crossing take every color.

    :param crossings: crossings of a diagram or a tangle
    :param semiarcs: every semiarc to color
    :param biquandle: the coloring biquandle
    :return: colorings as semiarc -> color maps, in no particular order
    """
    maps = inverse_maps(biquandle)
    tables = [crossing_colorings(crossing, biquandle, maps) for crossing in crossings]
    touched = {s for crossing in crossings for s in crossing.slots}
    free = [s for s in semiarcs if s not in touched]

    assigned: dict[int, int] = {}

    def search(remaining: list[int]) -> Iterator[dict[int, int]]:
        if not remaining:
            yield dict(assigned)
            return
        best = max(remaining, key=lambda i: sum(s in assigned for s in crossings[i].slots))
        rest = [i for i in remaining if i != best]
        for colors in tables[best]:
            added = _extend(crossings[best].slots, colors, assigned)
            if added is None:
                continue
            yield from search(rest)
            for s in added:
                del assigned[s]

    for partial in search(list(range(len(crossings)))):
        for free_colors in product(biquandle.elements, repeat=len(free)):
            yield partial | dict(zip(free, free_colors))


def enumerate_colorings(diagram: LinkDiagram, biquandle: FiniteBiquandle) -> Homset:
    """
    The homset of the diagram: every coloring, in lexicographic order of the colors sorted by semiarc id
    """
    colorings = sorted(Coloring.of(colors)
                       for colors in solve_colorings(diagram.crossings, diagram.semiarcs, biquandle))
    return Homset(diagram, biquandle, tuple(colorings))


def counting_invariant(diagram: LinkDiagram, biquandle: FiniteBiquandle) -> int:
    return sum(1 for _ in solve_colorings(diagram.crossings, diagram.semiarcs, biquandle))
