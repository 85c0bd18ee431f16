"""
Mirror image and component reversal. Semiarc ids are kept, so colorings of the
transformed diagram are directly comparable with colorings of the original.
"""
from typing import Iterable

from farekit.schemas.diagram import Crossing, LinkDiagram


def mirror_diagram(diagram: LinkDiagram) -> LinkDiagram:
    """
    Swaps over and under at every crossing, which negates every sign
    """
    crossings = tuple(Crossing(-c.sign, u_in=c.o_in, o_in=c.u_in, u_out=c.o_out, o_out=c.u_out)
                      for c in diagram.crossings)
    return LinkDiagram(crossings, diagram.free_loops, diagram.name)


def reverse_components(diagram: LinkDiagram, components: Iterable[int]) -> LinkDiagram:
    """
    Reverses the orientation of some components.
    A crossing changes sign when exactly one of its strands is reversed.

    :param diagram: the diagram
    :param components: 1-based positions in `diagram.components`
    :return: the reoriented diagram
    """
    chosen = set(components)
    if not chosen:
        return diagram
    if not chosen <= set(range(1, diagram.component_count + 1)):
        raise ValueError(f'Components {sorted(chosen)} out of range, '
                         f'the diagram has {diagram.component_count} components')
    reversed_semiarcs = {s for index in chosen for s in diagram.components[index - 1]}

    crossings = []
    for c in diagram.crossings:
        flip_under = c.u_in in reversed_semiarcs
        flip_over = c.o_in in reversed_semiarcs
        u_in, u_out = (c.u_out, c.u_in) if flip_under else (c.u_in, c.u_out)
        o_in, o_out = (c.o_out, c.o_in) if flip_over else (c.o_in, c.o_out)
        sign = -c.sign if flip_under != flip_over else c.sign
        crossings.append(Crossing(sign, u_in=u_in, o_in=o_in, u_out=u_out, o_out=o_out))
    return LinkDiagram(tuple(crossings), diagram.free_loops, diagram.name)


def orient(diagram: LinkDiagram, mirror: bool = False, reversed_components: Iterable[int] = ()) -> LinkDiagram:
    """
    Applies a catalog convention: component reversal on the stored diagram, then the mirror image
    """
    diagram = reverse_components(diagram, reversed_components)
    return mirror_diagram(diagram) if mirror else diagram
