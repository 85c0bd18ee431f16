"""
Diagram text format, one item per line:

    X <+|-> <u_in> <o_in> <u_out> <o_out>    classical crossing with explicit slot roles
    O <semiarc>                              crossing-free unknotted component
    PD X[a,b,c,d] X[...] ...                 planar diagram quadruples, converted on the fly
    # comment

PD quadruples are listed counter-clockwise starting from the incoming under edge,
so X[a,b,c,d] has u_in = a and u_out = c, the over strand passing between b and d.
"""
import re
from typing import Iterable, Sequence

from farekit.schemas.diagram import Crossing, LinkDiagram
from farekit.schemas.exceptions import DiagramParseError

_PD_QUADRUPLE = re.compile(r'X\s*[\[(]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\])]')


def parse_diagram(text: str, name: str = '') -> LinkDiagram:
    """
    Parses and validates a diagram.

    :param text: diagram in the explicit crossing format, possibly with PD lines
    :param name: optional name of the diagram
    :return: the validated diagram
    """
    crossings: list[Crossing] = []
    free_loops: list[int] = []
    pd_code: list[tuple[int, int, int, int]] = []
    # semiarc -> line where it is first used, per slot direction
    incoming: dict[int, int] = {}
    outgoing: dict[int, int] = {}
    loop_lines: dict[int, int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split(maxsplit=1)
        match head.upper():
            case 'X':
                crossing = _parse_crossing(rest, line_number)
                _register(crossing.in_slots, incoming, 'incoming', line_number)
                _register(crossing.out_slots, outgoing, 'outgoing', line_number)
                crossings.append(crossing)
            case 'O':
                loop = _parse_ids(rest, 1, line_number)[0]
                if loop in loop_lines:
                    raise DiagramParseError(f'Crossing-free loop {loop} declared twice', line_number)
                loop_lines[loop] = line_number
                free_loops.append(loop)
            case 'PD':
                quadruples = [tuple(int(v) for v in q) for q in _PD_QUADRUPLE.findall(rest[0] if rest else '')]
                if not quadruples:
                    raise DiagramParseError('PD line without X[a,b,c,d] quadruples', line_number)
                pd_code += quadruples
            case _:
                raise DiagramParseError(f'Unknown line kind {head!r}', line_number)

    if pd_code:
        converted = convert_pd(pd_code)
        for crossing in converted.crossings:
            _register(crossing.in_slots, incoming, 'incoming', None)
            _register(crossing.out_slots, outgoing, 'outgoing', None)
        crossings += converted.crossings

    for semiarc in sorted(set(incoming) ^ set(outgoing)):
        line_number = incoming.get(semiarc, outgoing.get(semiarc))
        side = 'leaves' if semiarc in outgoing else 'enters'
        raise DiagramParseError(f'Dangling semiarc {semiarc}: it {side} a crossing but never closes up', line_number)
    for loop, line_number in loop_lines.items():
        if loop in incoming:
            raise DiagramParseError(f'Crossing-free loop {loop} also appears at a crossing', line_number)

    return LinkDiagram(tuple(crossings), tuple(free_loops), name=name)


def _parse_ids(tokens: list[str], count: int, line_number: int) -> list[int]:
    values = tokens[0].split() if tokens else []
    if len(values) != count:
        raise DiagramParseError(f'Expected {count} semiarc ids, got {len(values)}', line_number)
    try:
        ids = [int(v) for v in values]
    except ValueError:
        raise DiagramParseError(f'Semiarc ids should be integers, got {values}', line_number)
    if any(i <= 0 for i in ids):
        raise DiagramParseError(f'Semiarc ids should be positive, got {ids}', line_number)
    return ids


def _parse_crossing(tokens: list[str], line_number: int) -> Crossing:
    if not tokens:
        raise DiagramParseError('Crossing line without sign and slots', line_number)
    sign_token, *slots = tokens[0].split(maxsplit=1)
    if sign_token not in ('+', '-'):
        raise DiagramParseError(f'Crossing sign should be + or -, got {sign_token!r}', line_number)
    u_in, o_in, u_out, o_out = _parse_ids(slots, 4, line_number)
    return Crossing(1 if sign_token == '+' else -1, u_in, o_in, u_out, o_out)


def _register(semiarcs: Iterable[int], seen: dict[int, int], direction: str, line_number: int | None):
    for semiarc in semiarcs:
        if semiarc in seen:
            raise DiagramParseError(f'Semiarc {semiarc} is used twice as an {direction} slot '
                                    f'(first use on line {seen[semiarc]})', line_number)
        seen[semiarc] = line_number


def convert_pd(pd_code: Sequence[Sequence[int]], name: str = '') -> LinkDiagram:
    """
    Converts planar diagram quadruples to explicit crossings.
    The under strand of X[a,b,c,d] runs a -> c. The direction of the over strand is propagated
    from the neighbouring crossings: a label leaving one crossing enters the other one.
    Labels whose direction stays unknown follow the parity rule, the over strand running d -> b
    when b = d + 1 or d > b + 1. A crossing is positive iff its over strand runs d -> b.

    :param pd_code: sequence of quadruples
    :param name: optional name of the diagram
    :return: the diagram
    """
    quadruples = [tuple(int(v) for v in q) for q in pd_code]
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for index, quadruple in enumerate(quadruples):
        if len(quadruple) != 4:
            raise DiagramParseError(f'PD entry {index + 1} is not a quadruple: {quadruple}')
        for position, label in enumerate(quadruple):
            occurrences.setdefault(label, []).append((index, position))
    inconsistent = sorted(label for label, places in occurrences.items() if len(places) != 2)
    if inconsistent:
        raise DiagramParseError(f'PD labels {inconsistent} should appear exactly twice')

    # direction[(crossing, position)] is True when the label enters the crossing there
    direction: dict[tuple[int, int], bool] = {}
    for index in range(len(quadruples)):
        direction[(index, 0)] = True
        direction[(index, 2)] = False

    def other_end(index: int, position: int) -> tuple[int, int]:
        first, second = occurrences[quadruples[index][position]]
        return second if first == (index, position) else first

    def propagate():
        changed = True
        while changed:
            changed = False
            for index in range(len(quadruples)):
                for position, opposite in ((1, 3), (3, 1)):
                    if (index, position) in direction:
                        continue
                    known = None
                    if (index, opposite) in direction:
                        known = not direction[(index, opposite)]
                    elif other_end(index, position) in direction:
                        known = not direction[other_end(index, position)]
                    if known is not None:
                        direction[(index, position)] = known
                        changed = True

    propagate()
    for index, (a, b, c, d) in enumerate(quadruples):
        # components passing only over crossings get their orientation from the labels
        if (index, 3) not in direction:
            direction[(index, 3)] = b - d == 1 or d - b > 1
            propagate()

    crossings = []
    for index, (a, b, c, d) in enumerate(quadruples):
        positive = direction[(index, 3)]
        if positive:
            crossings.append(Crossing(1, a, d, c, b))
        else:
            crossings.append(Crossing(-1, a, b, c, d))
    return LinkDiagram(tuple(crossings), (), name=name)
