"""
Command line: python -m farekit <command> [flags]

Exit codes: 0 success, 1 semantic failure (invalid biquandle, table that is not a fare),
2 input error (unreadable or malformed files, unknown links, bad flags).
"""
import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Callable, TextIO

from farekit.algebra.verification import is_quandle, verify
from farekit.catalog.index import DATA_DIR, load_path
from farekit.diagram.parser import parse_diagram
from farekit.fare.decomposition import decompose
from farekit.fare.enumeration import count_fares, enumerate_fares
from farekit.homset.search import enumerate_colorings
from farekit.pipeline import InvariantPipeline
from farekit.pipeline.exception import InvariantPipelineError
from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.exceptions import (DiagramParseError, FareParseError, GroupSpecError, InvalidBiquandleError,
                                        InvalidGroupTableError, MalformedTableError, NonUnitParameterError,
                                        UnknownLinkError, UnsupportedFareError, UnsupportedRouteOrderError)
from farekit.schemas.fare import AxiomSource, FareKind, FareTable
from farekit.schemas.group import CoeffGroup
from farekit.utilities.tables import OutputFormat, group_by_polynomial, invariant_frame, render_frame, \
    render_invariants
from farekit.utilities.validation import validate_fare

INPUT_ERRORS = (MalformedTableError, DiagramParseError, FareParseError, GroupSpecError, UnknownLinkError,
                UnsupportedFareError, UnsupportedRouteOrderError, InvalidGroupTableError, NonUnitParameterError,
                InvariantPipelineError, OSError)
SEMANTIC_ERRORS = (InvalidBiquandleError, AssertionError)


@dataclass
class RunConfig:
    command: str
    biquandle: str | None = None
    fare: str | None = None
    order: int = 1
    kind: FareKind | None = None
    group: CoeffGroup | None = None
    links: list[str] = field(default_factory=list)
    output_format: OutputFormat = OutputFormat.TEXT
    jobs: int = 1
    count_only: bool = False
    source: AxiomSource = AxiomSource.MOVES
    unchecked: bool = False
    verbose: bool = False
    output: str | None = None
    grouped: bool = False
    code: str | None = None

    @staticmethod
    def from_args(args: argparse.Namespace) -> 'RunConfig':
        get = lambda name, default=None: getattr(args, name, default)
        group = get('group')
        kind = get('kind')
        return RunConfig(command=args.command,
                         biquandle=get('biquandle'),
                         fare=get('fare'),
                         order=get('order', 1),
                         kind=FareKind(kind) if kind else None,
                         group=CoeffGroup.parse(group) if group else None,
                         links=get('link') or [],
                         output_format=OutputFormat(get('format', 'text')),
                         jobs=get('jobs', 1),
                         count_only=get('count_only', False),
                         source=AxiomSource(get('source', 'moves')),
                         unchecked=get('unchecked', False),
                         verbose=get('verbose', False),
                         output=get('output'),
                         grouped=get('grouped', False),
                         code=get('code'))

    @property
    def fare_kind(self) -> FareKind:
        if self.kind is not None:
            return self.kind
        return FareKind.PLAIN if self.order == 1 else FareKind.COMPLETE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='farekit', description='Biquandle fare invariants of knots and links')
    parser.add_argument('--verbose', action='store_true', help='progress messages on stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    def command(name: str, help_text: str, biquandle: bool = True) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        if biquandle:
            sub.add_argument('--biquandle', required=True, help='biquandle table file (.bq)')
        sub.add_argument('--source', choices=[s.value for s in AxiomSource], default=AxiomSource.MOVES.value,
                         help='fare conditions from colored Reidemeister moves or as printed')
        sub.add_argument('--format', choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
        return sub

    command('verify', 'check the biquandle axioms')

    fares = command('fares', 'enumerate or count fares')
    fares.add_argument('--order', type=int, choices=[1, 2], default=1)
    fares.add_argument('--kind', choices=[k.value for k in FareKind])
    fares.add_argument('--group', required=True, help='coefficient group m1[xm2...]')
    fares.add_argument('--count-only', action='store_true')
    fares.add_argument('--output', help='directory for the enumerated .fare files')

    for name, help_text in (('invariant', 'fare multiset and polynomials per link'),
                            ('table', 'table of polynomial values over a set of links')):
        sub = command(name, help_text)
        sub.add_argument('--fare', required=True, help='fare table file (.fare)')
        sub.add_argument('--link', action='append', help='catalog name or diagram file, repeatable')
        sub.add_argument('--jobs', type=int, default=1)
        sub.add_argument('--unchecked', action='store_true', help='evaluate tables that are not fares')
        if name == 'table':
            sub.add_argument('--grouped', action='store_true', help='one row per multiplicative value')

    decompose_parser = command('decompose', 'split a complete 2-fare into through and crooked fares')
    decompose_parser.add_argument('--fare', required=True)
    decompose_parser.add_argument('--unchecked', action='store_true')

    homset = command('homset', 'list the colorings of links')
    homset.add_argument('--link', action='append')

    convert = command('convert-pd', 'convert PD quadruples to the explicit crossing format', biquandle=False)
    convert.add_argument('code', help='PD code, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"')

    export = command('export-census', 'write the census diagrams of the catalog as data files', biquandle=False)
    export.add_argument('--output', help='target directory, the catalog data directory by default')
    return parser


def cmd_verify(config: RunConfig, out: TextIO, logger: Callable[[str], None] | None) -> int:
    biquandle = FiniteBiquandle.load_file(config.biquandle)
    report = verify(biquandle)
    if config.output_format is OutputFormat.JSON:
        out.write(json.dumps({'valid': report.valid, 'quandle': report.valid and is_quandle(biquandle),
                              'violations': [{'axiom': v.axiom, 'witness': list(v.witness)}
                                             for v in report.violations]}, indent=2) + '\n')
    elif report.valid:
        out.write(f'valid {"quandle" if is_quandle(biquandle) else "biquandle"} of size {biquandle.size}\n')
    else:
        out.write(f'invalid: {len(report.violations)} violations of axioms {sorted(report.failed_axioms())}\n')
        for violation in report.violations:
            out.write(f'  {violation}\n')
    return 0 if report.valid else 1


def cmd_fares(config: RunConfig, out: TextIO, logger: Callable[[str], None] | None) -> int:
    biquandle = FiniteBiquandle.load_file(config.biquandle)
    kind = config.fare_kind
    if config.count_only:
        out.write(f'{count_fares(biquandle, config.order, kind, config.group, config.source)}\n')
        return 0
    if config.output is not None:
        os.makedirs(config.output, exist_ok=True)
    count = 0
    for count, fare in enumerate(enumerate_fares(biquandle, config.order, kind, config.group,
                                                 config.source, logger), start=1):
        if config.output is not None:
            fare.dump(config.output, f'{kind.value}_{config.order}_{count}')
        elif config.output_format is OutputFormat.TEXT:
            out.write(f'# fare {count}\n{fare.dumps()}')
        else:
            out.write(','.join(str(value) for value in fare.values) + '\n')
    if config.output is not None or config.output_format is OutputFormat.TEXT:
        out.write(f'{count} {kind.value} {config.order}-fares over Z_{config.group}\n')
    return 0


def _invariants(config: RunConfig, logger: Callable[[str], None] | None, across_links: bool):
    biquandle = FiniteBiquandle.load_file(config.biquandle)
    fare = FareTable.load_file(config.fare)
    return InvariantPipeline.create() \
        .biquandle(biquandle) \
        .fare(fare) \
        .source(config.source) \
        .links(config.links) \
        .jobs(config.jobs, across_links) \
        .validate(not config.unchecked) \
        .logger(logger) \
        .compute()


def cmd_invariant(config: RunConfig, out: TextIO, logger: Callable[[str], None] | None) -> int:
    invariants = _invariants(config, logger, across_links=False)
    if config.output_format is OutputFormat.TEXT:
        for inv in invariants:
            out.write(f'{inv.link}: {inv.colorings} colorings\n'
                      f'  multiset       {inv.multiset}\n'
                      f'  additive       {inv.additive}\n'
                      f'  multiplicative {inv.multiplicative or "-"}\n')
    else:
        out.write(render_invariants(invariants, config.output_format))
    return 0


def cmd_table(config: RunConfig, out: TextIO, logger: Callable[[str], None] | None) -> int:
    invariants = _invariants(config, logger, across_links=True)
    if config.grouped:
        frame = group_by_polynomial(invariants)
    else:
        frame = invariant_frame(invariants)[['link', 'colorings', 'additive', 'multiplicative']]
    out.write(render_frame(frame, config.output_format))
    return 0


def cmd_decompose(config: RunConfig, out: TextIO, logger: Callable[[str], None] | None) -> int:
    biquandle = FiniteBiquandle.load_file(config.biquandle)
    fare = FareTable.load_file(config.fare)
    if not config.unchecked:
        validate_fare(fare, biquandle, config.source)
    witness = decompose(fare, biquandle, config.source)
    if witness is None:
        out.write('indecomposable\n')
        return 0
    through, crooked = witness
    out.write(f'decomposable\n# through\n{through.dumps()}# crooked\n{crooked.dumps()}')
    return 0


def cmd_homset(config: RunConfig, out: TextIO, logger: Callable[[str], None] | None) -> int:
    biquandle = FiniteBiquandle.load_file(config.biquandle)
    result = {}
    for link in config.links:
        diagram = load_path(link, logger)
        result[diagram.name] = enumerate_colorings(diagram, biquandle)
    if config.output_format is OutputFormat.JSON:
        out.write(json.dumps({name: [dict((str(s), c) for s, c in coloring.assignment) for coloring in homset]
                              for name, homset in result.items()}, indent=2) + '\n')
        return 0
    for name, homset in result.items():
        out.write(f'{name}: {len(homset)} colorings\n')
        for coloring in homset:
            out.write(f'  {coloring}\n')
    return 0


def cmd_convert_pd(config: RunConfig, out: TextIO, logger: Callable[[str], None] | None) -> int:
    out.write(parse_diagram(f'PD {config.code}').dumps())
    return 0


def cmd_export_census(config: RunConfig, out: TextIO, logger: Callable[[str], None] | None) -> int:
    from farekit.catalog.census import export_census
    folder = config.output or os.path.join(DATA_DIR, 'census')
    for path in export_census(folder, logger):
        out.write(f'{path}\n')
    return 0


COMMANDS = {
    'verify': cmd_verify,
    'fares': cmd_fares,
    'invariant': cmd_invariant,
    'table': cmd_table,
    'decompose': cmd_decompose,
    'homset': cmd_homset,
    'convert-pd': cmd_convert_pd,
    'export-census': cmd_export_census,
}


def main(argv: list[str] | None = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        args = build_parser().parse_args(argv)
        config = RunConfig.from_args(args)
    except SystemExit as e:
        return 2 if e.code else 0
    except GroupSpecError as e:
        err.write(f'error: {e}\n')
        return 2

    logger = (lambda message: err.write(message + '\n')) if config.verbose else None
    try:
        return COMMANDS[config.command](config, out, logger)
    except INPUT_ERRORS as e:
        err.write(f'error: {e}\n')
        return 2
    except SEMANTIC_ERRORS as e:
        err.write(f'failed: {e}\n')
        return 1
