import os
from dataclasses import replace
from typing import Callable

import spherogram

from farekit.diagram.parser import convert_pd
from farekit.schemas.diagram import LinkDiagram
from farekit.schemas.exceptions import UnknownLinkError


def census_diagram(name: str, logger: Callable[[str], None] | None = None) -> LinkDiagram:
    """
    Diagram of a Rolfsen knot (e.g. 8_18) or Thistlethwaite link (e.g. L6n1) from the census tables

    :param name: census name
    :param logger: progress reports
    :return: the diagram converted from the census PD code
    """
    try:
        link = spherogram.Link(name)
    except (ValueError, KeyError) as e:
        raise UnknownLinkError(f'{name!r} is not in the knot and link census: {e}')
    pd_code = link.PD_code(min_strand_index=1)
    if logger is not None:
        logger(f'{name}: {len(pd_code)} crossings from the census')
    return convert_pd(pd_code, name)


def export_census(folder: str, logger: Callable[[str], None] | None = None) -> list[str]:
    """
    Writes the stored diagram of every census entry of the catalog to `<folder>/<name>.dgm`.
    The header names the census source and the convention the catalog applies on load.

    :param folder: target directory, created if missing
    :param logger: progress reports
    :return: written paths
    """
    from farekit.catalog.index import EntrySource, catalog_index

    os.makedirs(folder, exist_ok=True)
    written = []
    for entry in catalog_index().entries:
        if entry.source is not EntrySource.CENSUS:
            continue
        diagram = census_diagram(entry.census or entry.name, logger=logger)
        path = os.path.join(folder, os.path.basename(entry.path or f'{entry.name}.dgm'))
        header = (f'# {entry.name}, PD code of {entry.census or entry.name} from the spherogram census\n'
                  f'# applied on load: {entry.convention}\n')
        with open(path, 'w', encoding='utf-8') as f:
            f.write(header + replace(diagram, name='').dumps())
        written.append(path)
    return written
