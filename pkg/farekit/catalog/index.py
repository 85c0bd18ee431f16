import os
from dataclasses import dataclass, replace
from enum import Enum
from functools import cache
from typing import Callable

from farekit.diagram.orientation import orient
from farekit.schemas.diagram import LinkDiagram
from farekit.schemas.exceptions import UnknownLinkError
from farekit.schemas.serializable import JSONSerializable

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


class EntrySource(Enum):
    FILE = 'file'
    CENSUS = 'census'


@dataclass(frozen=True)
class CatalogEntry:
    """
    Where a catalog diagram comes from: a .dgm file next to the index or a census PD code.
    `mirror` and `reversed_components` are the convention applied to the stored diagram,
    chosen per entry so that the published invariant values are reproduced.
    """
    name: str
    source: EntrySource
    path: str | None = None
    census: str | None = None
    mirror: bool = False
    reversed_components: tuple[int, ...] = ()
    crossing_count: int | None = None
    component_count: int | None = None

    def to_dict(self) -> dict:
        return {'name': self.name, 'source': self.source.value, 'path': self.path, 'census': self.census,
                'mirror': self.mirror, 'reversed_components': list(self.reversed_components),
                'crossing_count': self.crossing_count, 'component_count': self.component_count}

    @staticmethod
    def from_dict(data: dict) -> 'CatalogEntry':
        return CatalogEntry(data['name'], EntrySource(data['source']), data.get('path'), data.get('census'),
                            bool(data.get('mirror', False)), tuple(data.get('reversed_components', ())),
                            data.get('crossing_count'), data.get('component_count'))

    @property
    def convention(self) -> str:
        reversed_text = ', '.join(map(str, self.reversed_components)) or 'none'
        return f'mirror: {"yes" if self.mirror else "no"}, reversed components: {reversed_text}'


@dataclass(frozen=True)
class CatalogIndex(JSONSerializable['CatalogIndex']):
    entries: tuple[CatalogEntry, ...]

    def _serialize(self) -> dict:
        return {'entries': [entry.to_dict() for entry in self.entries]}

    @classmethod
    def _deserialize(cls, representation: dict) -> 'CatalogIndex':
        return cls(tuple(CatalogEntry.from_dict(entry) for entry in representation['entries']))

    def get(self, name: str) -> CatalogEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise UnknownLinkError(f'Unknown link {name!r}, the catalog contains: {", ".join(self.names())}')

    def names(self) -> list[str]:
        return sorted(entry.name for entry in self.entries)


@cache
def catalog_index() -> CatalogIndex:
    return CatalogIndex.load(DATA_DIR, 'index')


def list_catalog() -> list[str]:
    return catalog_index().names()


def stored_diagram(entry: CatalogEntry, logger: Callable[[str], None] | None = None) -> LinkDiagram:
    """
    The diagram as stored, before the entry convention is applied.
    Census entries read their exported data file when it is present and fall back to spherogram.
    """
    path = os.path.join(DATA_DIR, entry.path) if entry.path else None
    match entry.source:
        case EntrySource.FILE:
            return LinkDiagram.load_file(path)
        case EntrySource.CENSUS if path is not None and os.path.isfile(path):
            return LinkDiagram.load_file(path)
        case EntrySource.CENSUS:
            from farekit.catalog.census import census_diagram
            return census_diagram(entry.census or entry.name, logger=logger)
        case _:
            raise UnknownLinkError(f'Catalog entry {entry.name!r} has an unknown source')


def load(name: str, logger: Callable[[str], None] | None = None) -> LinkDiagram:
    """
    Loads a catalog diagram by name, with the entry convention applied

    :param name: catalog name, e.g. 4_1, L6n1 or vHopf
    :param logger: reports where census diagrams come from
    :return: the named diagram
    """
    entry = catalog_index().get(name)
    diagram = orient(stored_diagram(entry, logger), entry.mirror, entry.reversed_components)
    return replace(diagram, name=name)


def load_path(path_or_name: str, logger: Callable[[str], None] | None = None) -> LinkDiagram:
    """
    Reads a diagram file when the argument names an existing file, otherwise looks the name up in the catalog
    """
    if os.path.isfile(path_or_name):
        name = os.path.splitext(os.path.basename(path_or_name))[0]
        return replace(LinkDiagram.load_file(path_or_name), name=name)
    return load(path_or_name, logger)
