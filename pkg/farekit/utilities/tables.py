import json
from dataclasses import dataclass
from enum import Enum

import pandas as pd

from farekit.fare.polynomial import render_polynomial
from farekit.schemas.exceptions import RenderingError
from farekit.schemas.fare import FareMultiset, PolynomialForm


class OutputFormat(Enum):
    TEXT = 'text'
    CSV = 'csv'
    JSON = 'json'


@dataclass(frozen=True)
class LinkInvariant:
    """
    Fare invariant of one link: the multiset and its polynomial renderings
    """
    link: str
    colorings: int
    multiset: FareMultiset

    @property
    def additive(self) -> str:
        return render_polynomial(self.multiset, PolynomialForm.ADDITIVE)

    @property
    def multiplicative(self) -> str | None:
        try:
            return render_polynomial(self.multiset, PolynomialForm.MULTIPLICATIVE)
        except RenderingError:
            return None

    def to_json(self) -> dict:
        return {'link': self.link, 'colorings': self.colorings, 'multiset': self.multiset.to_json(),
                'additive': self.additive, 'multiplicative': self.multiplicative}


def invariant_frame(invariants: list[LinkInvariant]) -> pd.DataFrame:
    return pd.DataFrame([{'link': inv.link,
                          'colorings': inv.colorings,
                          'multiset': str(inv.multiset),
                          'additive': inv.additive,
                          'multiplicative': inv.multiplicative or '-'} for inv in invariants],
                        columns=['link', 'colorings', 'multiset', 'additive', 'multiplicative'])


def group_by_polynomial(invariants: list[LinkInvariant]) -> pd.DataFrame:
    """
    Links sharing a multiplicative value, one row per value in order of first appearance
    """
    frame = invariant_frame(invariants)
    if frame.empty:
        return pd.DataFrame(columns=['multiplicative', 'links'])
    grouped = frame.groupby('multiplicative', sort=False)['link'].apply(', '.join)
    return grouped.reset_index().rename(columns={'link': 'links'})


def render_frame(frame: pd.DataFrame, output_format: OutputFormat) -> str:
    match output_format:
        case OutputFormat.TEXT:
            return frame.to_string(index=False) + '\n' if not frame.empty else ''
        case OutputFormat.CSV:
            return frame.to_csv(index=False)
        case OutputFormat.JSON:
            return json.dumps(frame.to_dict(orient='records'), indent=2) + '\n'


def render_invariants(invariants: list[LinkInvariant], output_format: OutputFormat) -> str:
    if output_format is OutputFormat.JSON:
        return json.dumps([inv.to_json() for inv in invariants], indent=2) + '\n'
    return render_frame(invariant_frame(invariants), output_format)
