"""
Braid diagrams as SVG.

Letters are laid out in columns from left to right, strand positions are
rows from top to bottom. For sigma_i the strand coming from row i passes
over the strand coming from row i + 1, for sigma_i^-1 it passes under. The
under strand is drawn with a gap around the crossing point.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np
import svgwrite

from torus_unknot.braids.word import BraidWord

logger = logging.getLogger('svg')


__all__ = [
    'DiagramGeometry',
    'render_braid',
    'save_braid_svg',
]


@dataclass(frozen=True)
class DiagramGeometry:
    column_width: float = 30
    strand_gap: float = 30
    margin: float = 15
    stroke_width: float = 3
    # fraction of the under strand left out around the crossing point
    under_gap: float = 0.3
    stroke: str = 'black'
    highlight_stroke: str = 'crimson'

    def __post_init__(self):
        assert self.column_width > 0 and self.strand_gap > 0, self
        assert 0 <= self.under_gap < 1, self.under_gap

    def row(self, position: int) -> float:
        return self.margin + (position - 1) * self.strand_gap

    def column(self, k: int) -> float:
        return self.margin + k * self.column_width


def _point(start, end, fraction):
    start, end = np.asarray(start, dtype=float), np.asarray(end, dtype=float)
    return tuple(np.round(start + fraction * (end - start), 3).tolist())


def _add_crossing(drawing, group, letter, x0, x1, geometry):
    upper, lower = geometry.row(letter.index), geometry.row(letter.index + 1)
    descending = ((x0, upper), (x1, lower))
    ascending = ((x0, lower), (x1, upper))
    over, under = (descending, ascending) if letter.sign > 0 else (
        ascending, descending)
    group.add(drawing.line(*over))
    half_gap = geometry.under_gap / 2
    start, end = under
    group.add(drawing.line(start, _point(start, end, 0.5 - half_gap)))
    group.add(drawing.line(_point(start, end, 0.5 + half_gap), end))


def render_braid(
        word: BraidWord,
        highlight: Iterable[int] = (),
        geometry: DiagramGeometry = DiagramGeometry(),
) -> str:
    """
    Returns the SVG document for `word`. Crossings at the 1-based positions
    in `highlight` get the class "crossing highlighted", all other crossings
    the class "crossing". The output only depends on the arguments.
    """
    highlight = set(highlight)
    for position in highlight:
        if not 1 <= position <= len(word):
            raise ValueError(
                f'Highlighted position {position} is outside of '
                f'1..{len(word)}'
            )
    width = 2 * geometry.margin + max(len(word), 1) * geometry.column_width
    height = 2 * geometry.margin + (word.strands - 1) * geometry.strand_gap
    drawing = svgwrite.Drawing(size=(width, height))
    line_style = dict(
        fill='none',
        stroke_width=geometry.stroke_width,
        stroke_linecap='round',
    )

    strands = drawing.g(class_='strands', stroke=geometry.stroke, **line_style)
    crossings = []
    for k, letter in enumerate(word.letters):
        x0, x1 = geometry.column(k), geometry.column(k + 1)
        for position in range(1, word.strands + 1):
            if position not in (letter.index, letter.index + 1):
                y = geometry.row(position)
                strands.add(drawing.line((x0, y), (x1, y)))
        if k + 1 in highlight:
            group = drawing.g(
                class_='crossing highlighted',
                stroke=geometry.highlight_stroke, **line_style,
            )
        else:
            group = drawing.g(
                class_='crossing', stroke=geometry.stroke, **line_style)
        group['id'] = f'crossing-{k + 1}'
        _add_crossing(drawing, group, letter, x0, x1, geometry)
        crossings.append(group)
    if len(word) == 0:
        for position in range(1, word.strands + 1):
            y = geometry.row(position)
            strands.add(drawing.line(
                (geometry.column(0), y), (geometry.column(1), y)))

    drawing.add(strands)
    for group in crossings:
        drawing.add(group)
    return drawing.tostring()


def save_braid_svg(path, word: BraidWord, highlight: Iterable[int] = (),
                   geometry: DiagramGeometry = DiagramGeometry()):
    path = Path(path)
    path.write_text(render_braid(word, highlight, geometry))
    logger.info(f'Wrote file: {path}')
