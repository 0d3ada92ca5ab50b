import pytest

from torus_unknot.braids import BraidWord, toric_braid
from torus_unknot.visualization import (
    DiagramGeometry, render_braid, save_braid_svg,
)


def test_line_count():
    # two segments for the under strand, one for the over strand
    svg = render_braid(toric_braid(2, 3))
    assert svg.count('<line') == 9

    # 3 crossings and one passing strand per column
    svg = render_braid(toric_braid(4, 1))
    assert svg.count('<line') == 3 * 3 + 3 * 2


def test_highlight():
    word = toric_braid(3, 2)
    svg = render_braid(word, highlight=[4])
    assert svg.count('class="crossing highlighted"') == 1
    assert 'id="crossing-4"' in svg
    assert 'stroke="crimson"' in svg
    assert 'stroke="crimson"' not in render_braid(word)

    svg = render_braid(word, [1], DiagramGeometry(highlight_stroke='blue'))
    assert 'stroke="blue"' in svg

    for position in [0, 5]:
        with pytest.raises(ValueError):
            render_braid(word, highlight=[position])


def test_empty_word():
    svg = render_braid(BraidWord.empty(3))
    assert svg.count('<line') == 3
    assert 'class="crossing' not in svg


def test_save(tmp_path):
    path = tmp_path / 'trefoil.svg'
    save_braid_svg(path, toric_braid(2, 3), highlight=[2])
    assert path.read_text() == render_braid(toric_braid(2, 3), [2])
