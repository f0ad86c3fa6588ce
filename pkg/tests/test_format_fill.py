import pytest

from homocat import format_fill


def test_left_and_right():
    assert format_fill.format_fill('left', ['a', 'b'], [3, 3]) == 'a   b'
    assert format_fill.format_fill('right', ['a', 'b'], [3, 3]) == '  a   b'


def test_wide_cell_borrows_from_next_column():
    line = format_fill.format_fill('left', ['aaaaa', 'b', 'c'], [3, 3, 3])
    assert line == 'aaaaa b c'
    assert line.index('c') == 8


def test_bad_justify():
    with pytest.raises(ValueError):
        format_fill.format_fill('centre', ['a'], [1])


def test_table():
    lines = format_fill.table([['x0', 1], ['x10', 22]], header=['name', 'n'])
    assert lines == ['name n', '---- --', 'x0   1', 'x10  22']
