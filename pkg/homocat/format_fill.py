"""fixed width text tables for the text report"""


def format_fill(justify, row, widths):
    """format one row of a table with fixed column widths
       A cell wider than its column borrows from the next one so later
       columns stay aligned where possible.
       Args:
         justify (string): 'left' or 'right'
         row (list): cell values, converted with str()
         widths (list): width for each column
       Returns:
         the row as a single line, without a newline
    """
    if justify not in ('left', 'right'):
        raise ValueError(f"justify must be 'left' or 'right', got {justify!r}")
    out = ''
    planned = 0
    for item, width in zip(row, widths):
        overflow = max(0, len(out) - planned)
        cell = max(0, width - overflow)
        if justify == 'right':
            out += f"{str(item):>{cell}} "
        else:
            out += f"{str(item):<{cell}} "
        planned += width + 1
    return out.rstrip()


def column_widths(rows, cap=40):
    """widest cell per column, capped"""
    widths = []
    for row in rows:
        for i, item in enumerate(row):
            w = min(len(str(item)), cap)
            if i == len(widths):
                widths.append(w)
            elif w > widths[i]:
                widths[i] = w
    return widths


def table(rows, header=None, justify='left'):
    """lines of a text table; header is underlined with dashes"""
    rows = [list(r) for r in rows]
    everything = ([list(header)] if header else []) + rows
    widths = column_widths(everything)
    lines = []
    if header:
        lines.append(format_fill(justify, header, widths))
        lines.append(format_fill(justify, ['-' * w for w in widths], widths))
    lines.extend(format_fill(justify, r, widths) for r in rows)
    return lines
