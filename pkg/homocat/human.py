from sympy import Rational


def weight_str(weight):
    """
    Convert a weight to the comma separated form used on the command line.

    Args:
        weight (tuple): rationals or ints

    Returns:
        str: e.g. "1/2,-1/2,0"
    """
    return ','.join(str(Rational(c)) for c in weight)


def parse_weight(text):
    """inverse of weight_str; raises ValueError on junk"""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(Rational(part.strip()) for part in text.split(','))
    except (TypeError, ValueError, SyntaxError):
        raise ValueError(f"not a comma separated list of rationals: {text!r}")


def parse_label(text):
    """integer label such as '2,1,0'"""
    weight = parse_weight(text)
    if any(c.q != 1 for c in weight):
        raise ValueError(f"label {text!r} must have integer entries")
    return tuple(int(c) for c in weight)


def _base_name(base):
    parts = [c for c in base if c != 0]
    if not parts:
        return 'O'
    if parts == [1]:
        return 'R'
    if len(parts) == 1:
        return f"Sym^{parts[0]} R"
    if all(c == 1 for c in parts):
        return f"wedge^{len(parts)} R"
    return 'Sigma^{' + ','.join(str(c) for c in parts) + '} R'


def bundle_name(schur, l_twist=0):
    """
    Human readable name of Sigma^schur R (x) L^l_twist, with O(-1) = wedge^k R.

    e.g. (2,1,1) -> "R(-1)", (2,2,2) + L -> "O(-2) (x) L", (3,1,0) -> "Sigma^{3,1} R"
    """
    schur = tuple(int(c) for c in schur)
    if not schur:
        return 'O'
    c = schur[-1]
    base = tuple(x - c for x in schur)
    name = _base_name(base)
    if c:
        name += f"({-c})"
    if l_twist:
        name += ' (x) L' if l_twist == 1 else f' (x) L^{l_twist}'
    return name


if __name__ == '__main__':
    for label, twist in [((0, 0, 0), 0), ((1, 0, 0), 1), ((2, 1, 1), 0), ((2, 2, 0), 0),
                         ((3, 3, 3), 1), ((1, 1, -1), 0), ((4, 3), 0)]:
        print(f"{weight_str(label):>10} {twist}  {bundle_name(label, twist)}")
