from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from sympy import Rational, Integer

""" rootsys.py
    Classical root systems A/B/C/D in epsilon coordinates.

    Weights are tuples of sympy Rationals. Family A of rank r is the GL_r
    convention: r-vectors, Weyl group S_r, no sign changes. Weyl elements are
    signed permutations acting by  w(v)_i = signs[i] * v[perm[i]].
"""

FAMILIES = ('A', 'B', 'C', 'D')
HALF = Rational(1, 2)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unsupported root system family: {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == 'D' and self.rank < 2:
            raise ValueError("family D needs rank >= 2")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class WeylElement:
    perm: tuple
    signs: tuple

    def apply(self, v):
        return tuple(s * v[p] for p, s in zip(self.perm, self.signs))

    def is_identity(self):
        return self.perm == tuple(range(len(self.perm))) and all(s == 1 for s in self.signs)


@dataclass(frozen=True)
class Reduction:
    """outcome of dominant_reduce: singular when w is None"""
    w: WeylElement = None
    length: int = None
    dominant: tuple = None

    @property
    def singular(self):
        return self.w is None


SINGULAR = Reduction()


def root_system(family, rank):
    return RootSystem(str(family).upper(), int(rank))


def weight(coords):
    """Convert ints, strings such as '1/2', or Rationals into a weight tuple."""
    try:
        return tuple(Rational(c) for c in coords)
    except (TypeError, ValueError):
        raise ValueError(f"not a rational vector: {coords!r}")


def check_lattice(w):
    """raise unless all coordinates share one fractional part in {0, 1/2}"""
    parts = {c - (c // 1) for c in w}
    if len(parts) > 1 or not parts <= {Integer(0), HALF}:
        raise ValueError(f"weight {format_weight(w)} mixes fractional parts "
                         "or is not half-integral")
    return w


def format_weight(w):
    return ','.join(str(c) for c in w)


def identity(rank):
    return WeylElement(tuple(range(rank)), (1,) * rank)


def compose(a, b):
    """a o b, i.e. apply b first"""
    perm = tuple(b.perm[p] for p in a.perm)
    signs = tuple(s * b.signs[p] for p, s in zip(a.perm, a.signs))
    return WeylElement(perm, signs)


def inverse(w):
    r = len(w.perm)
    perm = [0] * r
    signs = [1] * r
    for i, p in enumerate(w.perm):
        perm[p] = i
        signs[p] = w.signs[i]
    return WeylElement(tuple(perm), tuple(signs))


def _unit(r, i, c=1):
    v = [0] * r
    v[i] = c
    return v


def positive_roots(rs):
    """
    Positive roots in epsilon coordinates.

    Args:
        rs (RootSystem): family and rank

    Returns:
        list of integer tuples; A: e_i-e_j, B: e_i+-e_j and e_i,
        C: e_i+-e_j and 2e_i, D: e_i+-e_j (i < j in every case)
    """
    r = rs.rank
    roots = []
    for i in range(r):
        for j in range(i + 1, r):
            v = _unit(r, i)
            v[j] = -1
            roots.append(tuple(v))
            if rs.family != 'A':
                v = _unit(r, i)
                v[j] = 1
                roots.append(tuple(v))
    if rs.family == 'B':
        roots.extend(tuple(_unit(r, i)) for i in range(r))
    elif rs.family == 'C':
        roots.extend(tuple(_unit(r, i, 2)) for i in range(r))
    return roots


def simple_roots(rs):
    r = rs.rank
    roots = []
    for i in range(r - 1):
        v = _unit(r, i)
        v[i + 1] = -1
        roots.append(tuple(v))
    if rs.family == 'B':
        roots.append(tuple(_unit(r, r - 1)))
    elif rs.family == 'C':
        roots.append(tuple(_unit(r, r - 1, 2)))
    elif rs.family == 'D':
        v = _unit(r, r - 2)
        v[r - 1] = 1
        roots.append(tuple(v))
    return roots


def fundamental_weight(rs, i):
    """omega_i, 1-based"""
    r = rs.rank
    count = len(simple_roots(rs))
    if not 1 <= i <= count:
        raise ValueError(f"fundamental weight index {i} out of range for {rs}")
    ones = tuple(Integer(1) if t < i else Integer(0) for t in range(r))
    if rs.family == 'B' and i == r:
        return (HALF,) * r
    if rs.family == 'D' and i == r - 1:
        return (HALF,) * (r - 1) + (-HALF,)
    if rs.family == 'D' and i == r:
        return (HALF,) * r
    return ones


def inner(u, v):
    return sum(a * b for a, b in zip(u, v))


def is_positive(v):
    for c in v:
        if c != 0:
            return c > 0
    return False


def rho(rs):
    """Half sum of the positive roots; for family A the shift (r-1, ..., 1, 0)."""
    r = rs.rank
    if rs.family == 'A':
        return tuple(Integer(r - 1 - i) for i in range(r))
    total = [Integer(0)] * r
    for alpha in positive_roots(rs):
        for i, c in enumerate(alpha):
            total[i] += c
    return tuple(c * HALF for c in total)


def weyl_length(rs, w):
    """number of positive roots sent to negative roots"""
    return sum(1 for alpha in positive_roots(rs) if not is_positive(w.apply(alpha)))


def reflection(rs, i):
    """simple reflection s_i (1-based) as a signed permutation"""
    r = rs.rank
    count = len(simple_roots(rs))
    if not 1 <= i <= count:
        raise ValueError(f"simple reflection index {i} out of range for {rs}")
    perm = list(range(r))
    signs = [1] * r
    if i < r:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    elif rs.family in ('B', 'C'):
        signs[r - 1] = -1
    else:
        perm[r - 2], perm[r - 1] = r - 1, r - 2
        signs[r - 2] = signs[r - 1] = -1
    return WeylElement(tuple(perm), tuple(signs))


def simple_reflections(rs):
    return [reflection(rs, i) for i in range(1, len(simple_roots(rs)) + 1)]


def weyl_group_order(rs):
    r = rs.rank
    if rs.family == 'A':
        return factorial(r)
    if rs.family == 'D':
        return 2 ** (r - 1) * factorial(r)
    return 2 ** r * factorial(r)


def weyl_group(rs):
    """iterate over all elements of W"""
    r = rs.rank
    for perm in permutations(range(r)):
        if rs.family == 'A':
            yield WeylElement(perm, (1,) * r)
            continue
        for signs in product((1, -1), repeat=r):
            if rs.family == 'D' and signs.count(-1) % 2:
                continue
            yield WeylElement(perm, signs)


def reduced_word(rs, w):
    """A reduced word for w found by greedy right descents, as 1-based indices."""
    simples = simple_roots(rs)
    word = []
    while not w.is_identity():
        for i, alpha in enumerate(simples, start=1):
            if not is_positive(w.apply(alpha)):
                w = compose(w, reflection(rs, i))
                word.append(i)
                break
    word.reverse()
    return word


def is_dominant(rs, nu):
    r = rs.rank
    if len(nu) != r:
        return False
    if any(nu[i] < nu[i + 1] for i in range(r - 2)):
        return False
    if rs.family == 'D':
        return r == 1 or nu[r - 2] >= abs(nu[r - 1])
    if r >= 2 and nu[r - 2] < nu[r - 1]:
        return False
    if rs.family in ('B', 'C') and nu[r - 1] < 0:
        return False
    if rs.family == 'C' and any(c != c // 1 for c in nu):
        return False
    return True


def _sign(c):
    return -1 if c < 0 else 1


def dominant_reduce(rs, delta):
    """
    Move a shifted weight delta = lambda + rho into the dominant chamber.

    Returns SINGULAR when a reflection fixes delta, otherwise Reduction with
    the unique w such that w(delta) is strictly dominant, l(w) and w(delta).
    """
    r = rs.rank
    delta = weight(delta)
    if len(delta) != r:
        raise ValueError(f"weight {format_weight(delta)} has length {len(delta)}, expected {r}")
    if rs.family == 'A':
        if len(set(delta)) < r:
            return SINGULAR
        perm = tuple(sorted(range(r), key=lambda i: -delta[i]))
        w = WeylElement(perm, (1,) * r)
    else:
        absolute = [abs(c) for c in delta]
        if len(set(absolute)) < r:
            return SINGULAR
        if rs.family in ('B', 'C') and 0 in absolute:
            return SINGULAR
        perm = tuple(sorted(range(r), key=lambda i: -absolute[i]))
        signs = [_sign(delta[p]) for p in perm]
        if rs.family == 'D' and signs.count(-1) % 2:
            # odd number of sign changes: the smallest entry keeps (or takes) a minus sign
            signs[r - 1] = -signs[r - 1]
        w = WeylElement(perm, tuple(signs))
    dominant = w.apply(delta)
    return Reduction(w, weyl_length(rs, w), dominant)


def weyl_dim(rs, nu):
    """Weyl dimension formula prod <nu+rho, a> / <rho, a> over positive roots."""
    nu = weight(nu)
    if not is_dominant(rs, nu):
        raise ValueError(f"weight {format_weight(nu)} is not dominant for {rs}")
    shift = rho(rs)
    shifted = tuple(a + b for a, b in zip(nu, shift))
    dim = Integer(1)
    for alpha in positive_roots(rs):
        dim *= Integer(inner(shifted, alpha)) / inner(shift, alpha)
    if dim.q != 1:
        raise ValueError(f"weight {format_weight(nu)} is not integral for {rs}")
    return int(dim)


def spin_weights(r):
    """the 2^r weights (+-1/2, ..., +-1/2) of the spin representation of B_r"""
    return [tuple(s * HALF for s in signs) for signs in product((1, -1), repeat=r)]


def parabolic_spin_weights(r, i):
    """
    Weights of the irreducible P(alpha_i)-module generated by the highest weight
    vector of the spin representation of B_r: spin weights omega_r - sum c_j alpha_j
    with c_j >= 0 and c_i = 0.
    """
    if not 1 <= i <= r:
        raise ValueError(f"parabolic index {i} out of range for B{r}")
    top = (HALF,) * r
    found = []
    for w in spin_weights(r):
        diff = [a - b for a, b in zip(top, w)]
        # simple roots e_j - e_{j+1}, e_r: coefficient c_j is a prefix sum
        coeffs = [sum(diff[:j + 1]) for j in range(r)]
        if coeffs[i - 1] == 0 and all(c >= 0 for c in coeffs):
            found.append(w)
    return found
