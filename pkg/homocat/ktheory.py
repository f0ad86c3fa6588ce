from dataclasses import dataclass
from math import comb
from sympy import ImmutableMatrix
from sympy.matrices.expressions.kronecker import matrix_kronecker_product
from . import excseq
from . import trace

""" ktheory.py
    The Euler form in an exceptional basis and what mutations do to classes.

    A MutationState keeps the Gram matrix of the starting collection fixed and
    tracks each object of the mutated collection as an integer vector in the
    starting basis. Shifts are absorbed into signs: [X[1]] = -[X].
"""

LEFT = 'left'
RIGHT = 'right'


def gram_from_collection(geometry, labels):
    """
    G[i][j] = chi(E_i, E_j) = sum_k (-1)^k dim Ext^k(E_i, E_j).

    Args:
        geometry: anything verify_collection accepts
        labels (list): the collection, in order

    Returns:
        sympy ImmutableMatrix
    """
    if not hasattr(geometry, 'ext'):
        raise ValueError(f"unsupported geometry: {geometry!r}")
    labels = [geometry.check_label(excseq.raw_label(label)) for label in labels]
    tables = excseq.pairwise_ext(geometry, labels)
    n = len(labels)
    return ImmutableMatrix(n, n, lambda i, j: tables[i, j].euler())


def projective_gram(n):
    """chi(O(a), O(b)) = C(n+b-a, n) on P^n for the basis O, O(1), ..., O(n)"""
    return ImmutableMatrix(n + 1, n + 1, lambda a, b: comb(n + b - a, n) if b >= a - n else 0)


def is_unit_upper_triangular(gram):
    n = gram.rows
    return all(gram[i, i] == 1 for i in range(n)) and \
        all(gram[i, j] == 0 for i in range(n) for j in range(i))


def kron_gram(gx, gy):
    """Gram matrix of (E_i (x) F_j) ordered by i, then j"""
    return ImmutableMatrix(matrix_kronecker_product(ImmutableMatrix(gx), ImmutableMatrix(gy)))


@dataclass(frozen=True)
class MutationState:
    """classes[i] is the K-class of the i-th object in the basis the gram matrix was taken in"""
    classes: tuple
    gram: tuple

    def chi(self, u, v):
        return sum(u[a] * g * v[b] for a, row in enumerate(self.gram) for b, g in enumerate(row)
                   if u[a] and v[b])

    def __len__(self):
        return len(self.classes)

    def is_semiorthonormal(self):
        n = len(self.classes)
        if any(self.chi(c, c) != 1 for c in self.classes):
            return False
        return all(self.chi(self.classes[j], self.classes[i]) == 0
                   for i in range(n) for j in range(i + 1, n))


def initial_state(gram, classes=None):
    """
    State for a collection with Gram matrix gram; classes default to the
    standard basis, i.e. the collection itself.
    """
    gram = ImmutableMatrix(gram)
    if gram.rows != gram.cols:
        raise ValueError(f"Gram matrix must be square, got {gram.shape}")
    n = gram.rows
    form = tuple(tuple(int(gram[i, j]) for j in range(n)) for i in range(n))
    if classes is None:
        classes = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    state = MutationState(tuple(tuple(int(c) for c in v) for v in classes), form)
    if len(state.classes) != n or any(len(v) != n for v in state.classes):
        raise ValueError(f"need {n} classes of length {n}")
    if not state.is_semiorthonormal():
        raise ValueError("classes are not semi-orthonormal for the Euler form")
    return state


def _combine(a, u, b, v):
    return tuple(a * x + b * y for x, y in zip(u, v))


def left_mutate_class(state, e, f):
    """[L_E F] = chi(E, F)[E] - [F]"""
    return _combine(state.chi(e, f), e, -1, f)


def right_mutate_class(state, e, f):
    """[R_F E] = chi(E, F)[F] - [E]"""
    return _combine(state.chi(e, f), f, -1, e)


def mutate(state, i, direction):
    """
    L_i or R_i on positions i, i+1 (1-based).

    left:  (.., E_i, E_{i+1}, ..) -> (.., L_{E_i} E_{i+1}, E_i, ..)
    right: (.., E_i, E_{i+1}, ..) -> (.., E_{i+1}, R_{E_{i+1}} E_i, ..)
    """
    n = len(state.classes)
    if not 1 <= i <= n - 1:
        raise ValueError(f"mutation index {i} out of range 1..{n - 1}")
    classes = list(state.classes)
    e, f = classes[i - 1], classes[i]
    if direction == LEFT:
        classes[i - 1], classes[i] = left_mutate_class(state, e, f), e
    elif direction == RIGHT:
        classes[i - 1], classes[i] = f, right_mutate_class(state, e, f)
    else:
        raise ValueError(f"unknown mutation direction {direction!r}")
    return MutationState(tuple(classes), state.gram)


def apply_word(state, word):
    """word: iterable of (i, direction), applied left to right"""
    for i, direction in word:
        state = mutate(state, i, direction)
    return state


def random_word(rng, n, length):
    return [(rng.randint(1, n - 1), rng.choice((LEFT, RIGHT))) for _ in range(length)]


def dual_sequence(state, side):
    """
    Classes of a dual collection.

    right: E_i^vee = L_{E_1} L_{E_2} ... L_{E_{n-i}} E_{n-i+1}
    left:  vee E_i = R_{E_n} R_{E_{n-1}} ... R_{E_{n-i+2}} E_{n-i+1}
    """
    es = state.classes
    n = len(es)
    duals = []
    for i in range(1, n + 1):
        c = es[n - i]
        if side == RIGHT:
            for j in range(n - i, 0, -1):
                c = left_mutate_class(state, es[j - 1], c)
        elif side == LEFT:
            for j in range(n - i + 2, n + 1):
                c = right_mutate_class(state, c, es[j - 1])
        else:
            raise ValueError(f"unknown dual side {side!r}")
        duals.append(c)
    return duals


def duality_pairing(state, side):
    """chi(E_i, E_j^vee) for the right dual, chi(vee E_i, E_j) for the left dual"""
    duals = dual_sequence(state, side)
    n = len(duals)
    if side == RIGHT:
        return [[state.chi(state.classes[i], duals[j]) for j in range(n)] for i in range(n)]
    return [[state.chi(duals[i], state.classes[j]) for j in range(n)] for i in range(n)]


def omega_class(n, j):
    """[Omega^j(j)] on P^n in the basis O, O(1), ..., O(n)"""
    v = [0] * (n + 1)
    for t in range(j + 1):
        v[t] = (-1) ** t * comb(n + 1, j - t)
    return tuple(v)


def beilinson_omega_state(n):
    """(Omega^n(n), ..., Omega^1(1), O) on P^n, in the basis of line bundles"""
    return initial_state(projective_gram(n), [omega_class(n, j) for j in range(n, -1, -1)])


def braid_check(state, rng, words=100, length=8):
    """
    Inverse and braid relations on random words.

    Returns:
        list of failing (word, relation) pairs; empty when everything holds
    """
    n = len(state.classes)
    failures = []
    if n < 2:
        return failures
    for _ in range(words):
        word = random_word(rng, n, length)
        s = apply_word(state, word)
        if not s.is_semiorthonormal():
            failures.append((word, 'semiorthonormal'))
        for i in range(1, n):
            back = (mutate(mutate(s, i, LEFT), i, RIGHT), mutate(mutate(s, i, RIGHT), i, LEFT))
            if back != (s, s):
                failures.append((word, f'inverse {i}'))
        for i in range(1, n - 1):
            for d in (LEFT, RIGHT):
                a = apply_word(s, [(i, d), (i + 1, d), (i, d)])
                b = apply_word(s, [(i + 1, d), (i, d), (i + 1, d)])
                if a != b:
                    failures.append((word, f'braid {i} {d}'))
    trace.debug('ktheory.braid_check', f"{words} words of length {length} on {n} objects: "
                f"{len(failures)} failures")
    return failures
