from collections import Counter
from . import trace

""" young.py
    Schur functor labels for GL_k: non-increasing integer k-tuples, negative
    entries allowed. Sigma^lam R (x) Sigma^mu R is decomposed with the
    Littlewood-Richardson rule: the boxes of mu are added row by row, row i
    labelled i, every label forming a horizontal strip, and the result is kept
    when the labels read right to left, top down form a lattice word.
"""


def check_label(lam, k=None):
    lam = tuple(int(c) for c in lam)
    if k is not None and len(lam) != k:
        raise ValueError(f"label {lam} has length {len(lam)}, expected {k}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"label {lam} is not non-increasing")
    return lam


def dualize(lam):
    """(-lam_k, ..., -lam_1): Sigma^lam R^vee = Sigma^dualize(lam) R"""
    return tuple(-c for c in reversed(lam))


def det_twist(lam, c):
    """label of Sigma^lam R (x) (wedge^k R)^c"""
    return tuple(x + c for x in lam)


def size(lam):
    return sum(lam)


def horizontal_strips(shape, m, rows):
    """
    Shapes nu obtained from shape by adding a horizontal strip of m boxes.

    Args:
        shape (tuple): current partition, padded to length rows
        m (int): boxes to add
        rows (int): maximal number of rows of nu

    Yields:
        nu as a tuple of length rows
    """
    def extend(r, left, prefix):
        if r == rows:
            if left == 0:
                yield tuple(prefix)
            return
        # row r may grow up to the old length of row r-1 (no two boxes in one column)
        cap = shape[r - 1] if r > 0 else shape[0] + left
        for add in range(min(left, cap - shape[r]), -1, -1):
            yield from extend(r + 1, left - add, prefix + [shape[r] + add])
    if m == 0:
        yield tuple(shape)
        return
    yield from extend(0, m, [])


def _is_lattice_word(rows_labels, count):
    seen = [0] * count
    for labels in rows_labels:
        for label in reversed(labels):
            seen[label] += 1
            if label > 0 and seen[label] > seen[label - 1]:
                return False
    return True


def _lr_partitions(lam, mu, k):
    """LR expansion of two genuine partitions of length k"""
    fillings = [(tuple(lam), tuple(() for _ in range(k)))]
    for label, m in enumerate(mu):
        if m == 0:
            break
        grown = []
        for shape, rows_labels in fillings:
            for nu in horizontal_strips(shape, m, k):
                labels = tuple(rows_labels[r] + (label,) * (nu[r] - shape[r]) for r in range(k))
                grown.append((nu, labels))
        fillings = grown
    count = sum(1 for m in mu if m)
    result = Counter()
    for shape, rows_labels in fillings:
        if _is_lattice_word(rows_labels, max(count, 1)):
            result[shape] += 1
    return result


def lr_decompose(lam, mu, k=None):
    """
    Decompose Sigma^lam (x) Sigma^mu for GL_k.

    Negative entries are handled by twisting both factors by powers of the
    determinant until they are partitions and twisting the summands back.

    Returns:
        Counter mapping label -> multiplicity
    """
    if k is None:
        k = len(lam)
    lam = check_label(lam, k)
    mu = check_label(mu, k)
    shift_lam = max(0, -min(lam)) if lam else 0
    shift_mu = max(0, -min(mu)) if mu else 0
    raw = _lr_partitions(det_twist(lam, shift_lam), det_twist(mu, shift_mu), k)
    result = Counter({det_twist(nu, -shift_lam - shift_mu): c for nu, c in raw.items()})
    trace.debug('young.lr_decompose', f"{lam} x {mu}: {len(result)} summands")
    return result


def gl_weights(lam, k=None):
    """
    Weights of Sigma^lam as a GL_k module with multiplicities, from
    semistandard tableaux: chains of horizontal strips, the i-th strip holding
    the entries i.
    """
    if k is None:
        k = len(lam)
    lam = check_label(lam, k)
    shift = max(0, -min(lam)) if lam else 0
    target = det_twist(lam, shift)
    # states: partial shape -> Counter of partial contents
    states = {(0,) * k: Counter({(): 1})}
    for i in range(1, k + 1):
        new = {}
        for shape, contents in states.items():
            for nu in _strips_inside(shape, target, i):
                added = size(nu) - size(shape)
                bucket = new.setdefault(nu, Counter())
                for content, c in contents.items():
                    bucket[content + (added,)] += c
        states = new
    final = states.get(target, Counter())
    return Counter({det_twist(content, -shift): c for content, c in final.items()})


def _strips_inside(shape, target, rows_used):
    """horizontal strips from shape staying inside target and using at most rows_used rows"""
    k = len(shape)

    def extend(r, prefix):
        if r == k:
            yield tuple(prefix)
            return
        upper = target[r] if r < rows_used else shape[r]
        if r > 0:
            upper = min(upper, shape[r - 1])
        for part in range(shape[r], upper + 1):
            yield from extend(r + 1, prefix + [part])
    yield from extend(0, [])


def ssyt_count(lam, k=None):
    """number of semistandard tableaux of shape lam with entries <= k"""
    return sum(gl_weights(lam, k).values())
