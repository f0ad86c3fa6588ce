from dataclasses import dataclass
from itertools import combinations
from . import homocat_config
from . import rootsys
from . import trace

""" parab.py
    Parabolic subgroups W_P, minimal coset representatives W^P, Schubert
    counts, the Young diagram bijection for Grassmannians and Bruhat order.

    A ParabolicSpec carries the omitted simple roots I: W_P is generated by the
    simple reflections whose index is not in I, so P(alpha_k) is ParabolicSpec(rs, {k}).
"""


@dataclass(frozen=True)
class ParabolicSpec:
    rs: rootsys.RootSystem
    omitted: frozenset

    def __post_init__(self):
        count = len(rootsys.simple_roots(self.rs))
        bad = [i for i in self.omitted if not 1 <= i <= count]
        if bad:
            raise ValueError(f"parabolic indices {sorted(bad)} out of range 1..{count} "
                             f"for {self.rs}")

    def levi_generators(self):
        count = len(rootsys.simple_roots(self.rs))
        return [i for i in range(1, count + 1) if i not in self.omitted]


def parabolic(family, rank, omitted):
    """ParabolicSpec from a family letter, rank and an int or iterable of omitted indices"""
    if isinstance(omitted, int):
        omitted = (omitted,)
    return ParabolicSpec(rootsys.root_system(family, rank), frozenset(omitted))


def _check_budget(rs):
    order = rootsys.weyl_group_order(rs)
    if order > homocat_config.weyl_budget:
        raise ValueError(f"|W({rs})| = {order} exceeds weyl_budget {homocat_config.weyl_budget}")
    return order


def minimal_coset_reps(p):
    """
    Minimal length representatives of W/W_P.

    Args:
        p (ParabolicSpec): root system and omitted simple roots

    Returns:
        list of WeylElement sending every W_P simple root to a positive root
    """
    order = _check_budget(p.rs)
    simples = rootsys.simple_roots(p.rs)
    levi = [simples[i - 1] for i in p.levi_generators()]
    reps = [w for w in rootsys.weyl_group(p.rs)
            if all(rootsys.is_positive(w.apply(alpha)) for alpha in levi)]
    trace.debug('parab.minimal_coset_reps', f"{p.rs} I={sorted(p.omitted)}: {len(reps)} of {order}")
    return reps


def schubert_count(p):
    return len(minimal_coset_reps(p))


def parabolic_subgroup_order(p):
    """|W_P| by closing the Levi generators under multiplication"""
    _check_budget(p.rs)
    gens = [rootsys.reflection(p.rs, i) for i in p.levi_generators()]
    start = rootsys.identity(p.rs.rank)
    seen = {start}
    frontier = [start]
    while frontier:
        new = []
        for w in frontier:
            for s in gens:
                u = rootsys.compose(w, s)
                if u not in seen:
                    seen.add(u)
                    new.append(u)
        frontier = new
    return len(seen)


def grass_indices(k, n):
    """I_{k,n}: increasing k-tuples in [1, n]"""
    return list(combinations(range(1, n + 1), k))


def isotropic_indices(k, n):
    """k-subsets of [1, 2n] containing no pair {i, 2n+1-i}"""
    return [idx for idx in combinations(range(1, 2 * n + 1), k)
            if not any(2 * n + 1 - i in idx for i in idx)]


def young_diagrams(k, m):
    """Y(k, m): diagrams with at most k rows and m columns, as non-increasing k-tuples"""
    def grow(prefix, bound):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for part in range(bound, -1, -1):
            yield from grow(prefix + [part], part)
    return list(grow([], m))


def _check_grass_index(k, n, idx):
    idx = tuple(idx)
    if len(idx) != k or any(not 1 <= i <= n for i in idx) or \
            any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{idx} is not in I_{{{k},{n}}}")
    return idx


def grass_young_bijection(k, n, idx):
    """lambda(i)_t = i_{k-t+1} - (k-t+1)"""
    idx = _check_grass_index(k, n, idx)
    return tuple(idx[k - t] - (k - t + 1) for t in range(1, k + 1))


def young_grass_bijection(k, n, lam):
    """inverse of grass_young_bijection"""
    if len(lam) != k or any(not 0 <= p <= n - k for p in lam):
        raise ValueError(f"{tuple(lam)} is not in Y({k}, {n - k})")
    return tuple(lam[k - j] + j for j in range(1, k + 1))


def subword_products(rs, word):
    """all products of subwords of word (1-based reflection indices)"""
    products = {rootsys.identity(rs.rank)}
    for i in word:
        s = rootsys.reflection(rs, i)
        products |= {rootsys.compose(x, s) for x in products}
    return products


def word_element(rs, word):
    """s_{i_1} ... s_{i_m} for a word of 1-based simple reflection indices"""
    w = rootsys.identity(rs.rank)
    for i in word:
        w = rootsys.compose(w, rootsys.reflection(rs, i))
    return w


def bruhat_leq(a, b, rs=None):
    """
    Bruhat order. GrassIndex tuples (type A or isotropic) compare componentwise;
    Weyl elements use the subword criterion on one reduced word of b, so rs is needed.
    """
    if isinstance(a, rootsys.WeylElement) and isinstance(b, rootsys.WeylElement):
        if rs is None:
            raise ValueError("bruhat_leq on Weyl elements needs the root system")
        if len(a.perm) != rs.rank or len(b.perm) != rs.rank:
            raise ValueError(f"Weyl elements do not belong to {rs}")
        return a in subword_products(rs, rootsys.reduced_word(rs, b))
    if isinstance(a, rootsys.WeylElement) or isinstance(b, rootsys.WeylElement):
        raise ValueError("bruhat_leq: mismatched operand kinds")
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError(f"bruhat_leq: index tuples {a} and {b} differ in length")
    return all(x <= y for x, y in zip(a, b))


def contains(lam, mu):
    """Young diagram containment mu inside lam"""
    return all(m <= p for p, m in zip(lam, mu))
