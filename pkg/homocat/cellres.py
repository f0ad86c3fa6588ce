from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring
from . import homocat_config
from . import pool_util
from . import trace

""" cellres.py
    Cellular resolutions of monomial ideals and the degeneration of the
    diagonal of P^n x P^n.

    S = k[x_0..x_n, y_0..y_n]. J = (x_i y_j, i < j) is the monomial ideal of the
    degenerate diagonal, I = (x_i y_j - x_j y_i) the ideal of the diagonal.
    Y^n is the cell complex whose h-faces are pairs (i_1 < ... < i_{h+2}, mu1)
    with 0 <= mu1 <= h; the face spans the vertices x_{i_a} y_{i_b} with
    a <= mu1 + 1 < b.

    Homological degree -1 of every complex is the ring itself, so the last map
    is the augmentation onto the generators.
"""

EMPTY = None


@lru_cache(maxsize=None)
def polynomial_ring(names):
    """sympy sparse polynomial ring over ZZ on the given variable names"""
    R, *gens = ring(','.join(names), ZZ)
    return R


def coordinate_names(n):
    return tuple(f"x{i}" for i in range(n + 1)) + tuple(f"y{i}" for i in range(n + 1))


def coordinate_ring(n):
    """(R, xs, ys) for k[x_0..x_n, y_0..y_n]"""
    R = polynomial_ring(coordinate_names(n))
    return R, R.gens[:n + 1], R.gens[n + 1:]


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(monomials):
    return tuple(max(c) for c in zip(*monomials))


def monomial_str(names, exps):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return '*'.join(parts) or '1'


@dataclass(frozen=True)
class MonomialIdeal:
    """minimal generators as exponent vectors over the variables in names"""
    generators: tuple
    names: tuple

    def __post_init__(self):
        for g in self.generators:
            if len(g) != len(self.names):
                raise ValueError(f"generator {g} does not match {len(self.names)} variables")
        for a, b in combinations(self.generators, 2):
            if divides(a, b) or divides(b, a):
                raise ValueError(f"generators {monomial_str(self.names, a)} and "
                                 f"{monomial_str(self.names, b)} are not minimal")

    @property
    def ring(self):
        return polynomial_ring(self.names)


def _xy(n, xs=(), ys=()):
    v = [0] * (2 * n + 2)
    for i in xs:
        v[i] += 1
    for j in ys:
        v[n + 1 + j] += 1
    return tuple(v)


def ideal_J(n):
    """(x_i y_j : 0 <= i < j <= n)"""
    gens = tuple(_xy(n, (i,), (j,)) for i, j in combinations(range(n + 1), 2))
    return MonomialIdeal(gens, coordinate_names(n))


# ---------------------------------------------------------------- cell complexes

@dataclass(frozen=True, order=True)
class YnFace:
    """f_{i_1} ^ ... ^ f_{i_{h+2}} (x) xi^mu1 eta^mu2, h = len(indices) - 2, mu2 = h - mu1"""
    indices: tuple
    mu1: int

    @property
    def h(self):
        return len(self.indices) - 2

    @property
    def mu2(self):
        return self.h - self.mu1

    def vertices(self):
        rows, cols = self.indices[:self.mu1 + 1], self.indices[self.mu1 + 1:]
        return frozenset(YnFace((i, j), 0) for i in rows for j in cols)

    def label(self, n):
        return _xy(n, self.indices[:self.mu1 + 1], self.indices[self.mu1 + 1:])


@dataclass
class CellComplex:
    """
    faces: key -> (dimension, frozenset of vertex keys)
    incidence: (face, facet) -> +1 or -1; a vertex has the facet EMPTY
    labels: vertex key -> monomial exponent vector
    """
    faces: dict
    incidence: dict
    labels: dict
    names: tuple = ()

    def __post_init__(self):
        self._facets = {}
        for (e, f), sign in self.incidence.items():
            self._facets.setdefault(e, []).append((f, sign))

    def dimension(self, key):
        return -1 if key is EMPTY else self.faces[key][0]

    def keys(self, h):
        if h == -1:
            return [EMPTY]
        return sorted(k for k, (d, _) in self.faces.items() if d == h)

    @property
    def top(self):
        return max((d for d, _ in self.faces.values()), default=-1)

    def f_vector(self):
        return [len(self.keys(h)) for h in range(self.top + 1)]

    def label(self, key):
        if key is EMPTY:
            return (0,) * len(self.names)
        return monomial_lcm([self.labels[v] for v in self.faces[key][1]])

    def facets(self, key):
        return self._facets.get(key, [])


def yn_build(n):
    """Y^n with incidence signs (-1)^l (row l erased) and (-1)^(mu1+j) (column j erased)"""
    if n < 1:
        raise ValueError(f"Y^n needs n >= 1, got {n}")
    faces, incidence = {}, {}
    for h in range(n):
        for indices in combinations(range(n + 1), h + 2):
            for mu1 in range(h + 1):
                e = YnFace(indices, mu1)
                faces[e] = (h, e.vertices())
                if h == 0:
                    incidence[e, EMPTY] = 1
                    continue
                if mu1 >= 1:
                    for l in range(1, mu1 + 2):
                        rest = indices[:l - 1] + indices[l:]
                        incidence[e, YnFace(rest, mu1 - 1)] = (-1) ** l
                if e.mu2 >= 1:
                    for j in range(1, e.mu2 + 2):
                        pos = mu1 + j
                        rest = indices[:pos] + indices[pos + 1:]
                        incidence[e, YnFace(rest, mu1)] = (-1) ** (mu1 + j)
    labels = {v: v.label(n) for v, (d, _) in faces.items() if d == 0}
    X = CellComplex(faces, incidence, labels, coordinate_names(n))
    trace.debug('cellres.yn_build', f"Y^{n}: f-vector {X.f_vector()}")
    return X


def simplex_complex(labels, names):
    """one simplex on len(labels) vertices; faces are vertex tuples, signs (-1)^position"""
    k = len(labels)
    faces, incidence = {}, {}
    for size in range(1, k + 1):
        for face in combinations(range(k), size):
            faces[face] = (size - 1, frozenset((v,) for v in face))
            if size == 1:
                incidence[face, EMPTY] = 1
            else:
                for pos in range(size):
                    incidence[face, face[:pos] + face[pos + 1:]] = (-1) ** pos
    return CellComplex(faces, incidence, {(v,): tuple(labels[v]) for v in range(k)}, tuple(names))


@dataclass
class Audit:
    ok: bool
    violation: tuple = None

    def __bool__(self):
        return self.ok


def incidence_audit(X):
    """
    Every codimension 2 face of a face e lies in exactly two facets e1, e2 of e and
    eps(e, e1) eps(e1, e'') + eps(e, e2) eps(e2, e'') = 0.

    Returns:
        Audit; violation is (e, e'', [(e1, eps(e, e1), eps(e1, e'')), ...]) for the first failure
    """
    for h in range(1, X.top + 1):
        for e in X.keys(h):
            through = {}
            for f, s1 in X.facets(e):
                for g, s2 in X.facets(f):
                    through.setdefault(g, []).append((f, s1, s2))
            for g, paths in through.items():
                if len(paths) != 2 or sum(s1 * s2 for _, s1, s2 in paths) != 0:
                    return Audit(False, (e, g, paths))
    return Audit(True)


# ---------------------------------------------------------------- graded complexes

@dataclass(frozen=True)
class Basis:
    key: object
    multidegree: tuple = None
    bidegree: tuple = None


@dataclass
class GradedComplex:
    """
    bases[h]: list of Basis for homological degree h = -1 .. top (-1 is S itself)
    maps[h]: {(row, col): polynomial} for the differential from degree h to h - 1
    """
    ring: object
    split: int
    bases: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)

    @property
    def top(self):
        return max(self.bases)

    def rank(self, h):
        return len(self.bases.get(h, []))

    def ranks(self):
        return [self.rank(h) for h in range(self.top + 1)]

    def matrix(self, h):
        """dense list of lists of polynomials for the map out of degree h"""
        zero = self.ring.zero
        rows = [[zero] * self.rank(h) for _ in range(self.rank(h - 1))]
        for (r, c), p in self.maps.get(h, {}).items():
            rows[r][c] = p
        return rows

    def d_squared_zero(self):
        for h in range(1, self.top + 1):
            by_col = {}
            for (r, k), q in self.maps.get(h - 1, {}).items():
                by_col.setdefault(k, []).append((r, q))
            out = {}
            for (k, c), p in self.maps.get(h, {}).items():
                for r, q in by_col.get(k, []):
                    out[r, c] = out.get((r, c), self.ring.zero) + q * p
            if any(out.values()):
                return False
        return True


def _bidegree(exps, split):
    if split is None:
        return None
    return (sum(exps[:split]), sum(exps[split:]))


def cellular_complex(X, M):
    """
    F_{X,M}: one basis element per face, d(e) = sum eps(e, e') (m_e / m_e') e'.

    Raises:
        ValueError when the vertex labels of X are not the generators of M
    """
    if sorted(X.labels.values()) != sorted(M.generators):
        raise ValueError("vertex labels of the cell complex are not the generators of the ideal")
    R = M.ring
    split = len(M.names) // 2 if M.names == coordinate_names(len(M.names) // 2 - 1) else None
    cx = GradedComplex(R, split)
    index = {}
    for h in range(-1, X.top + 1):
        keys = X.keys(h)
        cx.bases[h] = [Basis(k, X.label(k), _bidegree(X.label(k), split)) for k in keys]
        index.update({k: i for i, k in enumerate(keys)})
    for h in range(0, X.top + 1):
        entries = {}
        for c, e in enumerate(X.keys(h)):
            me = X.label(e)
            for f, sign in X.facets(e):
                quotient = tuple(a - b for a, b in zip(me, X.label(f)))
                entries[index[f], c] = R.from_dict({quotient: sign})
        cx.maps[h] = entries
    return cx


def _en_complex(n, degenerate):
    R, xs, ys = coordinate_ring(n)
    cx = GradedComplex(R, n + 1)
    cx.bases[-1] = [Basis(EMPTY, _xy(n), (0, 0))]
    for h in range(n):
        cx.bases[h] = [Basis(e, e.label(n) if degenerate else None, (e.mu1 + 1, e.mu2 + 1))
                       for e in sorted(YnFace(I, mu1) for I in combinations(range(n + 1), h + 2)
                                       for mu1 in range(h + 1))]
    index = {b.key: i for h in cx.bases for i, b in enumerate(cx.bases[h])}
    aug = {}
    for c, b in enumerate(cx.bases[0]):
        i, j = b.key.indices
        aug[0, c] = xs[i] * ys[j] if degenerate else xs[i] * ys[j] - xs[j] * ys[i]
    cx.maps[0] = aug
    for h in range(1, n):
        entries = {}
        for c, b in enumerate(cx.bases[h]):
            J, mu1, mu2 = b.key.indices, b.key.mu1, b.key.mu2
            for l in range(1, h + 3):
                rest = J[:l - 1] + J[l:]
                sign = (-1) ** (l + 1)
                if mu1 >= 1 and (not degenerate or l <= mu1 + 1):
                    r = index[YnFace(rest, mu1 - 1)]
                    entries[r, c] = entries.get((r, c), R.zero) + sign * xs[J[l - 1]]
                if mu2 >= 1 and (not degenerate or l >= mu1 + 2):
                    r = index[YnFace(rest, mu1)]
                    entries[r, c] = entries.get((r, c), R.zero) + sign * ys[J[l - 1]]
        cx.maps[h] = {rc: p for rc, p in entries.items() if p}
    return cx


def eagon_northcott(n):
    """K_h = wedge^{h+2} F (x) Sym^h G^vee with the differentials d_h, resolving I"""
    if n < 1:
        raise ValueError(f"Eagon-Northcott complex needs n >= 1, got {n}")
    return _en_complex(n, degenerate=False)


def degenerate_eagon_northcott(n):
    """the same modules with the degenerate differentials d'_h, resolving J"""
    if n < 1:
        raise ValueError(f"degenerate Eagon-Northcott complex needs n >= 1, got {n}")
    return _en_complex(n, degenerate=True)


def sign_equivalent(a, b):
    """
    True when b = D1 a D2 for diagonal matrices D1, D2 with entries +-1.

    Args:
        a, b: equal shaped lists of lists whose entries support == and unary minus
    """
    if len(a) != len(b) or any(len(r) != len(s) for r, s in zip(a, b)):
        return False
    edges = {}
    for r, (ra, rb) in enumerate(zip(a, b)):
        for c, (x, y) in enumerate(zip(ra, rb)):
            if not x and not y:
                continue
            if x == y:
                sign = 1
            elif x == -y:
                sign = -1
            else:
                return False
            edges.setdefault(('r', r), []).append((('c', c), sign))
            edges.setdefault(('c', c), []).append((('r', r), sign))
    colour = {}
    for start in edges:
        if start in colour:
            continue
        colour[start] = 1
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for other, sign in edges[node]:
                want = colour[node] * sign
                if other not in colour:
                    colour[other] = want
                    queue.append(other)
                elif colour[other] != want:
                    return False
    return True


def export_triples(cx, h):
    """sparse triples row<TAB>col<TAB>signed polynomial of the map out of degree h"""
    return [f"{r}\t{c}\t{p}" for (r, c), p in sorted(cx.maps.get(h, {}).items())]


# ---------------------------------------------------------------- homology

def _rank(rows, ncols):
    if not rows or not ncols:
        return 0
    return DomainMatrix([[QQ(v) for v in row] for row in rows], (len(rows), ncols), QQ).rank()


def _monomials(n, a, b):
    """exponent vectors of bidegree (a, b) in k[x_0..x_n, y_0..y_n]"""
    if a < 0 or b < 0:
        return []
    out = []
    for xs in combinations_with_replacement(range(n + 1), a):
        for ys in combinations_with_replacement(range(n + 1), b):
            out.append(_xy(n, xs, ys))
    return out


def strand(cx, degree):
    """
    The strand of cx in a multidegree (length = number of variables) or a
    bidegree (a, b): vector space bases per homological degree and integer
    matrices of the differentials.

    Returns:
        (bases, matrices): bases[h] list of (basis index, monomial),
        matrices[h] list of rows for the map from degree h to h - 1
    """
    nvars = cx.ring.ngens
    multi = len(degree) == nvars
    n = cx.split - 1 if cx.split else None
    bases = {}
    for h in range(-1, cx.top + 1):
        bases[h] = []
        for i, b in enumerate(cx.bases[h]):
            if multi:
                if b.multidegree is None:
                    raise ValueError("complex is not multigraded")
                m = tuple(x - y for x, y in zip(degree, b.multidegree))
                if min(m) >= 0:
                    bases[h].append((i, m))
            else:
                if n is None:
                    raise ValueError("complex is not bigraded")
                for m in _monomials(n, degree[0] - b.bidegree[0], degree[1] - b.bidegree[1]):
                    bases[h].append((i, m))
    matrices = {}
    for h in range(0, cx.top + 1):
        rows_index = {v: r for r, v in enumerate(bases[h - 1])}
        rows = [[0] * len(bases[h]) for _ in bases[h - 1]]
        by_col = {}
        for (r, c), p in cx.maps.get(h, {}).items():
            by_col.setdefault(c, []).append((r, p))
        for col, (c, m) in enumerate(bases[h]):
            for r, p in by_col.get(c, []):
                for monom, coeff in p.terms():
                    target = (r, tuple(x + y for x, y in zip(monom, m)))
                    rows[rows_index[target]][col] += int(coeff)
        matrices[h] = rows
    return bases, matrices


def strand_homology(cx, degree):
    """{h: dim H_h} of the strand, h = -1 .. top; H_-1 is the quotient ring in that degree"""
    bases, matrices = strand(cx, degree)
    ranks = {h: _rank(matrices[h], len(bases[h])) for h in matrices}
    return {h: len(bases[h]) - ranks.get(h, 0) - ranks.get(h + 1, 0) for h in bases}


def quotient_dimension(n, a, b):
    """dim (S/I)_(a,b) = dim (S/J)_(a,b) = dim H^0(P^n, O(a+b))"""
    return comb(n + a + b, n)


def exactness_audit(cx, bound=None):
    """
    Every bidegree strand (a, b), a, b <= bound, is exact in homological degrees
    >= 0 and leaves S/I of the expected dimension in degree -1.

    Returns:
        Audit; violation is (bidegree, homology) for the first failing strand
    """
    if bound is None:
        bound = homocat_config.audit_bidegree
    n = cx.split - 1
    degrees = [(a, b) for a in range(bound + 1) for b in range(bound + 1)]
    for degree in degrees:
        homology = strand_homology(cx, degree)
        if any(homology[h] for h in homology if h >= 0) or \
                homology[-1] != quotient_dimension(n, *degree):
            return Audit(False, (degree, homology))
    return Audit(True)


def lcm_lattice(M):
    """all least common multiples of nonempty subsets of the generators"""
    points = set(M.generators)
    frontier = set(points)
    while frontier:
        new = set()
        for a in frontier:
            for g in M.generators:
                m = monomial_lcm([a, g])
                if m not in points:
                    new.add(m)
        points |= new
        frontier = new
    return sorted(points)


def fiber_chain_complex(X, b):
    """
    Augmented cellular chain complex of X_{<=b}, the faces whose label divides b.

    Returns:
        (faces, matrices) as in strand(): faces[h] sorted keys, matrices[h] boundary rows
    """
    faces = {h: [k for k in X.keys(h) if divides(X.label(k), b)] for h in range(-1, X.top + 1)}
    matrices = {}
    for h in range(0, X.top + 1):
        index = {k: r for r, k in enumerate(faces[h - 1])}
        rows = [[0] * len(faces[h]) for _ in faces[h - 1]]
        for col, e in enumerate(faces[h]):
            for f, sign in X.facets(e):
                rows[index[f]][col] = sign
        matrices[h] = rows
    return faces, matrices


def reduced_homology(X, b):
    faces, matrices = fiber_chain_complex(X, b)
    ranks = {h: _rank(matrices[h], len(faces[h])) for h in matrices}
    return {h: len(faces[h]) - ranks.get(h, 0) - ranks.get(h + 1, 0) for h in faces}


def _fiber_job(job):
    X, b = job
    return b, reduced_homology(X, b)


def is_resolution(X, M):
    """
    F_{X,M} resolves M iff X_{<=b} is acyclic for every b in the lcm lattice of M.

    Returns:
        Audit; violation is (b, reduced homology) at the first non acyclic fiber
    """
    cellular_complex(X, M)
    points = lcm_lattice(M)
    trace.debug('cellres.is_resolution', f"{len(points)} lcm lattice points")
    for b, homology in pool_util.parallel_map(_fiber_job, [(X, b) for b in points]):
        if any(homology.values()):
            return Audit(False, (b, homology))
    return Audit(True)


# ---------------------------------------------------------------- degenerate Beilinson functor

def x_monomials(n, d):
    """exponent vectors of the degree d monomials in x_0..x_n, lexicographically"""
    out = []
    for xs in combinations_with_replacement(range(n + 1), d):
        v = [0] * (n + 1)
        for i in xs:
            v[i] += 1
        out.append(tuple(v))
    return sorted(out, reverse=True)


def min_index(m):
    """smallest k with x_k in m; n for the monomial 1"""
    return next((k for k, e in enumerate(m) if e), len(m) - 1)


def block_quotient(m):
    """the copy of O/(y_{k+1}, ..., y_n), k = min_index(m), attached to m"""
    return tuple(range(min_index(m) + 1, len(m)))


@dataclass
class BeilinsonObject:
    """
    Rp_2*(p_1* O(d) (x)^L O_X0) = sum over i = -1..n-1 of (O/(y_n..y_{n-i}))^multiplicity.

    summands: list of (i, support dimension n-i-1, quotient variables, multiplicity)
    blocks: {x monomial of degree d: quotient variables}
    hilbert: list of (t, cokernel of Phi in y-degree t, closed form)
    """
    n: int
    d: int
    summands: list
    blocks: dict
    hilbert: list

    @property
    def ok(self):
        return all(a == b for _, a, b in self.hilbert) and \
            all(m == expected_multiplicity(self.d, i) for i, _, _, m in self.summands)


def expected_multiplicity(d, i):
    """number of copies of O/(y_n, ..., y_{n-i}): C(d+i, d-1), and one copy of O"""
    if i == -1:
        return 1
    return comb(d + i, d - 1) if d >= 1 else 0


def _phi_cokernel(n, d, t):
    """
    dim of the cokernel of Phi in y-degree t: Phi sends m (x) sigma on the (i, j)
    summand to x_i m (x) y_j sigma, so its image is spanned by target monomials.
    """
    target = [(m, tau) for m in x_monomials(n, d) for tau in _monomials(n, 0, t)]
    image = set()
    if d >= 1 and t >= 1:
        for i, j in combinations(range(n + 1), 2):
            for m in x_monomials(n, d - 1):
                xm = list(m)
                xm[i] += 1
                for sigma in _monomials(n, 0, t - 1):
                    tau = list(sigma)
                    tau[n + 1 + j] += 1
                    image.add((tuple(xm), tuple(tau)))
    return len(target) - len(image)


def _quotient_hf(nvars, t):
    return comb(nvars - 1 + t, t)


def beilinson_degenerate_object(n, d, slack=None):
    if n < 1 or d < 0:
        raise ValueError(f"degenerate Beilinson object needs n >= 1 and d >= 0, got n={n} d={d}")
    if slack is None:
        slack = homocat_config.hilbert_slack
    blocks = {m: block_quotient(m) for m in x_monomials(n, d)}
    summands = []
    for i in range(-1, n):
        quotient = tuple(range(n - i, n + 1))
        mult = sum(1 for q in blocks.values() if q == quotient)
        summands.append((i, n - i - 1, quotient, mult))
    hilbert = []
    for t in range(d + n + slack + 1):
        closed = sum(mult * _quotient_hf(n - i, t) for i, _, _, mult in summands)
        hilbert.append((t, _phi_cokernel(n, d, t), closed))
    record = BeilinsonObject(n, d, summands, blocks, hilbert)
    trace.debug('cellres.beilinson_degenerate_object', f"n={n} d={d}: {summands}")
    return record


def stalk_dimension(record, point):
    """fibre dimension at a point (y_0 : ... : y_n) of P^n"""
    if len(point) != record.n + 1 or not any(point):
        raise ValueError(f"not a point of P^{record.n}: {point}")
    return sum(1 for q in record.blocks.values() if all(point[j] == 0 for j in q))


@dataclass(frozen=True)
class BlockMap:
    source: tuple
    target: tuple
    kind: str
    source_quotient: tuple
    target_quotient: tuple


def beilinson_degenerate_morphism(n, e, k):
    """
    The map induced by O(e) --x_k--> O(e+1) on the block decomposition: the block of m
    goes identically to the block of x_k m when both carry the same quotient (x_k occurs
    in m, or k is larger than every index in m), else by the natural surjection.
    """
    if e < 0 or not 0 <= k <= n:
        raise ValueError(f"need e >= 0 and 0 <= k <= {n}, got e={e} k={k}")
    maps = []
    for m in x_monomials(n, e):
        target = list(m)
        target[k] += 1
        target = tuple(target)
        src, dst = block_quotient(m), block_quotient(target)
        kind = 'identity' if src == dst else 'surjection'
        maps.append(BlockMap(m, target, kind, src, dst))
    return maps


def concentration_audit(n, d, t_max):
    """the degenerate complex is exact in degrees >= 0 in the strands (d, t), t <= t_max"""
    cx = degenerate_eagon_northcott(n)
    for t in range(t_max + 1):
        homology = strand_homology(cx, (d, t))
        if any(homology[h] for h in homology if h >= 0) or \
                homology[-1] != quotient_dimension(n, d, t):
            return Audit(False, ((d, t), homology))
    return Audit(True)
