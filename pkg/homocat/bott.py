from collections import Counter
from dataclasses import dataclass
from sympy import Rational
from . import parab
from . import rootsys
from . import trace
from . import young
from .rootsys import format_weight

""" bott.py
    Bott's theorem in the four shapes homocat needs:

      coh_grass_A         H*(Grass(k,n), Sigma^gamma R)
      coh_igrass_C        H*(IGrass(k,2n), Sigma^lam R)
      relative_bott_flag  R pi_* of a line bundle along Flag(V) -> base, rank V = k
      general_bott_gp     H*(G/P, L(lam)) for a Levi dominant weight

    and ext_table, which assembles Ext between Schur functors of R from the
    Littlewood-Richardson rule and the absolute engines.
"""


@dataclass(frozen=True)
class Cohomology:
    """Zero when degree is None, else the single group H^degree = V_weight"""
    degree: int = None
    weight: tuple = None
    dim: int = 0

    @property
    def zero(self):
        return self.degree is None

    def __str__(self):
        if self.zero:
            return 'Zero'
        return f"H^{self.degree} = V({format_weight(self.weight)}), dim {self.dim}"


ZERO = Cohomology()


@dataclass(frozen=True)
class DirectImage:
    """R^degree pi_* L(lam) = Sigma^mu R^vee (x) L^l_twist, or Zero when degree is None"""
    degree: int = None
    mu: tuple = None
    l_twist: int = 0

    @property
    def zero(self):
        return self.degree is None

    @property
    def schur(self):
        """the same bundle written as Sigma^schur R"""
        return young.dualize(self.mu)

    def __str__(self):
        if self.zero:
            return 'Zero'
        return (f"R^{self.degree} pi_* = Sigma^({format_weight(self.mu)}) R^vee, "
                f"l_twist {self.l_twist}")


ZERO_IMAGE = DirectImage()


@dataclass(frozen=True)
class Geometry:
    """grass_A(k, n) = Grass(k, n); igrass_C(k, n) = isotropic k-planes in C^2n"""
    kind: str
    k: int
    n: int

    def __post_init__(self):
        if self.kind == 'grass_A':
            if not 1 <= self.k < self.n:
                raise ValueError(f"Grass({self.k},{self.n}) needs n > k >= 1")
        elif self.kind == 'igrass_C':
            if not 1 <= self.k <= self.n:
                raise ValueError(f"IGrass({self.k},{2 * self.n}) needs 1 <= k <= n")
        else:
            raise ValueError(f"unsupported geometry: {self.kind!r}")

    def __str__(self):
        if self.kind == 'grass_A':
            return f"Grass({self.k},{self.n})"
        return f"IGrass({self.k},{2 * self.n})"

    @property
    def dimension(self):
        k, n = self.k, self.n
        if self.kind == 'grass_A':
            return k * (n - k)
        return 2 * k * (n - k) + k * (k + 1) // 2

    def parabolic(self):
        family = 'A' if self.kind == 'grass_A' else 'C'
        return parab.parabolic(family, self.n, self.k)

    def cohomology(self, label):
        if self.kind == 'grass_A':
            return coh_grass_A(self.k, self.n, label)
        return coh_igrass_C(self.k, self.n, label)

    def check_label(self, label):
        return young.check_label(label, self.k)

    def ext(self, a, b):
        return ext_table(self, a, b)

    def schubert_count(self):
        return parab.schubert_count(self.parabolic())

    def poset_leq(self, a, b):
        """reverse containment: a <= b iff a contains b"""
        return parab.contains(a, b)


def grass_A(k, n):
    return Geometry('grass_A', k, n)


def igrass_C(k, n):
    return Geometry('igrass_C', k, n)


def projective(n):
    """P^n as Grass(1, n+1); O(d) is the label (-d,)"""
    return Geometry('grass_A', 1, n + 1)


def _regular(rs, delta):
    red = rootsys.dominant_reduce(rs, delta)
    if red.singular:
        return ZERO
    shift = rootsys.rho(rs)
    nu = tuple(a - b for a, b in zip(red.dominant, shift))
    return Cohomology(red.length, nu, rootsys.weyl_dim(rs, nu))


def coh_grass_A(k, n, gamma):
    """
    Cohomology of Sigma^gamma R on Grass(k, n).

    The full GL_n weight is (0, ..., 0, gamma_1, ..., gamma_k); gamma need not be
    non-increasing.
    """
    gamma = tuple(int(c) for c in gamma)
    if len(gamma) != k or not 1 <= k < n:
        raise ValueError(f"coh_grass_A: label {gamma} does not fit Grass({k},{n})")
    rs = rootsys.root_system('A', n)
    full = (0,) * (n - k) + gamma
    return _regular(rs, tuple(a + b for a, b in zip(full, rootsys.rho(rs))))


def coh_igrass_C(k, n, lam):
    """H*(IGrass(k, 2n), Sigma^lam R): Bott for C_n on (-lam_k, ..., -lam_1, 0, ..., 0)"""
    lam = tuple(int(c) for c in lam)
    if len(lam) != k or not 1 <= k <= n:
        raise ValueError(f"coh_igrass_C: label {lam} does not fit IGrass({k},{2 * n})")
    rs = rootsys.root_system('C', n)
    mu = tuple(-c for c in reversed(lam)) + (0,) * (n - k)
    return _regular(rs, tuple(a + b for a, b in zip(mu, rootsys.rho(rs))))


def relative_bott_flag(k, lam):
    """
    Direct image of the line bundle L(lam) along the full flag bundle of a rank
    k bundle R.

    Args:
        k (int): rank of R
        lam (tuple): k integers, or k half-odd integers (then L^{1/2} is split off
                     as l_twist = 1)

    Returns:
        DirectImage(l(sigma), mu, l_twist) with sigma(lam + rho) - rho = mu, or ZERO_IMAGE
    """
    lam = rootsys.check_lattice(rootsys.weight(lam))
    if len(lam) != k:
        raise ValueError(f"relative_bott_flag: weight has length {len(lam)}, expected {k}")
    l_twist = 0
    if lam and lam[0] != lam[0] // 1:
        lam = tuple(c - Rational(1, 2) for c in lam)
        l_twist = 1
    rs = rootsys.root_system('A', k)
    shift = rootsys.rho(rs)
    red = rootsys.dominant_reduce(rs, tuple(a + b for a, b in zip(lam, shift)))
    if red.singular:
        return ZERO_IMAGE
    mu = tuple(int(a - b) for a, b in zip(red.dominant, shift))
    return DirectImage(red.length, mu, l_twist)


def levi_dominant(p, lam):
    simples = rootsys.simple_roots(p.rs)
    return all(rootsys.inner(lam, simples[i - 1]) >= 0 for i in p.levi_generators())


def general_bott_gp(p, lam):
    """H*(G/P, L(lam)): lam + rho moved to the dominant chamber by the full Weyl group"""
    lam = rootsys.weight(lam)
    if len(lam) != p.rs.rank:
        raise ValueError(f"weight {format_weight(lam)} has the wrong length for {p.rs}")
    if not levi_dominant(p, lam):
        raise ValueError(f"weight {format_weight(lam)} is not dominant for the Levi of "
                         f"{p.rs}/P{sorted(p.omitted)}")
    rs = p.rs
    return _regular(rs, tuple(a + b for a, b in zip(lam, rootsys.rho(rs))))


def quadric_geometry(N):
    """
    Q in P^{N-1} as G/P(alpha_1): B_m for N = 2m+1, D_m for N = 2m.

    Returns:
        ParabolicSpec
    """
    if N < 3:
        raise ValueError(f"quadric in P^{N - 1}: need N >= 3")
    if N % 2:
        return parab.parabolic('B', (N - 1) // 2, 1)
    if N == 4:
        # P^1 x P^1; D_2 is split into both of its simple roots
        return parab.parabolic('D', 2, (1, 2))
    return parab.parabolic('D', N // 2, 1)


def quadric_line_bundle(p, d):
    """weight of O_Q(d): d e_1"""
    return (d,) + (0,) * (p.rs.rank - 1)


class ExtTable:
    """Ext^* between two bundles: degree -> Counter of highest weights."""

    def __init__(self):
        self.groups = {}
        self.dims = Counter()
        self.contributions = []

    def add(self, summand, coh, mult=1):
        self.contributions.append((summand, coh.degree))
        if coh.zero:
            return
        self.groups.setdefault(coh.degree, Counter())[coh.weight] += mult
        self.dims[coh.degree] += mult * coh.dim

    def degrees(self):
        return sorted(self.groups)

    def total_dim(self, degree):
        return self.dims.get(degree, 0)

    def hom_dim(self):
        return self.total_dim(0)

    def higher(self):
        """{degree: dim} for the nonzero Ext in positive degree"""
        return {d: self.dims[d] for d in self.degrees() if d > 0}

    def euler(self):
        return sum((-1) ** d * dim for d, dim in self.dims.items())

    def is_empty(self):
        return not self.groups

    def to_dict(self):
        return {str(d): {'dim': self.dims[d],
                         'terms': [[format_weight(w), c]
                                   for w, c in sorted(self.groups[d].items())]}
                for d in self.degrees()}

    def __eq__(self, other):
        return isinstance(other, ExtTable) and self.groups == other.groups

    def __repr__(self):
        return f"ExtTable({self.to_dict()})"


def ext_table(geometry, a, b):
    """
    Ext^*(Sigma^a R, Sigma^b R) = H^*(Sigma^b R (x) Sigma^{dualize(a)} R).

    Args:
        geometry (Geometry): grass_A(k, n) or igrass_C(k, n)
        a, b (tuple): labels of length geometry.k

    Returns:
        ExtTable
    """
    k = geometry.k
    a = young.check_label(a, k)
    b = young.check_label(b, k)
    table = ExtTable()
    for nu, mult in sorted(young.lr_decompose(b, young.dualize(a), k).items()):
        table.add(nu, geometry.cohomology(nu), mult)
    trace.debug('bott.ext_table', f"{geometry} {a} -> {b}: {table.to_dict()}")
    return table
