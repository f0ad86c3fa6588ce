import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from sympy import Rational
from . import bott
from . import human
from . import parab
from . import pool_util
from . import trace
from . import young

""" excseq.py
    Generating sets of bundles and exceptional collection checks.

    Labels are plain tuples for Grass/IGrass (the Schur label of Sigma^lam R),
    tuples of per-factor labels for flag varieties, and integers d for the line
    bundles O_Q(d) on a quadric. BundleLabel adds the power of L used on
    IGrass(3, 7) where L^2 = O(1) = wedge^3 R^vee.
"""

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')
MODES = ('sequence', 'strong', 'poset', 'very_strong_poset')


@dataclass(frozen=True, order=True)
class BundleLabel:
    schur: tuple
    l_twist: int = 0

    def name(self):
        return human.bundle_name(self.schur, self.l_twist)


def canonical_label(schur, l_power=0):
    """Sigma^schur R (x) L^l_power with L^2 = O(1) folded into the Schur label"""
    q, eps = divmod(l_power, 2)
    return BundleLabel(young.det_twist(tuple(int(c) for c in schur), -q), eps)


def kapranov_key(lam):
    # bigger diagrams first; a diagram never precedes one containing it
    return (-sum(lam), tuple(-c for c in lam))


def label_name(label):
    if isinstance(label, BundleLabel):
        return label.name()
    if isinstance(label, int):
        return f"O({label})"
    if label and isinstance(label[0], tuple):
        return ' (x) '.join(f"{human.bundle_name(lam)}_{i + 1}" for i, lam in enumerate(label))
    return human.bundle_name(label)


def raw_label(label):
    return label.schur if isinstance(label, BundleLabel) else label


# ---------------------------------------------------------------- enumerations

def enumerate_generators(k, n):
    """
    Young diagrams nu with at most k rows, at most 2n-k columns and
    (rows of nu) >= nu_1 - 2(n-k): the bundles Sigma^nu R generating IGrass(k, 2n).
    """
    if not 1 <= k <= n:
        raise ValueError(f"enumerate_generators: need 1 <= k <= n, got k={k} n={n}")
    labels = []
    for nu in parab.young_diagrams(k, 2 * n - k):
        rows = sum(1 for c in nu if c)
        if rows >= nu[0] - 2 * (n - k):
            labels.append(BundleLabel(nu))
    return sorted(labels, key=lambda b: kapranov_key(b.schur))


def enumerate_sharp(k, n):
    """the box -2n+2j-1 <= lam_j <= 0 of line bundles on the flag bundle"""
    if not 1 <= k <= n:
        raise ValueError(f"enumerate_sharp: need 1 <= k <= n, got k={k} n={n}")
    return list(product(*[range(-2 * n + 2 * j - 1, 1) for j in range(1, k + 1)]))


# members h * (1/2, 1/2, 1/2) + v of the three factor sets on Spin_7 / B
HEARTS_A = [(1, (-5, 0, 0)), (1, (-5, -1, -1)), (1, (-5, -1, 0)), (1, (-5, 0, -1)),
            (0, (-4, 0, 0)), (0, (-3, 0, 0)), (0, (-2, 0, 0)), (0, (-1, 0, 0)), (0, (0, 0, 0))]
HEARTS_B = [(1, (0, -3, 0)), (1, (0, -3, -1)), (0, (0, -2, 0)), (0, (0, -1, 0)), (0, (0, 0, 0))]
HEARTS_C = [(1, (0, 0, -1)), (0, (0, 0, 0))]


def enumerate_hearts_b3():
    """the 90 line bundles A (x) B (x) C on Spin_7 / B"""
    weights = []
    half = Rational(1, 2)
    for (ha, va), (hb, vb), (hc, vc) in product(HEARTS_A, HEARTS_B, HEARTS_C):
        h = (ha + hb + hc) * half
        weights.append(tuple(h + a + b + c for a, b, c in zip(va, vb, vc)))
    return weights


def _scan_one(weight):
    return bott.relative_bott_flag(3, weight)


def hearts_images():
    """(weight, DirectImage) for the 90 weights, in enumeration order"""
    weights = enumerate_hearts_b3()
    return list(zip(weights, pool_util.parallel_map(_scan_one, weights)))


def igrass37_scan():
    """canonical labels of all nonzero direct images of the 90 line bundles to IGrass(3, 7)"""
    found = set()
    for weight, image in hearts_images():
        if not image.zero:
            found.add(canonical_label(image.schur, image.l_twist))
    trace.debug('excseq.igrass37_scan', f"{len(found)} distinct bundles")
    return found


def load_golden(name):
    """rows of a golden file: tab separated fields, '#' comments skipped"""
    rows = []
    with open(os.path.join(GOLDEN_DIR, name), 'r') as f:
        for line in f:
            line = line.rstrip('\n')
            if not line.strip() or line.startswith('#'):
                continue
            rows.append(line.split('\t'))
    return rows


def golden_igrass37():
    return {BundleLabel(human.parse_label(row[0]), int(row[1]))
            for row in load_golden('igrass37_bundles.txt')}


# ---------------------------------------------------------------- collections

def kapranov_collection(k, n):
    return sorted(parab.young_diagrams(k, n - k), key=kapranov_key)


def igrass24_sequence():
    """(O(-2), O(-1), R, O) on IGrass(2, 4)"""
    return [(2, 2), (1, 1), (1, 0), (0, 0)]


def samokhin_sequence():
    """(R(-3), O(-3), R(-2), O(-2), R(-1), O(-1), R, O) on IGrass(3, 6)"""
    sequence = []
    for j in (3, 2, 1, 0):
        sequence.append(young.det_twist((1, 0, 0), j))
        sequence.append((j, j, j))
    return sequence


def hom_criterion_grass(lam, mu):
    """Hom(Sigma^lam R, Sigma^mu R) != 0 on Grass(k, n) for lam, mu in Y(k, n-k)"""
    if len(lam) != len(mu):
        raise ValueError(f"labels {lam} and {mu} differ in length")
    return all(a >= b for a, b in zip(lam, mu))


def flag_factor_bounds(ks, n):
    ks = tuple(ks)
    if not ks or any(a >= b for a, b in zip(ks, ks[1:])) or ks[0] < 1 or ks[-1] >= n:
        raise ValueError(f"flag type {ks} is not strictly increasing inside [1, {n - 1}]")
    return [(k, nxt - k) for k, nxt in zip(ks, ks[1:] + (n,))]


def flag_collection(ks, n):
    """
    Sigma^{lam_1} R_{k_1} (x) ... (x) Sigma^{lam_l} R_{k_l}, lam_j in Y(k_j, k_{j+1} - k_j),
    as tuples (lam_1, ..., lam_l). Ordered lexicographically with lam_1 most
    significant and larger diagrams first inside each factor.
    """
    factors = [parab.young_diagrams(k, m) for k, m in flag_factor_bounds(ks, n)]
    labels = list(product(*factors))
    return sorted(labels, key=lambda label: tuple(kapranov_key(lam) for lam in label))


@dataclass(frozen=True)
class FlagGeometry:
    """Flag(1, k; n) = P(R_k) over Grass(k, n); labels ((a,), lam) mean R_1^a (x) Sigma^lam R_k"""
    k: int
    n: int

    def __post_init__(self):
        if not 2 <= self.k < self.n:
            raise ValueError(f"Flag(1,{self.k};{self.n}) needs 2 <= k < n")

    def __str__(self):
        return f"Flag(1,{self.k};{self.n})"

    def check_label(self, label):
        (a,), lam = label
        return ((int(a),), young.check_label(lam, self.k))

    def ext(self, e, f):
        return flag_ext_table(self.k, self.n, e, f)

    def schubert_count(self):
        return parab.schubert_count(parab.parabolic('A', self.n, {1, self.k}))

    def poset_leq(self, e, f):
        return e[0][0] >= f[0][0] and all(x >= y for x, y in zip(e[1], f[1]))


def flag_ext_table(k, n, e, f):
    """
    Ext^*(E, F) on Flag(1, k; n) for E = R_1^a (x) Sigma^lam R_k.

    R_1^{a_F - a_E} = O(t), t = a_E - a_F, pushes forward to Sym^t R^vee (t >= 0) or
    vanishes (-k < t < 0); the rest is LR + Bott on Grass(k, n).
    """
    (a_e,), lam_e = e
    (a_f,), lam_f = f
    t = a_e - a_f
    image = bott.relative_bott_flag(k, (t,) + (0,) * (k - 1))
    table = bott.ExtTable()
    if image.zero:
        return table
    base = bott.grass_A(k, n)
    for nu, m1 in sorted(young.lr_decompose(lam_f, young.dualize(lam_e), k).items()):
        for rho_, m2 in sorted(young.lr_decompose(nu, image.schur, k).items()):
            coh = base.cohomology(rho_)
            if not coh.zero:
                coh = bott.Cohomology(coh.degree + image.degree, coh.weight, coh.dim)
            table.add(rho_, coh, m1 * m2)
    return table


def verify_flag_collection(k, n, mode='strong'):
    geometry = FlagGeometry(k, n)
    labels = [label for label in flag_collection((1, k), n)]
    return verify_collection(geometry, labels, mode)


@dataclass(frozen=True)
class QuadricGeometry:
    """Q in P^{N-1}; labels are the integers d of O_Q(d)"""
    N: int

    def __post_init__(self):
        if self.N < 3:
            raise ValueError(f"quadric in P^{self.N - 1}: need N >= 3")

    def __str__(self):
        return f"Q^{self.N - 2}"

    def parabolic(self):
        return bott.quadric_geometry(self.N)

    def check_label(self, d):
        return int(d)

    def ext(self, a, b):
        p = self.parabolic()
        table = bott.ExtTable()
        table.add(b - a, bott.general_bott_gp(p, bott.quadric_line_bundle(p, b - a)))
        return table

    def schubert_count(self):
        return parab.schubert_count(self.parabolic())

    def poset_leq(self, a, b):
        return a <= b


def quadric_line_bundle_pattern(N):
    """
    Line bundle part of the quadric collection: O(-N+3), ..., O(-1), O.

    Returns:
        dict with the strong sequence check, the Hom pattern check and the
        size comparison (line bundles plus 1 spinor bundle for odd N, 2 for even N)
    """
    geometry = QuadricGeometry(N)
    bundles = list(range(-N + 3, 1))
    report = verify_collection(geometry, bundles, 'strong')
    hom_ok = all((geometry.ext(a, b).hom_dim() > 0) == (a <= b) for a in bundles for b in bundles)
    size = len(bundles) + (1 if N % 2 else 2)
    count = geometry.schubert_count()
    return {'N': N, 'line_bundles': bundles, 'strong': report.passed, 'hom_pattern': hom_ok,
            'collection_size': size, 'schubert_count': count,
            'passed': report.passed and hom_ok and size == count}


# ---------------------------------------------------------------- verification

@dataclass(frozen=True)
class Offender:
    """Ext^degree(E_source, E_target) of dimension dim violating the check named by kind"""
    source: int
    target: int
    degree: int
    dim: int
    kind: str


@dataclass
class VerificationReport:
    mode: str
    length: int
    schubert_count: int
    is_exceptional_each: bool
    is_exceptional_sequence: bool
    is_strong: bool
    admissible_poset_ok: bool
    offenders: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.offenders

    @property
    def count_matches(self):
        """necessary condition for completeness: as many objects as Schubert varieties"""
        return self.length == self.schubert_count

    def to_dict(self, labels=None):
        def name(i):
            return label_name(labels[i]) if labels is not None else i
        return {'mode': self.mode, 'passed': self.passed, 'length': self.length,
                'schubert_count': self.schubert_count, 'count_matches': self.count_matches,
                'is_exceptional_each': self.is_exceptional_each,
                'is_exceptional_sequence': self.is_exceptional_sequence,
                'is_strong': self.is_strong, 'admissible_poset_ok': self.admissible_poset_ok,
                'offenders': [{'source': name(o.source), 'target': name(o.target),
                               'degree': o.degree, 'dim': o.dim, 'kind': o.kind}
                              for o in self.offenders]}


def _ext_job(job):
    geometry, a, b = job
    return geometry.ext(a, b)


def pairwise_ext(geometry, labels):
    """{(s, t): Ext^*(E_s, E_t)} over all ordered pairs, computed through the worker pool"""
    n = len(labels)
    jobs = [(geometry, labels[s], labels[t]) for s in range(n) for t in range(n)]
    tables = pool_util.parallel_map(_ext_job, jobs)
    return {(s, t): tables[s * n + t] for s in range(n) for t in range(n)}


def _is_exceptional(table):
    return table.degrees() == [0] and table.hom_dim() == 1


def verify_collection(geometry, labels, mode='sequence', leq=None):
    """
    Check an ordered list of bundles.

    Args:
        geometry: bott.Geometry, FlagGeometry or QuadricGeometry
        labels (list): labels for that geometry, in order
        mode (str): sequence, strong, poset or very_strong_poset
        leq (callable): partial order for the poset modes, default geometry.poset_leq
                        (reverse containment of diagrams on Grass/IGrass)

    Returns:
        VerificationReport; offenders lists the violations of the chosen mode
    """
    if mode not in MODES:
        raise ValueError(f"unknown verification mode {mode!r}; one of {MODES}")
    if not hasattr(geometry, 'ext'):
        raise ValueError(f"unsupported geometry: {geometry!r}")
    labels = [geometry.check_label(raw_label(label)) for label in labels]
    if leq is None:
        leq = geometry.poset_leq
    n = len(labels)
    tables = pairwise_ext(geometry, labels)
    offenders = []
    each = sequence = no_higher = admissible = very_strong = True
    for s in range(n):
        table = tables[s, s]
        if not _is_exceptional(table):
            each = False
            offenders.extend(Offender(s, s, d, table.total_dim(d), 'self')
                             for d in table.degrees() if d != 0 or table.hom_dim() != 1)
    for s in range(n):
        for t in range(n):
            if s == t:
                continue
            table = tables[s, t]
            for d in table.degrees():
                dim = table.total_dim(d)
                if s > t:
                    sequence = False
                    if mode in ('sequence', 'strong'):
                        offenders.append(Offender(s, t, d, dim, 'order'))
                if d > 0:
                    no_higher = False
                    if mode in ('poset', 'very_strong_poset') or mode == 'strong' and s < t:
                        offenders.append(Offender(s, t, d, dim, 'strong'))
                if d == 0:
                    # Hom(E_s, E_t) != 0
                    if leq(labels[t], labels[s]):
                        admissible = False
                        if mode == 'poset':
                            offenders.append(Offender(s, t, d, dim, 'poset'))
                    if not leq(labels[s], labels[t]):
                        very_strong = False
                        if mode == 'very_strong_poset':
                            offenders.append(Offender(s, t, d, dim, 'poset'))
    report = VerificationReport(
        mode=mode, length=n, schubert_count=geometry.schubert_count(),
        is_exceptional_each=each, is_exceptional_sequence=each and sequence,
        is_strong=each and sequence and no_higher,
        admissible_poset_ok=each and no_higher and (very_strong if mode == 'very_strong_poset'
                                                    else admissible),
        offenders=offenders)
    trace.debug('excseq.verify_collection',
                f"{geometry} {mode}: {n} objects, {len(offenders)} offenders")
    if report.passed and not report.count_matches:
        trace.warn('excseq.verify_collection',
                   f"{mode} holds but {geometry} has {report.schubert_count} Schubert cells "
                   f"and the collection {n} objects, so it cannot be full")
    return report


def igrass26_offenders():
    """
    Nonzero Ext in positive degree between the 14 generating bundles of IGrass(2, 6).

    Returns:
        sorted list of (a, b, degree, dim, terms) meaning Ext^degree(Sigma^a R, Sigma^b R)
    """
    geometry = bott.igrass_C(2, 3)
    labels = [b.schur for b in enumerate_generators(2, 3)]
    tables = pairwise_ext(geometry, labels)
    rows = []
    for (s, t), table in tables.items():
        if s == t:
            continue
        for d, dim in table.higher().items():
            rows.append((labels[s], labels[t], d, dim, dict(table.groups[d])))
    return sorted(rows, key=lambda row: (row[0], row[1], row[2]))


def format_terms(terms):
    parts = []
    for weight, mult in sorted(terms.items()):
        text = human.weight_str(weight)
        parts.append(text if mult == 1 else f"{text}*{mult}")
    return ' + '.join(parts)


def golden_igrass26():
    """rows of the stored offender table, in the shape returned by igrass26_offenders"""
    rows = []
    for row in load_golden('igrass26_offenders.txt'):
        terms = Counter()
        for part in row[4].split(' + '):
            weight, _, mult = part.partition('*')
            terms[human.parse_label(weight)] += int(mult or 1)
        rows.append((human.parse_label(row[0]), human.parse_label(row[1]),
                     int(row[2]), int(row[3]), dict(terms)))
    return sorted(rows, key=lambda row: (row[0], row[1], row[2]))
