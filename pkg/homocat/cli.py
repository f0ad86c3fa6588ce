import argparse
import json
import os
import random
import sys
from jinja2 import Template
from sympy import ImmutableMatrix, Rational
from . import __date__, __version__
from . import bott
from . import cellres
from . import excseq
from . import format_fill
from . import homocat_config
from . import human
from . import ktheory
from . import parab
from . import rootsys
from . import trace
from . import young

""" cli.py
    Command line surface of homocat: one subcommand per operation.

    Reports go to stdout as json (sorted keys), tsv or a text report rendered
    from templates/report.txt. Exit codes: 0 success, 1 a check failed,
    2 usage error.
"""

TEMPLATE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'templates', 'report.txt')
FORMATS = ('json', 'tsv', 'text')
GEOMETRIES = ('grass-a', 'igrass-c', 'projective', 'flag', 'quadric')
COLLECTIONS = ('kapranov', 'generators', 'igrass24', 'samokhin', 'flag', 'line-bundles')
COLLECTION_GEOMETRIES = {'kapranov': ('grass-a', 'projective'), 'generators': ('igrass-c',),
                         'igrass24': ('igrass-c',), 'samokhin': ('igrass-c',), 'flag': ('flag',)}
OK = 0
FAILED = 1
USAGE = 2
_not_query = ('func', 'command', 'format', 'config', 'debug', 'threads')

# provenance: the result each subcommand computes
REFERENCES = {
    'bott': "Borel-Weil-Bott theorem",
    'lr': "Littlewood-Richardson rule",
    'ext': "Bott's theorem with the Littlewood-Richardson rule",
    'enumerate': "generating bundles of isotropic Grassmannians",
    'verify': "exceptional sequences and exceptional posets",
    'gram': "Euler form on the Grothendieck group",
    'mutate': "braid group action by mutations",
    'dual': "dual exceptional sequences",
    'kron': "exceptional collections on products",
    'schubert-count': "Schubert cells indexed by W^P",
    'bruhat': "Bruhat order",
    'cell': "cellular resolutions of monomial ideals",
    'beilinson': "degenerate Beilinson functor",
    'flag': "exceptional collections on flag varieties",
    'quadric': "line bundles on quadrics",
    'spin': "spin representation of B_r",
    'scan': "direct images from Spin_7/B to IGrass(3, 7)",
    'offenders': "higher Ext among the IGrass(2, 6) generators",
}


# ---------------------------------------------------------------- argument types

def parse_matrix(text):
    """'1,2;0,1' -> ImmutableMatrix"""
    rows = [human.parse_label(row) for row in text.split(';')]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError(f"ragged matrix: {text!r}")
    return ImmutableMatrix(rows)


def parse_indices(text):
    return human.parse_label(text)


def parse_word(text):
    """'1L,2R' -> [(1, 'left'), (2, 'right')]"""
    word = []
    for token in text.replace(' ', '').split(','):
        if not token:
            continue
        direction = {'L': ktheory.LEFT, 'R': ktheory.RIGHT}.get(token[-1].upper())
        if direction is None:
            raise ValueError(f"mutation {token!r} must end in L or R")
        word.append((int(token[:-1]), direction))
    return word


def parse_labels(kind, text):
    """';' separated labels; flag labels are 'a|lam', quadric labels integers"""
    labels = []
    for part in text.split(';'):
        part = part.strip()
        if kind == 'quadric':
            labels.append(int(part))
        elif kind == 'flag':
            a, _, lam = part.partition('|')
            labels.append(((int(a),), human.parse_label(lam)))
        else:
            labels.append(human.parse_label(part))
    return labels


# ---------------------------------------------------------------- serialization

def _is_weight(value):
    return isinstance(value, tuple) and \
        all(isinstance(c, (int, Rational)) and not isinstance(c, bool) for c in value)


def plain(value):
    """JSON ready copy of value; weights become comma separated rationals"""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Rational):
        return int(value) if value.q == 1 else str(value)
    if isinstance(value, int):
        return value
    if isinstance(value, excseq.BundleLabel):
        return {'schur': human.weight_str(value.schur), 'l_twist': value.l_twist,
                'name': value.name()}
    if _is_weight(value):
        return human.weight_str(value)
    if isinstance(value, dict):
        return {k if isinstance(k, str) else json.dumps(plain(k)): plain(v)
                for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted((plain(v) for v in value), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return str(value)


def _cell(value):
    return value if isinstance(value, str) else json.dumps(value, sort_keys=True)


def records(result):
    """(header, rows) for the tsv and text formats"""
    if isinstance(result, dict):
        return ['key', 'value'], [[k, _cell(v)] for k, v in sorted(result.items())]
    if isinstance(result, list):
        if result and all(isinstance(r, dict) for r in result):
            header = sorted(result[0])
            return header, [[_cell(r.get(k)) for k in header] for r in result]
        if all(isinstance(r, list) for r in result):
            return None, [[_cell(c) for c in r] for r in result]
        return None, [[_cell(r)] for r in result]
    return None, [[_cell(result)]]


def emit(operation, query, result, fmt, ok=True, out=None):
    out = out or sys.stdout
    query, result = plain(query), plain(result)
    if fmt == 'json':
        report = {'query': query, 'result': result,
                  'provenance': {'paper_ref': REFERENCES[operation], 'operation': operation,
                                 'version': __version__}}
        print(json.dumps(report, sort_keys=True, indent=2), file=out)
        return
    header, rows = records(result)
    if fmt == 'tsv':
        for row in rows:
            print('\t'.join(row), file=out)
        return
    with open(TEMPLATE, 'r') as f:
        template = Template(f.read())
    text = template.render(version=__version__, operation=operation,
                           query=sorted(query.items()),
                           lines=format_fill.table(rows, header),
                           status=None if ok else 'FAILED')
    print(text, end='', file=out)


# ---------------------------------------------------------------- helpers

def _query(args):
    return {k: v for k, v in sorted(vars(args).items()) if k not in _not_query and v is not None}


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"{args.command}: missing {', '.join(missing)}")


def _integral(weight):
    if any(Rational(c).q != 1 for c in weight):
        raise ValueError(f"label {human.weight_str(weight)} must have integer entries")
    return tuple(int(c) for c in weight)


def _coh_dict(coh):
    if coh.zero:
        return {'zero': True}
    return {'zero': False, 'degree': coh.degree, 'weight': coh.weight, 'dim': coh.dim}


def _image_dict(image):
    if image.zero:
        return {'zero': True}
    return {'zero': False, 'degree': image.degree, 'mu': image.mu, 'schur': image.schur,
            'l_twist': image.l_twist, 'name': human.bundle_name(image.schur, image.l_twist)}


def _geometry(args):
    kind = args.geometry
    if kind == 'quadric':
        _need(args, 'n')
        return excseq.QuadricGeometry(args.n)
    if kind == 'projective':
        _need(args, 'n')
        return bott.projective(args.n)
    _need(args, 'k', 'n')
    if kind == 'flag':
        return excseq.FlagGeometry(args.k, args.n)
    if kind == 'grass-a':
        return bott.grass_A(args.k, args.n)
    return bott.igrass_C(args.k, args.n)


def _line_bundles(geometry):
    if isinstance(geometry, excseq.QuadricGeometry):
        return list(range(-geometry.N + 3, 1))
    if isinstance(geometry, bott.Geometry) and geometry.kind == 'grass_A' and geometry.k == 1:
        return [(-d,) for d in range(geometry.n)]
    raise ValueError("line-bundles is defined for --geometry projective and quadric")


def _collection(args, geometry):
    if args.labels:
        return parse_labels(args.geometry, args.labels)
    name = args.collection
    if name is None:
        raise ValueError(f"{args.command}: give --collection or --labels")
    allowed = COLLECTION_GEOMETRIES.get(name)
    if allowed and args.geometry not in allowed:
        raise ValueError(f"collection {name} needs --geometry {' or '.join(allowed)}")
    if name == 'kapranov':
        return excseq.kapranov_collection(geometry.k, geometry.n)
    if name == 'generators':
        return excseq.enumerate_generators(geometry.k, geometry.n)
    if name == 'igrass24':
        return excseq.igrass24_sequence()
    if name == 'samokhin':
        return excseq.samokhin_sequence()
    if name == 'flag':
        return excseq.flag_collection((1, geometry.k), geometry.n)
    return _line_bundles(geometry)


def _state(args):
    if args.gram is not None:
        return ktheory.initial_state(args.gram)
    if args.omega is not None:
        return ktheory.beilinson_omega_state(args.omega)
    if args.geometry is None:
        raise ValueError(f"{args.command}: give --gram, --omega or --geometry with a collection")
    geometry = _geometry(args)
    labels = _collection(args, geometry)
    return ktheory.initial_state(ktheory.gram_from_collection(geometry, labels))


def _rows(matrix):
    return [[int(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def _x_monomial(m):
    return cellres.monomial_str(tuple(f"x{i}" for i in range(len(m))), m)


def _y_names(quotient):
    return ','.join(f"y{j}" for j in quotient)


# ---------------------------------------------------------------- subcommands

def cmd_bott(args):
    if args.relative_flag:
        _need(args, 'k')
        return _query(args), _image_dict(bott.relative_bott_flag(args.k, args.weight)), True
    if args.geometry == 'gp':
        _need(args, 'family', 'rank', 'parabolic')
        p = parab.parabolic(args.family, args.rank, args.parabolic)
        return _query(args), _coh_dict(bott.general_bott_gp(p, args.weight)), True
    _need(args, 'k', 'n')
    engine = bott.coh_grass_A if args.geometry == 'grass-a' else bott.coh_igrass_C
    return _query(args), _coh_dict(engine(args.k, args.n, _integral(args.weight))), True


def cmd_lr(args):
    k = args.k or len(args.lam)
    result = young.lr_decompose(args.lam, args.mu, k)
    terms = [{'weight': nu, 'mult': m, 'dim': young.ssyt_count(nu, k)}
             for nu, m in sorted(result.items(), reverse=True)]
    # dimensions of both sides as GL_k modules
    dim = young.ssyt_count(args.lam, k) * young.ssyt_count(args.mu, k)
    dims_match = dim == sum(t['mult'] * t['dim'] for t in terms)
    return _query(args), {'terms': terms, 'dim': dim, 'dims_match': dims_match}, dims_match


def cmd_ext(args):
    geometry = _geometry(args)
    a = parse_labels(args.geometry, args.a)[0]
    b = parse_labels(args.geometry, args.b)[0]
    table = geometry.ext(geometry.check_label(a), geometry.check_label(b))
    return _query(args), {'ext': table.to_dict(), 'euler': table.euler()}, True


def cmd_enumerate(args):
    if args.which == 'hearts':
        return _query(args), excseq.enumerate_hearts_b3(), True
    _need(args, 'k', 'n')
    if args.which == 'sharp':
        return _query(args), excseq.enumerate_sharp(args.k, args.n), True
    labels = excseq.enumerate_generators(args.k, args.n)
    return _query(args), [{'label': b.schur, 'name': b.name()} for b in labels], True


def cmd_verify(args):
    geometry = _geometry(args)
    labels = _collection(args, geometry)
    report = excseq.verify_collection(geometry, labels, args.mode)
    return _query(args), report.to_dict(labels), report.passed


def cmd_gram(args):
    geometry = _geometry(args)
    gram = ktheory.gram_from_collection(geometry, _collection(args, geometry))
    return _query(args), {'gram': _rows(gram), 'det': int(gram.det()),
                          'unit_upper_triangular': ktheory.is_unit_upper_triangular(gram)}, True


def cmd_mutate(args):
    state = _state(args)
    if args.braid_words:
        failures = ktheory.braid_check(state, random.Random(args.seed), words=args.braid_words,
                                       length=args.length)
        result = {'words': args.braid_words, 'failures': [f"{w}: {r}" for w, r in failures]}
        return _query(args), result, not failures
    if args.word is None:
        raise ValueError("mutate: give --word or --braid-words")
    mutated = ktheory.apply_word(state, args.word)
    result = {'classes': [list(c) for c in mutated.classes],
              'semiorthonormal': mutated.is_semiorthonormal()}
    return _query(args), result, result['semiorthonormal']


def cmd_dual(args):
    state = _state(args)
    result = {'duals': [list(c) for c in ktheory.dual_sequence(state, args.side)],
              'pairing': ktheory.duality_pairing(state, args.side)}
    return _query(args), result, True


def cmd_kron(args):
    return _query(args), {'gram': _rows(ktheory.kron_gram(args.gram_x, args.gram_y))}, True


def cmd_schubert_count(args):
    p = parab.parabolic(args.family, args.rank, args.parabolic)
    return _query(args), parab.schubert_count(p), True


def cmd_bruhat(args):
    if args.family is not None:
        _need(args, 'rank')
        rs = rootsys.root_system(args.family, args.rank)
        a, b = (parab.word_element(rs, w) for w in (args.a, args.b))
        return _query(args), {'leq': parab.bruhat_leq(a, b, rs)}, True
    result = {'leq': parab.bruhat_leq(args.a, args.b)}
    if args.k is not None and args.n is not None:
        result['young_a'] = parab.grass_young_bijection(args.k, args.n, args.a)
        result['young_b'] = parab.grass_young_bijection(args.k, args.n, args.b)
    return _query(args), result, True


def cmd_cell(args):
    n = args.n
    if args.action == 'build':
        X = cellres.yn_build(n)
        return _query(args), {'f_vector': X.f_vector(), 'faces': len(X.faces)}, True
    if args.action == 'audit':
        audit = cellres.incidence_audit(cellres.yn_build(n))
    elif args.action == 'resolve':
        audit = cellres.is_resolution(cellres.yn_build(n), cellres.ideal_J(n))
    elif args.action == 'export':
        if args.complex == 'yn':
            cx = cellres.cellular_complex(cellres.yn_build(n), cellres.ideal_J(n))
        elif args.complex == 'en':
            cx = cellres.eagon_northcott(n)
        else:
            cx = cellres.degenerate_eagon_northcott(n)
        return _query(args), cellres.export_triples(cx, args.h), True
    else:
        cx = cellres.eagon_northcott(n) if args.action == 'en' else \
            cellres.degenerate_eagon_northcott(n)
        if not cx.d_squared_zero():
            return _query(args), {'ok': False, 'violation': 'd^2 != 0'}, False
        audit = cellres.exactness_audit(cx, args.bound)
    return _query(args), {'ok': audit.ok, 'violation': audit.violation}, audit.ok


def cmd_beilinson(args):
    if args.action == 'morphism':
        _need(args, 'e', 'k')
        maps = cellres.beilinson_degenerate_morphism(args.n, args.e, args.k)
        return _query(args), [{'source': _x_monomial(m.source), 'target': _x_monomial(m.target),
                               'kind': m.kind, 'source_quotient': _y_names(m.source_quotient),
                               'target_quotient': _y_names(m.target_quotient)}
                              for m in maps], True
    _need(args, 'd')
    if args.action == 'concentration':
        audit = cellres.concentration_audit(args.n, args.d, args.t_max)
        return _query(args), {'ok': audit.ok, 'violation': audit.violation}, audit.ok
    record = cellres.beilinson_degenerate_object(args.n, args.d)
    if args.action == 'stalk':
        _need(args, 'point')
        return _query(args), cellres.stalk_dimension(record, args.point), True
    result = {'summands': [{'i': i, 'support_dim': dim, 'quotient': _y_names(q),
                            'multiplicity': m} for i, dim, q, m in record.summands],
              'hilbert': [{'t': t, 'cokernel': a, 'closed_form': b} for t, a, b in record.hilbert],
              'ok': record.ok}
    return _query(args), result, record.ok


def cmd_flag(args):
    report = excseq.verify_flag_collection(args.k, args.n, args.mode)
    labels = excseq.flag_collection((1, args.k), args.n)
    return _query(args), report.to_dict(labels), report.passed


def cmd_quadric(args):
    result = excseq.quadric_line_bundle_pattern(args.n)
    return _query(args), result, result['passed']


def cmd_spin(args):
    if args.parabolic is None:
        return _query(args), rootsys.spin_weights(args.rank), True
    return _query(args), rootsys.parabolic_spin_weights(args.rank, args.parabolic), True


def cmd_scan(args):
    found = excseq.igrass37_scan()
    matches = found == excseq.golden_igrass37()
    return _query(args), {'count': len(found), 'labels': sorted(found),
                          'matches_golden': matches}, matches


def cmd_offenders(args):
    rows = excseq.igrass26_offenders()
    matches = rows == excseq.golden_igrass26()
    result = [{'source': a, 'target': b, 'degree': d, 'dim': dim,
               'terms': excseq.format_terms(terms)} for a, b, d, dim, terms in rows]
    return _query(args), {'offenders': result, 'matches_golden': matches}, matches


# ---------------------------------------------------------------- parser

def _geometry_args(p, required=True):
    p.add_argument('--geometry', choices=GEOMETRIES, required=required,
                   help='variety: Grass(k,n), IGrass(k,2n), P^n, Flag(1,k;n) or the quadric in '
                        'P^(n-1)')
    p.add_argument('--k', type=int, help='rank of the tautological bundle')
    p.add_argument('--n', type=int, help='n of the geometry')


def _collection_args(p):
    p.add_argument('--collection', choices=COLLECTIONS, help='a built in collection')
    p.add_argument('--labels', help="';' separated labels, e.g. '1,1;1,0;0,0'")


def _state_args(p):
    _geometry_args(p, required=False)
    _collection_args(p)
    p.add_argument('--gram', type=parse_matrix, help="Gram matrix, e.g. '1,2;0,1'")
    p.add_argument('--omega', type=int, help='(Omega^n(n), ..., Omega^1(1), O) on P^n')


def setup_parser():
    parser = argparse.ArgumentParser(prog='homocat',
                                     description='Cohomology of homogeneous bundles, exceptional '
                                                 'collections and cellular resolutions')
    parser.add_argument('--version', action='version', version='%(prog)s ' +
                        __version__ + '  ' + __date__)
    parser.add_argument('--format', choices=FORMATS, help='output format (default json)')
    parser.add_argument('--config', help='YAML settings file')
    parser.add_argument('--debug', action='store_true', help='DEBUG lines on stderr')
    parser.add_argument('--threads', type=int, help='worker processes for the scans')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('bott', help='cohomology of a homogeneous bundle')
    p.add_argument('--geometry', choices=('grass-a', 'igrass-c', 'gp'), default='grass-a')
    p.add_argument('--relative-flag', action='store_true',
                   help='direct image along the full flag bundle of a rank k bundle')
    p.add_argument('--lambda', '--label', dest='weight', type=human.parse_weight, required=True)
    p.add_argument('--k', type=int)
    p.add_argument('--n', type=int)
    p.add_argument('--family', choices=rootsys.FAMILIES)
    p.add_argument('--rank', type=int)
    p.add_argument('--parabolic', type=parse_indices, help='omitted simple roots, e.g. 1,2')
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser('lr', help='Littlewood-Richardson decomposition')
    p.add_argument('--lam', type=human.parse_label, required=True)
    p.add_argument('--mu', type=human.parse_label, required=True)
    p.add_argument('--k', type=int, help='GL_k, default the length of --lam')
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser('ext', help='Ext between two bundles')
    _geometry_args(p)
    p.add_argument('--a', required=True)
    p.add_argument('--b', required=True)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser('enumerate', help='generating sets of bundles and weights')
    p.add_argument('which', choices=('generators', 'sharp', 'hearts'))
    p.add_argument('--k', type=int)
    p.add_argument('--n', type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('verify', help='check an exceptional collection')
    _geometry_args(p)
    _collection_args(p)
    p.add_argument('--mode', choices=excseq.MODES, default='sequence')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('gram', help='Euler form of a collection')
    _geometry_args(p)
    _collection_args(p)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser('mutate', help='mutations of K-classes')
    _state_args(p)
    p.add_argument('--word', type=parse_word, help="e.g. '1L,2R'")
    p.add_argument('--braid-words', type=int, help='check braid relations on random words')
    p.add_argument('--length', type=int, default=8)
    p.add_argument('--seed', type=int, default=0)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser('dual', help='dual collection')
    _state_args(p)
    p.add_argument('--side', choices=(ktheory.LEFT, ktheory.RIGHT), default=ktheory.LEFT)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser('kron', help='Gram matrix of a product collection')
    p.add_argument('--gram-x', type=parse_matrix, required=True)
    p.add_argument('--gram-y', type=parse_matrix, required=True)
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser('schubert-count', help='|W^P|')
    p.add_argument('--family', choices=rootsys.FAMILIES, required=True)
    p.add_argument('--rank', type=int, required=True)
    p.add_argument('--parabolic', type=parse_indices, required=True)
    p.set_defaults(func=cmd_schubert_count)

    p = sub.add_parser('bruhat', help='Bruhat order on index tuples or Weyl words')
    p.add_argument('--a', type=parse_indices, required=True)
    p.add_argument('--b', type=parse_indices, required=True)
    p.add_argument('--family', choices=rootsys.FAMILIES, help='compare reduced words instead')
    p.add_argument('--rank', type=int)
    p.add_argument('--k', type=int, help='also report Young diagrams of Grass(k,n) indices')
    p.add_argument('--n', type=int)
    p.set_defaults(func=cmd_bruhat)

    p = sub.add_parser('cell', help='cellular resolution of the degenerate diagonal')
    p.add_argument('action', choices=('build', 'audit', 'resolve', 'en', 'degenerate', 'export'))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--bound', type=int, help='bidegree bound for en/degenerate')
    p.add_argument('--complex', choices=('yn', 'en', 'degenerate'), default='yn')
    p.add_argument('--h', type=int, default=0, help='homological degree to export')
    p.set_defaults(func=cmd_cell)

    p = sub.add_parser('beilinson', help='degenerate Beilinson functor')
    p.add_argument('action', choices=('object', 'morphism', 'stalk', 'concentration'))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d', type=int)
    p.add_argument('--e', type=int)
    p.add_argument('--k', type=int)
    p.add_argument('--point', type=human.parse_label)
    p.add_argument('--t-max', type=int, default=3)
    p.set_defaults(func=cmd_beilinson)

    p = sub.add_parser('flag', help='collection on Flag(1,k;n)')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--mode', choices=excseq.MODES, default='strong')
    p.set_defaults(func=cmd_flag)

    p = sub.add_parser('quadric', help='line bundles on the quadric in P^(n-1)')
    p.add_argument('--n', type=int, required=True)
    p.set_defaults(func=cmd_quadric)

    p = sub.add_parser('spin', help='weights of the spin representation of B_r')
    p.add_argument('--rank', type=int, required=True)
    p.add_argument('--parabolic', type=int, help='P(alpha_i) submodule')
    p.set_defaults(func=cmd_spin)

    p = sub.add_parser('scan', help='direct images of the IGrass(3,7) weights')
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser('offenders', help='higher Ext among the IGrass(2,6) bundles')
    p.set_defaults(func=cmd_offenders)
    return parser


def _configure(args):
    if args.config:
        homocat_config.load(args.config)
    if args.debug:
        homocat_config.set_value('debug', True)
    if args.threads is not None:
        homocat_config.set_value('threads', args.threads)


def run(argv=None, out=None):
    """
    Parse argv, run one subcommand and print its report.

    Returns:
        0 on success, 1 when the requested check fails, 2 on usage errors
    """
    parser = setup_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE
    try:
        _configure(args)
        trace.debug('cli.run', f"{args.command} {_query(args)}")
        query, result, ok = args.func(args)
    except (ValueError, OSError) as e:
        print(f"homocat {args.command}: error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return USAGE
    emit(args.command, query, result, args.format or homocat_config.output_format, ok, out)
    return OK if ok else FAILED
