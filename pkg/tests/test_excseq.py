import pytest
from sympy import Rational

from homocat import bott
from homocat import excseq
from homocat import parab
from homocat.excseq import BundleLabel


@pytest.mark.parametrize('k,n,count', [(2, 3, 14), (2, 2, 5), (1, 1, 2), (1, 2, 4)])
def test_generators_counts(k, n, count):
    labels = excseq.enumerate_generators(k, n)
    assert len(labels) == count
    assert len(set(labels)) == count


def test_generators_igrass26_members():
    labels = {b.schur for b in excseq.enumerate_generators(2, 3)}
    assert {(4, 3), (4, 2), (4, 1), (3, 0), (2, 0), (1, 0), (0, 0)} <= labels
    # one row but four columns: 1 < 4 - 2
    assert (4, 0) not in labels
    assert (3, 3) in labels


@pytest.mark.parametrize('k,n,count', [(1, 1, 2), (1, 2, 4), (2, 2, 8), (3, 3, 48)])
def test_sharp_counts(k, n, count):
    box = excseq.enumerate_sharp(k, n)
    assert len(box) == count
    assert (0,) * k in box


def test_bad_ranges():
    with pytest.raises(ValueError):
        excseq.enumerate_generators(3, 2)
    with pytest.raises(ValueError):
        excseq.enumerate_sharp(0, 2)


def test_hearts_b3():
    weights = excseq.enumerate_hearts_b3()
    assert len(weights) == 90
    assert len(set(weights)) == 90
    h = Rational(1, 2)
    assert (0, 0, 0) in weights
    assert (-4, 0, 0) in weights
    assert (-5 + h, -2 + h, -1 + h) in weights
    for w in weights:
        assert all((c - w[0]).q == 1 for c in w)


def test_hearts_spot_checks():
    schur = bott.relative_bott_flag(3, (-4, 0, 0)).schur
    assert excseq.canonical_label(schur) == BundleLabel((2, 1, 1), 0)
    image = bott.relative_bott_flag(3, (-4, 0, 0))
    assert image.degree == 2


def test_canonical_label():
    assert excseq.canonical_label((0, 0, 0), 2) == BundleLabel((-1, -1, -1), 0)
    assert excseq.canonical_label((0, 0, 0), 3) == BundleLabel((-1, -1, -1), 1)
    assert excseq.canonical_label((2, 1, 0), -2) == BundleLabel((3, 2, 1), 0)
    assert excseq.canonical_label((2, 1, 0), 1) == BundleLabel((2, 1, 0), 1)


def test_igrass37_scan_matches_golden():
    found = excseq.igrass37_scan()
    golden = excseq.golden_igrass37()
    assert len(golden) == 22
    assert found == golden


def test_golden_names():
    rows = excseq.load_golden('igrass37_bundles.txt')
    names = {row[2] for row in rows}
    assert 'O' in names and 'R (x) L' in names
    assert BundleLabel((2, 1, 1), 0).name() == 'R(-1)'
    assert BundleLabel((3, 3, 3), 1).name() == 'O(-3) (x) L'


def test_igrass26_offenders_match_golden():
    rows = excseq.igrass26_offenders()
    assert rows == excseq.golden_igrass26()
    assert len(rows) == 6
    assert {row[2] for row in rows} == {3}


def test_igrass26_hom_in_reverse_direction():
    geometry = bott.igrass_C(2, 3)
    for a, b, _, _, _ in excseq.golden_igrass26():
        assert geometry.ext(b, a).hom_dim() > 0


def test_igrass26_offenders_reported_by_strong_check():
    geometry = bott.igrass_C(2, 3)
    labels = excseq.enumerate_generators(2, 3)
    report = excseq.verify_collection(geometry, labels, 'strong')
    assert not report.passed
    assert not report.is_strong
    schurs = [b.schur for b in labels]
    positive = {(schurs[o.source], schurs[o.target]) for o in report.offenders
                if o.degree > 0 and o.source != o.target}
    assert positive == {(row[0], row[1]) for row in excseq.golden_igrass26()}
    assert report.length == 14 and report.schubert_count == 12


@pytest.mark.parametrize('k,n', [(2, 4), (2, 5), (1, 4), (3, 5)])
def test_kapranov_is_strong_and_full_size(k, n):
    geometry = bott.grass_A(k, n)
    labels = excseq.kapranov_collection(k, n)
    report = excseq.verify_collection(geometry, labels, 'strong')
    assert report.passed, report.offenders
    assert report.is_strong and report.is_exceptional_sequence
    assert report.count_matches


def test_kapranov_very_strong_poset():
    geometry = bott.grass_A(2, 4)
    labels = excseq.kapranov_collection(2, 4)
    report = excseq.verify_collection(geometry, labels, 'very_strong_poset')
    assert report.passed and report.admissible_poset_ok
    assert excseq.verify_collection(geometry, labels, 'poset').passed


def test_containment_inverted_poset_fails():
    geometry = bott.grass_A(2, 4)
    labels = excseq.kapranov_collection(2, 4)
    report = excseq.verify_collection(geometry, labels, 'poset',
                                      leq=lambda a, b: parab.contains(b, a))
    assert not report.passed
    assert {o.kind for o in report.offenders} == {'poset'}
    assert report.is_strong
    assert report.admissible_poset_ok is False


def test_discrete_order_is_admissible_but_not_very_strong():
    geometry = bott.grass_A(2, 4)
    labels = excseq.kapranov_collection(2, 4)
    report = excseq.verify_collection(geometry, labels, 'very_strong_poset',
                                      leq=lambda a, b: a == b)
    assert report.is_exceptional_sequence and report.is_strong
    assert report.admissible_poset_ok is False
    assert report.offenders and {o.kind for o in report.offenders} == {'poset'}
    assert all(o.source < o.target and o.degree == 0 for o in report.offenders)
    assert report.to_dict(labels)['admissible_poset_ok'] is False

    report = excseq.verify_collection(geometry, labels, 'poset', leq=lambda a, b: a == b)
    assert report.passed
    assert report.admissible_poset_ok is True


def test_reversed_kapranov_fails():
    geometry = bott.grass_A(2, 4)
    labels = list(reversed(excseq.kapranov_collection(2, 4)))
    report = excseq.verify_collection(geometry, labels, 'sequence')
    assert not report.passed
    assert report.is_exceptional_each
    assert not report.is_exceptional_sequence
    assert {o.kind for o in report.offenders} == {'order'}


def test_igrass24_sequence():
    report = excseq.verify_collection(bott.igrass_C(2, 2), excseq.igrass24_sequence(), 'strong')
    assert report.passed
    assert report.count_matches


def test_samokhin_sequence():
    sequence = excseq.samokhin_sequence()
    assert sequence == [(4, 3, 3), (3, 3, 3), (3, 2, 2), (2, 2, 2),
                        (2, 1, 1), (1, 1, 1), (1, 0, 0), (0, 0, 0)]
    report = excseq.verify_collection(bott.igrass_C(3, 3), sequence, 'strong')
    assert report.passed, report.offenders
    assert report.count_matches


def test_self_ext_reported():
    report = excseq.verify_collection(bott.igrass_C(3, 3), [(2, 1, 0)], 'sequence')
    assert not report.is_exceptional_each
    assert report.offenders == [excseq.Offender(0, 0, 1, 35, 'self')]


@pytest.mark.parametrize('k,n', [(2, 4), (2, 5)])
def test_hom_criterion_matches_bott(k, n):
    geometry = bott.grass_A(k, n)
    labels = parab.young_diagrams(k, n - k)
    for lam in labels:
        for mu in labels:
            assert (geometry.ext(lam, mu).hom_dim() > 0) == excseq.hom_criterion_grass(lam, mu)


def test_flag_collection_shape():
    labels = excseq.flag_collection((1, 2), 3)
    assert len(labels) == 6
    assert labels[0] == ((1,), (1, 1))
    assert labels[-1] == ((0,), (0, 0))
    assert len(excseq.flag_collection((1, 2), 4)) == 12
    with pytest.raises(ValueError):
        excseq.flag_collection((2, 1), 3)


@pytest.mark.parametrize('k,n', [(2, 3), (2, 4)])
def test_flag_collection_is_strong(k, n):
    report = excseq.verify_flag_collection(k, n)
    assert report.passed, report.offenders
    assert report.length == k * len(parab.young_diagrams(k, n - k))
    assert report.count_matches


def test_flag_ext_line_bundle_part():
    # Hom(R_1, O) = H^0(R_1^vee) = V^vee on Flag(1,2;3)
    table = excseq.flag_ext_table(2, 3, ((1,), (0, 0)), ((0,), (0, 0)))
    assert table.hom_dim() == 3
    assert excseq.flag_ext_table(2, 3, ((0,), (0, 0)), ((1,), (0, 0))).is_empty()


@pytest.mark.parametrize('N', range(3, 9))
def test_quadric_pattern(N):
    result = excseq.quadric_line_bundle_pattern(N)
    assert result['strong']
    assert result['hom_pattern']
    assert result['collection_size'] == result['schubert_count']
    assert result['passed']


def test_unknown_mode():
    with pytest.raises(ValueError):
        excseq.verify_collection(bott.grass_A(2, 4), [(0, 0)], 'weak')


def test_report_to_dict():
    labels = list(reversed(excseq.kapranov_collection(1, 3)))
    report = excseq.verify_collection(bott.projective(2), labels, 'sequence')
    data = report.to_dict(labels)
    assert data['passed'] is False
    assert data['length'] == 3 and data['schubert_count'] == 3
    assert data['offenders'][0]['kind'] == 'order'
    assert isinstance(data['offenders'][0]['source'], str)


def test_short_collection_warns(capsys):
    report = excseq.verify_collection(bott.igrass_C(2, 2), [(1, 1), (0, 0)], 'strong')
    assert report.passed and not report.count_matches
    assert 'WARNING excseq.verify_collection' in capsys.readouterr().err
    excseq.verify_collection(bott.igrass_C(2, 2), excseq.igrass24_sequence(), 'strong')
    assert capsys.readouterr().err == ''
