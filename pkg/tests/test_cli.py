import io
import json

import pytest

import homocat
from homocat import __version__
from homocat import cli
from homocat import homocat_config
from homocat import ktheory


def _run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def _json(*argv):
    code, text = _run('--format', 'json', *argv)
    return code, (json.loads(text) if text else None)


def test_ext_self_ext_on_igrass36():
    code, report = _json('ext', '--geometry', 'igrass-c', '--k', '3', '--n', '3',
                         '--a', '2,1,0', '--b', '2,1,0')
    assert code == cli.OK
    ext = report['result']['ext']
    assert sorted(ext) == ['0', '1']
    assert ext['0'] == {'dim': 1, 'terms': [['0,0,0', 1]]}
    assert ext['1'] == {'dim': 35, 'terms': [['1,1,0', 1], ['2,0,0', 1]]}
    assert report['provenance'] == {'paper_ref': cli.REFERENCES['ext'], 'operation': 'ext',
                                    'version': __version__}
    assert report['query']['a'] == '2,1,0'


def test_schubert_count_b3():
    code, report = _json('schubert-count', '--family', 'B', '--rank', '3', '--parabolic', '3')
    assert code == cli.OK
    assert report['result'] == 8


def test_relative_flag_trivial():
    code, report = _json('bott', '--relative-flag', '--k', '3', '--lambda', '0,0,0')
    assert code == cli.OK
    assert report['result']['degree'] == 0
    assert report['result']['schur'] == '0,0,0'
    assert report['result']['name'] == 'O'


def test_relative_flag_degree_one():
    code, report = _json('bott', '--relative-flag', '--k', '3', '--lambda=0,-3,0')
    assert report['result']['degree'] == 1
    assert report['result']['schur'] == '2,1,0'


def test_bott_general_gp_quadric_line_bundle():
    # O(-1) on the 3-dim quadric has no cohomology
    code, report = _json('bott', '--geometry', 'gp', '--family', 'B', '--rank', '2',
                         '--parabolic', '1', '--lambda=-1,0')
    assert code == cli.OK
    assert report['result'] == {'zero': True}


def test_bott_grass_hom():
    code, report = _json('bott', '--geometry', 'grass-a', '--k', '1', '--n', '3',
                         '--label=-1')
    assert report['result']['degree'] == 0
    assert report['result']['dim'] == 3


def test_lr():
    code, report = _json('lr', '--lam', '1,0', '--mu', '1,0')
    assert code == cli.OK
    assert report['result'] == {'terms': [{'weight': '2,0', 'mult': 1, 'dim': 3},
                                          {'weight': '1,1', 'mult': 1, 'dim': 1}],
                                'dim': 4, 'dims_match': True}


def test_lr_with_dual_factor():
    code, report = _json('lr', '--lam', '1,0', '--mu=0,-1')
    assert code == cli.OK
    terms = {t['weight']: t['dim'] for t in report['result']['terms']}
    assert terms == {'1,-1': 3, '0,0': 1}
    assert report['result']['dims_match'] is True


def test_enumerate():
    code, report = _json('enumerate', 'generators', '--k', '2', '--n', '3')
    assert len(report['result']) == 14
    assert report['result'][-1] == {'label': '0,0', 'name': 'O'}
    code, report = _json('enumerate', 'hearts')
    assert len(report['result']) == 90
    code, report = _json('enumerate', 'sharp', '--k', '2', '--n', '2')
    assert len(report['result']) == 8


def test_verify_kapranov_strong():
    code, report = _json('verify', '--geometry', 'grass-a', '--k', '2', '--n', '4',
                         '--collection', 'kapranov', '--mode', 'strong')
    assert code == cli.OK
    assert report['result']['passed'] is True
    assert report['result']['count_matches'] is True


def test_verify_reversed_fails():
    code, report = _json('verify', '--geometry', 'grass-a', '--k', '2', '--n', '4',
                         '--labels', '0,0;1,0;1,1;2,0;2,1;2,2')
    assert code == cli.FAILED
    assert {o['kind'] for o in report['result']['offenders']} == {'order'}


def test_verify_quadric_labels():
    code, report = _json('verify', '--geometry', 'quadric', '--n', '5',
                         '--labels=-2;-1;0', '--mode', 'strong')
    assert code == cli.OK
    assert report['result']['length'] == 3


def test_verify_usage_errors():
    assert _run('verify', '--geometry', 'grass-a', '--k', '2', '--n', '4')[0] == cli.USAGE
    assert _run('verify', '--geometry', 'grass-a', '--n', '4',
                '--collection', 'kapranov')[0] == cli.USAGE
    assert _run('verify', '--geometry', 'grass-a', '--k', '2', '--n', '4',
                '--collection', 'line-bundles')[0] == cli.USAGE
    assert _run('verify', '--geometry', 'quadric', '--n', '5',
                '--collection', 'kapranov')[0] == cli.USAGE
    assert _run('gram', '--geometry', 'projective', '--n', '2',
                '--collection', 'generators')[0] == cli.USAGE
    assert _run('verify', '--geometry', 'grass-a', '--k', '2', '--n', '4',
                '--collection', 'flag')[0] == cli.USAGE
    assert _run('dual', '--geometry', 'quadric', '--n', '5',
                '--collection', 'samokhin')[0] == cli.USAGE


def test_gram_projective_line():
    code, report = _json('gram', '--geometry', 'projective', '--n', '1',
                         '--collection', 'line-bundles')
    assert report['result'] == {'gram': [[1, 2], [0, 1]], 'det': 1,
                                'unit_upper_triangular': True}


def test_mutate_word():
    code, report = _json('mutate', '--gram', '1,2;0,1', '--word', '1L')
    assert code == cli.OK
    assert report['result'] == {'classes': [[2, -1], [1, 0]], 'semiorthonormal': True}


def test_mutate_braid_words():
    code, report = _json('mutate', '--omega', '2', '--braid-words', '20', '--seed', '3')
    assert code == cli.OK
    assert report['result']['failures'] == []


def test_mutate_needs_word():
    assert _run('mutate', '--gram', '1,2;0,1')[0] == cli.USAGE


def test_dual_of_omega_sequence():
    code, report = _json('dual', '--omega', '2', '--side', 'left')
    assert report['result']['duals'] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert report['result']['pairing'] == [[0, 0, 1], [0, -1, 0], [1, 0, 0]]


def test_kron():
    code, report = _json('kron', '--gram-x', '1,2;0,1', '--gram-y', '1')
    assert report['result']['gram'] == [[1, 2], [0, 1]]


def test_bruhat_indices_and_words():
    code, report = _json('bruhat', '--a', '1,3', '--b', '2,4', '--k', '2', '--n', '4')
    assert report['result'] == {'leq': True, 'young_a': '1,0', 'young_b': '2,1'}
    code, report = _json('bruhat', '--family', 'A', '--rank', '3', '--a', '1', '--b', '1,2')
    assert report['result']['leq'] is True
    code, report = _json('bruhat', '--family', 'A', '--rank', '3', '--a', '1,2', '--b', '1')
    assert report['result']['leq'] is False


def test_cell_subcommands():
    code, report = _json('cell', 'build', '--n', '3')
    assert report['result']['f_vector'] == [6, 8, 3]
    assert _run('cell', 'audit', '--n', '3')[0] == cli.OK
    assert _run('cell', 'resolve', '--n', '2')[0] == cli.OK
    assert _run('cell', 'en', '--n', '2', '--bound', '2')[0] == cli.OK
    assert _run('cell', 'degenerate', '--n', '2', '--bound', '2')[0] == cli.OK


def test_cell_export_tsv():
    code, text = _run('--format', 'tsv', 'cell', 'export', '--n', '2', '--complex', 'en',
                      '--h', '1')
    lines = text.splitlines()
    assert len(lines) == 6
    assert all(len(line.split('\t')) == 3 for line in lines)


def test_beilinson_object():
    code, report = _json('beilinson', 'object', '--n', '2', '--d', '2')
    assert code == cli.OK
    summands = report['result']['summands']
    assert [s['multiplicity'] for s in summands] == [1, 2, 3]
    assert [s['quotient'] for s in summands] == ['', 'y2', 'y1,y2']
    assert report['result']['ok'] is True


def test_beilinson_stalk_and_morphism():
    code, report = _json('beilinson', 'stalk', '--n', '1', '--d', '3', '--point', '1,0')
    assert report['result'] == 4
    code, report = _json('beilinson', 'morphism', '--n', '2', '--e', '1', '--k', '1')
    kinds = {m['source']: m['kind'] for m in report['result']}
    assert kinds == {'x0': 'identity', 'x1': 'identity', 'x2': 'surjection'}
    assert _run('beilinson', 'concentration', '--n', '1', '--d', '2')[0] == cli.OK


def test_flag_quadric_spin():
    assert _run('flag', '--k', '2', '--n', '3')[0] == cli.OK
    code, report = _json('quadric', '--n', '6')
    assert code == cli.OK
    assert report['result']['collection_size'] == report['result']['schubert_count']
    code, report = _json('spin', '--rank', '3', '--parabolic', '2')
    assert sorted(report['result']) == ['1/2,1/2,-1/2', '1/2,1/2,1/2']
    code, report = _json('spin', '--rank', '2')
    assert len(report['result']) == 4


def test_scan_and_offenders():
    code, report = _json('scan')
    assert code == cli.OK
    assert report['result']['count'] == 22
    assert report['result']['matches_golden'] is True
    code, report = _json('offenders')
    assert code == cli.OK
    assert len(report['result']['offenders']) == 6


def test_tsv_and_text_formats():
    code, text = _run('--format', 'tsv', 'schubert-count', '--family', 'A', '--rank', '4',
                      '--parabolic', '2')
    assert text == '6\n'
    code, text = _run('--format', 'text', 'verify', '--geometry', 'grass-a', '--k', '2',
                      '--n', '4', '--labels', '0,0;1,0')
    assert code == cli.FAILED
    assert text.startswith(f"homocat {__version__}: verify")
    assert 'FAILED' in text
    assert 'offenders' in text


def test_output_is_deterministic():
    argv = ('verify', '--geometry', 'igrass-c', '--k', '2', '--n', '3', '--collection',
            'generators', '--mode', 'strong')
    assert _run(*argv) == _run(*argv)


def test_usage_errors():
    assert _run()[0] == cli.USAGE
    assert _run('frobnicate')[0] == cli.USAGE
    assert _run('schubert-count', '--family', 'E', '--rank', '6',
                '--parabolic', '1')[0] == cli.USAGE
    assert _run('bott', '--geometry', 'grass-a', '--k', '3', '--n', '2',
                '--label', '0,0,0')[0] == cli.USAGE
    assert _run('--format', 'xml', 'spin', '--rank', '2')[0] == cli.USAGE


def test_version(capsys):
    assert _run('--version')[0] == cli.OK
    out = capsys.readouterr().out
    assert __version__ in out and homocat.__date__ in out


def test_config_file(tmp_path, monkeypatch):
    monkeypatch.setattr(homocat_config, 'audit_bidegree', 3)
    monkeypatch.setattr(homocat_config, 'output_format', 'json')
    path = tmp_path / 'homocat.yml'
    path.write_text('audit_bidegree: 2\noutput_format: tsv\n')
    code, text = _run('--config', str(path), 'schubert-count', '--family', 'C', '--rank', '2',
                      '--parabolic', '2')
    assert code == cli.OK
    assert text == '4\n'
    assert homocat_config.audit_bidegree == 2


def test_bad_config_file(tmp_path, monkeypatch):
    monkeypatch.setattr(homocat_config, 'threads', 1)
    path = tmp_path / 'homocat.yml'
    path.write_text('threads: many\n')
    assert _run('--config', str(path), 'spin', '--rank', '2')[0] == cli.USAGE
    assert _run('--config', str(tmp_path / 'missing.yml'), 'spin', '--rank', '2')[0] == cli.USAGE


def test_parse_word_and_matrix():
    assert cli.parse_word('1L, 2r') == [(1, ktheory.LEFT), (2, ktheory.RIGHT)]
    with pytest.raises(ValueError):
        cli.parse_word('1X')
    with pytest.raises(ValueError):
        cli.parse_matrix('1,2;3')
    assert cli.parse_labels('flag', '1|1,0;0|0,0') == [((1,), (1, 0)), ((0,), (0, 0))]


def test_provenance_names_every_subcommand(capsys):
    for command in cli.REFERENCES:
        assert _run(command, '--help')[0] == cli.OK
    code, report = _json('spin', '--rank', '2')
    assert report['provenance']['paper_ref'] == cli.REFERENCES['spin']
