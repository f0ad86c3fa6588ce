from math import comb

import pytest

from homocat import homocat_config
from homocat import parab
from homocat import rootsys
from homocat.parab import parabolic


@pytest.mark.parametrize('n', range(1, 7))
def test_projective_space_count(n):
    assert parab.schubert_count(parabolic('A', n + 1, 1)) == n + 1


@pytest.mark.parametrize('n,k', [(n, k) for n in range(2, 7) for k in range(1, n)])
def test_grassmannian_count(n, k):
    assert parab.schubert_count(parabolic('A', n, k)) == comb(n, k)


@pytest.mark.parametrize('n,k', [(n, k) for n in range(1, 6) for k in range(1, n + 1)])
def test_type_c_count(n, k):
    p = parabolic('C', n, k)
    assert parab.schubert_count(p) == 2 ** k * comb(n, k)
    assert len(parab.isotropic_indices(k, n)) == 2 ** k * comb(n, k)


def test_small_counts():
    assert parab.schubert_count(parabolic('C', 3, 2)) == 12
    assert parab.schubert_count(parabolic('B', 3, 3)) == 8


@pytest.mark.parametrize('family,rank,omitted', [
    ('A', 4, {2}), ('B', 3, {1}), ('C', 3, {2}), ('D', 4, {1}), ('B', 3, {1, 3}), ('C', 2, set())])
def test_orbit_stabilizer(family, rank, omitted):
    p = parabolic(family, rank, omitted)
    assert parab.schubert_count(p) * parab.parabolic_subgroup_order(p) == \
        rootsys.weyl_group_order(p.rs)


def test_budget(monkeypatch):
    monkeypatch.setattr(homocat_config, 'weyl_budget', 10)
    with pytest.raises(ValueError, match='weyl_budget'):
        parab.schubert_count(parabolic('B', 3, 3))


def test_bad_parabolic():
    with pytest.raises(ValueError):
        parabolic('A', 3, 3)


@pytest.mark.parametrize('idx,lam', [((1, 2), (0, 0)), ((3, 4), (2, 2)), ((2, 4), (2, 1))])
def test_grass_young_examples(idx, lam):
    assert parab.grass_young_bijection(2, 4, idx) == lam
    assert parab.young_grass_bijection(2, 4, lam) == idx


@pytest.mark.parametrize('k,n', [(1, 3), (2, 4), (2, 5), (3, 6)])
def test_grass_young_is_bijective(k, n):
    image = {parab.grass_young_bijection(k, n, idx) for idx in parab.grass_indices(k, n)}
    assert len(image) == comb(n, k)
    assert image == set(parab.young_diagrams(k, n - k))


def test_grass_young_rejects_bad_index():
    with pytest.raises(ValueError):
        parab.grass_young_bijection(2, 4, (3, 2))
    with pytest.raises(ValueError):
        parab.grass_young_bijection(2, 4, (1, 5))


def test_bruhat_examples():
    assert parab.bruhat_leq((1, 3), (2, 4))
    assert parab.bruhat_leq((2, 3), (2, 3))
    assert not parab.bruhat_leq((2, 3), (1, 4))
    assert not parab.bruhat_leq((1, 4), (2, 3))


def test_bruhat_mismatched_kinds():
    rs = rootsys.root_system('A', 2)
    with pytest.raises(ValueError):
        parab.bruhat_leq((1, 2), rootsys.identity(2), rs)
    with pytest.raises(ValueError):
        parab.bruhat_leq((1, 2), (1, 2, 3))


@pytest.mark.parametrize('k,n', [(2, 4), (2, 5)])
def test_bruhat_is_containment(k, n):
    idx = parab.grass_indices(k, n)
    for a in idx:
        for b in idx:
            lam_a = parab.grass_young_bijection(k, n, a)
            lam_b = parab.grass_young_bijection(k, n, b)
            assert parab.bruhat_leq(a, b) == parab.contains(lam_b, lam_a)


def _assert_partial_order(elements, leq):
    for a in elements:
        assert leq(a, a)
        for b in elements:
            if a != b and leq(a, b):
                assert not leq(b, a)
            for c in elements:
                if leq(a, b) and leq(b, c):
                    assert leq(a, c)


def test_bruhat_partial_order_isotropic():
    _assert_partial_order(parab.isotropic_indices(2, 3), parab.bruhat_leq)


@pytest.mark.parametrize('family,rank', [('A', 3), ('B', 2), ('C', 2)])
def test_bruhat_partial_order_weyl(family, rank):
    rs = rootsys.root_system(family, rank)
    group = list(rootsys.weyl_group(rs))
    _assert_partial_order(group, lambda a, b: parab.bruhat_leq(a, b, rs))


def test_bruhat_weyl_length_monotone():
    rs = rootsys.root_system('B', 3)
    group = list(rootsys.weyl_group(rs))
    longest = max(group, key=lambda w: rootsys.weyl_length(rs, w))
    identity = rootsys.identity(3)
    for w in group:
        assert parab.bruhat_leq(identity, w, rs)
        assert parab.bruhat_leq(w, longest, rs)
        for s in rootsys.simple_reflections(rs):
            ws = rootsys.compose(w, s)
            if rootsys.weyl_length(rs, ws) > rootsys.weyl_length(rs, w):
                assert parab.bruhat_leq(w, ws, rs)


def test_grassmannian_bruhat_matches_weyl_order():
    # W^P of Grass(2,4) with the induced order equals the componentwise order on I_{2,4}
    rs = rootsys.root_system('A', 4)
    reps = parab.minimal_coset_reps(parabolic('A', 4, 2))
    by_index = {}
    for w in reps:
        # w(omega_2) = e_{a} + e_{b}: the occupied positions give the index tuple
        image = w.apply(rootsys.fundamental_weight(rs, 2))
        by_index[tuple(i + 1 for i, c in enumerate(image) if c == 1)] = w
    assert len(by_index) == 6
    for a, u in by_index.items():
        for b, w in by_index.items():
            assert parab.bruhat_leq(u, w, rs) == parab.bruhat_leq(a, b)


@pytest.mark.parametrize('family,rank', [('A', 3), ('B', 3), ('D', 4)])
def test_word_element_inverts_reduced_word(family, rank):
    rs = rootsys.root_system(family, rank)
    for w in rootsys.weyl_group(rs):
        word = rootsys.reduced_word(rs, w)
        assert parab.word_element(rs, word) == w
        assert len(word) == rootsys.weyl_length(rs, w)
