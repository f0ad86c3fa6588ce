import random
from collections import Counter

import pytest

from homocat import rootsys
from homocat import young


ADJOINT_TWISTED = Counter({(2, 0, -2): 1, (2, -1, -1): 1, (1, 1, -2): 1,
                           (1, 0, -1): 2, (0, 0, 0): 1})


def _dim(lam):
    return rootsys.weyl_dim(rootsys.root_system('A', len(lam)), lam)


def test_pieri_two():
    assert young.lr_decompose((1, 0), (1, 0), 2) == Counter({(2, 0): 1, (1, 1): 1})


def test_adjoint_square():
    result = young.lr_decompose((2, 1, 0), (2, 1, 0), 3)
    assert result == Counter({(4, 2, 0): 1, (4, 1, 1): 1, (3, 3, 0): 1, (3, 2, 1): 2, (2, 2, 2): 1})
    shifted = Counter({young.det_twist(nu, -2): c for nu, c in result.items()})
    assert shifted == ADJOINT_TWISTED
    assert sum(c * _dim(nu) for nu, c in result.items()) == 64


def test_twisted_form_of_adjoint_square():
    # Sigma^{2,1,0} (x) Sigma^{0,-1,-2}
    result = young.lr_decompose((2, 1, 0), young.dualize((2, 1, 0)), 3)
    assert result == ADJOINT_TWISTED


def test_more_rows_than_k_are_dropped():
    assert young.lr_decompose((1,), (1,), 1) == Counter({(2,): 1})
    assert young.lr_decompose((1, 1), (1, 1), 2) == Counter({(2, 2): 1})


def test_known_coefficient():
    # c^{(3,2,1)}_{(2,1),(2,1)} = 2 is the classic case; check a second classic one
    result = young.lr_decompose((2, 1, 0, 0), (1, 1, 0, 0), 4)
    assert result == Counter({(3, 2, 0, 0): 1, (3, 1, 1, 0): 1, (2, 2, 1, 0): 1, (2, 1, 1, 1): 1})


def _random_label(rng, k, low=0, high=4):
    return tuple(sorted((rng.randint(low, high) for _ in range(k)), reverse=True))


def test_dimension_identity_random():
    rng = random.Random(7)
    for _ in range(200):
        k = rng.randint(1, 4)
        lam, mu = _random_label(rng, k), _random_label(rng, k)
        result = young.lr_decompose(lam, mu, k)
        assert sum(c * _dim(nu) for nu, c in result.items()) == _dim(lam) * _dim(mu)


def test_commutative_with_negative_entries():
    rng = random.Random(11)
    for _ in range(60):
        k = rng.randint(1, 4)
        lam, mu = _random_label(rng, k, -3, 3), _random_label(rng, k, -3, 3)
        assert young.lr_decompose(lam, mu, k) == young.lr_decompose(mu, lam, k)


def test_trivial_factor():
    for lam in [(3, 1, 0), (2, 2, -1), (0, 0, 0)]:
        assert young.lr_decompose(lam, (0, 0, 0)) == Counter({lam: 1})


def test_det_twist_distributes():
    rng = random.Random(3)
    for _ in range(40):
        k = rng.randint(1, 3)
        lam, mu = _random_label(rng, k, -2, 3), _random_label(rng, k, 0, 3)
        c = rng.randint(-3, 3)
        left = young.lr_decompose(young.det_twist(lam, c), mu, k)
        right = young.lr_decompose(lam, mu, k)
        assert left == Counter({young.det_twist(nu, c): m for nu, m in right.items()})


def test_dualize_and_twist():
    assert young.dualize((2, 1, 0)) == (0, -1, -2)
    assert young.dualize((0, 0, 0)) == (0, 0, 0)
    assert young.dualize(young.dualize((5, 3, -2))) == (5, 3, -2)
    assert young.det_twist((1, 0), 1) == (2, 1)
    assert young.det_twist((0, 0), 1) == (1, 1)
    assert young.det_twist((4, 1), 0) == (4, 1)


def test_check_label():
    with pytest.raises(ValueError):
        young.check_label((0, 1))
    with pytest.raises(ValueError):
        young.lr_decompose((1, 0), (1, 0, 0), 2)


@pytest.mark.parametrize('lam', [(0, 0), (1, 0), (2, 1), (2, 1, 0),
                                 (3, 1, 1), (2, 2, 0, 0), (3, 2, 1, 0)])
def test_weyl_dim_counts_tableaux(lam):
    assert young.ssyt_count(lam) == _dim(lam)


def test_gl_weights_shift():
    weights = young.gl_weights((1, 0, -1))
    assert weights[(0, 0, 0)] == 2
    assert sum(weights.values()) == 8
    assert young.gl_weights((1, 0)) == Counter({(1, 0): 1, (0, 1): 1})
