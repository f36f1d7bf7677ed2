import random
from fractions import Fraction as F

import pytest

from maxcirc import (
    Circulant,
    DimensionMismatch,
    MaxMatrix,
    circ_critical_components,
    circ_lambda,
    circ_mul,
    circ_period,
    circ_power,
    circ_spectral,
    circulant_row_of,
    critical_structure,
    expand,
    mat_mul,
    max_cycle_mean,
)


def random_row(rng, n, pool):
    return [rng.choice(pool) for _ in range(n)]


def test_expand_running_example():
    a = expand(Circulant.of([0, 0, 1, "1/2"]))
    t = F(1, 2)
    assert a.rows == (
        (F(0), F(0), F(1), t),
        (t, F(0), F(0), F(1)),
        (F(1), t, F(0), F(0)),
        (F(0), F(1), t, F(0)),
    )


def test_expand_one_by_one():
    assert expand(Circulant.of(["2/3"])).rows == ((F(2, 3),),)


def test_expand_six_cycle_permutation():
    a = expand(Circulant.of([0, 1, 0, 0, 0, 0]))
    for i in range(6):
        for j in range(6):
            assert a.rows[i][j] == (1 if (j - i) % 6 == 1 else 0)


def test_expand_round_trips_through_detection():
    c = Circulant.of([0, "1/3", 1, 0, "1/3"])
    assert circulant_row_of(expand(c)) == c.row
    assert circulant_row_of(MaxMatrix.of([[0, 1], [1, 1]])) is None


def test_circ_mul_examples():
    a = Circulant.of([0, 0, 1, "1/2"])
    assert circ_mul(a, a) == Circulant.of([1, "1/2", "1/4", 0])
    shift = Circulant.of([0, 1, 0])
    assert circ_mul(shift, shift) == Circulant.of([0, 0, 1])
    c = Circulant.of(["1/3", 0, 2])
    assert circ_mul(Circulant.identity(3), c) == c
    with pytest.raises(DimensionMismatch):
        circ_mul(shift, a)


def test_circ_mul_is_expansion_homomorphism():
    rng = random.Random(21)
    pool = [0, F(1, 3), F(1, 2), 1, F(7, 4)]
    for _ in range(30):
        n = rng.randint(1, 10)
        c = Circulant.of(random_row(rng, n, pool))
        d = Circulant.of(random_row(rng, n, pool))
        assert expand(circ_mul(c, d)) == mat_mul(expand(c), expand(d))


def test_circ_power_matches_matrix_power():
    a = Circulant.of([0, 0, 1, "1/2"])
    assert circ_power(a, 16) == Circulant.of([1, "1/2", "1/4", "1/8"])
    assert circ_power(a, 0) == Circulant.identity(4)


def test_circ_lambda_examples():
    assert circ_lambda(Circulant.of([0, 0, 1, "1/2"])) == 1
    assert circ_lambda(Circulant.of([0, 0, 0])) == 0
    assert circ_lambda(Circulant.of([0, 1, 0, 1, 0, 0])) == 1


def test_circ_lambda_equals_max_cycle_mean():
    rng = random.Random(22)
    pool = [0, F(1, 4), F(1, 2), F(2, 3), 1, 3]
    for _ in range(25):
        n = rng.randint(1, 7)
        c = Circulant.of(random_row(rng, n, pool))
        if c.is_zero():
            assert max_cycle_mean(expand(c)) is None
            continue
        cm = max_cycle_mean(expand(c))
        assert cm.value == circ_lambda(c)


def test_critical_components_running_example():
    assert circ_critical_components(Circulant.of([0, 0, 1, "1/2"])) == ((1, 3), (2, 4))


def test_critical_components_full_component():
    assert circ_critical_components(Circulant.of([0, 1, 0, 1, 0, 0])) == (
        (1, 2, 3, 4, 5, 6),
    )


def test_critical_components_diagonal_only_gives_singletons():
    sp = circ_spectral(Circulant.of([1, "1/2", "1/2"]))
    assert sp.diagonal_is_maximal
    assert sp.critical_offsets == ()
    assert sp.component_count == 3
    assert sp.components == ((1,), (2,), (3,))
    assert sp.period == 1


def test_critical_components_rejects_zero():
    with pytest.raises(ValueError):
        circ_critical_components(Circulant.of([0, 0]))
    with pytest.raises(ValueError):
        circ_period(Circulant.of([0, 0]))


def test_components_agree_with_critical_structure():
    rng = random.Random(23)
    pool = [0, F(1, 2), F(3, 4), 1]
    for _ in range(25):
        n = rng.randint(1, 8)
        c = Circulant.of(random_row(rng, n, pool))
        if c.is_zero():
            continue
        assert circ_critical_components(c) == critical_structure(expand(c)).components


def test_circ_period_examples():
    assert circ_period(Circulant.of([0, 0, 1, "1/2"])) == 2
    assert circ_period(Circulant.of([0, 1, 0, 1, 0, 0])) == 2
    assert circ_period(Circulant.of([1, "1/2", "1/4", "1/8"])) == 1


def test_circ_period_formula_values():
    sp = circ_spectral(Circulant.of([0, 1, 0, 1, 0, 0]))
    assert sp.period_formulas == (2, 2, 2)
    sp1 = circ_spectral(Circulant.of([1, 1, 0, 0]))
    assert sp1.period == 1
    assert sp1.period_formulas is None


def test_equal_weight_cycle_through_every_nonzero_entry():
    # every nonzero entry (i, j) lies on the cycle stepping by (j - i) mod n,
    # whose edges all carry that same entry value
    rng = random.Random(24)
    pool = [0, F(1, 3), F(1, 2), 1]
    for _ in range(20):
        n = rng.randint(1, 7)
        c = Circulant.of(random_row(rng, n, pool))
        a = expand(c)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                w = a.rows[i - 1][j - 1]
                if w == 0:
                    continue
                step = (j - i) % n
                node = i
                for _ in range(n):
                    nxt = (node - 1 + step) % n + 1
                    assert a.rows[node - 1][nxt - 1] == w
                    node = nxt
                assert node == i
