import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mwscodes import gf
from mwscodes.errors import DivisionByZero, FieldMismatch, NotPrimePower, TooLarge
from mwscodes.gf import make_field

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
LARGER_Q = [25, 27, 32, 49, 64, 81, 125, 243, 256, 1024, 3125, 65536]


def _poly_is_primitive(coeffs, p):
    """Independent check: x has order p^m - 1 modulo the monic polynomial."""
    m = len(coeffs)
    q = p**m

    def times_x(v):
        top = v[-1]
        out = [0] + v[:-1]
        return [(a - top * f) % p for a, f in zip(out, coeffs)]

    one = [1] + [0] * (m - 1)
    v = one
    for step in range(1, q):
        v = times_x(v)
        if v == one:
            return step == q - 1
    return False


def test_gf2():
    F = make_field(2)
    assert (F.p, F.m, F.alpha) == (2, 1, 1)


def test_gf3_alpha():
    F = make_field(3)
    assert F.alpha == 2
    assert F.mul(2, 2) == 1


def test_gf4_modulus_by_enumeration():
    F = make_field(4)
    primitive = [c for c in itertools.product(range(2), repeat=2) if _poly_is_primitive(list(c), 2)]
    assert primitive == [(1, 1)]
    assert F.modulus == (1, 1)
    a = F.alpha
    assert a == 2
    assert F.mul(a, a) == F.add(a, 1) == 3
    assert F.pow(a, 3) == 1


@pytest.mark.parametrize("q", [8, 9, 16, 25, 27])
def test_modulus_is_lexicographically_smallest_primitive(q):
    F = make_field(q)
    cands = [c for c in itertools.product(range(F.p), repeat=F.m)
             if _poly_is_primitive(list(c), F.p)]
    assert F.modulus == cands[0]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 257])
def test_smallest_primitive_root(p):
    F = make_field(p)
    for g in range(1, F.alpha):
        assert len({pow(g, e, p) for e in range(1, p)}) < p - 1
    assert len({pow(F.alpha, e, p) for e in range(1, p)}) == p - 1


@pytest.mark.parametrize("q", SMALL_Q + LARGER_Q)
def test_log_exp_tables(q):
    F = make_field(q)
    assert sorted(F.exp_table.tolist()) == list(range(1, q))
    x = np.arange(1, q)
    assert np.array_equal(F.exp_table[F.log_table[x]], x)
    assert F.pow(F.alpha, q - 1) == 1


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    F = make_field(q)
    e = np.arange(q)
    add = F.vadd(e[:, None], e[None, :])
    mul = F.vmul(e[:, None], e[None, :])
    assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
    assert np.array_equal(add[0], e) and np.array_equal(mul[1], e)
    for x in range(q):
        assert np.array_equal(add[add[x]][:, :], add[x][add])  # (x+y)+z = x+(y+z)
        assert np.array_equal(mul[x][add], add[mul[x]][:, mul[x]])  # x(y+z) = xy+xz
        assert np.array_equal(mul[mul[x]], mul[x][mul])
        assert F.add(x, F.neg(x)) == 0
        if x:
            assert F.mul(x, F.inv(x)) == 1


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(LARGER_Q), st.data())
def test_field_axioms_random(q, data):
    F = make_field(q)
    x, y, z = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.sub(F.add(x, y), y) == x
    if x:
        assert F.mul(x, F.inv(x)) == 1


def test_prime_power_errors():
    for q in (6, 10, 12, 100, 1, 0):
        with pytest.raises(NotPrimePower):
            make_field(q)
    with pytest.raises(TooLarge):
        make_field(2**17)


def test_element_wrapper():
    F4, F3 = make_field(4), make_field(3)
    a = F4.element(F4.alpha)
    assert a * a == a + 1
    assert gf.mul(a, a) == gf.add(a, F4.element(1))
    assert gf.pow(a, 3) == 1
    assert gf.inv(a) * a == 1
    assert gf.neg(a) + a == 0
    assert gf.sub(a, a) == 0
    assert (F3.element(2) * F3.element(2)).value == 1
    with pytest.raises(FieldMismatch):
        a + F3.element(1)
    with pytest.raises(DivisionByZero):
        F4.element(0).inv()
    with pytest.raises(DivisionByZero):
        F4.inv(0)


def test_field_is_cached_and_picklable():
    import pickle
    F = make_field(9)
    assert make_field(9) is F
    assert pickle.loads(pickle.dumps(F)) == F
