import itertools

import pytest

from polarlines.gf import field_make, field_for_order, is_prime

SUPPORTED_Q = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32]


def test_arithmetic_tables_exhaustive_small():
    # full field axioms for q <= 9: associativity, commutativity,
    # distributivity, inverses
    for q in [2, 3, 4, 5, 7, 8, 9]:
        f = field_for_order(q)
        els = range(q)
        for a, b in itertools.product(els, repeat=2):
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
        for a, b, c in itertools.product(els, repeat=3):
            assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
            assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        for a in range(1, q):
            assert f.mul(a, f.inv(a)) == 1
            assert f.add(a, f.neg(a)) == 0


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_multiplication_is_a_group(q):
    # quotient by the reduction polynomial is a field iff every nonzero row
    # of the multiplication table is a permutation
    f = field_for_order(q)
    full = set(range(q))
    for a in range(1, q):
        assert set(int(x) for x in f.MUL[a]) == full


def test_gf4_generator_cubes_to_one():
    f = field_make(2, 2)
    x = 2  # the class of the indeterminate
    assert f.mul(x, f.mul(x, x)) == 1
    assert f.mul(x, x) == 3


@pytest.mark.parametrize("p,h", [(2, 2), (3, 2), (2, 4), (5, 2)])
def test_conjugation_is_an_involutory_automorphism(p, h):
    f = field_make(p, h)
    for a in range(f.q):
        assert f.conj(f.conj(a)) == a
        for b in range(f.q):
            assert f.conj(f.mul(a, b)) == f.mul(f.conj(a), f.conj(b))
            assert f.conj(f.add(a, b)) == f.add(f.conj(a), f.conj(b))
    fixed = [a for a in range(f.q) if f.conj(a) == a]
    assert len(fixed) == f.r


def test_gf9_conjugation_is_cubing():
    f = field_make(3, 2)
    for a in range(9):
        assert f.conj(a) == f.pow(a, 3)


def test_prime_fields_have_no_conjugation():
    f = field_make(3, 1)
    with pytest.raises(ValueError):
        f.conj(2)


def test_unsupported_fields_rejected():
    with pytest.raises(ValueError, match="unsupported field"):
        field_make(4, 1)  # not prime
    with pytest.raises(ValueError, match="unsupported field"):
        field_make(2, 6)  # q = 64 over the cap
    with pytest.raises(ValueError):
        field_for_order(6)


def test_trace_lands_in_prime_field():
    f = field_make(2, 2)
    values = {a: f.trace(a) for a in range(4)}
    assert all(v in (0, 1) for v in values.values())
    assert values[2] == 1 and values[3] == 1  # both roots of x^2+x+1 have trace 1


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
