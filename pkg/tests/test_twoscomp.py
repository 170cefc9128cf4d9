import pytest

from app.services.binary import A, B, Z, b_add_v2, b_from_int
from app.services.errors import ValidityError
from app.services.twoscomp import (
    N,
    i_add,
    i_add1,
    i_complement,
    i_from_int,
    i_neg,
    i_sub,
    i_sub1,
    i_to_int,
    is_canonical_tc,
    mk_B,
    render_bits,
)

RANGE = range(-256, 257)
INTS = {n: i_from_int(n) for n in RANGE}


@pytest.mark.parametrize(
    "n, expected",
    [
        (-1, N()),
        (-2, A(N())),
        (-3, B(A(N()))),
        (-4, A(A(N()))),
        (-5, B(B(A(N())))),
        (0, Z()),
        (4, A(A(B(Z())))),
    ],
)
def test_from_int_listing(n, expected):
    assert i_from_int(n) == expected
    assert i_to_int(expected) == n


def test_from_int_minus_hundred():
    v = i_from_int(-100)
    assert is_canonical_tc(v)
    assert i_to_int(v) == -100


def test_canonicality_rules():
    assert is_canonical_tc(N())
    assert not is_canonical_tc(B(N()))
    assert is_canonical_tc(A(N()))
    assert not is_canonical_tc(A(Z()))
    with pytest.raises(ValidityError):
        i_to_int(A(B(N())))


def test_smart_constructor_absorbs_minus_one():
    assert mk_B(N()) == N()


def test_complement():
    assert i_complement(Z()) == N()
    assert i_complement(B(Z())) == A(N())
    for n, x in INTS.items():
        assert i_complement(i_complement(x)) == x
        assert i_to_int(i_complement(x)) == -n - 1
        assert is_canonical_tc(i_complement(x))


def test_add1_sub1_examples():
    assert i_add1(N()) == Z()
    assert i_sub1(Z()) == N()
    assert i_add1(i_from_int(7)) == i_from_int(8)
    assert i_add1(A(N())) == N()
    assert i_sub1(B(Z())) == Z()


def test_add1_sub1_inverse():
    for n, x in INTS.items():
        assert i_add1(i_sub1(x)) == x
        assert i_sub1(i_add1(x)) == x
        assert i_to_int(i_add1(x)) == n + 1
        assert i_to_int(i_sub1(x)) == n - 1


def test_add_examples():
    x = i_from_int(-19)
    assert i_add(x, Z()) == x
    assert i_add(N(), N()) == A(N())
    assert i_add(i_from_int(-5), i_from_int(3)) == i_from_int(-2)


def test_neg_sub_examples():
    assert i_neg(Z()) == Z()
    assert i_neg(i_from_int(5)) == i_from_int(-5)
    assert i_sub(i_from_int(3), i_from_int(10)) == i_from_int(-7)


def test_arithmetic_oracle():
    for a in RANGE:
        x = INTS[a]
        neg = i_neg(x)
        assert is_canonical_tc(neg) and i_to_int(neg) == -a
        for b in RANGE:
            s = i_add(x, INTS[b])
            d = i_sub(x, INTS[b])
            assert is_canonical_tc(s) and i_to_int(s) == a + b
            assert is_canonical_tc(d) and i_to_int(d) == a - b


def test_add_restricted_to_naturals_is_binary_add():
    nats = [b_from_int(n) for n in range(257)]
    for a in range(257):
        for b in range(257):
            assert i_add(INTS[a], INTS[b]) == b_add_v2(nats[a], nats[b])


@pytest.mark.parametrize(
    "n, bits",
    [
        (3, "...011"),
        (2, "...010"),
        (1, "...01"),
        (0, "...0"),
        (-1, "...11"),
        (-2, "...10"),
        (-3, "...101"),
        (-4, "...100"),
        (-5, "...1011"),
    ],
)
def test_render_bits_table(n, bits):
    assert render_bits(i_from_int(n)) == bits


def test_render_bits_injective():
    rendered = [render_bits(i_from_int(n)) for n in range(-512, 513)]
    assert len(set(rendered)) == len(rendered)
