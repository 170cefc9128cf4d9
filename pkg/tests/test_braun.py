import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.services.binary import A, B, Z, b_from_int
from app.services.braun import (
    C,
    D,
    LEAF,
    BraunSeq,
    Node,
    bs_access,
    bs_access_cd,
    bs_cons,
    bs_depth,
    bs_empty,
    bs_first,
    bs_from_list,
    bs_rest,
    bs_to_list,
    bs_update,
    cd_digits,
    cd_from_int,
    cd_to_int,
    is_braun,
)
from app.services.costmeter import measured
from app.services.errors import DomainError, SequenceIndexError

elements = st.lists(st.integers(), max_size=500)


def test_cd_examples():
    assert cd_from_int(0) == Z()
    assert cd_from_int(1) == C(Z())
    assert cd_from_int(2) == D(Z())
    assert cd_from_int(5) == C(D(Z()))
    assert cd_to_int(cd_from_int(997)) == 997


def test_cd_rejects_negative():
    with pytest.raises(DomainError):
        cd_from_int(-1)


def test_cd_bijective_up_to_twelve_digits():
    layer = [Z()]
    seen = 1
    for _ in range(12):
        layer = [ctor(i) for i in layer for ctor in (C, D)]
        for i in layer:
            assert cd_from_int(cd_to_int(i)) == i
        seen += len(layer)
    # todas as cadeias com até 12 dígitos cobrem exatamente 0 .. 2^13 - 2
    assert seen == 2 ** 13 - 1
    assert {cd_to_int(i) for i in layer} == set(range(2 ** 12 - 1, 2 ** 13 - 1))


def test_access_examples():
    assert bs_access(bs_from_list(["x"]), 0) == "x"
    assert bs_access(bs_from_list(list("abcde")), 3) == "d"
    assert bs_access(bs_from_list(range(100)), 64) == 64


def test_access_cd_examples():
    assert bs_access_cd(bs_from_list(["x"]), cd_from_int(0)) == "x"
    assert bs_access_cd(bs_from_list(list("abcde")), cd_from_int(3)) == "d"
    assert bs_access_cd(bs_from_list(range(100)), cd_from_int(64)) == 64


def test_access_out_of_range():
    s = bs_from_list(list("abc"))
    with pytest.raises(SequenceIndexError):
        bs_access(s, 3)
    with pytest.raises(SequenceIndexError):
        bs_access(s, -1)
    with pytest.raises(SequenceIndexError):
        bs_access_cd(s, cd_from_int(3))


def test_update_examples():
    assert bs_to_list(bs_update(bs_from_list(["a"]), 0, "z")) == ["z"]
    s = bs_from_list(["a", "b", "c"])
    assert bs_to_list(bs_update(s, 1, "z")) == ["a", "z", "c"]
    assert bs_to_list(s) == ["a", "b", "c"]
    with pytest.raises(SequenceIndexError):
        bs_update(s, 3, "z")


@given(st.lists(st.integers(), min_size=1, max_size=200), st.data())
def test_update_then_access(xs, data):
    i = data.draw(st.integers(0, len(xs) - 1))
    s = bs_from_list(xs)
    updated = bs_update(s, i, "v")
    assert bs_access(updated, i) == "v"
    assert bs_to_list(updated) == xs[:i] + ["v"] + xs[i + 1:]
    assert bs_to_list(s) == xs
    assert is_braun(updated.tree)


def test_cons_first_rest_examples():
    assert bs_to_list(bs_cons("x", bs_empty())) == ["x"]
    assert bs_first(bs_cons("x", bs_empty())) == "x"
    assert bs_to_list(bs_rest(bs_from_list(list("abcd")))) == list("bcd")


def test_first_rest_of_empty():
    with pytest.raises(DomainError):
        bs_first(bs_empty())
    with pytest.raises(DomainError):
        bs_rest(bs_empty())


@given(st.lists(st.integers(), max_size=100), st.integers())
def test_rest_undoes_cons(xs, v):
    s = bs_from_list(xs)
    consed = bs_cons(v, s)
    assert bs_first(consed) == v
    assert bs_to_list(bs_rest(consed)) == xs
    assert bs_rest(consed) == s


@settings(max_examples=100, derandomize=True)
@given(elements)
def test_operations_match_list_oracle(xs):
    s = bs_from_list(xs)
    assert is_braun(s.tree)
    assert len(s) == len(xs)
    assert bs_to_list(s) == xs
    assert [bs_access(s, i) for i in range(len(xs))] == xs

    consed = bs_cons("novo", s)
    assert is_braun(consed.tree)
    assert bs_to_list(consed) == ["novo"] + xs
    if xs:
        rest = bs_rest(s)
        assert is_braun(rest.tree)
        assert bs_to_list(rest) == xs[1:]
        assert bs_first(s) == xs[0]

    # persistência
    assert bs_to_list(s) == xs


def test_roundtrip_small():
    assert bs_to_list(bs_from_list([])) == []
    assert bs_from_list([]) == bs_empty()
    assert bs_to_list(bs_from_list(list("abc"))) == list("abc")


def test_cons_builds_same_tree_as_from_list():
    s = bs_empty()
    for n in range(300, 0, -1):
        s = bs_cons(n, s)
    assert s == bs_from_list(range(1, 301))


def test_depth_examples():
    assert bs_depth(bs_empty()) == 0
    assert bs_depth(bs_from_list(["x"])) == 1


def test_depth_is_logarithmic():
    s = bs_empty()
    for n in range(1, 4097):
        s = bs_cons(n, s)
        assert bs_depth(s) == n.bit_length()
    assert is_braun(s.tree)


def _longest_path(t):
    if t is LEAF:
        return 0
    return 1 + max(_longest_path(t.left), _longest_path(t.right))


@pytest.mark.parametrize("n", [1, 2, 3, 7, 8, 100, 511, 512, 1000])
def test_depth_matches_longest_path(n):
    s = bs_from_list(range(n))
    assert bs_depth(s) == _longest_path(s.tree)


def test_access_steps_equal_digit_count():
    s = bs_from_list(range(1024))
    for i in range(1024):
        assert cd_digits(i) == (i + 1).bit_length() - 1
        assert measured("bs_access", (s, i))[1].count == cd_digits(i)
        assert measured("bs_access_cd", (s, cd_from_int(i)))[1].count == cd_digits(i)


@settings(max_examples=100)
@given(st.lists(st.integers(), max_size=500))
def test_cons_rest_steps_bounded_by_depth(xs):
    s = bs_from_list(xs)
    limit = bs_depth(s) + 1
    assert measured("bs_cons", (0, s))[1].count <= limit
    if xs:
        assert measured("bs_rest", (s,))[1].count <= limit


def test_braun_shape_detects_bad_tree():
    leaf = Node("x", LEAF, LEAF)
    assert not is_braun(Node("r", LEAF, leaf))
    assert not is_braun(Node("r", Node("a", leaf, leaf), LEAF))
    assert is_braun(Node("r", leaf, LEAF))


def test_seq_length_is_cached():
    s = BraunSeq(3, bs_from_list("abc").tree)
    assert len(s) == 3


def _ab_path(n):
    # dígitos A/B do índice n, do mais externo para o mais interno
    path, x = [], b_from_int(n)
    while x != Z():
        path.append("A" if isinstance(x, A) else "B")
        x = x.rest
    return tuple(path)


def test_ab_trie_leaves_every_left_child_empty():
    # indexar pela representação A-B deixa vazia toda posição cujo último dígito é A
    stored = {_ab_path(n) for n in range(1024)}
    for depth in range(1, 11):
        for path in itertools.product("AB", repeat=depth):
            if path[-1] == "A":
                assert path not in stored
            else:
                assert path in stored

    # com C-D toda posição até a mesma profundidade guarda um elemento
    cd_stored = set()
    for n in range(2 ** 11 - 1):
        path, i = [], cd_from_int(n)
        while i != Z():
            path.append("C" if isinstance(i, C) else "D")
            i = i.rest
        cd_stored.add(tuple(path))
    for depth in range(0, 11):
        for path in itertools.product("CD", repeat=depth):
            assert path in cd_stored
