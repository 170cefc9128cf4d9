"""
Suítes de propriedades executáveis (comando `check`).

Cada propriedade devolve None quando vale ou uma descrição do primeiro
contraexemplo. As operações são buscadas nos módulos na hora da chamada,
então uma cláusula trocada em tempo de execução aparece no relatório.
"""

import functools
import itertools
import logging
import random
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from app.config import settings
from app.services import binary, braun, costmeter, listlab, twoscomp, unary
from app.services.errors import UsageError
from app.services.meter import StepMeter

# Limite de custo das duas somas binárias: passos <= K * (max(tamanho) + 1).
# Derivado: add/addp entram no máximo min+1 vezes; o trabalho total de add1
# no caso B/B é no máximo max (cada dígito é consumido por uma única cadeia
# de vai-um). Logo passos <= 2*max + 1 < 2*(max + 1).
# Pior razão medida sobre todos os pares 0..512: 1.9 para b_add_v1 e 1.5
# para b_add_v2.
BINARY_ADD_COST_K = 2

SUITES = ("unary", "listlab", "binary", "twoscomp", "braun")


class CheckBounds(BaseModel):
    unary_roundtrip: int = 2000
    unary_oracle: int = 60
    unary_laws: int = 25
    unary_identity: int = 100
    list_samples: int = 500
    list_max_len: int = 50
    max_samples: int = 100
    max_max_len: int = 15
    binary_add: int = 512
    binary_mult: int = 128
    size_law: int = 4096
    tc_range: int = 256
    tc_render: int = 512
    braun_samples: int = 40
    braun_max_len: int = 500
    depth_law: int = 4096
    cd_digits: int = 12


class PropertyResult(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: Optional[str] = None


class SuiteReport(BaseModel):
    suite: str
    seed: int
    results: List[PropertyResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[PropertyResult]:
        return [r for r in self.results if not r.passed]


Property = Tuple[str, Callable[[], Optional[str]]]


def _run(suite: str, seed: int, properties: List[Property]) -> SuiteReport:
    results = []
    for name, prop in properties:
        try:
            detail = prop()
        except Exception as e:
            detail = f"exceção {type(e).__name__}: {e}"
        results.append(PropertyResult(suite=suite, name=name, passed=detail is None, detail=detail))
        if detail is not None:
            logging.warning(f"Propriedade {suite}.{name} falhou: {detail}")
    report = SuiteReport(suite=suite, seed=seed, results=results)
    logging.info(f"Suíte {suite}: {len(results) - len(report.failures())}/{len(results)} propriedades ok")
    return report


def _first(cases, predicate: Callable[..., bool]) -> Optional[str]:
    for case in cases:
        if not predicate(*case):
            return f"contraexemplo {case!r}"
    return None


def _agrees(value, is_canonical, to_int, expected: int) -> bool:
    return is_canonical(value) and to_int(value) == expected


def _agrees_tc(value, expected: int) -> bool:
    return _agrees(value, twoscomp.is_canonical_tc, twoscomp.i_to_int, expected)


# ---------------------------------------------------------------- unary

def unary_suite(seed: int, bounds: CheckBounds) -> SuiteReport:
    top = max(bounds.unary_identity, bounds.unary_oracle, bounds.unary_laws)
    nats = [unary.u_from_int(n) for n in range(top + 1)]
    n_oracle = range(bounds.unary_oracle + 1)
    n_laws = range(bounds.unary_laws + 1)

    def roundtrip():
        return _first(
            ((n,) for n in range(bounds.unary_roundtrip + 1)),
            lambda n: unary.u_to_int(unary.u_from_int(n)) == n,
        )

    def plus_add_oracle():
        return _first(
            itertools.product(n_oracle, n_oracle),
            lambda a, b: unary.u_to_int(unary.u_plus(nats[a], nats[b])) == a + b
            and unary.u_to_int(unary.u_add(nats[a], nats[b])) == a + b,
        )

    def commutativity():
        return _first(
            itertools.product(n_laws, n_laws),
            lambda a, b: unary.u_to_int(unary.u_plus(nats[a], nats[b]))
            == unary.u_to_int(unary.u_plus(nats[b], nats[a])),
        )

    def associativity():
        return _first(
            itertools.product(n_laws, n_laws, n_laws),
            lambda a, b, c: unary.u_plus(unary.u_plus(nats[a], nats[b]), nats[c])
            == unary.u_plus(nats[a], unary.u_plus(nats[b], nats[c])),
        )

    def add_left_identity():
        return _first(((y,) for y in nats), lambda y: unary.u_add(unary.ZERO, y) == y)

    def plus_two():
        two = unary.u_from_int(2)
        return _first(
            ((x,) for x in nats), lambda x: unary.u_plus(x, two) == unary.Succ(unary.Succ(x))
        )

    def mult_oracle():
        return _first(
            itertools.product(n_laws, n_laws),
            lambda a, b: unary.u_to_int(unary.u_mult(nats[a], nats[b])) == a * b,
        )

    def step_counts():
        def check(a, b):
            plus = costmeter.measured("u_plus", (nats[a], nats[b]))[1].count
            add = costmeter.measured("u_add", (nats[a], nats[b]))[1].count
            return plus == b + 1 and add == b + 1

        return _first(itertools.product(n_laws, n_laws), check)

    return _run("unary", seed, [
        ("roundtrip", roundtrip),
        ("plus_add_oracle", plus_add_oracle),
        ("commutativity", commutativity),
        ("associativity", associativity),
        ("add_left_identity", add_left_identity),
        ("plus_two", plus_two),
        ("mult_oracle", mult_oracle),
        ("step_counts", step_counts),
    ])


# ---------------------------------------------------------------- listlab

def listlab_suite(seed: int, bounds: CheckBounds) -> SuiteReport:
    rng = random.Random(seed)
    pairs = [
        ([rng.randint(-100, 100) for _ in range(rng.randint(0, bounds.list_max_len))],
         rng.randint(-100, 100))
        for _ in range(bounds.list_samples)
    ]
    nonempty = [
        [rng.randint(-50, 50) for _ in range(rng.randint(1, bounds.max_max_len))]
        for _ in range(bounds.max_samples)
    ]

    def accumulator_lemma():
        return _first(pairs, lambda xs, acc: listlab.sumh(xs, acc) == acc + listlab.sumlist(xs))

    def sumlist2_equivalence():
        return _first(pairs, lambda xs, _: listlab.sumlist2(xs) == listlab.sumlist(xs) == sum(xs))

    def max_equivalence():
        return _first(
            ((xs,) for xs in nonempty),
            lambda xs: listlab.max_naive(xs) == listlab.max_fast(xs) == max(xs),
        )

    def reverse_lemma():
        return _first(
            pairs,
            lambda xs, acc: listlab.revh(xs, [acc]) == listlab.reverse_list(xs) + [acc]
            and listlab.reverse2(xs) == xs[::-1],
        )

    def max_separation():
        def check(n):
            xs = list(range(1, n + 1))
            naive = costmeter.measured("max_naive", (xs,))[1].count
            fast = costmeter.measured("max_fast", (xs,))[1].count
            return naive == 2 ** n - 1 and fast == n

        return _first(((n,) for n in (8, 12, 16)), check)

    def linear_counts():
        def check(n):
            return all(
                costmeter.closed_form(op, n) == costmeter.measured(op, costmeter.worst_case_input(op, n))[1].count
                for op in ("sumlist", "filter_keep")
            )

        return _first(((n,) for n in (10, 100, 1000)), check)

    return _run("listlab", seed, [
        ("accumulator_lemma", accumulator_lemma),
        ("sumlist2_equivalence", sumlist2_equivalence),
        ("max_equivalence", max_equivalence),
        ("reverse_lemma", reverse_lemma),
        ("max_separation", max_separation),
        ("linear_counts", linear_counts),
    ])


# ---------------------------------------------------------------- binary

TO_NAT = {
    0: "Z",
    1: "B(Z)",
    2: "A(B(Z))",
    3: "B(B(Z))",
    4: "A(A(B(Z)))",
}


def binary_suite(seed: int, bounds: CheckBounds) -> SuiteReport:
    from app.services.numio import print_numeral

    nats = [binary.b_from_int(n) for n in range(max(bounds.binary_add, bounds.binary_mult) + 1)]

    def to_nat_listing():
        return _first(TO_NAT.items(), lambda n, text: print_numeral(binary.b_from_int(n)) == text)

    def canonical_roundtrip():
        return _first(
            ((n,) for n in range(len(nats))),
            lambda n: binary.is_canonical(nats[n]) and binary.b_to_int(nats[n]) == n,
        )

    @functools.lru_cache(maxsize=None)
    def add_pass() -> Dict[str, str]:
        # uma única passada cobre oráculo, canonicidade, equivalência e custo
        failures: Dict[str, str] = {}
        r = range(bounds.binary_add + 1)
        for a, b in itertools.product(r, r):
            x, y = nats[a], nats[b]
            m1, m2 = StepMeter(), StepMeter()
            v1 = binary.b_add_v1(x, y, m1)
            v2 = binary.b_add_v2(x, y, m2)
            limit = BINARY_ADD_COST_K * (max(binary.b_size(x), binary.b_size(y)) + 1)
            checks = {
                "add_v1_oracle": binary.is_canonical(v1) and binary.b_to_int(v1) == a + b,
                "add_v2_oracle": binary.is_canonical(v2) and binary.b_to_int(v2) == a + b,
                "add_variants_equal": v1 == v2,
                "add_linear_cost": m1.count <= limit and m2.count <= limit,
            }
            for name, ok in checks.items():
                if not ok and name not in failures:
                    failures[name] = f"contraexemplo {(a, b)!r}"
        return failures

    def from_add_pass(name):
        return lambda: add_pass().get(name)

    def mult_oracle():
        r = range(bounds.binary_mult + 1)
        return _first(
            itertools.product(r, r),
            lambda a, b: _agrees(binary.b_mult(nats[a], nats[b]), binary.is_canonical, binary.b_to_int, a * b),
        )

    def size_law():
        return _first(
            ((n,) for n in range(1, bounds.size_law + 1)),
            lambda n: binary.b_size(binary.b_from_int(n)) == n.bit_length(),
        )

    def carry_chain():
        def check(n):
            x = binary.b_from_int(n)
            trailing = 0
            while isinstance(x, binary.B):
                trailing += 1
                x = x.rest
            return costmeter.measured("b_add1", (nats[n],))[1].count == trailing + 1

        return _first(((n,) for n in range(bounds.binary_add + 1)), check)

    return _run("binary", seed, [
        ("to_nat_listing", to_nat_listing),
        ("canonical_roundtrip", canonical_roundtrip),
        ("add_v1_oracle", from_add_pass("add_v1_oracle")),
        ("add_v2_oracle", from_add_pass("add_v2_oracle")),
        ("add_variants_equal", from_add_pass("add_variants_equal")),
        ("add_linear_cost", from_add_pass("add_linear_cost")),
        ("mult_oracle", mult_oracle),
        ("size_law", size_law),
        ("carry_chain", carry_chain),
    ])


# ---------------------------------------------------------------- twoscomp

TO_INTS = {
    -1: "N",
    -2: "A(N)",
    -3: "B(A(N))",
    -4: "A(A(N))",
    -5: "B(B(A(N)))",
}

BITS = {
    3: "...011",
    2: "...010",
    1: "...01",
    0: "...0",
    -1: "...11",
    -2: "...10",
    -3: "...101",
    -4: "...100",
    -5: "...1011",
}


def twoscomp_suite(seed: int, bounds: CheckBounds) -> SuiteReport:
    from app.services.numio import print_numeral

    lo, hi = -bounds.tc_range, bounds.tc_range
    ints = {n: twoscomp.i_from_int(n) for n in range(lo, hi + 1)}
    r = range(lo, hi + 1)

    def to_ints_listing():
        return _first(TO_INTS.items(), lambda n, text: print_numeral(twoscomp.i_from_int(n)) == text)

    def bits_table():
        return _first(BITS.items(), lambda n, text: twoscomp.render_bits(twoscomp.i_from_int(n)) == text)

    def add_oracle():
        return _first(
            itertools.product(r, r),
            lambda a, b: _agrees_tc(twoscomp.i_add(ints[a], ints[b]), a + b),
        )

    def sub_oracle():
        return _first(
            itertools.product(r, r),
            lambda a, b: _agrees_tc(twoscomp.i_sub(ints[a], ints[b]), a - b),
        )

    def neg_oracle():
        return _first(
            ((a,) for a in r),
            lambda a: _agrees_tc(twoscomp.i_neg(ints[a]), -a),
        )

    def conservativity():
        nat = range(0, hi + 1)
        return _first(
            itertools.product(nat, nat),
            lambda a, b: twoscomp.i_add(ints[a], ints[b])
            == binary.b_add_v2(binary.b_from_int(a), binary.b_from_int(b)),
        )

    def add1_sub1_inverse():
        return _first(
            ((a,) for a in r),
            lambda a: twoscomp.i_add1(twoscomp.i_sub1(ints[a])) == ints[a]
            and twoscomp.i_sub1(twoscomp.i_add1(ints[a])) == ints[a],
        )

    def complement_involution():
        return _first(
            ((a,) for a in r),
            lambda a: twoscomp.i_complement(twoscomp.i_complement(ints[a])) == ints[a]
            and twoscomp.i_to_int(twoscomp.i_complement(ints[a])) == -a - 1,
        )

    def render_injective():
        seen: Dict[str, int] = {}
        for n in range(-bounds.tc_render, bounds.tc_render + 1):
            text = twoscomp.render_bits(twoscomp.i_from_int(n))
            if text in seen:
                return f"{seen[text]} e {n} viram {text}"
            seen[text] = n
        return None

    return _run("twoscomp", seed, [
        ("to_ints_listing", to_ints_listing),
        ("bits_table", bits_table),
        ("add_oracle", add_oracle),
        ("sub_oracle", sub_oracle),
        ("neg_oracle", neg_oracle),
        ("conservativity", conservativity),
        ("add1_sub1_inverse", add1_sub1_inverse),
        ("complement_involution", complement_involution),
        ("render_injective", render_injective),
    ])


# ---------------------------------------------------------------- braun

def _all_cd(max_digits: int):
    layer = [binary.ZERO]
    yield from layer
    for _ in range(max_digits):
        layer = [ctor(i) for i in layer for ctor in (braun.C, braun.D)]
        yield from layer


def braun_suite(seed: int, bounds: CheckBounds) -> SuiteReport:
    rng = random.Random(seed)
    samples = [
        [f"e{rng.randint(0, 999)}" for _ in range(rng.randint(0, bounds.braun_max_len))]
        for _ in range(bounds.braun_samples)
    ]

    def cd_bijective():
        return _first(
            ((i,) for i in _all_cd(bounds.cd_digits)),
            lambda i: braun.cd_from_int(braun.cd_to_int(i)) == i,
        )

    def cd_roundtrip():
        return _first(
            ((n,) for n in range(bounds.depth_law + 1)),
            lambda n: braun.cd_to_int(braun.cd_from_int(n)) == n,
        )

    def shape_and_oracle():
        def check(xs):
            s = braun.bs_from_list(xs)
            if not braun.is_braun(s.tree) or braun.bs_to_list(s) != xs or len(s) != len(xs):
                return False
            if xs:
                if braun.bs_first(s) != xs[0] or braun.bs_to_list(braun.bs_rest(s)) != xs[1:]:
                    return False
                i = rng.randrange(len(xs))
                if braun.bs_access(s, i) != xs[i]:
                    return False
                if braun.bs_access_cd(s, braun.cd_from_int(i)) != xs[i]:
                    return False
            consed = braun.bs_cons("novo", s)
            return braun.is_braun(consed.tree) and braun.bs_to_list(consed) == ["novo"] + xs

        return _first(((xs,) for xs in samples), check)

    def persistence():
        def check(xs):
            s = braun.bs_from_list(xs)
            braun.bs_cons("x", s)
            if xs:
                braun.bs_rest(s)
                braun.bs_update(s, rng.randrange(len(xs)), "x")
            return braun.bs_to_list(s) == xs and braun.is_braun(s.tree)

        return _first(((xs,) for xs in samples), check)

    def update_oracle():
        def check(xs):
            if not xs:
                return True
            s = braun.bs_from_list(xs)
            i = rng.randrange(len(xs))
            updated = braun.bs_update(s, i, "z")
            expected = xs[:i] + ["z"] + xs[i + 1:]
            return braun.bs_to_list(updated) == expected and braun.bs_access(updated, i) == "z"

        return _first(((xs,) for xs in samples), check)

    def depth_law():
        s = braun.bs_empty()
        for n in range(1, bounds.depth_law + 1):
            s = braun.bs_cons(n, s)
            if braun.bs_depth(s) != n.bit_length():
                return f"contraexemplo n={n}"
        return None

    def access_steps():
        s = braun.bs_from_list(range(1024))
        return _first(
            ((i,) for i in range(1024)),
            lambda i: costmeter.measured("bs_access", (s, i))[1].count == braun.cd_digits(i),
        )

    def cons_rest_steps():
        def check(xs):
            s = braun.bs_from_list(xs)
            limit = braun.bs_depth(s) + 1
            if costmeter.measured("bs_cons", ("x", s))[1].count > limit:
                return False
            return not xs or costmeter.measured("bs_rest", (s,))[1].count <= limit

        return _first(((xs,) for xs in samples), check)

    return _run("braun", seed, [
        ("cd_bijective", cd_bijective),
        ("cd_roundtrip", cd_roundtrip),
        ("shape_and_oracle", shape_and_oracle),
        ("persistence", persistence),
        ("update_oracle", update_oracle),
        ("depth_law", depth_law),
        ("access_steps", access_steps),
        ("cons_rest_steps", cons_rest_steps),
    ])


_RUNNERS = {
    "unary": unary_suite,
    "listlab": listlab_suite,
    "binary": binary_suite,
    "twoscomp": twoscomp_suite,
    "braun": braun_suite,
}


def run_suites(
    suite: str, seed: Optional[int] = None, bounds: Optional[CheckBounds] = None
) -> List[SuiteReport]:
    """Roda uma suíte pelo nome, ou todas com "all"."""
    seed = settings.check_seed if seed is None else seed
    bounds = bounds or CheckBounds()
    if suite == "all":
        names = list(SUITES)
    elif suite in _RUNNERS:
        names = [suite]
    else:
        raise UsageError(f"Suíte desconhecida: {suite}")
    return [_RUNNERS[name](seed, bounds) for name in names]
