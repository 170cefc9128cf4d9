"""
Inteiros em complemento de dois: a gramática dos naturais binários com o
construtor nulário N (-1).

As interpretações de A e B não mudam, e os naturais são representados
exatamente como em app.services.binary (os mesmos construtores Z/A/B), de
modo que a inclusão BinNat -> TcInt é a identidade. Regras canônicas: A
nunca sobre Z, B nunca sobre N.

As cláusulas com N de i_add, i_addp, i_add1 e i_sub1 não vêm prontas;
foram derivadas uma a uma e conferidas contra a aritmética de inteiros em
todo o intervalo -256..256 (ver tests/test_twoscomp.py).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Union

from app.services.binary import A, B, Z, ZERO
from app.services.errors import ValidityError
from app.services.meter import StepMeter, tick


@dataclass(frozen=True, slots=True)
class N:
    pass


TcInt = Union[Z, N, A, B]

MINUS_ONE = N()


def mk_A(x: TcInt) -> TcInt:
    # 2 * 0 = 0
    if isinstance(x, Z):
        return ZERO
    return A(x)


def mk_B(x: TcInt) -> TcInt:
    # 2 * (-1) + 1 = -1
    if isinstance(x, N):
        return MINUS_ONE
    return B(x)


def i_from_int(n: int) -> TcInt:
    """
    Converte qualquer inteiro (toInts).

    Exemplos: -1 -> N, -2 -> A(N), -3 -> B(A(N)), -4 -> A(A(N)), -5 -> B(B(A(N)))
    """
    if n == 0:
        return ZERO
    if n == -1:
        return MINUS_ONE
    # divisão inteira com piso: funciona igual para negativos
    if n % 2 == 0:
        return mk_A(i_from_int(n // 2))
    return mk_B(i_from_int(n // 2))


def is_canonical_tc(x: TcInt) -> bool:
    while True:
        match x:
            case Z() | N():
                return True
            case A(Z()) | B(N()):
                return False
            case A(rest) | B(rest):
                x = rest
            case _:
                return False


def i_to_int(x: TcInt) -> int:
    if not is_canonical_tc(x):
        raise ValidityError(f"Inteiro em complemento de dois não canônico: {x!r}")
    return _denote(x)


def _denote(x: TcInt) -> int:
    match x:
        case Z():
            return 0
        case N():
            return -1
        case A(rest):
            return 2 * _denote(rest)
        case B(rest):
            return 2 * _denote(rest) + 1


def i_complement(x: TcInt) -> TcInt:
    """NOT bit a bit: troca A<->B e Z<->N; resultado denota -x - 1"""
    match x:
        case Z():
            return MINUS_ONE
        case N():
            return ZERO
        case A(rest):
            return B(i_complement(rest))
        case B(rest):
            return A(i_complement(rest))


def i_add1(x: TcInt, meter: Optional[StepMeter] = None) -> TcInt:
    tick(meter)
    match x:
        case Z():
            return B(ZERO)
        case N():
            return ZERO
        case A(rest):
            # A(N) = -2 vira N
            return mk_B(rest)
        case B(rest):
            return mk_A(i_add1(rest, meter))


def i_sub1(x: TcInt, meter: Optional[StepMeter] = None) -> TcInt:
    tick(meter)
    match x:
        case Z():
            return MINUS_ONE
        case N():
            return A(MINUS_ONE)
        case A(rest):
            return mk_B(i_sub1(rest, meter))
        case B(rest):
            # B(Z) = 1 vira Z
            return mk_A(rest)


def i_add(x: TcInt, y: TcInt, meter: Optional[StepMeter] = None) -> TcInt:
    """
    Soma de inteiros. Restrita aos naturais, as cláusulas são as mesmas de
    b_add_v2; as novas envolvem N.
    """
    tick(meter)
    match x, y:
        case _, Z():
            return x
        case Z(), _:
            return y
        case _, N():
            return i_sub1(x, meter)
        case N(), _:
            return i_sub1(y, meter)
        case A(xs), A(ys):
            return mk_A(i_add(xs, ys, meter))
        case A(xs), B(ys):
            return mk_B(i_add(xs, ys, meter))
        case B(xs), A(ys):
            return mk_B(i_add(xs, ys, meter))
        case B(xs), B(ys):
            return mk_A(i_addp(xs, ys, meter))


def i_addp(x: TcInt, y: TcInt, meter: Optional[StepMeter] = None) -> TcInt:
    """x + y + 1"""
    tick(meter)
    match x, y:
        case _, Z():
            return i_add1(x, meter)
        case Z(), _:
            return i_add1(y, meter)
        case _, N():
            return x
        case N(), _:
            return y
        case A(xs), A(ys):
            return mk_B(i_add(xs, ys, meter))
        case A(xs), B(ys):
            return mk_A(i_addp(xs, ys, meter))
        case B(xs), A(ys):
            return mk_A(i_addp(xs, ys, meter))
        case B(xs), B(ys):
            return mk_B(i_addp(xs, ys, meter))


def i_neg(x: TcInt) -> TcInt:
    # -x = ~x + 1
    return i_add1(i_complement(x))


def i_sub(x: TcInt, y: TcInt) -> TcInt:
    return i_add(x, i_neg(y))


def render_bits(x: TcInt) -> str:
    """
    Notação tradicional de complemento de dois: lendo da direita para a
    esquerda, 0 para A, 1 para B, e "..." com o dígito da cauda infinita
    (0 para Z, 1 para N).

        3 -> "...011"    0 -> "...0"    -1 -> "...11"    -5 -> "...1011"
    """
    if not is_canonical_tc(x):
        raise ValidityError(f"Inteiro em complemento de dois não canônico: {x!r}")
    digits: List[str] = []
    while isinstance(x, (A, B)):
        digits.append("0" if isinstance(x, A) else "1")
        x = x.rest
    if isinstance(x, N):
        if not digits:
            return "...11"
        tail = "...1"
    else:
        tail = "...0"
    return tail + "".join(reversed(digits))
