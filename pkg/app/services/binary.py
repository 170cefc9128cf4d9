"""
Naturais binários canônicos.

    Z        0
    A x      2x
    B x      2x + 1

O construtor menos significativo fica por fora. Forma canônica: A nunca é
aplicado diretamente a Z (sem zeros à esquerda). Toda aritmética passa
pelos construtores inteligentes mk_A / mk_B.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from app.services.errors import DomainError, ValidityError
from app.services.meter import StepMeter, tick


@dataclass(frozen=True, slots=True)
class Z:
    pass


@dataclass(frozen=True, slots=True)
class A:
    rest: BinNat


@dataclass(frozen=True, slots=True)
class B:
    rest: BinNat


BinNat = Union[Z, A, B]

ZERO = Z()
ONE = B(ZERO)


def mk_A(x: BinNat) -> BinNat:
    # 2 * 0 = 0
    if isinstance(x, Z):
        return ZERO
    return A(x)


def mk_B(x: BinNat) -> BinNat:
    return B(x)


def b_from_int(n: int) -> BinNat:
    """
    Converte um inteiro não negativo (toNat).

    Exemplos: 0 -> Z, 1 -> B(Z), 2 -> A(B(Z)), 3 -> B(B(Z)), 4 -> A(A(B(Z)))
    """
    if n < 0:
        raise DomainError(f"Natural binário não pode ser negativo: {n}")
    if n == 0:
        return ZERO
    if n % 2 == 0:
        return mk_A(b_from_int(n // 2))
    return mk_B(b_from_int(n // 2))


def is_canonical(x: BinNat) -> bool:
    while True:
        match x:
            case Z():
                return True
            case A(Z()):
                return False
            case A(rest) | B(rest):
                x = rest
            case _:
                return False


def b_to_int(x: BinNat) -> int:
    """Interpretação estrutural (fromNat); rejeita valores não canônicos"""
    if not is_canonical(x):
        raise ValidityError(f"Numeral binário não canônico: {x!r}")
    return _denote(x)


def _denote(x: BinNat) -> int:
    match x:
        case Z():
            return 0
        case A(rest):
            return 2 * _denote(rest)
        case B(rest):
            return 2 * _denote(rest) + 1


def b_size(x: BinNat) -> int:
    """Quantidade de construtores A/B (Z não conta)"""
    size = 0
    while isinstance(x, (A, B)):
        size += 1
        x = x.rest
    return size


def b_add1(x: BinNat, meter: Optional[StepMeter] = None) -> BinNat:
    """
    add1 Z     = B Z
    add1 (A x) = B x
    add1 (B x) = A (add1 x)
    """
    tick(meter)
    match x:
        case Z():
            return ONE
        case A(rest):
            return mk_B(rest)
        case B(rest):
            return mk_A(b_add1(rest, meter))


def b_add_v1(x: BinNat, y: BinNat, meter: Optional[StepMeter] = None) -> BinNat:
    """
    Primeira formulação: o vai-um do caso B/B usa add1 sobre a soma parcial.

    O custo total continua linear no tamanho do maior argumento, porque a
    propagação de add1 para no primeiro A, e o resultado de cada add1 é
    envolvido em A.
    """
    tick(meter)
    match x, y:
        case _, Z():
            return x
        case Z(), _:
            return y
        case A(xs), A(ys):
            return mk_A(b_add_v1(xs, ys, meter))
        case A(xs), B(ys):
            return mk_B(b_add_v1(xs, ys, meter))
        case B(xs), A(ys):
            return mk_B(b_add_v1(xs, ys, meter))
        case B(xs), B(ys):
            return mk_A(b_add1(b_add_v1(xs, ys, meter), meter))


def b_add_v2(x: BinNat, y: BinNat, meter: Optional[StepMeter] = None) -> BinNat:
    """Segunda formulação: o caso B/B chama b_addp (x + y + 1)"""
    tick(meter)
    match x, y:
        case _, Z():
            return x
        case Z(), _:
            return y
        case A(xs), A(ys):
            return mk_A(b_add_v2(xs, ys, meter))
        case A(xs), B(ys):
            return mk_B(b_add_v2(xs, ys, meter))
        case B(xs), A(ys):
            return mk_B(b_add_v2(xs, ys, meter))
        case B(xs), B(ys):
            return mk_A(b_addp(xs, ys, meter))


def b_addp(x: BinNat, y: BinNat, meter: Optional[StepMeter] = None) -> BinNat:
    """
    Soma mais um: x + y + 1.

    Mutuamente recursiva com b_add_v2; toda aplicação recursiva reduz o
    tamanho dos dois argumentos.
    """
    tick(meter)
    match x, y:
        case _, Z():
            return b_add1(x, meter)
        case Z(), _:
            return b_add1(y, meter)
        case A(xs), A(ys):
            return mk_B(b_add_v2(xs, ys, meter))
        case A(xs), B(ys):
            return mk_A(b_addp(xs, ys, meter))
        case B(xs), A(ys):
            return mk_A(b_addp(xs, ys, meter))
        case B(xs), B(ys):
            return mk_B(b_addp(xs, ys, meter))


def b_mult(x: BinNat, y: BinNat, meter: Optional[StepMeter] = None) -> BinNat:
    """
    Multiplicação estrutural no segundo argumento.

        mult x Z     = Z
        mult x (A y) = A (mult x y)
        mult x (B y) = x + A (mult x y)
    """
    tick(meter)
    match y:
        case Z():
            return ZERO
        case A(ys):
            return mk_A(b_mult(x, ys, meter))
        case B(ys):
            return b_add_v2(x, mk_A(b_mult(x, ys, meter)), meter)
