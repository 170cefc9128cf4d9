"""
Naturais de Peano: Zero e sucessor.

As duas somas seguem exatamente as cláusulas originais, com recursão no
segundo argumento. Não troque a ordem dos argumentos: as propriedades de
teste dependem do formato exato das chamadas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from app import config  # noqa: F401  (limite de recursão)
from app.services.errors import DomainError
from app.services.meter import StepMeter, tick


@dataclass(frozen=True, slots=True)
class Zero:
    pass


@dataclass(frozen=True, slots=True)
class Succ:
    pred: UnaryNat


UnaryNat = Union[Zero, Succ]

ZERO = Zero()


def u_from_int(n: int) -> UnaryNat:
    """Converte um inteiro não negativo em numeral unário"""
    if n < 0:
        raise DomainError(f"Natural unário não pode ser negativo: {n}")
    value: UnaryNat = ZERO
    for _ in range(n):
        value = Succ(value)
    return value


def u_to_int(x: UnaryNat) -> int:
    count = 0
    while isinstance(x, Succ):
        count += 1
        x = x.pred
    return count


def u_plus(x: UnaryNat, y: UnaryNat, meter: Optional[StepMeter] = None) -> UnaryNat:
    """
    Soma estrutural.

        plus x Z     = x
        plus x (S y) = S (plus x y)
    """
    tick(meter)
    match y:
        case Zero():
            return x
        case Succ(pred):
            return Succ(u_plus(x, pred, meter))


def u_add(x: UnaryNat, y: UnaryNat, meter: Optional[StepMeter] = None) -> UnaryNat:
    """
    Soma acumulativa: o primeiro argumento acumula.

        add x Z     = x
        add x (S y) = add (S x) y
    """
    tick(meter)
    match y:
        case Zero():
            return x
        case Succ(pred):
            return u_add(Succ(x), pred, meter)


def u_mult(x: UnaryNat, y: UnaryNat, meter: Optional[StepMeter] = None) -> UnaryNat:
    # mult x Z = Z; mult x (S y) = plus x (mult x y)
    tick(meter)
    match y:
        case Zero():
            return ZERO
        case Succ(pred):
            return u_plus(x, u_mult(x, pred, meter), meter)
