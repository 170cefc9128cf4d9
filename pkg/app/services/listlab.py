"""
Exemplos de recursão sobre listas: soma estrutural e acumulativa, filter,
reverse e o máximo ingênuo exponencial.

Cada função conta uma entrada no corpo por aplicação (incluindo a cláusula
base) quando recebe um StepMeter.
"""

from typing import Callable, List, Optional, Sequence

from app import config  # noqa: F401  (limite de recursão)
from app.services.errors import DomainError
from app.services.meter import StepMeter, tick

IntList = Sequence[int]


def sumlist(xs: IntList, meter: Optional[StepMeter] = None) -> int:
    tick(meter)
    match xs:
        case []:
            return 0
        case [x, *rest]:
            return x + sumlist(rest, meter)


def sumh(xs: IntList, acc: int, meter: Optional[StepMeter] = None) -> int:
    """
    Soma com acumulador.

    Vale para todo xs e todo acc: sumh(xs, acc) == acc + sumlist(xs).
    O caso acc == 0 sozinho não serve como hipótese de indução.
    """
    tick(meter)
    match xs:
        case []:
            return acc
        case [x, *rest]:
            return sumh(rest, x + acc, meter)


def sumlist2(xs: IntList, meter: Optional[StepMeter] = None) -> int:
    tick(meter)
    return sumh(xs, 0, meter)


def filter_keep(
    p: Callable[[int], bool], xs: IntList, meter: Optional[StepMeter] = None
) -> List[int]:
    tick(meter)
    match xs:
        case []:
            return []
        case [x, *rest]:
            if p(x):
                return [x] + filter_keep(p, rest, meter)
            return filter_keep(p, rest, meter)


def max_naive(xs: IntList, meter: Optional[StepMeter] = None) -> int:
    """
    Máximo de uma lista não vazia, na forma ingênua.

    ATENÇÃO: a subexpressão recursiva aparece duas vezes de propósito, uma
    na guarda e outra no ramo escolhido. Em avaliação estrita isso custa
    2^n - 1 entradas numa lista crescente de tamanho n. Não "corrija":
    max_fast é a versão com uma aplicação recursiva por elemento.
    """
    tick(meter)
    match xs:
        case []:
            raise DomainError("max de lista vazia")
        case [x]:
            return x
        case [x, *rest]:
            if x > max_naive(rest, meter):
                return x
            else:
                return max_naive(rest, meter)


def _larger(x: int, m: int) -> int:
    return x if x > m else m


def max_fast(xs: IntList, meter: Optional[StepMeter] = None) -> int:
    tick(meter)
    match xs:
        case []:
            raise DomainError("max de lista vazia")
        case [x]:
            return x
        case [x, *rest]:
            return _larger(x, max_fast(rest, meter))


def append(xs: IntList, ys: IntList, meter: Optional[StepMeter] = None) -> List[int]:
    tick(meter)
    match xs:
        case []:
            return list(ys)
        case [x, *rest]:
            return [x] + append(rest, ys, meter)


def reverse_list(xs: IntList, meter: Optional[StepMeter] = None) -> List[int]:
    """Reverse estrutural: cada passo anexa o primeiro elemento no final (quadrático)."""
    tick(meter)
    match xs:
        case []:
            return []
        case [x, *rest]:
            return append(reverse_list(rest, meter), [x], meter)


def revh(xs: IntList, acc: IntList, meter: Optional[StepMeter] = None) -> List[int]:
    # revh xs acc == reverse_list(xs) ++ acc
    tick(meter)
    match xs:
        case []:
            return list(acc)
        case [x, *rest]:
            return revh(rest, [x, *acc], meter)


def reverse2(xs: IntList, meter: Optional[StepMeter] = None) -> List[int]:
    tick(meter)
    return revh(xs, [], meter)
