"""Contador de passos usado pelas variantes instrumentadas."""

from typing import Optional


class StepMeter:
    """
    Acumula entradas em corpos de função durante uma única medição.

    Cada função instrumentada recebe o medidor como argumento opcional e o
    repassa às suas aplicações recursivas. Sem medidor, nada é contado.
    """

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0


def tick(meter: Optional[StepMeter]) -> None:
    if meter is not None:
        meter.count += 1
