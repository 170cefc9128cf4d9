"""
Leitura e escrita de numerais e CSV.

Gramática (espaços ignorados, só construtores com parênteses):

    unary    := "Z" | "S(" unary ")"
    binary   := "Z" | "A(" binary ")" | "B(" binary ")"
    twoscomp := "Z" | "N" | "A(" twoscomp ")" | "B(" twoscomp ")"
    cd       := "Z" | "C(" cd ")" | "D(" cd ")"

binary e twoscomp rejeitam valores não canônicos já na leitura.
"""

import csv
import io
from enum import Enum
from typing import Any, Dict, Iterable, List, Tuple

from app.services import binary, braun, twoscomp, unary
from app.services.errors import CanonicalityError, NumeralSyntaxError, UsageError


class NumeralKind(str, Enum):
    UNARY = "unary"
    BINARY = "binary"
    TWOSCOMP = "twoscomp"
    CD = "cd"


_LEAVES: Dict[NumeralKind, Dict[str, Any]] = {
    NumeralKind.UNARY: {"Z": unary.ZERO},
    NumeralKind.BINARY: {"Z": binary.ZERO},
    NumeralKind.TWOSCOMP: {"Z": binary.ZERO, "N": twoscomp.MINUS_ONE},
    NumeralKind.CD: {"Z": binary.ZERO},
}

_CONSTRUCTORS: Dict[NumeralKind, Dict[str, type]] = {
    NumeralKind.UNARY: {"S": unary.Succ},
    NumeralKind.BINARY: {"A": binary.A, "B": binary.B},
    NumeralKind.TWOSCOMP: {"A": binary.A, "B": binary.B},
    NumeralKind.CD: {"C": braun.C, "D": braun.D},
}

_NAMES: Dict[type, str] = {
    unary.Zero: "Z",
    unary.Succ: "S",
    binary.Z: "Z",
    binary.A: "A",
    binary.B: "B",
    twoscomp.N: "N",
    braun.C: "C",
    braun.D: "D",
}


def _skip_spaces(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_numeral(text: str, kind: NumeralKind) -> Any:
    """
    Lê um literal do tipo pedido.

    Erros de sintaxe levantam NumeralSyntaxError com a posição; valores bem
    formados mas não canônicos (A(Z), e B(N) em twoscomp) levantam
    CanonicalityError.
    """
    kind = NumeralKind(kind)
    leaves, constructors = _LEAVES[kind], _CONSTRUCTORS[kind]

    # iterativo: a gramática é linear e numerais unários podem ser fundos
    pending: List[Tuple[str, int]] = []
    pos = 0
    while True:
        pos = _skip_spaces(text, pos)
        if pos >= len(text):
            raise NumeralSyntaxError("Fim inesperado do literal", pos)
        symbol = text[pos]
        if symbol in constructors:
            pending.append((symbol, pos))
            pos = _skip_spaces(text, pos + 1)
            if pos >= len(text) or text[pos] != "(":
                raise NumeralSyntaxError(f"Esperado '(' depois de {symbol}", pos)
            pos += 1
        elif symbol in leaves:
            value = leaves[symbol]
            pos += 1
            break
        else:
            raise NumeralSyntaxError(f"Símbolo inesperado {symbol!r} para {kind.value}", pos)

    for _ in pending:
        pos = _skip_spaces(text, pos)
        if pos >= len(text) or text[pos] != ")":
            raise NumeralSyntaxError("Esperado ')'", pos)
        pos += 1
    pos = _skip_spaces(text, pos)
    if pos != len(text):
        raise NumeralSyntaxError("Texto sobrando depois do literal", pos)

    for symbol, at in reversed(pending):
        if kind in (NumeralKind.BINARY, NumeralKind.TWOSCOMP):
            if symbol == "A" and isinstance(value, binary.Z):
                raise CanonicalityError("A não pode ser aplicado a Z", at)
            if symbol == "B" and isinstance(value, twoscomp.N):
                raise CanonicalityError("B não pode ser aplicado a N", at)
        value = constructors[symbol](value)
    return value


def print_numeral(value: Any) -> str:
    """Forma textual sem espaços; inversa exata de parse_numeral"""
    names: List[str] = []
    while True:
        name = _NAMES.get(type(value))
        if name is None:
            raise UsageError(f"Valor não é um numeral: {value!r}")
        if name in ("Z", "N"):
            break
        names.append(name)
        value = value.pred if name == "S" else value.rest
    return "".join(f"{n}(" for n in names) + name + ")" * len(names)


def parse_bits(text: str) -> twoscomp.TcInt:
    """
    Lê a notação "...0<dígitos>" / "...1<dígitos>" (só complemento de dois).

    O resultado passa pelos construtores inteligentes, então zeros ou uns
    redundantes à esquerda são normalizados.
    """
    text = text.strip()
    if not text.startswith("..."):
        raise NumeralSyntaxError("Esperado '...' no início", 0)
    if len(text) < 4 or text[3] not in "01":
        raise NumeralSyntaxError("Esperado dígito da cauda (0 ou 1)", 3)
    value: twoscomp.TcInt = binary.ZERO if text[3] == "0" else twoscomp.MINUS_ONE
    for pos in range(4, len(text)):
        digit = text[pos]
        if digit == "0":
            value = twoscomp.mk_A(value)
        elif digit == "1":
            value = twoscomp.mk_B(value)
        else:
            raise NumeralSyntaxError(f"Dígito inválido {digit!r}", pos)
    return value


def csv_emit(rows: Iterable[Tuple[int, int]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "steps"])
    for n, steps in rows:
        writer.writerow([n, steps])
    return buffer.getvalue()
