"""
Comandos de alto nível compartilhados pela CLI e pelas rotas HTTP.

Todas as funções devolvem texto e levantam as exceções de
app.services.errors; quem chama decide o código de saída ou o status HTTP.
"""

import logging
from enum import Enum
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from app.services import binary, braun, checks, costmeter, twoscomp, unary
from app.services.errors import NumeralSyntaxError, UsageError
from app.services.numio import NumeralKind, csv_emit, parse_bits, parse_numeral, print_numeral


class Form(str, Enum):
    INT = "int"
    LITERAL = "literal"
    BITS = "bits"


_FROM_INT: Dict[NumeralKind, Callable[[int], Any]] = {
    NumeralKind.UNARY: unary.u_from_int,
    NumeralKind.BINARY: binary.b_from_int,
    NumeralKind.TWOSCOMP: twoscomp.i_from_int,
    NumeralKind.CD: braun.cd_from_int,
}

_TO_INT: Dict[NumeralKind, Callable[[Any], int]] = {
    NumeralKind.UNARY: unary.u_to_int,
    NumeralKind.BINARY: binary.b_to_int,
    NumeralKind.TWOSCOMP: twoscomp.i_to_int,
    NumeralKind.CD: braun.cd_to_int,
}

# (tipo, operação) -> (função, aridade)
EVAL_OPS: Dict[Tuple[NumeralKind, str], Tuple[Callable[..., Any], int]] = {
    (NumeralKind.UNARY, "plus"): (unary.u_plus, 2),
    (NumeralKind.UNARY, "add"): (unary.u_add, 2),
    (NumeralKind.UNARY, "add1"): (unary.Succ, 1),
    (NumeralKind.UNARY, "mul"): (unary.u_mult, 2),
    (NumeralKind.BINARY, "plus"): (binary.b_add_v1, 2),
    (NumeralKind.BINARY, "add"): (binary.b_add_v2, 2),
    (NumeralKind.BINARY, "add1"): (binary.b_add1, 1),
    (NumeralKind.BINARY, "mul"): (binary.b_mult, 2),
    (NumeralKind.TWOSCOMP, "plus"): (twoscomp.i_add, 2),
    (NumeralKind.TWOSCOMP, "add"): (twoscomp.i_add, 2),
    (NumeralKind.TWOSCOMP, "add1"): (twoscomp.i_add1, 1),
    (NumeralKind.TWOSCOMP, "neg"): (twoscomp.i_neg, 1),
    (NumeralKind.TWOSCOMP, "sub"): (twoscomp.i_sub, 2),
}

EVAL_OP_NAMES = ("plus", "add", "add1", "mul", "neg", "sub")


def _parse_int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise NumeralSyntaxError(f"Inteiro inválido: {text!r}", 0) from None


def convert(kind: str, source: str, target: str, value: str) -> str:
    """
    Converte entre inteiro, literal de construtores e notação de bits.

    A notação de bits só existe para complemento de dois.
    """
    kind, source, target = NumeralKind(kind), Form(source), Form(target)
    if Form.BITS in (source, target) and kind is not NumeralKind.TWOSCOMP:
        raise UsageError(f"Notação de bits só vale para twoscomp, não para {kind.value}")

    if source is Form.INT:
        numeral = _FROM_INT[kind](_parse_int(value))
    elif source is Form.LITERAL:
        numeral = parse_numeral(value, kind)
    else:
        numeral = parse_bits(value)

    if target is Form.INT:
        return str(_TO_INT[kind](numeral))
    if target is Form.LITERAL:
        return print_numeral(numeral)
    return twoscomp.render_bits(numeral)


def evaluate(kind: str, op: str, literals: Sequence[str]) -> str:
    kind = NumeralKind(kind)
    try:
        func, arity = EVAL_OPS[(kind, op)]
    except KeyError:
        raise UsageError(f"Operação {op} não disponível para {kind.value}") from None
    if len(literals) != arity:
        raise UsageError(f"{op} espera {arity} literal(is), recebeu {len(literals)}")
    args = [parse_numeral(text, kind) for text in literals]
    return print_numeral(func(*args))


def _render_seq(s: braun.BraunSeq) -> str:
    return ",".join(str(x) for x in braun.bs_to_list(s))


def parse_elements(init: Optional[str]) -> List[str]:
    if not init:
        return []
    return [token.strip() for token in init.split(",")]


def braun_script(init: Optional[str], lines: Iterable[str]) -> Iterator[str]:
    """
    Executa um roteiro sobre a sequência inicial, uma linha de saída por comando.

    Comandos: access i | cons v | first | rest | update i v | length | depth | list.
    cons/rest/update imprimem a sequência resultante. Elementos são tokens
    opacos; linhas vazias e comentários (#) são ignorados.
    """
    s = braun.bs_from_list(parse_elements(init))
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        command, *args = line.split()
        logging.debug(f"Comando braun: {line}")
        if command == "access" and len(args) == 1:
            yield str(braun.bs_access(s, _parse_int(args[0])))
        elif command == "cons" and len(args) == 1:
            s = braun.bs_cons(args[0], s)
            yield _render_seq(s)
        elif command == "first" and not args:
            yield str(braun.bs_first(s))
        elif command == "rest" and not args:
            s = braun.bs_rest(s)
            yield _render_seq(s)
        elif command == "update" and len(args) == 2:
            s = braun.bs_update(s, _parse_int(args[0]), args[1])
            yield _render_seq(s)
        elif command == "length" and not args:
            yield str(len(s))
        elif command == "depth" and not args:
            yield str(braun.bs_depth(s))
        elif command == "list" and not args:
            yield _render_seq(s)
        else:
            raise UsageError(f"Comando inválido no roteiro: {line!r}")


def parse_sizes(text: str) -> List[int]:
    sizes = []
    for token in text.split(","):
        n = _parse_int(token)
        if n < 0:
            raise UsageError(f"Tamanho negativo: {n}")
        sizes.append(n)
    if not sizes:
        raise UsageError("Lista de tamanhos vazia")
    return sizes


def bench(op_id: str, sizes: Sequence[int]) -> str:
    if not sizes:
        raise UsageError("Lista de tamanhos vazia")
    return csv_emit(costmeter.sample_steps(op_id, sizes))


def run_checks(
    suite: str, seed: Optional[int] = None, bounds: Optional[checks.CheckBounds] = None
) -> List[checks.SuiteReport]:
    return checks.run_suites(suite, seed, bounds)


def render_reports(reports: Sequence[checks.SuiteReport]) -> str:
    lines = []
    for report in reports:
        lines.append(f"== {report.suite} (seed {report.seed})")
        for result in report.results:
            if result.passed:
                lines.append(f"  [ok]     {result.suite}.{result.name}")
            else:
                lines.append(f"  [FALHOU] {result.suite}.{result.name}: {result.detail}")
    total = sum(len(r.results) for r in reports)
    failed = sum(len(r.failures()) for r in reports)
    lines.append(f"{total - failed}/{total} propriedades ok")
    return "\n".join(lines) + "\n"
