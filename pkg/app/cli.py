"""
Linha de comando: convert, eval, braun, bench e check.

Códigos de saída: 0 sucesso, 1 falha de domínio, de propriedade ou
recursão além do limite, 2 erro de uso ou de leitura.
"""

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, TextIO

from app.config import settings
from app.services import commands
from app.services.costmeter import OPS
from app.services.errors import (
    CanonicalityError,
    NumeralError,
    NumeralSyntaxError,
    UsageError,
)
from app.services.checks import SUITES
from app.services.numio import NumeralKind

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

KINDS = [k.value for k in NumeralKind]
FORMS = [f.value for f in commands.Form]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numerais",
        description="Numerais indutivos, complemento de dois e sequências de Braun",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log detalhado em stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    convert = sub.add_parser("convert", help="Converte entre inteiro, literal e bits")
    convert.add_argument("--kind", required=True, choices=KINDS)
    convert.add_argument("--from", dest="source", required=True, choices=FORMS)
    convert.add_argument("--to", dest="target", required=True, choices=FORMS)
    convert.add_argument("value")

    evaluate = sub.add_parser("eval", help="Avalia uma operação sobre literais")
    evaluate.add_argument("--kind", required=True, choices=KINDS)
    evaluate.add_argument("--op", required=True, choices=commands.EVAL_OP_NAMES)
    evaluate.add_argument("literals", nargs="+")

    braun = sub.add_parser("braun", help="Roteiro sobre uma sequência de Braun (stdin)")
    braun.add_argument("--init", default="", help="Elementos iniciais separados por vírgula")

    bench = sub.add_parser("bench", help="Contagem de passos em CSV")
    bench.add_argument("--op", required=True, choices=sorted(OPS))
    bench.add_argument("--sizes", required=True, help="Tamanhos separados por vírgula")

    check = sub.add_parser("check", help="Roda as suítes de propriedades")
    check.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    check.add_argument("--seed", type=int, default=settings.check_seed)

    return parser


def _exit_code(error: NumeralError) -> int:
    if isinstance(error, (NumeralSyntaxError, CanonicalityError, UsageError)):
        return EXIT_USAGE
    # DomainError, ValidityError, SequenceIndexError
    return EXIT_FAILURE


def run(args: argparse.Namespace, stdin: TextIO, stdout: TextIO) -> int:
    if args.command == "convert":
        stdout.write(commands.convert(args.kind, args.source, args.target, args.value) + "\n")
    elif args.command == "eval":
        stdout.write(commands.evaluate(args.kind, args.op, args.literals) + "\n")
    elif args.command == "braun":
        for line in commands.braun_script(args.init, stdin):
            stdout.write(line + "\n")
    elif args.command == "bench":
        stdout.write(commands.bench(args.op, commands.parse_sizes(args.sizes)))
    elif args.command == "check":
        reports = commands.run_checks(args.suite, args.seed)
        stdout.write(commands.render_reports(reports))
        if not all(r.passed for r in reports):
            return EXIT_FAILURE
    return EXIT_OK


def main(
    argv: Optional[List[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    # stdout fica só com a saída do comando
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=stderr,
    )

    try:
        # thread nova: herda a pilha ampliada em app.config
        with ThreadPoolExecutor(max_workers=1) as worker:
            return worker.submit(run, args, stdin, stdout).result()
    except NumeralError as e:
        stderr.write(f"Erro: {e}\n")
        return _exit_code(e)
    except RecursionError:
        stderr.write(f"Erro: recursão mais funda que o limite de {settings.recursion_limit} níveis\n")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
