"""Exceções do domínio de numerais e sequências."""

from typing import Optional


class NumeralError(Exception):
    """Base de todos os erros da biblioteca"""


class DomainError(NumeralError, ValueError):
    """Entrada fora do domínio da operação (ex.: natural negativo, lista vazia)"""


class ValidityError(NumeralError, ValueError):
    """Valor não canônico onde se exige forma canônica"""


class SequenceIndexError(NumeralError, IndexError):
    """Índice fora da sequência de Braun"""


class UsageError(NumeralError):
    """Operação desconhecida, aridade errada ou combinação de argumentos inválida"""


class NumeralSyntaxError(NumeralError, ValueError):
    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (posição {position})"
        super().__init__(message)


class CanonicalityError(NumeralError, ValueError):
    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (posição {position})"
        super().__init__(message)
