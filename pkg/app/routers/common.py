from fastapi import HTTPException

from app.config import settings
from app.services.errors import CanonicalityError, NumeralError, NumeralSyntaxError, UsageError

# Exceções que as rotas convertem em resposta HTTP
HANDLED_ERRORS = (NumeralError, RecursionError)


def to_http_exception(error: Exception) -> HTTPException:
    """Erros de leitura/uso viram 400; erros de domínio, validade, índice e recursão funda viram 422"""
    if isinstance(error, (NumeralSyntaxError, CanonicalityError, UsageError)):
        return HTTPException(status_code=400, detail=f"Erro: {error}")
    if isinstance(error, RecursionError):
        return HTTPException(
            status_code=422,
            detail=f"Erro: recursão mais funda que o limite de {settings.recursion_limit} níveis",
        )
    return HTTPException(status_code=422, detail=f"Erro: {error}")
