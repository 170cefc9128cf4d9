import asyncio
from typing import List

from fastapi import APIRouter
from pydantic import BaseModel, Field

from app.routers.common import HANDLED_ERRORS, to_http_exception
from app.services import commands
from app.services.numio import NumeralKind

router = APIRouter()


class ConvertRequest(BaseModel):
    kind: NumeralKind
    source: commands.Form = Field(commands.Form.INT, alias="from")
    target: commands.Form = Field(commands.Form.LITERAL, alias="to")
    value: str


class EvalRequest(BaseModel):
    kind: NumeralKind
    op: str
    literals: List[str]


class NumeralResponse(BaseModel):
    kind: NumeralKind
    result: str


@router.post("/convert", response_model=NumeralResponse)
async def convert_numeral(request: ConvertRequest):
    """
    Converte um numeral entre inteiro, literal e notação de bits
    """
    try:
        loop = asyncio.get_event_loop()
        result = await loop.run_in_executor(
            None, commands.convert, request.kind, request.source, request.target, request.value
        )
    except HANDLED_ERRORS as e:
        raise to_http_exception(e)
    return NumeralResponse(kind=request.kind, result=result)


@router.post("/eval", response_model=NumeralResponse)
async def eval_numeral(request: EvalRequest):
    """
    Avalia uma operação (plus, add, add1, mul, neg, sub) sobre literais
    """
    try:
        loop = asyncio.get_event_loop()
        result = await loop.run_in_executor(None, commands.evaluate, request.kind, request.op, request.literals)
    except HANDLED_ERRORS as e:
        raise to_http_exception(e)
    return NumeralResponse(kind=request.kind, result=result)


@router.get("/kinds")
async def list_kinds():
    """
    Lista os tipos de numeral e as operações de cada um
    """
    kinds = {kind.value: [] for kind in NumeralKind}
    for kind, op in commands.EVAL_OPS:
        kinds[kind.value].append(op)
    return kinds
