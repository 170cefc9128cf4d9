import asyncio
from typing import List

from fastapi import APIRouter, Query
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from app.routers.common import HANDLED_ERRORS, to_http_exception
from app.services import commands, costmeter

router = APIRouter()


class BoundRequest(BaseModel):
    op: str
    sizes: List[int]
    form: costmeter.BoundForm
    k: int = 1


@router.get("/ops")
async def list_ops():
    """
    Lista as operações instrumentadas e se têm forma fechada registrada
    """
    return {op_id: op.closed_form is not None for op_id, op in sorted(costmeter.OPS.items())}


@router.get("/{op_id}", response_class=PlainTextResponse)
async def bench_op(op_id: str, sizes: str = Query(..., description="Tamanhos separados por vírgula")):
    """
    Conta passos da operação nas entradas de pior caso e devolve CSV (n,steps)
    """
    try:
        parsed = commands.parse_sizes(sizes)
        # Contagem é CPU pura, roda fora do event loop
        loop = asyncio.get_event_loop()
        text = await loop.run_in_executor(None, commands.bench, op_id, parsed)
    except HANDLED_ERRORS as e:
        raise to_http_exception(e)
    return PlainTextResponse(text, media_type="text/csv")


@router.post("/check", response_model=costmeter.CostReport)
async def check_bound(request: BoundRequest):
    """
    Confere um limite de custo (linear, logarithmic, exponential ou exact)
    """
    try:
        loop = asyncio.get_event_loop()
        return await loop.run_in_executor(
            None, costmeter.check_bound, request.op, request.sizes, request.form, request.k
        )
    except HANDLED_ERRORS as e:
        raise to_http_exception(e)
