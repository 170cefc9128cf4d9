import asyncio
from typing import List

from fastapi import APIRouter
from pydantic import BaseModel

from app.routers.common import HANDLED_ERRORS, to_http_exception
from app.services import commands

router = APIRouter()


class ScriptRequest(BaseModel):
    init: str = ""
    script: List[str]


class ScriptResponse(BaseModel):
    lines: List[str]


@router.post("/script", response_model=ScriptResponse)
async def run_script(request: ScriptRequest):
    """
    Executa um roteiro (access, cons, first, rest, update...) sobre uma sequência de Braun
    """
    try:
        # a execução do roteiro acontece dentro de list(), na thread do executor
        loop = asyncio.get_event_loop()
        lines = await loop.run_in_executor(None, list, commands.braun_script(request.init, request.script))
    except HANDLED_ERRORS as e:
        raise to_http_exception(e)
    return ScriptResponse(lines=lines)
