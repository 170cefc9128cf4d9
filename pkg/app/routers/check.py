import asyncio
from typing import List, Optional

from fastapi import APIRouter
from pydantic import BaseModel

from app.routers.common import HANDLED_ERRORS, to_http_exception
from app.services import commands
from app.services.checks import SuiteReport

router = APIRouter()


class CheckRequest(BaseModel):
    suite: str = "all"
    seed: Optional[int] = None


class CheckResponse(BaseModel):
    passed: bool
    reports: List[SuiteReport]


@router.post("", response_model=CheckResponse)
async def run_check(request: CheckRequest):
    """
    Roda as suítes de propriedades; pode levar alguns segundos
    """
    try:
        loop = asyncio.get_event_loop()
        reports = await loop.run_in_executor(None, commands.run_checks, request.suite, request.seed)
    except HANDLED_ERRORS as e:
        raise to_http_exception(e)
    return CheckResponse(passed=all(r.passed for r in reports), reports=reports)
