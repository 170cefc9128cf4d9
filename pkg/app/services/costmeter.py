"""
Contagem de passos e verificação de limites de custo.

Um passo é uma entrada no corpo de uma função instrumentada (cláusula base
incluída); nas descidas de bs_access/bs_access_cd, um passo por subárvore
visitada abaixo da raiz. É o análogo dinâmico da contagem de perguntas da
análise em tabela: mesma classe O(), constantes exatas.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, NonNegativeInt, field_validator

from app.services import binary, braun, listlab, twoscomp, unary
from app.services.errors import UsageError
from app.services.meter import StepMeter


class StepCount(BaseModel):
    count: NonNegativeInt = 0


class BoundForm(str, Enum):
    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"
    EXPONENTIAL = "exponential"
    EXACT = "exact"


class Sample(BaseModel):
    size: NonNegativeInt
    steps: NonNegativeInt


class CostReport(BaseModel):
    operation: str
    samples: List[Sample]
    bound: BoundForm
    constant: int
    passed: bool
    worst_ratio: float

    @field_validator("samples")
    @classmethod
    def sizes_strictly_increasing(cls, samples: List[Sample]) -> List[Sample]:
        if not samples:
            raise ValueError("Relatório sem amostras")
        sizes = [s.size for s in samples]
        if any(a >= b for a, b in zip(sizes, sizes[1:])):
            raise ValueError("Tamanhos das amostras devem ser estritamente crescentes")
        return samples


@dataclass(frozen=True)
class MeteredOp:
    func: Callable[..., Any]
    worst_case: Callable[[int], Tuple[Any, ...]]
    closed_form: Optional[Callable[[int], int]] = None


def _ascending(n: int) -> Tuple[Any, ...]:
    return (list(range(1, n + 1)),)


def _is_even(x: int) -> bool:
    return x % 2 == 0


def _all_b(n: int) -> binary.BinNat:
    # n construtores B: maior cadeia de vai-um
    return binary.b_from_int(2 ** n - 1)


def _unary_pair(n: int) -> Tuple[Any, ...]:
    return (unary.u_from_int(n), unary.u_from_int(n))


def _binary_pair(n: int) -> Tuple[Any, ...]:
    return (_all_b(n), _all_b(n))


def _last_index(n: int) -> Tuple[Any, ...]:
    return (braun.bs_from_list(range(n + 1)), n)


OPS: Dict[str, MeteredOp] = {
    "u_plus": MeteredOp(unary.u_plus, _unary_pair, lambda n: n + 1),
    "u_add": MeteredOp(unary.u_add, _unary_pair, lambda n: n + 1),
    "u_mult": MeteredOp(unary.u_mult, _unary_pair, lambda n: n * n * (n - 1) // 2 + 2 * n + 1),
    "sumlist": MeteredOp(listlab.sumlist, _ascending, lambda n: n + 1),
    "sumlist2": MeteredOp(listlab.sumlist2, _ascending, lambda n: n + 2),
    "filter_keep": MeteredOp(
        listlab.filter_keep, lambda n: (_is_even, list(range(1, n + 1))), lambda n: n + 1
    ),
    "max_naive": MeteredOp(listlab.max_naive, _ascending, lambda n: 2 ** n - 1),
    "max_fast": MeteredOp(listlab.max_fast, _ascending, lambda n: n),
    "reverse": MeteredOp(listlab.reverse_list, _ascending, lambda n: n * (n + 1) // 2 + n + 1),
    "reverse2": MeteredOp(listlab.reverse2, _ascending, lambda n: n + 2),
    "b_add1": MeteredOp(binary.b_add1, lambda n: (_all_b(n),), lambda n: n + 1),
    "b_add_v1": MeteredOp(binary.b_add_v1, _binary_pair),
    "b_add_v2": MeteredOp(binary.b_add_v2, _binary_pair),
    "b_addp": MeteredOp(binary.b_addp, _binary_pair),
    "b_mult": MeteredOp(binary.b_mult, _binary_pair),
    "i_add": MeteredOp(twoscomp.i_add, _binary_pair),
    "i_add1": MeteredOp(twoscomp.i_add1, lambda n: (_all_b(n),), lambda n: n + 1),
    "i_sub1": MeteredOp(twoscomp.i_sub1, lambda n: (twoscomp.i_from_int(2 ** n),), lambda n: n + 1),
    "cd_from_int": MeteredOp(braun.cd_from_int, lambda n: (n,), lambda n: braun.cd_digits(n) + 1),
    "bs_access": MeteredOp(braun.bs_access, _last_index, braun.cd_digits),
    "bs_access_cd": MeteredOp(
        braun.bs_access_cd,
        lambda n: (braun.bs_from_list(range(n + 1)), braun.cd_from_int(n)),
        braun.cd_digits,
    ),
    "bs_update": MeteredOp(
        braun.bs_update,
        lambda n: (braun.bs_from_list(range(n + 1)), n, -1),
        lambda n: braun.cd_digits(n) + 1,
    ),
    "bs_cons": MeteredOp(braun.bs_cons, lambda n: (-1, braun.bs_from_list(range(n)))),
    "bs_rest": MeteredOp(braun.bs_rest, lambda n: (braun.bs_from_list(range(n)),)),
}


def _lookup(op_id: str) -> MeteredOp:
    try:
        return OPS[op_id]
    except KeyError:
        raise UsageError(f"Operação instrumentada desconhecida: {op_id}") from None


def measured(op_id: str, args: Sequence[Any]) -> Tuple[Any, StepCount]:
    """Executa a operação com um medidor novo; o resultado é o mesmo da versão sem medidor"""
    op = _lookup(op_id)
    meter = StepMeter()
    result = op.func(*args, meter=meter)
    return result, StepCount(count=meter.count)


def worst_case_input(op_id: str, size: int) -> Tuple[Any, ...]:
    return _lookup(op_id).worst_case(size)


def closed_form(op_id: str, size: int) -> Optional[int]:
    form = _lookup(op_id).closed_form
    return form(size) if form is not None else None


def sample_steps(op_id: str, sizes: Sequence[int]) -> List[Tuple[int, int]]:
    """(tamanho, passos) sobre as entradas de pior caso de cada tamanho"""
    _lookup(op_id)
    rows = []
    for n in sizes:
        _, steps = measured(op_id, worst_case_input(op_id, n))
        rows.append((n, steps.count))
    return rows


def _log2_floor(n: int) -> int:
    return max(n.bit_length() - 1, 0)


def check_bound(op_id: str, sizes: Sequence[int], form: BoundForm, k: int = 1) -> CostReport:
    """
    Mede a operação no cronograma de tamanhos e confere o limite.

    linear:       passos <= K*n + K
    logarithmic:  passos <= K*floor(log2 n) + K
    exponential:  passos <= K*2^n
    exact:        passos == forma fechada registrada para a operação
    """
    form = BoundForm(form)
    op = _lookup(op_id)
    if not sizes:
        raise UsageError("Cronograma de tamanhos vazio")
    if form is BoundForm.EXACT and op.closed_form is None:
        raise UsageError(f"Sem forma fechada registrada para {op_id}")
    schedule = sorted(set(sizes))

    rows = sample_steps(op_id, schedule)
    steps = np.array([s for _, s in rows], dtype=np.float64)
    if form is BoundForm.LINEAR:
        base = np.array([n for n in schedule], dtype=np.float64) + 1
        bounds = k * base
    elif form is BoundForm.LOGARITHMIC:
        base = np.array([_log2_floor(n) for n in schedule], dtype=np.float64) + 1
        bounds = k * base
    elif form is BoundForm.EXPONENTIAL:
        base = np.exp2(np.array(schedule, dtype=np.float64))
        bounds = k * base
    else:
        base = np.array([op.closed_form(n) for n in schedule], dtype=np.float64)
        bounds = base

    if form is BoundForm.EXACT:
        passed = bool(np.array_equal(steps, bounds))
    else:
        passed = bool(np.all(steps <= bounds))
    ratios = np.divide(steps, base, out=np.ones_like(steps), where=base > 0)
    report = CostReport(
        operation=op_id,
        samples=[Sample(size=n, steps=s) for n, s in rows],
        bound=form,
        constant=k,
        passed=passed,
        worst_ratio=float(np.max(ratios)),
    )
    logging.info(
        f"Limite {form.value} para {op_id} (K={k}): "
        f"{'ok' if passed else 'FALHOU'}, pior razão {report.worst_ratio:.3f}"
    )
    return report
