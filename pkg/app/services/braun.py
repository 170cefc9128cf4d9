"""
Índices C-D e sequências em árvore de Braun.

Índices:

    Z        0
    C i      2i + 1
    D i      2i + 2

Toda cadeia de C/D é um índice válido, e cada natural tem exatamente uma
representação; nenhuma regra extra de canonicidade é necessária. A árvore
guarda o elemento de índice Z na raiz, os de índice C i na subárvore
esquerda (posição i) e os de índice D i na direita (posição i).

Por que não A-B: com A: 2n e B: 2n+1, todo índice cujo dígito mais interno
seria A aplicado a Z não existe, e cada filho esquerdo ficaria vazio.
Deslocar para base 1 antes de aplicar o dígito e voltar depois
(C(n) = A(n+1) - 1, D(n) = B(n+1) - 1) dá exatamente C e D.

Invariante de forma (Braun): em cada nó, |esq| == |dir| ou |esq| == |dir| + 1.
A profundidade de uma árvore com n elementos é floor(log2 n) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, Iterable, List, Optional, TypeVar, Union

from app.services.binary import Z, ZERO
from app.services.errors import DomainError, SequenceIndexError
from app.services.meter import StepMeter, tick

E = TypeVar("E")


@dataclass(frozen=True, slots=True)
class C:
    rest: CdIndex


@dataclass(frozen=True, slots=True)
class D:
    rest: CdIndex


CdIndex = Union[Z, C, D]


def cd_from_int(n: int, meter: Optional[StepMeter] = None) -> CdIndex:
    tick(meter)
    if n < 0:
        raise DomainError(f"Índice não pode ser negativo: {n}")
    if n == 0:
        return ZERO
    if n % 2 == 1:
        return C(cd_from_int((n - 1) // 2, meter))
    return D(cd_from_int((n - 2) // 2, meter))


def cd_to_int(i: CdIndex) -> int:
    match i:
        case Z():
            return 0
        case C(rest):
            return 2 * cd_to_int(rest) + 1
        case D(rest):
            return 2 * cd_to_int(rest) + 2


def cd_digits(n: int) -> int:
    """Quantidade de dígitos C/D do índice n, isto é floor(log2(n + 1))"""
    if n < 0:
        raise DomainError(f"Índice não pode ser negativo: {n}")
    return (n + 1).bit_length() - 1


@dataclass(frozen=True, slots=True)
class Leaf:
    pass


@dataclass(frozen=True, slots=True)
class Node(Generic[E]):
    elem: E
    left: BraunTree[E]
    right: BraunTree[E]


BraunTree = Union[Leaf, Node[E]]

LEAF = Leaf()


@dataclass(frozen=True, slots=True)
class BraunSeq(Generic[E]):
    """Árvore de Braun com o tamanho guardado ao lado (a árvore não guarda tamanhos)"""

    length: int
    tree: BraunTree[E]

    def __len__(self) -> int:
        return self.length


EMPTY: BraunSeq = BraunSeq(0, LEAF)


def bs_empty() -> BraunSeq:
    return EMPTY


def _check_index(s: BraunSeq, i: int) -> None:
    if not 0 <= i < s.length:
        raise SequenceIndexError(f"Índice {i} fora da sequência de tamanho {s.length}")


def _access(t: BraunTree[E], i: int, meter: Optional[StepMeter]) -> E:
    # um passo por descida a uma subárvore
    while isinstance(t, Node):
        if i == 0:
            return t.elem
        tick(meter)
        if i % 2 == 1:
            t, i = t.left, (i - 1) // 2
        else:
            t, i = t.right, (i - 2) // 2
    raise SequenceIndexError("Índice além do fim da árvore")


def bs_access(s: BraunSeq[E], i: int, meter: Optional[StepMeter] = None) -> E:
    """Elemento de índice i; O(log i) descidas"""
    _check_index(s, i)
    return _access(s.tree, i, meter)


def bs_access_cd(s: BraunSeq[E], i: CdIndex, meter: Optional[StepMeter] = None) -> E:
    """
    Acesso pelo numeral C-D, descendo dígito a dígito sem aritmética.
    Não consulta o tamanho: cair numa folha é o erro de índice.
    """
    t = s.tree
    while True:
        match t, i:
            case Leaf(), _:
                raise SequenceIndexError(f"Índice {i!r} fora da sequência")
            case Node(elem, _, _), Z():
                return elem
            case Node(_, left, _), C(rest):
                tick(meter)
                t, i = left, rest
            case Node(_, _, right), D(rest):
                tick(meter)
                t, i = right, rest


def _update(t: BraunTree[E], i: int, v: E, meter: Optional[StepMeter]) -> BraunTree[E]:
    tick(meter)
    match t:
        case Leaf():
            raise SequenceIndexError("Índice além do fim da árvore")
        case Node(elem, left, right):
            if i == 0:
                return Node(v, left, right)
            if i % 2 == 1:
                return Node(elem, _update(left, (i - 1) // 2, v, meter), right)
            return Node(elem, left, _update(right, (i - 2) // 2, v, meter))


def bs_update(s: BraunSeq[E], i: int, v: E, meter: Optional[StepMeter] = None) -> BraunSeq[E]:
    """Nova sequência com o elemento i trocado por v; copia só o caminho até ele"""
    _check_index(s, i)
    return BraunSeq(s.length, _update(s.tree, i, v, meter))


def _cons(v: E, t: BraunTree[E], meter: Optional[StepMeter]) -> BraunTree[E]:
    tick(meter)
    match t:
        case Leaf():
            return Node(v, LEAF, LEAF)
        case Node(elem, left, right):
            # o antigo primeiro elemento vai para a frente da subárvore direita,
            # que passa a ser a esquerda
            return Node(v, _cons(elem, right, meter), left)


def bs_cons(v: E, s: BraunSeq[E], meter: Optional[StepMeter] = None) -> BraunSeq[E]:
    return BraunSeq(s.length + 1, _cons(v, s.tree, meter))


def bs_first(s: BraunSeq[E]) -> E:
    match s.tree:
        case Leaf():
            raise DomainError("first de sequência vazia")
        case Node(elem, _, _):
            return elem


def _rest(t: Node[E], meter: Optional[StepMeter]) -> BraunTree[E]:
    tick(meter)
    match t.left:
        case Leaf():
            return LEAF
        case Node(elem, _, _) as left:
            # simétrico de _cons
            return Node(elem, t.right, _rest(left, meter))


def bs_rest(s: BraunSeq[E], meter: Optional[StepMeter] = None) -> BraunSeq[E]:
    match s.tree:
        case Leaf():
            raise DomainError("rest de sequência vazia")
        case Node() as t:
            return BraunSeq(s.length - 1, _rest(t, meter))


def _from_list(xs: List[E]) -> BraunTree[E]:
    if not xs:
        return LEAF
    # posições ímpares (C) à esquerda, pares positivas (D) à direita
    return Node(xs[0], _from_list(xs[1::2]), _from_list(xs[2::2]))


def bs_from_list(xs: Iterable[E]) -> BraunSeq[E]:
    items = list(xs)
    return BraunSeq(len(items), _from_list(items))


def _to_list(t: BraunTree[E]) -> List[E]:
    match t:
        case Leaf():
            return []
        case Node(elem, left, right):
            lefts, rights = _to_list(left), _to_list(right)
            out = [elem]
            for k, x in enumerate(lefts):
                out.append(x)
                if k < len(rights):
                    out.append(rights[k])
            return out


def bs_to_list(s: BraunSeq[E]) -> List[E]:
    return _to_list(s.tree)


def bs_depth(s: BraunSeq) -> int:
    """
    Maior caminho raiz-nó, em nós (vazia -> 0).

    A subárvore esquerda nunca é menor que a direita, então basta seguir a
    espinha esquerda.
    """
    depth = 0
    t = s.tree
    while isinstance(t, Node):
        depth += 1
        t = t.left
    return depth


def is_braun(t: BraunTree) -> bool:
    """Verifica o invariante de forma em todos os nós"""
    return _braun_size(t) is not None


def _braun_size(t: BraunTree) -> Optional[int]:
    match t:
        case Leaf():
            return 0
        case Node(_, left, right):
            nl, nr = _braun_size(left), _braun_size(right)
            if nl is None or nr is None or nl - nr not in (0, 1):
                return None
            return nl + nr + 1
