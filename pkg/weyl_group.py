"""
Weyl Group - petpatch
Combinatória de permutações: pontos fixos parabólicos, padrões,
ordem de Bruhat e matrizes de posto
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple, Union

from exceptions import NotAFixedPointError, PermutationFormatError, SizeMismatchError

SOUTHWEST = "southwest"
NORTHWEST = "northwest"
NOT_BLOCK_DIAGONAL = "not block-diagonal"


@dataclass(frozen=True)
class Permutation:
    """Permutação em notação de uma linha; a matriz tem 1 em (w(j), j)"""
    one_line: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.one_line)
        object.__setattr__(self, "one_line", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PermutationFormatError(f"Não é uma permutação de 1..{len(values)}: {values}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def parse(cls, text: str, n: int = None) -> "Permutation":
        return parse_permutation(text, n)

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, j: int) -> int:
        return self.one_line[j - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j, value in enumerate(self.one_line, start=1):
            inv[value - 1] = j
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Comprimento de Coxeter (número de inversões)"""
        return sum(1 for a, b in combinations(self.one_line, 2) if a > b)

    def is_parabolic(self) -> bool:
        try:
            composition_of(self)
            return True
        except NotAFixedPointError:
            return False

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.one_line)
        return ",".join(str(v) for v in self.one_line)


@dataclass(frozen=True)
class Composition:
    """Composição (i_1, ..., i_k) de n"""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts or any(p < 1 for p in parts):
            raise PermutationFormatError(f"Composição inválida: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def offsets(self) -> List[int]:
        """Deslocamento (0-based) do início de cada bloco"""
        out, start = [], 0
        for p in self.parts:
            out.append(start)
            start += p
        return out

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class RankMatrix:
    """Matriz de postos n x n (sudoeste ou noroeste)"""
    values: Tuple[Tuple[int, ...], ...]
    orientation: str

    def at(self, i: int, j: int) -> int:
        return self.values[i - 1][j - 1]


def parse_permutation(text: str, n: int = None) -> Permutation:
    """Aceita `2,14,3,...` ou dígitos compactos (`2143`) quando n <= 9"""
    raw = text.strip()
    try:
        if "," in raw:
            values = tuple(int(x) for x in raw.split(","))
        else:
            if not raw.isdigit():
                raise ValueError(raw)
            values = tuple(int(ch) for ch in raw)
            if len(values) > 9:
                raise PermutationFormatError(
                    f"Notação compacta só vale para n <= 9; use vírgulas: {text}"
                )
    except ValueError:
        raise PermutationFormatError(f"Permutação mal formada: '{text}'") from None
    w = Permutation(values)
    if n is not None and w.n != n:
        raise PermutationFormatError(f"Permutação {text} tem tamanho {w.n}, esperado n={n}")
    return w


def parse_int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise PermutationFormatError(f"Lista de inteiros mal formada: '{text}'") from None


def parabolic_element(c: Composition) -> Permutation:
    """Elemento mais longo de S_{i_1} x ... x S_{i_k}"""
    values = []
    start = 0
    for part in c.parts:
        values.extend(range(start + part, start, -1))
        start += part
    return Permutation(tuple(values))


def composition_of(w: Permutation) -> Composition:
    """Composição de w_P; erro se w não é parabólico"""
    parts = []
    start = 0
    while start < w.n:
        top = w.one_line[start]
        size = top - start
        block = w.one_line[start:start + size]
        if size < 1 or block != tuple(range(top, start, -1)):
            raise NotAFixedPointError(
                f"w={w} não é ponto fixo: wB ∈ Pet_n se e somente se w = w_P "
                f"(elemento mais longo de um subgrupo de Young)"
            )
        parts.append(size)
        start += size
    return Composition(tuple(parts))


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def enumerate_parabolics(n: int) -> List[Tuple[Composition, Permutation]]:
    """Todas as 2^(n-1) composições de n, em ordem lexicográfica, com seus w_P"""
    if n < 1:
        raise SizeMismatchError("enumerate_parabolics exige n >= 1")
    comps = sorted(_compositions(n))
    return [(Composition(c), parabolic_element(Composition(c))) for c in comps]


def contains_pattern(w: Permutation, p: Permutation) -> bool:
    """Alguma subsequência de w é order-isomorfa a p"""
    if p.n > w.n:
        return False
    target = p.one_line
    for positions in combinations(range(w.n), p.n):
        values = [w.one_line[k] for k in positions]
        ranks = sorted(values)
        if tuple(ranks.index(v) + 1 for v in values) == target:
            return True
    return False


def rank_matrix(w: Permutation, orientation: str) -> RankMatrix:
    """r_{ij}: número de 1's em linhas >= i (sudoeste) ou <= i (noroeste) e colunas <= j"""
    n = w.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if orientation == SOUTHWEST:
                row.append(sum(1 for c in range(1, j + 1) if w(c) >= i))
            elif orientation == NORTHWEST:
                row.append(sum(1 for c in range(1, j + 1) if w(c) <= i))
            else:
                raise ValueError(f"Orientação desconhecida: {orientation}")
        rows.append(tuple(row))
    return RankMatrix(tuple(rows), orientation)


def bruhat_leq(v: Permutation, u: Permutation) -> bool:
    """v <= u em Bruhat: postos noroeste de v >= postos noroeste de u em toda posição"""
    if v.n != u.n:
        raise SizeMismatchError(f"Permutações de tamanhos diferentes: {v} e {u}")
    rv = rank_matrix(v, NORTHWEST)
    ru = rank_matrix(u, NORTHWEST)
    return all(
        a >= b for row_v, row_u in zip(rv.values, ru.values) for a, b in zip(row_v, row_u)
    )


def block_split(wQ: Permutation, c: Composition) -> Union[List[Permutation], str]:
    """Blocos diagonais de wQ com tamanhos dados por c, ou NOT_BLOCK_DIAGONAL"""
    if c.n != wQ.n:
        raise SizeMismatchError(f"Composição {c} não soma n={wQ.n}")
    blocks = []
    for start, size in zip(c.offsets(), c.parts):
        values = wQ.one_line[start:start + size]
        if sorted(values) != list(range(start + 1, start + size + 1)):
            return NOT_BLOCK_DIAGONAL
        blocks.append(Permutation(tuple(v - start for v in values)))
    return blocks


def smooth_list(n: int) -> List[Permutation]:
    """Os pontos fixos lisos de Pet_n: w_0, 1 n n-1 ... 2 e n-1 ... 1 n"""
    w0 = Permutation.longest(n)
    first = Permutation((1,) + tuple(range(n, 1, -1)))
    last = Permutation(tuple(range(n - 1, 0, -1)) + (n,))
    out = []
    for w in (w0, first, last):
        if w not in out:
            out.append(w)
    return out


PATTERN_123 = Permutation((1, 2, 3))
PATTERN_2143 = Permutation((2, 1, 4, 3))
PATTERN_321 = Permutation((3, 2, 1))


def has_singular_pattern(w: Permutation) -> bool:
    return contains_pattern(w, PATTERN_123) or contains_pattern(w, PATTERN_2143)


def essential_set(w: Permutation, orientation: str) -> List[Tuple[int, int]]:
    """Conjunto essencial das condições de posto de w na orientação dada"""
    if orientation == SOUTHWEST:
        n = w.n
        flipped = Permutation(tuple(n + 1 - v for v in w.one_line))
        return sorted(((n + 1 - i, j) for i, j in essential_set(flipped, NORTHWEST)), key=lambda p: (p[1], p[0]))

    inv = w.inverse()
    # caixa (i,j) do diagrama: nenhum 1 à esquerda na linha i nem acima na coluna j
    diagram = {
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(1, w.n + 1)
        if j < inv(i) and i < w(j)
    }
    essential = [
        (i, j) for (i, j) in diagram if (i + 1, j) not in diagram and (i, j + 1) not in diagram
    ]
    return sorted(essential, key=lambda p: (p[1], p[0]))
