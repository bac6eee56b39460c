"""
Semistandard tableaux labelling the crystal of an A_n module, the signature
rule for the crystal operators, and the column-by-column monomial of the
replacement algorithm.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from canonical_basis.core.errors import NonTerminating, ParseError
from canonical_basis.core.rootdata import Weight, add_weights
from canonical_basis.crystal.littelmann import AdaptedMonomial, Direction
from canonical_basis.modules.builders import a_subset_weight, a_subsets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tableau:
    """
    A tableau of A_n stored row by row, entries in 1..n+1.

    Columns are read off the rows; a column of length k is a basis vector
    of V(lambda_k).
    """

    n: int
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or any(not row for row in self.rows):
            raise ParseError("a tableau needs nonempty rows")
        if any(len(a) < len(b) for a, b in zip(self.rows, self.rows[1:])):
            raise ParseError("row lengths must be non-increasing")
        if len(self.rows) > self.n:
            raise ParseError(f"A{self.n} tableaux have at most {self.n} rows")
        if any(not 1 <= x <= self.n + 1 for row in self.rows for x in row):
            raise ParseError(f"entries must lie in 1..{self.n + 1}")
        for col in self.columns:
            if any(a >= b for a, b in zip(col, col[1:])):
                raise ParseError(f"column {col} is not strictly increasing")

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "Tableau":
        """
        Parse ``114/23/3`` (one digit per entry) or ``1,1,4/2,3/3``.

        The rank defaults to the number of rows.
        """
        try:
            rows = tuple(
                tuple(int(x) for x in (part.split(",") if "," in part else part))
                for part in text.strip().split("/")
            )
        except ValueError as e:
            raise ParseError(f"invalid tableau: {text!r}") from e
        return cls(n=n if n is not None else len(rows), rows=rows)

    @classmethod
    def highest(cls, n: int, lam: Sequence[int]) -> "Tableau":
        """T_lambda: row i filled with i."""
        if len(lam) != n or any(a < 0 for a in lam):
            raise ValueError(f"invalid A{n} highest weight {tuple(lam)}")
        lengths = [sum(lam[k - 1] for k in range(i, n + 1)) for i in range(1, n + 1)]
        rows = tuple((i,) * length for i, length in enumerate(lengths, start=1) if length)
        return cls(n=n, rows=rows)

    @property
    def columns(self) -> List[Tuple[int, ...]]:
        return [
            tuple(row[c] for row in self.rows if len(row) > c) for c in range(len(self.rows[0]))
        ]

    def shape_weight(self) -> Weight:
        """lambda with a_k = number of columns of length k."""
        coords = [0] * self.n
        for col in self.columns:
            coords[len(col) - 1] += 1
        return tuple(coords)

    def weight(self) -> Weight:
        total: Weight = (0,) * self.n
        for col in self.columns:
            total = add_weights(total, a_subset_weight(self.n, col))
        return total

    def is_semistandard(self) -> bool:
        return all(a <= b for row in self.rows for a, b in zip(row, row[1:]))

    def render(self) -> str:
        wide = self.n + 1 >= 10
        return "/".join(
            ",".join(str(x) for x in row) if wide else "".join(str(x) for x in row)
            for row in self.rows
        )

    def __str__(self) -> str:
        return self.render()

    def _replace(self, cells: Sequence[Tuple[int, int]], value: int) -> "Tableau":
        rows = [list(row) for row in self.rows]
        for r, c in cells:
            rows[r][c] = value
        return Tableau(n=self.n, rows=tuple(tuple(row) for row in rows))


def reading_cells(t: Tableau) -> List[Tuple[int, int]]:
    """Cells (row, col) read column by column from the right, each top to bottom."""
    cells = []
    for c in reversed(range(len(t.rows[0]))):
        for r, row in enumerate(t.rows):
            if len(row) > c:
                cells.append((r, c))
    return cells


def signature(t: Tableau, i: int) -> Tuple[str, str]:
    """
    The raw and reduced signature strings for index i.

    Entries equal to i give ``+``, entries equal to i+1 give ``-``, others
    ``o``. Each ``-`` cancels the nearest uncancelled ``+`` to its left.
    """
    raw = []
    for r, c in reading_cells(t):
        x = t.rows[r][c]
        raw.append("+" if x == i else "-" if x == i + 1 else "o")
    reduced = list(raw)
    open_plus: List[int] = []
    for pos, sign in enumerate(raw):
        if sign == "+":
            open_plus.append(pos)
        elif sign == "-" and open_plus:
            reduced[open_plus.pop()] = "o"
            reduced[pos] = "o"
    return "".join(raw), "".join(reduced)


def tableau_crystal_op(t: Tableau, i: int, direction: Direction) -> Optional[Tableau]:
    """
    f_i changes the i at the leftmost surviving ``+`` into i+1; e_i changes
    the i+1 at the rightmost surviving ``-`` into i. None when no sign survives.
    """
    if not 1 <= i <= t.n:
        raise ValueError(f"index {i} out of range 1..{t.n}")
    _, reduced = signature(t, i)
    cells = reading_cells(t)
    if Direction(direction) is Direction.F:
        pos = reduced.find("+")
        if pos < 0:
            return None
        return t._replace([cells[pos]], i + 1)
    pos = reduced.rfind("-")
    if pos < 0:
        return None
    return t._replace([cells[pos]], i)


def tableau_to_tensor_index(t: Tableau) -> Tuple[int, ...]:
    """
    Position of each column in its fundamental module, columns taken from
    right to left so that the shortest columns come first.
    """
    index = []
    for col in reversed(t.columns):
        subsets = a_subsets(t.n, len(col))
        index.append(subsets.index(col))
    return tuple(index)


def lectof_monomial(t: Tableau) -> AdaptedMonomial:
    """
    Monomial of the replacement algorithm.

    Repeatedly take the smallest i such that i+1 occurs in some row m <= i,
    turn all those occurrences into i and record (i, count), until the
    tableau is T_lambda. The recorded factors read left to right.

    Raises:
        NonTerminating: if the tableau does not reduce to T_lambda
    """
    target = Tableau.highest(t.n, t.shape_weight())
    bound = sum(x - (r + 1) for r, row in enumerate(t.rows) for x in row)
    factors: List[Tuple[int, int]] = []
    current = t
    while current != target:
        if len(factors) > bound:
            raise NonTerminating(f"replacement steps on {t} exceeded {bound}")
        step = None
        for i in range(1, t.n + 1):
            cells = [
                (r, c)
                for r, row in enumerate(current.rows[:i])
                for c, x in enumerate(row)
                if x == i + 1
            ]
            if cells:
                step = (i, cells)
                break
        if step is None:
            raise NonTerminating(f"no replacement applies to {current}")
        i, cells = step
        current = current._replace(cells, i)
        factors.append((i, len(cells)))
    return AdaptedMonomial(factors=tuple(factors))


def generate_tableau_crystal(
    n: int, lam: Sequence[int]
) -> Tuple[List[Tableau], Dict[Tuple[int, int], int]]:
    """Breadth-first closure of T_lambda under the f-operators: (vertices, f-edges)."""
    start = Tableau.highest(n, lam)
    vertices = [start]
    index = {start: 0}
    edges: Dict[Tuple[int, int], int] = {}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for i in range(1, n + 1):
            image = tableau_crystal_op(vertices[v], i, Direction.F)
            if image is None:
                continue
            if image not in index:
                index[image] = len(vertices)
                vertices.append(image)
                queue.append(index[image])
            edges[(v, i)] = index[image]
    logger.debug("tableau crystal of A%d %s: %d vertices", n, tuple(lam), len(vertices))
    return vertices, edges


def f_sequence_to(n: int, t: Tableau) -> List[int]:
    """Letters i_1, i_2, ... with t = f_{i_k} ... f_{i_1} T_lambda (applied in list order)."""
    lam = t.shape_weight()
    start = Tableau.highest(n, lam)
    parents: Dict[Tableau, Tuple[Optional[Tableau], int]] = {start: (None, 0)}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if current == t:
            break
        for i in range(1, n + 1):
            image = tableau_crystal_op(current, i, Direction.F)
            if image is not None and image not in parents:
                parents[image] = (current, i)
                queue.append(image)
    if t not in parents:
        raise ValueError(f"{t} is not in the crystal generated from {start}")
    letters: List[int] = []
    node: Optional[Tableau] = t
    while node is not None and node != start:
        parent, i = parents[node]
        letters.append(i)
        node = parent
    return list(reversed(letters))
