"""
Finite-dimensional U_q(g)-modules with a weight basis and sparse E/F actions,
and the check of the defining relations on them.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from canonical_basis.core.errors import RelationViolation
from canonical_basis.core.laurent import LaurentPoly, q_binomial, quantum_bracket
from canonical_basis.core.rootdata import (
    CartanDatum,
    Weight,
    add_weights,
    weight_to_root,
)

logger = logging.getLogger(__name__)

# column -> [(row, coefficient)]
ActionTable = Dict[int, List[Tuple[int, LaurentPoly]]]
SparseVector = Dict[int, LaurentPoly]


class Generator(str, Enum):
    """Chevalley generators of U_q(g)."""

    E = "E"
    F = "F"
    K = "K"


@dataclass
class ModuleRep:
    """
    A module with basis ``labels``/``weights`` and actions ``F[i-1]``, ``E[i-1]``.

    ``F[i-1][col]`` lists the (row, coefficient) pairs of F_i applied to
    basis vector ``col``. K_i is implicit: it acts on a vector of weight mu
    by q^{d_i mu_i}. Index 0 is the highest weight vector.
    """

    datum: CartanDatum
    highest: Weight
    labels: List[str]
    weights: List[Weight]
    F: List[ActionTable] = field(default_factory=list)
    E: List[ActionTable] = field(default_factory=list)

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.weights):
            raise ValueError("labels and weights must have the same length")
        rank = self.datum.rank
        if not self.F:
            self.F = [{} for _ in range(rank)]
        if not self.E:
            self.E = [{} for _ in range(rank)]
        if len(self.F) != rank or len(self.E) != rank:
            raise ValueError(f"need one F and one E table per simple index ({rank})")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def height_of(self, idx: int) -> int:
        """Height of highest - weight(idx) in root coordinates."""
        return int(sum(weight_to_root(self.datum, add_weights(self.highest, self.weights[idx], -1))))

    def index_of_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis vector labelled {label!r}") from None

    def table(self, gen: Generator, i: int) -> ActionTable:
        if gen is Generator.F:
            return self.F[i - 1]
        if gen is Generator.E:
            return self.E[i - 1]
        raise ValueError("K has no stored action table")

    def act_basis(self, gen: Generator, i: int, col: int) -> List[Tuple[int, LaurentPoly]]:
        if gen is Generator.K:
            return [(col, LaurentPoly.monomial(self.datum.d[i - 1] * self.weights[col][i - 1]))]
        return self.table(gen, i).get(col, [])

    def act(self, gen: Generator, i: int, vec: SparseVector) -> SparseVector:
        """Apply a generator to a sparse vector {basis index: coefficient}."""
        out: SparseVector = {}
        for col, coeff in vec.items():
            for row, c in self.act_basis(gen, i, col):
                out[row] = out.get(row, LaurentPoly()) + coeff * c
        return {k: v for k, v in out.items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleRep):
            return NotImplemented
        return (
            self.datum == other.datum
            and self.highest == other.highest
            and self.labels == other.labels
            and self.weights == other.weights
            and _normalized(self.F) == _normalized(other.F)
            and _normalized(self.E) == _normalized(other.E)
        )


def _normalized(tables: List[ActionTable]) -> List[Dict[Tuple[int, int], LaurentPoly]]:
    out = []
    for table in tables:
        flat: Dict[Tuple[int, int], LaurentPoly] = {}
        for col, entries in table.items():
            for row, c in entries:
                flat[(row, col)] = flat.get((row, col), LaurentPoly()) + c
        out.append({k: v for k, v in flat.items() if v})
    return out


class RelationReport(BaseModel):
    """Outcome of verify_module_relations."""

    passed: bool
    relation: Optional[str] = None
    detail: Optional[str] = None
    checked: List[str] = Field(default_factory=list)

    def raise_for_failure(self) -> None:
        if not self.passed:
            raise RelationViolation(self.relation or "unknown", self.detail or "")


def _basis_vector(idx: int) -> SparseVector:
    return {idx: LaurentPoly.one()}


def _power(m: ModuleRep, gen: Generator, i: int, n: int, vec: SparseVector) -> SparseVector:
    for _ in range(n):
        vec = m.act(gen, i, vec)
    return vec


def _combine(acc: SparseVector, vec: SparseVector, coeff: LaurentPoly) -> None:
    for k, v in vec.items():
        acc[k] = acc.get(k, LaurentPoly()) + coeff * v


def _nonzero(vec: SparseVector) -> bool:
    return any(v for v in vec.values())


def _check_weights(m: ModuleRep) -> Optional[str]:
    for i in m.datum.indices():
        alpha = m.datum.simple_root(i)
        for gen, sign in ((Generator.F, -1), (Generator.E, 1)):
            for col, entries in m.table(gen, i).items():
                if not 0 <= col < m.dim:
                    return f"{gen.value}{i} acts on missing basis index {col}"
                for row, _ in entries:
                    if not 0 <= row < m.dim:
                        return f"{gen.value}{i} maps {m.labels[col]} to missing index {row}"
                    if m.weights[row] != add_weights(m.weights[col], alpha, sign):
                        return (
                            f"{gen.value}{i} sends {m.labels[col]} of weight {m.weights[col]} "
                            f"to {m.labels[row]} of weight {m.weights[row]}"
                        )
    return None


def _check_height_order(m: ModuleRep) -> Optional[str]:
    if m.dim == 0:
        return "module has an empty basis"
    if m.weights[0] != m.highest:
        return f"basis index 0 has weight {m.weights[0]}, expected highest {m.highest}"
    previous = 0
    for idx in range(m.dim):
        coords = weight_to_root(m.datum, add_weights(m.highest, m.weights[idx], -1))
        if any(c.denominator != 1 or c < 0 for c in coords):
            return f"{m.labels[idx]} has weight {m.weights[idx]} not below the highest weight"
        h = int(sum(coords))
        if h < previous:
            return f"{m.labels[idx]} breaks the increasing height order"
        if idx > 0 and h == 0:
            return f"{m.labels[idx]} repeats the highest weight"
        previous = h
    for i in m.datum.indices():
        if _nonzero(m.act(Generator.E, i, _basis_vector(0))):
            return f"E{i} does not kill the highest weight vector"
    return None


def _check_commutator(m: ModuleRep) -> Optional[str]:
    datum = m.datum
    for idx in range(m.dim):
        v = _basis_vector(idx)
        for i in datum.indices():
            for j in datum.indices():
                lhs = m.act(Generator.E, i, m.act(Generator.F, j, v))
                rhs = m.act(Generator.F, j, m.act(Generator.E, i, v))
                diff: SparseVector = dict(lhs)
                _combine(diff, rhs, LaurentPoly.constant(-1))
                if i == j:
                    bracket = quantum_bracket(m.weights[idx][i - 1], datum.d[i - 1])
                    _combine(diff, v, -bracket)
                if _nonzero(diff):
                    return f"E{i}F{j} - F{j}E{i} on {m.labels[idx]}"
    return None


def _check_serre(m: ModuleRep, gen: Generator) -> Optional[str]:
    datum = m.datum
    for i in datum.indices():
        for j in datum.indices():
            if i == j:
                continue
            n = 1 - datum.cartan[j - 1][i - 1]
            d = datum.d[i - 1]
            for idx in range(m.dim):
                total: SparseVector = {}
                for k in range(n + 1):
                    vec = _power(m, gen, i, k, _basis_vector(idx))
                    vec = m.act(gen, j, vec)
                    vec = _power(m, gen, i, n - k, vec)
                    sign = -1 if k % 2 else 1
                    _combine(total, vec, q_binomial(n, k, d) * sign)
                if _nonzero(total):
                    return f"({gen.value}{i}, {gen.value}{j}) on {m.labels[idx]}"
    return None


def verify_module_relations(m: ModuleRep) -> RelationReport:
    """
    Check the defining relations of U_q(g) on every basis vector.

    Checks run in a fixed order and stop at the first failure:
    weight compatibility of E/F (the K-conjugation relations), the height
    ordering of the basis, the E-F commutator and both quantum Serre relations.

    Args:
        m: Module to check

    Returns:
        RelationReport naming the first violated relation, if any
    """
    checks = [
        ("K-conjugation", lambda: _check_weights(m)),
        ("height-order", lambda: _check_height_order(m)),
        ("commutator", lambda: _check_commutator(m)),
        ("serre-E", lambda: _check_serre(m, Generator.E)),
        ("serre-F", lambda: _check_serre(m, Generator.F)),
    ]
    checked: List[str] = []
    for name, check in checks:
        detail = check()
        checked.append(name)
        if detail is not None:
            logger.debug("relation %s violated: %s", name, detail)
            return RelationReport(passed=False, relation=name, detail=detail, checked=checked)
    return RelationReport(passed=True, checked=checked)


def sort_key(m: ModuleRep, idx: int) -> Tuple[int, Sequence[int], str]:
    """Canonical tie-break inside a height level: (height, weight coords, label)."""
    return (m.height_of(idx), m.weights[idx], m.labels[idx])


def reorder(m: ModuleRep, order: List[int]) -> ModuleRep:
    """Return the same module with basis ``order`` (new position -> old index)."""
    position = {old: new for new, old in enumerate(order)}

    def remap(table: ActionTable) -> ActionTable:
        return {
            position[col]: [(position[row], c) for row, c in entries]
            for col, entries in table.items()
        }

    return ModuleRep(
        datum=m.datum,
        highest=m.highest,
        labels=[m.labels[k] for k in order],
        weights=[m.weights[k] for k in order],
        F=[remap(t) for t in m.F],
        E=[remap(t) for t in m.E],
    )


def heights_non_decreasing(m: ModuleRep) -> bool:
    hs = [m.height_of(k) for k in range(m.dim)]
    return all(a <= b for a, b in zip(hs, hs[1:]))
