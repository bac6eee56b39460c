"""
Tensor products of modules under the comultiplication

    Delta(F_i) = F_i (x) 1 + K_i (x) F_i
    Delta(E_i) = E_i (x) K_i^-1 + 1 (x) E_i
    Delta(K_i) = K_i (x) K_i

together with divided powers, monomial application and the rank oracle
for weight multiplicities.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import sympy

from canonical_basis.core.errors import CanonicalBasisError
from canonical_basis.core.laurent import LaurentPoly, q_int
from canonical_basis.core.rootdata import (
    CartanDatum,
    RootVector,
    Weight,
    add_weights,
    root_to_weight,
)
from canonical_basis.crystal.littelmann import AdaptedMonomial
from canonical_basis.modules.rep import Generator, ModuleRep

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]

DEFAULT_ORACLE_POINTS = (Fraction(97, 13), Fraction(211, 17))


@dataclass
class TensorSpace:
    """V_1 (x) ... (x) V_r with multi-indices compared lexicographically."""

    factors: List[ModuleRep]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("a tensor space needs at least one factor")
        datum = self.factors[0].datum
        if any(f.datum != datum for f in self.factors):
            raise ValueError("all tensor factors must share one Cartan datum")

    @property
    def datum(self) -> CartanDatum:
        return self.factors[0].datum

    @property
    def arity(self) -> int:
        return len(self.factors)

    @cached_property
    def highest_weight(self) -> Weight:
        total: Weight = (0,) * self.datum.rank
        for f in self.factors:
            total = add_weights(total, f.highest)
        return total

    @property
    def highest_index(self) -> MultiIndex:
        return (0,) * self.arity

    def weight_of(self, index: Sequence[int]) -> Weight:
        total: Weight = (0,) * self.datum.rank
        for f, k in zip(self.factors, index):
            total = add_weights(total, f.weights[k])
        return total

    def indices(self) -> Iterator[MultiIndex]:
        return product(*(range(f.dim) for f in self.factors))

    def indices_of_weight(self, mu: Sequence[int]) -> List[MultiIndex]:
        mu = tuple(mu)
        return [idx for idx in self.indices() if self.weight_of(idx) == mu]

    def highest_vector(self) -> "TensorVector":
        return TensorVector(self, {self.highest_index: LaurentPoly.one()})


class TensorVector:
    """
    A sparse vector {multi-index: coefficient} of a single weight.

    Raises:
        ValueError: on construction, if the entries do not share one weight
    """

    __slots__ = ("space", "entries", "weight")

    def __init__(self, space: TensorSpace, entries: Optional[Mapping[MultiIndex, LaurentPoly]] = None):
        self.space = space
        self.entries: Dict[MultiIndex, LaurentPoly] = {
            tuple(k): v for k, v in (entries or {}).items() if v
        }
        weights = {space.weight_of(k) for k in self.entries}
        if len(weights) > 1:
            raise ValueError(f"tensor vector mixes weights {sorted(weights)}")
        self.weight: Optional[Weight] = weights.pop() if weights else None

    def is_zero(self) -> bool:
        return not self.entries

    def coefficient(self, index: Sequence[int]) -> LaurentPoly:
        return self.entries.get(tuple(index), LaurentPoly())

    def leading(self) -> MultiIndex:
        """The lexicographically largest index with a nonzero coefficient."""
        if not self.entries:
            raise ValueError("the zero vector has no leading index")
        return max(self.entries)

    def items_descending(self) -> List[Tuple[MultiIndex, LaurentPoly]]:
        return sorted(self.entries.items(), reverse=True)

    def scaled(self, c: LaurentPoly) -> "TensorVector":
        return TensorVector(self.space, {k: c * v for k, v in self.entries.items()})

    def plus(self, other: "TensorVector", c: LaurentPoly = LaurentPoly.one()) -> "TensorVector":
        """self + c * other."""
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, LaurentPoly()) + c * v
        return TensorVector(self.space, out)

    def divided(self, c: LaurentPoly) -> "TensorVector":
        """Exact division of every coefficient."""
        return TensorVector(self.space, {k: v.divide_exact(c) for k, v in self.entries.items()})

    def evaluate(self, x: Fraction) -> Dict[MultiIndex, Fraction]:
        return {k: v.evaluate(x) for k, v in self.entries.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        terms = " + ".join(f"({c.render()}){list(k)}" for k, c in self.items_descending())
        return f"TensorVector({terms or '0'})"


def _k_exponent(module: ModuleRep, i: int, k: int) -> int:
    return module.datum.d[i - 1] * module.weights[k][i - 1]


def tensor_act(space: TensorSpace, gen: Generator, i: int, v: TensorVector) -> TensorVector:
    """
    Act by E_i, F_i or K_i on a tensor vector.

    F_i acts at slot j with K_i on every earlier slot; E_i acts at slot j
    with K_i^-1 on every later slot; K_i acts diagonally.
    """
    space.datum._check_index(i)
    gen = Generator(gen)
    out: Dict[MultiIndex, LaurentPoly] = {}
    factors = space.factors
    for index, coeff in v.entries.items():
        exps = [_k_exponent(f, i, k) for f, k in zip(factors, index)]
        if gen is Generator.K:
            out[index] = out.get(index, LaurentPoly()) + coeff.shift(sum(exps))
            continue
        for j, (f, k) in enumerate(zip(factors, index)):
            images = f.act_basis(gen, i, k)
            if not images:
                continue
            if gen is Generator.F:
                shift = sum(exps[:j])
            else:
                shift = -sum(exps[j + 1 :])
            base = coeff.shift(shift)
            for row, c in images:
                target = index[:j] + (row,) + index[j + 1 :]
                out[target] = out.get(target, LaurentPoly()) + base * c
    return TensorVector(space, out)


def divided_power_F(space: TensorSpace, i: int, n: int, v: TensorVector) -> TensorVector:
    """
    F_i^{(n)} v, built as F_i^{(k)} = F_i F_i^{(k-1)} / [k]_{d_i} for k = 1..n.

    Raises:
        NonDivisible: never for vectors of the integral form
    """
    if n < 1:
        raise ValueError(f"divided power needs n >= 1, got {n}")
    d = space.datum.d[i - 1]
    out = v
    for k in range(1, n + 1):
        out = tensor_act(space, Generator.F, i, out)
        if k > 1:
            out = out.divided(q_int(k, d))
    return out


def apply_monomial(space: TensorSpace, monomial: AdaptedMonomial, v: TensorVector) -> TensorVector:
    """Apply F_{i1}^{(n1)} ... F_{ir}^{(nr)} to v, rightmost factor first."""
    out = v
    for i, n in monomial.application_order():
        out = divided_power_F(space, i, n, out)
    return out


def tensor_pair_less(space: TensorSpace, x: Sequence[int], y: Sequence[int]) -> bool:
    """
    The order on a two-factor tensor basis: v_i (x) v'_j < v_k (x) v'_l
    iff i < k, j > l and both have the same weight.
    """
    if space.arity != 2:
        raise ValueError("tensor_pair_less is defined on two-factor spaces")
    (i, j), (k, l) = tuple(x), tuple(y)
    return i < k and j > l and space.weight_of(x) == space.weight_of(y)


def rational_rank(vectors: Sequence[Dict[MultiIndex, Fraction]]) -> Tuple[int, List[int]]:
    """Rank and pivot positions of rational vectors, computed exactly with sympy."""
    if not vectors:
        return 0, []
    keys = sorted({k for vec in vectors for k in vec})
    if not keys:
        return 0, []
    row_of = {k: r for r, k in enumerate(keys)}
    M = sympy.zeros(len(keys), len(vectors))
    for c, vec in enumerate(vectors):
        for k, value in vec.items():
            if value:
                M[row_of[k], c] = sympy.Rational(value.numerator, value.denominator)
    _, pivots = M.rref()
    return len(pivots), list(pivots)


def _independent(vectors: List[TensorVector], points: Sequence[Fraction]) -> List[TensorVector]:
    first, second = points
    rank1, pivots1 = rational_rank([v.evaluate(first) for v in vectors])
    rank2, pivots2 = rational_rank([v.evaluate(second) for v in vectors])
    if rank1 != rank2:
        logger.warning(
            "rank oracle disagreement at q=%s (%d) and q=%s (%d); keeping the larger",
            first,
            rank1,
            second,
            rank2,
        )
    pivots = pivots1 if rank1 >= rank2 else pivots2
    return [vectors[p] for p in pivots]


@dataclass
class WeightSpaceOracle:
    """
    Spanning sets of the weight spaces of the submodule generated by the
    highest tensor vector, built F_j by F_j from lower heights.
    """

    space: TensorSpace
    points: Tuple[Fraction, Fraction] = DEFAULT_ORACLE_POINTS
    _bases: Dict[RootVector, List[TensorVector]] = field(default_factory=dict, repr=False)

    def basis(self, nu: Sequence[int]) -> List[TensorVector]:
        nu = tuple(nu)
        if any(c < 0 for c in nu):
            return []
        if nu in self._bases:
            return self._bases[nu]
        if not any(nu):
            result = [self.space.highest_vector()]
        else:
            candidates: List[TensorVector] = []
            for j, c in enumerate(nu, start=1):
                if c == 0:
                    continue
                lower = nu[: j - 1] + (c - 1,) + nu[j:]
                for x in self.basis(lower):
                    image = tensor_act(self.space, Generator.F, j, x)
                    if not image.is_zero():
                        candidates.append(image)
            result = _independent(candidates, self.points)
        self._bases[nu] = result
        return result

    def multiplicity(self, nu: Sequence[int]) -> int:
        return len(self.basis(nu))


def weight_multiplicity_oracle(
    space: TensorSpace,
    lam: Sequence[int],
    nu: Sequence[int],
    points: Tuple[Fraction, Fraction] = DEFAULT_ORACLE_POINTS,
    oracle: Optional[WeightSpaceOracle] = None,
) -> int:
    """
    Dimension of the lam - nu weight space of the submodule generated by the
    highest tensor vector, from exact ranks at two rational values of q.

    Raises:
        CanonicalBasisError: if lam is not the highest weight of the space
    """
    if tuple(lam) != space.highest_weight:
        raise CanonicalBasisError(
            f"weight {tuple(lam)} is not the highest weight {space.highest_weight} of the space"
        )
    if oracle is None:
        oracle = WeightSpaceOracle(space, points)
    return oracle.multiplicity(nu)


def target_weight(space: TensorSpace, nu: Sequence[int]) -> Weight:
    """lambda - nu in fundamental coordinates."""
    return add_weights(space.highest_weight, root_to_weight(space.datum, nu), -1)
