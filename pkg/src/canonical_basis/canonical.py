"""
Canonical basis of V(lambda) inside a tensor product of fundamental modules.

For each path pi of weight nu the monomial vector F_pi v_lambda is computed
and corrected by bar-invariant multiples of the already computed elements of
the block, processed in a linear extension of the path order.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from canonical_basis.core.errors import NotTriangular
from canonical_basis.core.laurent import LaurentPoly, bar_symmetric_correction, q_int
from canonical_basis.core.rootdata import (
    CartanDatum,
    RootVector,
    Weight,
    WeylWord,
    height,
)
from canonical_basis.crystal.littelmann import (
    AdaptedMonomial,
    PathCrystal,
    generate_crystal,
    monomial_order_less,
)
from canonical_basis.modules.builders import ModuleKey, decompose_highest, fundamental_module
from canonical_basis.modules.rep import Generator, ModuleRep
from canonical_basis.modules.tensor import (
    MultiIndex,
    TensorSpace,
    TensorVector,
    rational_rank,
    tensor_act,
)

logger = logging.getLogger(__name__)

Factors = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class CanonicalElement:
    """G_lambda(b_pi) with the label of its path."""

    vertex: int
    monomial: AdaptedMonomial
    vector: TensorVector
    leading: MultiIndex

    @property
    def phi(self) -> WeylWord:
        return self.monomial.phi

    @property
    def eta(self) -> Tuple[int, ...]:
        return self.monomial.eta


@dataclass(frozen=True)
class Correction:
    """One step of the triangular sweep: X += xi * G where G has leading index ``against``."""

    against: MultiIndex
    vertex: int
    xi: LaurentPoly


@dataclass
class WeightBlock:
    """All canonical basis elements of weight lambda - nu."""

    lam: Weight
    fundamentals: List[Weight]
    nu: RootVector
    elements: List[CanonicalElement] = field(default_factory=list)
    corrections: Dict[int, List[Correction]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.elements)

    def by_vertex(self, vertex: int) -> CanonicalElement:
        for element in self.elements:
            if element.vertex == vertex:
                return element
        raise KeyError(f"vertex {vertex} is not in this block")


class MonomialCache:
    """
    Monomial vectors keyed by their factor sequence.

    F_{i1}^{(n1)} F_{i2}^{(n2)} ... v is one F_{i1} action and one exact
    division by [n1] away from the vector of the truncated monomial
    F_{i1}^{(n1-1)} F_{i2}^{(n2)} ..., so shared suffixes are computed once.
    """

    def __init__(self, space: TensorSpace):
        self.space = space
        self._vectors: Dict[Factors, TensorVector] = {(): space.highest_vector()}

    def __len__(self) -> int:
        return len(self._vectors)

    def vector(self, factors: Factors) -> TensorVector:
        pending = []
        key = factors
        while key not in self._vectors:
            pending.append(key)
            i, n = key[0]
            key = ((i, n - 1),) + key[1:] if n > 1 else key[1:]
        for key in reversed(pending):
            i, n = key[0]
            rest = ((i, n - 1),) + key[1:] if n > 1 else key[1:]
            image = tensor_act(self.space, Generator.F, i, self._vectors[rest])
            if n > 1:
                image = image.divided(q_int(n, self.space.datum.d[i - 1]))
            self._vectors[key] = image
        return self._vectors[factors]


def monomial_vector(
    space: TensorSpace,
    crystal: PathCrystal,
    vertex: int,
    cache: Optional[MonomialCache] = None,
) -> TensorVector:
    """
    F_pi v_lambda for the path at ``vertex`` of the crystal.

    Args:
        space: tensor product realizing lambda
        crystal: path crystal of lambda
        vertex: path index
        cache: per-block cache of monomial vectors

    Returns:
        The monomial vector as a TensorVector
    """
    if cache is None:
        cache = MonomialCache(space)
    return cache.vector(crystal.monomial(vertex).factors)


def check_canonical_form(vector: TensorVector) -> MultiIndex:
    """
    Return the leading index after checking the canonical shape: coefficient 1
    at the lex-largest index and coefficients in qZ[q] everywhere else.

    Raises:
        NotTriangular: if the vector does not have that shape
    """
    if vector.is_zero():
        raise NotTriangular("reduction produced the zero vector")
    lead = vector.leading()
    if vector.coefficient(lead) != LaurentPoly.one():
        raise NotTriangular(
            f"leading coefficient at {list(lead)} is {vector.coefficient(lead).render()}, not 1"
        )
    for index, coeff in vector.entries.items():
        if index != lead and not coeff.in_q_zq():
            raise NotTriangular(f"coefficient {coeff.render()} at {list(index)} is not in qZ[q]")
    return lead


def triangular_reduce(
    X: TensorVector, computed: Sequence[CanonicalElement]
) -> Tuple[TensorVector, List[Correction]]:
    """
    Correct X by bar-invariant multiples of the computed elements.

    Elements are visited by strictly decreasing leading index; for each, the
    current coefficient zeta of its leading index in X is read and
    bar_symmetric_correction(zeta) times the element is added.

    Args:
        X: a monomial vector F_pi v_lambda
        computed: previously computed elements of the same block

    Returns:
        The corrected vector and the corrections applied, in sweep order

    Raises:
        NotTriangular: if the result is not of canonical form
    """
    ordered = sorted(computed, key=lambda g: g.leading, reverse=True)
    corrections: List[Correction] = []
    for g in ordered:
        zeta = X.coefficient(g.leading)
        xi = bar_symmetric_correction(zeta)
        if xi:
            X = X.plus(g.vector, xi)
        corrections.append(Correction(against=g.leading, vertex=g.vertex, xi=xi))
    check_canonical_form(X)
    return X, corrections


def linear_extension(
    datum: CartanDatum,
    vertices: Sequence[int],
    monomials: Mapping[int, AdaptedMonomial],
    seed: Optional[int] = None,
) -> List[int]:
    """
    Order vertices so that every path comes after all smaller ones.

    Without a seed, ties go to eta descending, then phi ascending. With a
    seed, a random available vertex is taken at each step.
    """
    vertices = list(vertices)
    below: Dict[int, set] = {v: set() for v in vertices}
    for a in vertices:
        for b in vertices:
            if a != b and monomial_order_less(datum, monomials[a], monomials[b]):
                below[b].add(a)
    rng = random.Random(seed) if seed is not None else None
    done: List[int] = []
    remaining = set(vertices)
    while remaining:
        available = [v for v in vertices if v in remaining and not (below[v] & remaining)]
        if not available:
            raise NotTriangular("path order has a cycle")
        if rng is not None:
            choice = rng.choice(available)
        else:
            available.sort(key=lambda v: monomials[v].phi)
            available.sort(key=lambda v: monomials[v].eta, reverse=True)
            choice = available[0]
        done.append(choice)
        remaining.discard(choice)
    return done


def build_space(
    datum: CartanDatum,
    fundamentals: Sequence[Sequence[int]],
    overrides: Optional[Mapping[ModuleKey, ModuleRep]] = None,
) -> TensorSpace:
    return TensorSpace([fundamental_module(datum, w, overrides) for w in fundamentals])


def canonical_block(
    datum: CartanDatum,
    fundamentals: Sequence[Sequence[int]],
    nu: Sequence[int],
    *,
    space: Optional[TensorSpace] = None,
    crystal: Optional[PathCrystal] = None,
    overrides: Optional[Mapping[ModuleKey, ModuleRep]] = None,
    seed: Optional[int] = None,
) -> WeightBlock:
    """
    Compute every canonical basis element of weight lambda - nu.

    Args:
        datum: Cartan datum
        fundamentals: fundamental weights whose sum is lambda, in tensor order
        nu: root vector
        space: prebuilt tensor space (built from ``fundamentals`` otherwise)
        crystal: prebuilt path crystal of lambda covering height(nu)
        overrides: modules loaded from files
        seed: process paths in a random linear extension instead of the
            deterministic one

    Returns:
        WeightBlock with elements in processing order

    Raises:
        NotTriangular: if a reduction fails or two elements share a leading index
    """
    nu = tuple(nu)
    if space is None:
        space = build_space(datum, fundamentals, overrides)
    lam = space.highest_weight
    if crystal is None:
        crystal = generate_crystal(datum, lam, max_height=height(nu))
    vertices = crystal.vertices_of_weight(nu)
    monomials = {v: crystal.monomial(v) for v in vertices}
    order = linear_extension(datum, vertices, monomials, seed)

    block = WeightBlock(lam=lam, fundamentals=[tuple(w) for w in fundamentals], nu=nu)
    cache = MonomialCache(space)
    for v in order:
        X = cache.vector(monomials[v].factors)
        vector, corrections = triangular_reduce(X, block.elements)
        element = CanonicalElement(
            vertex=v, monomial=monomials[v], vector=vector, leading=vector.leading()
        )
        block.elements.append(element)
        block.corrections[v] = corrections
    leads = [e.leading for e in block.elements]
    if len(set(leads)) != len(leads):
        raise NotTriangular(f"repeated leading index in block nu={list(nu)}")
    logger.debug(
        "block nu=%s: %d elements, %d cached monomial vectors", list(nu), len(block), len(cache)
    )
    return block


def full_basis(
    datum: CartanDatum,
    fundamentals: Sequence[Sequence[int]],
    max_height: Optional[int] = None,
    *,
    overrides: Optional[Mapping[ModuleKey, ModuleRep]] = None,
    workers: int = 1,
) -> List[WeightBlock]:
    """
    Blocks for every weight of the path crystal up to ``max_height``.

    Blocks are independent and may be computed on ``workers`` threads; the
    result is ordered by (height(nu), nu) regardless.
    """
    space = build_space(datum, fundamentals, overrides)
    crystal = generate_crystal(datum, space.highest_weight, max_height=max_height)
    weights = sorted(crystal.weights(), key=lambda nu: (height(nu), nu))
    for v in range(len(crystal)):
        crystal.monomial(v)

    def run(nu: RootVector) -> WeightBlock:
        return canonical_block(datum, fundamentals, nu, space=space, crystal=crystal)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, weights))
    return [run(nu) for nu in weights]


def transition_matrix(
    block: WeightBlock, space: TensorSpace
) -> Dict[int, Dict[int, LaurentPoly]]:
    """
    Express every F_pi v_lambda of the block in the computed canonical basis.

    Returns:
        {pi: {sigma: zeta}} with F_pi v = sum zeta G(b_sigma)

    Raises:
        NotTriangular: if some monomial vector is not in the span of the block
    """
    cache = MonomialCache(space)
    ordered = sorted(block.elements, key=lambda g: g.leading, reverse=True)
    out: Dict[int, Dict[int, LaurentPoly]] = {}
    for element in block.elements:
        residual = cache.vector(element.monomial.factors)
        row: Dict[int, LaurentPoly] = {}
        for g in ordered:
            c = residual.coefficient(g.leading)
            if c:
                row[g.vertex] = c
                residual = residual.plus(g.vector, -c)
        if not residual.is_zero():
            raise NotTriangular(f"F_pi v for vertex {element.vertex} is not in the block span")
        out[element.vertex] = row
    return out


def monomial_basis_rank(
    block: WeightBlock, space: TensorSpace, point: Fraction = Fraction(97, 13)
) -> int:
    """Rank of the monomial vectors of a block at a rational value of q."""
    cache = MonomialCache(space)
    vectors = [cache.vector(e.monomial.factors).evaluate(point) for e in block.elements]
    rank, _ = rational_rank(vectors)
    return rank
