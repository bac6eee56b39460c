"""
The Littelmann path model: exact piecewise-linear paths, root operators,
path crystals and the adapted monomials read off from them.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from canonical_basis.core.errors import MalformedPath
from canonical_basis.core.rootdata import (
    CartanDatum,
    RootVector,
    Weight,
    WeylWord,
    add_weights,
    bruhat_less,
    format_word,
    is_dominant,
    min_coset_rep,
    simple_reflection_action,
    weight_to_root_vector,
)

logger = logging.getLogger(__name__)

Segment = Tuple[Weight, Fraction]


class Direction(str, Enum):
    """Which root operator to apply."""

    E = "e"
    F = "f"


def _canonical_segments(segments: Iterable[Tuple[Sequence[int], Fraction]]) -> Tuple[Segment, ...]:
    out: List[Segment] = []
    for direction, duration in segments:
        duration = Fraction(duration)
        if duration == 0:
            continue
        direction = tuple(direction)
        if out and out[-1][0] == direction:
            out[-1] = (direction, out[-1][1] + duration)
        else:
            out.append((direction, duration))
    return tuple(out)


@dataclass(frozen=True)
class LSPath:
    """
    A path t -> sum of direction * duration, starting at 0 and ending at t = 1.

    Directions are integral weights stored per unit time; durations are
    positive rationals summing to 1. Instances are kept in canonical form
    (no zero durations, no two equal adjacent directions), so equality of
    paths is equality of segment tuples.
    """

    segments: Tuple[Segment, ...]

    def __post_init__(self) -> None:
        if not self.segments:
            raise MalformedPath("a path needs at least one segment")
        if any(duration <= 0 for _, duration in self.segments):
            raise MalformedPath("segment durations must be positive")
        if sum(duration for _, duration in self.segments) != 1:
            raise MalformedPath("segment durations must sum to 1")

    @classmethod
    def from_segments(cls, segments: Iterable[Tuple[Sequence[int], Fraction]]) -> "LSPath":
        return cls(_canonical_segments(segments))

    @classmethod
    def straight(cls, lam: Sequence[int]) -> "LSPath":
        """The straight line path t -> t*lam."""
        return cls(((tuple(lam), Fraction(1)),))

    @property
    def first_direction(self) -> Weight:
        return self.segments[0][0]

    def endpoint(self) -> Weight:
        """pi(1), which must be an integral weight."""
        rank = len(self.segments[0][0])
        total = [Fraction(0)] * rank
        for direction, duration in self.segments:
            for k in range(rank):
                total[k] += direction[k] * duration
        if any(x.denominator != 1 for x in total):
            raise MalformedPath(f"endpoint {total} is not integral")
        return tuple(int(x) for x in total)

    def heights(self, i: int) -> List[Fraction]:
        """Values of <pi(t), alpha_i^vee> at the breakpoints t_0 = 0 < t_1 < ... < t_k = 1."""
        values = [Fraction(0)]
        for direction, duration in self.segments:
            values.append(values[-1] + direction[i - 1] * duration)
        return values

    def render(self) -> str:
        parts = []
        for direction, duration in self.segments:
            coords = ",".join(str(x) for x in direction)
            parts.append(f"[({coords}), {duration}]")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _split(segments: List[Segment], index: int, offset: Fraction) -> None:
    """Split segments[index] in place after ``offset`` time units (0 < offset < duration)."""
    direction, duration = segments[index]
    segments[index : index + 1] = [(direction, offset), (direction, duration - offset)]


def _reflect(datum: CartanDatum, segments: List[Segment], i: int, start: int, stop: int) -> None:
    for k in range(start, stop):
        direction, duration = segments[k]
        segments[k] = (simple_reflection_action(datum, i, direction), duration)


def _apply_f(datum: CartanDatum, path: LSPath, i: int) -> Optional[LSPath]:
    h = path.heights(i)
    m = min(h)
    if h[-1] - m < 1:
        return None
    segments = list(path.segments)
    k0 = max(k for k, value in enumerate(h) if value == m)
    target = m + 1
    # first segment after t0 on which h reaches m + 1
    j = k0 + 1
    while h[j] < target:
        j += 1
    slope = segments[j - 1][0][i - 1]
    offset = (target - h[j - 1]) / slope
    stop = j
    if offset < segments[j - 1][1]:
        _split(segments, j - 1, offset)
    _reflect(datum, segments, i, k0, stop)
    return LSPath.from_segments(segments)


def _apply_e(datum: CartanDatum, path: LSPath, i: int) -> Optional[LSPath]:
    h = path.heights(i)
    m = min(h)
    if m > -1:
        return None
    segments = list(path.segments)
    k1 = min(k for k, value in enumerate(h) if value == m)
    target = m + 1
    # last segment before t1 on which h leaves m + 1
    j = k1
    while h[j - 1] < target:
        j -= 1
    slope = segments[j - 1][0][i - 1]
    offset = (target - h[j - 1]) / slope
    start = j - 1
    if offset > 0:
        _split(segments, j - 1, offset)
        start += 1
        k1 += 1
    _reflect(datum, segments, i, start, k1)
    return LSPath.from_segments(segments)


def root_operator(
    datum: CartanDatum, path: LSPath, i: int, direction: Direction
) -> Optional[LSPath]:
    """
    Apply e_i or f_i to a path.

    With h(t) = <pi(t), alpha_i^vee> and m its minimum, f_i reflects the
    stretch between the last time h = m and the next time h = m + 1, and is
    defined only when h(1) - m >= 1. e_i reflects the stretch between the
    last time h = m + 1 before the first minimum and that minimum, and is
    defined only when m <= -1.

    Args:
        datum: Cartan datum
        path: path in some path crystal
        i: 1-based simple index
        direction: Direction.E or Direction.F

    Returns:
        The new path, or None where the operator is zero
    """
    datum._check_index(i)
    if Direction(direction) is Direction.F:
        return _apply_f(datum, path, i)
    return _apply_e(datum, path, i)


def apply_f_sequence(datum: CartanDatum, path: LSPath, letters: Sequence[int]) -> Optional[LSPath]:
    """Apply f_{l1}, then f_{l2}, ... in the order given."""
    current: Optional[LSPath] = path
    for i in letters:
        if current is None:
            return None
        current = root_operator(datum, current, i, Direction.F)
    return current


@dataclass(frozen=True)
class AdaptedMonomial:
    """
    F_{i1}^{(n1)} ... F_{ir}^{(nr)}, written left to right.

    ``factors`` lists (i_k, n_k) left to right, so the rightmost factor acts
    first on a vector. ``phi`` is the word along which the exponents were
    peeled and ``eta`` the exponent sequence (empty for the identity).
    """

    factors: Tuple[Tuple[int, int], ...]
    phi: WeylWord = ()
    eta: Tuple[int, ...] = ()

    def root_weight(self, rank: int) -> RootVector:
        """nu = sum n_k alpha_{i_k} in root coordinates."""
        out = [0] * rank
        for i, n in self.factors:
            out[i - 1] += n
        return tuple(out)

    def application_order(self) -> List[Tuple[int, int]]:
        return list(reversed(self.factors))

    def render(self) -> str:
        if not self.factors:
            return "1"
        return "".join(f"F{i}" if n == 1 else f"F{i}^({n})" for i, n in self.factors)

    def __str__(self) -> str:
        return self.render()


def first_direction_phi(datum: CartanDatum, lam: Sequence[int], path: LSPath) -> WeylWord:
    """Minimal w with w(lam) equal to the first direction of the path."""
    return min_coset_rep(datum, lam, path.first_direction)


def adapted_monomial(datum: CartanDatum, lam: Sequence[int], path: LSPath) -> AdaptedMonomial:
    """
    Peel maximal e-powers along the lex-min reduced word of phi(path).

    Raises:
        MalformedPath: if peeling does not end at the straight path to lam
    """
    phi = first_direction_phi(datum, lam, path)
    current = path
    eta: List[int] = []
    for i in phi:
        n = 0
        while True:
            nxt = root_operator(datum, current, i, Direction.E)
            if nxt is None:
                break
            current = nxt
            n += 1
        eta.append(n)
    if current != LSPath.straight(lam):
        raise MalformedPath(
            f"peeling {path} along {format_word(phi)} ended at {current}, not at the straight path"
        )
    factors = tuple((i, n) for i, n in zip(phi, eta) if n > 0)
    return AdaptedMonomial(factors=factors, phi=phi, eta=tuple(eta))


def monomial_order_less(datum: CartanDatum, a: AdaptedMonomial, b: AdaptedMonomial) -> bool:
    """a < b: phi(a) strictly below phi(b) in Bruhat order, or equal phi and eta(a) >lex eta(b)."""
    if a.phi != b.phi:
        return bruhat_less(datum, a.phi, b.phi)
    return a.eta > b.eta


def path_order_less(datum: CartanDatum, lam: Sequence[int], p: LSPath, s: LSPath) -> bool:
    """The partial order on paths of one weight; incomparable pairs give False both ways."""
    if p.endpoint() != s.endpoint():
        return False
    return monomial_order_less(
        datum, adapted_monomial(datum, lam, p), adapted_monomial(datum, lam, s)
    )


@dataclass
class PathCrystal:
    """
    The crystal graph generated from the straight path by the f-operators.

    Vertices are indexed in breadth-first discovery order; vertex 0 is the
    highest path. ``edges[(v, i)]`` is the index of f_i applied to vertex v.
    """

    datum: CartanDatum
    highest_weight: Weight
    vertices: List[LSPath] = field(default_factory=list)
    edges: Dict[Tuple[int, int], int] = field(default_factory=dict)
    highest: int = 0
    _index: Dict[LSPath, int] = field(default_factory=dict, repr=False)
    _monomials: Dict[int, AdaptedMonomial] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def index_of(self, path: LSPath) -> int:
        try:
            return self._index[path]
        except KeyError:
            raise MalformedPath(f"path {path} is not in this crystal") from None

    def add(self, path: LSPath) -> Tuple[int, bool]:
        if path in self._index:
            return self._index[path], False
        self._index[path] = len(self.vertices)
        self.vertices.append(path)
        return len(self.vertices) - 1, True

    def f(self, v: int, i: int) -> Optional[int]:
        return self.edges.get((v, i))

    def endpoint(self, v: int) -> Weight:
        return self.vertices[v].endpoint()

    def root_weight(self, v: int) -> RootVector:
        """nu with endpoint = lambda - nu, in root coordinates."""
        diff = add_weights(self.highest_weight, self.endpoint(v), -1)
        return weight_to_root_vector(self.datum, diff)

    def monomial(self, v: int) -> AdaptedMonomial:
        if v not in self._monomials:
            self._monomials[v] = adapted_monomial(
                self.datum, self.highest_weight, self.vertices[v]
            )
        return self._monomials[v]

    def vertices_of_weight(self, nu: Sequence[int]) -> List[int]:
        nu = tuple(nu)
        return [v for v in range(len(self.vertices)) if self.root_weight(v) == nu]

    def weights(self) -> Dict[RootVector, List[int]]:
        """Vertices grouped by root weight nu, in discovery order."""
        grouped: Dict[RootVector, List[int]] = {}
        for v in range(len(self.vertices)):
            grouped.setdefault(self.root_weight(v), []).append(v)
        return grouped


def generate_crystal(
    datum: CartanDatum, lam: Sequence[int], max_height: Optional[int] = None
) -> PathCrystal:
    """
    Breadth-first closure of the straight path under all f_i.

    Args:
        datum: Cartan datum
        lam: dominant weight
        max_height: optionally stop at vertices whose weight nu has this height

    Returns:
        PathCrystal with vertex 0 the straight path
    """
    lam = tuple(lam)
    if len(lam) != datum.rank:
        raise ValueError(f"weight {lam} has wrong length for {datum.name}")
    if not is_dominant(lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    crystal = PathCrystal(datum=datum, highest_weight=lam)
    crystal.add(LSPath.straight(lam))
    queue = deque([(0, 0)])
    while queue:
        v, depth = queue.popleft()
        if max_height is not None and depth >= max_height:
            continue
        for i in datum.indices():
            image = root_operator(datum, crystal.vertices[v], i, Direction.F)
            if image is None:
                continue
            w, new = crystal.add(image)
            crystal.edges[(v, i)] = w
            if new:
                queue.append((w, depth + 1))
    logger.debug(
        "path crystal of %s for %s: %d vertices, %d edges",
        datum.name,
        lam,
        len(crystal.vertices),
        len(crystal.edges),
    )
    return crystal
