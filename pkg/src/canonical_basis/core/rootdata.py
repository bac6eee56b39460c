"""
Root data for finite Cartan types and the Weyl group machinery used by the path model.

Conventions:
    - simple indices are 1-based in every public function
    - weights are integer tuples in fundamental-weight coordinates
    - root vectors are tuples in simple-root coordinates
    - a Weyl group element is identified by its image w(rho) of rho = (1, ..., 1)
"""

import logging
import re
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, model_validator

from canonical_basis.core.errors import NotInOrbit, ParseError

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]
RootVector = Tuple[int, ...]
WeylWord = Tuple[int, ...]

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def _gram_matrix(letter: str, n: int) -> List[List[int]]:
    """Gram matrix (alpha_i, alpha_j) with short roots of squared length 2."""
    B = [[0] * n for _ in range(n)]

    def edge(i: int, j: int, value: int) -> None:
        B[i - 1][j - 1] = value
        B[j - 1][i - 1] = value

    if letter == "A":
        for i in range(1, n + 1):
            B[i - 1][i - 1] = 2
        for i in range(1, n):
            edge(i, i + 1, -1)
    elif letter == "B":
        for i in range(1, n):
            B[i - 1][i - 1] = 4
        B[n - 1][n - 1] = 2
        for i in range(1, n):
            edge(i, i + 1, -2)
    elif letter == "C":
        for i in range(1, n):
            B[i - 1][i - 1] = 2
        B[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            edge(i, i + 1, -1)
        edge(n - 1, n, -2)
    elif letter == "D":
        for i in range(1, n + 1):
            B[i - 1][i - 1] = 2
        for i in range(1, n - 1):
            edge(i, i + 1, -1)
        edge(n - 2, n, -1)
    elif letter == "E":
        for i in range(1, n + 1):
            B[i - 1][i - 1] = 2
        edge(1, 3, -1)
        edge(2, 4, -1)
        for i in range(3, n):
            edge(i, i + 1, -1)
    elif letter == "F":
        for i, v in enumerate((4, 4, 2, 2), start=1):
            B[i - 1][i - 1] = v
        edge(1, 2, -2)
        edge(2, 3, -2)
        edge(3, 4, -1)
    elif letter == "G":
        B[0][0] = 2
        B[1][1] = 6
        edge(1, 2, -3)
    return B


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class CartanDatum(BaseModel):
    """
    A finite Cartan datum.

    The matrix entry ``cartan[i][j]`` is <alpha_i, alpha_j^vee>, so row i is
    alpha_i written in fundamental-weight coordinates. ``d[i]`` is
    (alpha_i, alpha_i)/2.
    """

    model_config = ConfigDict(frozen=True)

    type_letter: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]

    @model_validator(mode="after")
    def validate_matrix(self) -> "CartanDatum":
        n = self.rank
        if len(self.cartan) != n or any(len(row) != n for row in self.cartan):
            raise ValueError("Cartan matrix must be rank x rank")
        if len(self.d) != n or any(x not in (1, 2, 3) for x in self.d):
            raise ValueError("symmetrizers must lie in {1, 2, 3}")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise ValueError(f"diagonal entry a_{i + 1}{i + 1} must be 2")
            for j in range(n):
                if i != j and self.cartan[i][j] > 0:
                    raise ValueError(f"off-diagonal entry a_{i + 1}{j + 1} must be <= 0")
                if self.d[j] * self.cartan[i][j] != self.d[i] * self.cartan[j][i]:
                    raise ValueError("Cartan matrix is not symmetrizable by d")
        return self

    @classmethod
    def from_type(cls, letter: str, rank: int) -> "CartanDatum":
        """Build the datum of a finite type with Bourbaki node numbering."""
        letter = letter.upper()
        if letter not in _VALID_RANKS or not _VALID_RANKS[letter](rank):
            raise ValueError(f"unsupported Cartan type {letter}{rank}")
        B = _gram_matrix(letter, rank)
        cartan = tuple(
            tuple(2 * B[i][j] // B[j][j] for j in range(rank)) for i in range(rank)
        )
        d = tuple(B[i][i] // 2 for i in range(rank))
        return cls(type_letter=letter, rank=rank, cartan=cartan, d=d)

    @classmethod
    def parse(cls, text: str) -> "CartanDatum":
        """Parse strings like ``A3`` or ``G2``."""
        m = _TYPE_RE.match(text)
        if not m:
            raise ParseError(f"invalid Cartan type: {text!r}")
        try:
            return cls.from_type(m.group(1), int(m.group(2)))
        except ValueError as e:
            raise ParseError(str(e)) from e

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    def indices(self) -> range:
        return range(1, self.rank + 1)

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental coordinates."""
        self._check_index(i)
        return self.cartan[i - 1]

    def fundamental_weight(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple index {i} out of range 1..{self.rank} for {self.name}")


def parse_weight(text: str) -> Weight:
    """Parse comma-separated integers such as ``2,1`` or ``-2,2``."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise ParseError(f"invalid weight: {text!r}") from e


def is_dominant(mu: Sequence[int]) -> bool:
    return all(m >= 0 for m in mu)


def rho(datum: CartanDatum) -> Weight:
    return (1,) * datum.rank


def add_weights(a: Sequence[int], b: Sequence[int], scale: int = 1) -> Weight:
    """a + scale * b."""
    return tuple(x + scale * y for x, y in zip(a, b))


def root_to_weight(datum: CartanDatum, nu: Sequence[int]) -> Weight:
    """Convert a root vector sum c_j alpha_j to fundamental coordinates."""
    out = [0] * datum.rank
    for j, c in enumerate(nu):
        if c:
            row = datum.cartan[j]
            for k in range(datum.rank):
                out[k] += c * row[k]
    return tuple(out)


@lru_cache(maxsize=None)
def _inverse_transpose(datum: CartanDatum) -> Tuple[Tuple[Fraction, ...], ...]:
    inv = sympy.Matrix(datum.cartan).T.inv()
    return tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(datum.rank))
        for i in range(datum.rank)
    )


def weight_to_root(datum: CartanDatum, mu: Sequence[int]) -> Tuple[Fraction, ...]:
    """Root coordinates of a weight (rational in general)."""
    inv = _inverse_transpose(datum)
    return tuple(sum((row[j] * mu[j] for j in range(datum.rank)), Fraction(0)) for row in inv)


def weight_to_root_vector(datum: CartanDatum, mu: Sequence[int]) -> RootVector:
    """Root coordinates of a weight in the root lattice; raises ValueError otherwise."""
    coords = weight_to_root(datum, mu)
    if any(c.denominator != 1 for c in coords):
        raise ValueError(f"weight {tuple(mu)} is not in the root lattice")
    return tuple(int(c) for c in coords)


def height(nu: Sequence[int]) -> int:
    return sum(nu)


def inner_product(datum: CartanDatum, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
    """The W-invariant form with (alpha, alpha) = 2 on short roots."""
    c = weight_to_root(datum, nu)
    return sum((mu[i] * datum.d[i] * c[i] for i in range(datum.rank)), Fraction(0))


def k_exponent(datum: CartanDatum, i: int, mu: Sequence[int]) -> int:
    """Exponent e with K_i v = q^e v on a vector of weight mu, e = (mu, alpha_i)."""
    return datum.d[i - 1] * mu[i - 1]


def simple_reflection_action(datum: CartanDatum, i: int, mu: Sequence[int]) -> Weight:
    """s_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
    datum._check_index(i)
    return add_weights(mu, datum.cartan[i - 1], -mu[i - 1])


def apply_word(datum: CartanDatum, word: Sequence[int], mu: Sequence[int]) -> Weight:
    """Act by s_{w1} s_{w2} ... s_{wk} on mu (rightmost letter first)."""
    out = tuple(mu)
    for i in reversed(word):
        out = simple_reflection_action(datum, i, out)
    return out


def word_to_element(datum: CartanDatum, word: Sequence[int]) -> Weight:
    return apply_word(datum, word, rho(datum))


def left_descents(key: Sequence[int]) -> List[int]:
    """Indices i with l(s_i w) < l(w), for the element with w(rho) = key."""
    return [i + 1 for i, c in enumerate(key) if c < 0]


def _reduced_word_of_element(datum: CartanDatum, key: Weight) -> WeylWord:
    letters: List[int] = []
    while True:
        descents = left_descents(key)
        if not descents:
            return tuple(letters)
        i = descents[0]
        letters.append(i)
        key = simple_reflection_action(datum, i, key)


def lex_min_reduced_word(datum: CartanDatum, w: Sequence[int]) -> WeylWord:
    """
    Return the lexicographically smallest reduced expression of the element w.

    Greedy: repeatedly emit the smallest left descent i and continue with s_i w.

    Args:
        datum: Cartan datum
        w: any word (not necessarily reduced) for the element

    Returns:
        The lex-min reduced word
    """
    return _reduced_word_of_element(datum, word_to_element(datum, w))


def word_length(datum: CartanDatum, w: Sequence[int]) -> int:
    return len(lex_min_reduced_word(datum, w))


def bruhat_leq(datum: CartanDatum, u: Sequence[int], w: Sequence[int]) -> bool:
    """
    Test u <=_B w with the subword property.

    Walks a fixed reduced word of w left to right. For the current letter s,
    u lies below s*w' exactly when min(u, s*u) lies below w'.
    """
    word = lex_min_reduced_word(datum, w)
    u_key = word_to_element(datum, u)
    u_len = len(_reduced_word_of_element(datum, u_key))
    if u_len > len(word):
        return False
    memo: Dict[Tuple[Weight, int], bool] = {}

    def leq(key: Weight, length: int, j: int) -> bool:
        if length == 0:
            return True
        if length > len(word) - j:
            return False
        cache_key = (key, j)
        if cache_key in memo:
            return memo[cache_key]
        s = word[j]
        if key[s - 1] < 0:
            result = leq(simple_reflection_action(datum, s, key), length - 1, j + 1)
        else:
            result = leq(key, length, j + 1)
        memo[cache_key] = result
        return result

    return leq(u_key, u_len, 0)


def bruhat_less(datum: CartanDatum, u: Sequence[int], w: Sequence[int]) -> bool:
    return word_to_element(datum, u) != word_to_element(datum, w) and bruhat_leq(datum, u, w)


def min_coset_rep(datum: CartanDatum, lam: Sequence[int], mu: Sequence[int]) -> WeylWord:
    """
    Minimal-length w with w(lam) = mu, as its lex-min reduced word.

    Raises:
        NotInOrbit: if mu is not in the Weyl orbit of lam
    """
    if len(lam) != datum.rank or len(mu) != datum.rank:
        raise ValueError("weight length does not match the rank")
    current = tuple(mu)
    applied: List[int] = []
    while True:
        negative = [i for i, c in enumerate(current) if c < 0]
        if not negative:
            break
        i = negative[0] + 1
        current = simple_reflection_action(datum, i, current)
        applied.append(i)
    if current != tuple(lam):
        raise NotInOrbit(f"{tuple(mu)} is not in the Weyl orbit of {tuple(lam)}")
    return lex_min_reduced_word(datum, applied)


@lru_cache(maxsize=None)
def positive_roots(datum: CartanDatum) -> Tuple[RootVector, ...]:
    """Positive roots in root coordinates, ordered by height then lex."""
    n = datum.rank
    simple = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            pairing = root_to_weight(datum, beta)
            for i in range(n):
                if beta == simple[i]:
                    continue
                p = 0
                lowered = list(beta)
                while True:
                    lowered[i] -= 1
                    if tuple(lowered) in roots:
                        p += 1
                    else:
                        break
                if p - pairing[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    up_t = tuple(up)
                    if up_t not in roots:
                        roots.add(up_t)
                        nxt.append(up_t)
        layer = nxt
    ordered = tuple(sorted(roots, key=lambda r: (sum(r), r)))
    logger.debug("%s has %d positive roots", datum.name, len(ordered))
    return ordered


def weyl_dim(datum: CartanDatum, lam: Sequence[int]) -> int:
    """Weyl dimension formula: product over positive roots of (lam+rho, a)/(rho, a)."""
    if not is_dominant(lam):
        raise ValueError(f"weyl_dim needs a dominant weight, got {tuple(lam)}")
    num = Fraction(1)
    for alpha in positive_roots(datum):
        top = sum((lam[j] + 1) * datum.d[j] * alpha[j] for j in range(datum.rank))
        bottom = sum(datum.d[j] * alpha[j] for j in range(datum.rank))
        num *= Fraction(top, bottom)
    if num.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {num}")
    return int(num)


def weyl_group_elements(datum: CartanDatum) -> List[WeylWord]:
    """All elements of W as lex-min reduced words, sorted by (length, word)."""
    start = rho(datum)
    seen = {start}
    queue = deque([start])
    while queue:
        key = queue.popleft()
        for i in datum.indices():
            nxt = simple_reflection_action(datum, i, key)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    words = [_reduced_word_of_element(datum, key) for key in seen]
    return sorted(words, key=lambda w: (len(w), w))


def format_word(word: Sequence[int]) -> str:
    """Render a Weyl word as ``s1s2s1`` (``e`` for the identity)."""
    return "".join(f"s{i}" for i in word) or "e"
