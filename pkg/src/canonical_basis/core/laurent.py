"""
Exact Laurent polynomials in Z[q, q^-1] and the quantum combinatorics built on them.
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from canonical_basis.core.errors import NonDivisible, ParseError

Scalar = Union[int, "LaurentPoly"]

_TERM_RE = re.compile(r"([+-]?)(\d+)?(\*?)(q(?:\^\(?(-?\d+)\)?)?)?")


class LaurentPoly:
    """
    An integer Laurent polynomial, stored sparsely as {exponent: coefficient}.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal. Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        clean: Dict[int, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    clean[int(exp)] = int(coeff)
        self._terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        """Return coeff * q^exp."""
        return cls({exp: coeff})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """
        Parse the textual form produced by render().

        Accepts terms such as ``q^2``, ``2*q^-1``, ``-q``, ``3``, joined by
        ``+`` or ``-``. Whitespace is ignored.

        Raises:
            ParseError: if the text is not a Laurent polynomial literal
        """
        s = re.sub(r"\s+", "", text)
        if s in ("", "0"):
            return cls()
        terms: Dict[int, int] = {}
        for token in re.split(r"(?<![\^(])(?=[+-])", s):
            if not token:
                continue
            m = _TERM_RE.fullmatch(token)
            if m is None or (m.group(2) is None and m.group(4) is None):
                raise ParseError(f"invalid Laurent polynomial term {token!r} in {text!r}")
            if m.group(3) and m.group(4) is None:
                raise ParseError(f"dangling '*' in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) is not None else 1
            if m.group(4) is None:
                exp = 0
            elif m.group(5) is None:
                exp = 1
            else:
                exp = int(m.group(5))
            terms[exp] = terms.get(exp, 0) + sign * coeff
        return cls(terms)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Highest exponent; raises ValueError on the zero polynomial."""
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def valuation(self) -> int:
        """Lowest exponent; raises ValueError on the zero polynomial."""
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def in_q_zq(self) -> bool:
        """True when every exponent is positive (the polynomial lies in qZ[q])."""
        return all(exp > 0 for exp in self._terms)

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def evaluate(self, x: Fraction) -> Fraction:
        """Evaluate at a nonzero rational point."""
        x = Fraction(x)
        return sum((Fraction(c) * x**e for e, c in self._terms.items()), Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other: Scalar) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in o._terms.items():
            out[exp] = out.get(exp, 0) + coeff
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The bar involution q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """
        Return c with c * other == self.

        Raises:
            ZeroDivisionError: if other is zero
            NonDivisible: if other does not divide self in Z[q, q^-1]
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        top = other.degree()
        span = top - other.valuation()
        lead = other._terms[top]
        quotient: Dict[int, int] = {}
        rem = self
        while not rem.is_zero():
            r_top = rem.degree()
            if r_top - rem.valuation() < span:
                raise NonDivisible(f"{other.render()} does not divide {self.render()}")
            r_lead = rem._terms[r_top]
            if r_lead % lead:
                raise NonDivisible(f"{other.render()} does not divide {self.render()}")
            t = LaurentPoly.monomial(r_top - top, r_lead // lead)
            quotient[r_top - top] = r_lead // lead
            rem = rem - t * other
        return LaurentPoly(quotient)

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def render(self) -> str:
        """Render as ``c*q^k`` terms joined by + or -, exponents descending."""
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in self.items():
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                power = "q" if exp == 1 else f"q^{exp}"
                body = power if mag == 1 else f"{mag}*{power}"
            if parts:
                parts.append(sign + body)
            else:
                parts.append(body if sign == "+" else "-" + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.render()}')"


def lp_arith(a: LaurentPoly, b: LaurentPoly, kind: str) -> LaurentPoly:
    """Dispatch one of add, sub, mul, neg (neg ignores b)."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "neg":
        return -a
    raise ValueError(f"unknown arithmetic kind: {kind}")


Q = LaurentPoly.monomial(1)


@lru_cache(maxsize=None)
def q_int(n: int, d: int = 1) -> LaurentPoly:
    """The quantum integer [n]_d = sum_{j<n} q^(d(-n+1+2j))."""
    if n < 0:
        raise ValueError(f"quantum integer needs n >= 0, got {n}")
    return LaurentPoly({d * (-n + 1 + 2 * j): 1 for j in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int, d: int = 1) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    out = LaurentPoly.one()
    for k in range(2, n + 1):
        out = out * q_int(k, d)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, d: int = 1) -> LaurentPoly:
    """Quantum binomial coefficient, computed by exact division of factorials."""
    if k < 0 or k > n:
        return LaurentPoly()
    return q_factorial(n, d).divide_exact(q_factorial(k, d) * q_factorial(n - k, d))


def quantum_bracket(m: int, d: int = 1) -> LaurentPoly:
    """(K - K^-1)/(q_i - q_i^-1) on a vector where K acts by q_i^m; equals [m]_d, odd in m."""
    return q_int(m, d) if m >= 0 else -q_int(-m, d)


def bar_symmetric_correction(z: LaurentPoly) -> LaurentPoly:
    """
    The unique bar-invariant xi with z + xi in qZ[q].

    Every term a_k q^k of z with k <= 0 contributes -a_k at exponents k and -k.
    """
    out: Dict[int, int] = {}
    for exp, coeff in z.items():
        if exp > 0:
            continue
        out[exp] = out.get(exp, 0) - coeff
        if exp < 0:
            out[-exp] = out.get(-exp, 0) - coeff
    return LaurentPoly(out)
