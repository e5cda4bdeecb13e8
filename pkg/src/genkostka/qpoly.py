"""Exact Laurent polynomials in q with rational exponents, and q-binomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


def _exp(e):
    # keep integral exponents as int; Fraction(3) and 3 hash alike anyway
    if isinstance(e, int):
        return e
    e = Fraction(e)
    return e.numerator if e.denominator == 1 else e


class QPoly:
    """Finite sum of c * q^e, e rational, c a nonzero integer.

    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if c:
                    e = _exp(e)
                    c = clean.get(e, 0) + int(c)
                    if c:
                        clean[e] = c
                    else:
                        clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, e=0, c=1) -> "QPoly":
        return cls({e: c})

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs by ascending exponent."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, e) -> int:
        return self._terms.get(_exp(e), 0)

    def min_exp(self):
        return min(self._terms) if self._terms else None

    def max_exp(self):
        return max(self._terms) if self._terms else None

    def at_one(self) -> int:
        """Value at q = 1."""
        return sum(self._terms.values())

    def substitute_inverse_q(self) -> "QPoly":
        """p(1/q)."""
        return QPoly({-e: c for e, c in self._terms.items()})

    def shift(self, e) -> "QPoly":
        """q^e * p."""
        e = _exp(e)
        if e == 0:
            return self
        return QPoly({k + e: c for k, c in self._terms.items()})

    def integral(self) -> bool:
        return all(isinstance(e, int) for e in self._terms)

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = QPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # serialization

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                if e == 1:
                    qpart = "q"
                elif isinstance(e, int) and e > 0:
                    qpart = f"q^{e}"
                else:
                    qpart = f"q^({e})"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"QPoly({self.to_text()!r})"

    def to_json(self) -> list:
        """List of [num, den, coeff] triples, ascending exponent."""
        out = []
        for e, c in self.items():
            f = Fraction(e)
            out.append([f.numerator, f.denominator, c])
        return out

    @classmethod
    def from_json(cls, data) -> "QPoly":
        return cls({Fraction(n, d): c for n, d, c in data})


ZERO = QPoly()
ONE = QPoly.const(1)
Q = QPoly.monomial(1)


def qpow(e) -> QPoly:
    return QPoly.monomial(e)


@lru_cache(maxsize=None)
def _qbinom_coeffs(total: int, k: int) -> tuple:
    # Gaussian coefficients via [t; k] = q^k [t-1; k] + [t-1; k-1]
    if k == 0 or k == total:
        return (1,)
    a = _qbinom_coeffs(total - 1, k)
    b = _qbinom_coeffs(total - 1, k - 1)
    out = [0] * (k * (total - k) + 1)
    for i, c in enumerate(a):
        out[i + k] += c
    for i, c in enumerate(b):
        out[i] += c
    return tuple(out)


@lru_cache(maxsize=None)
def qbinom(total, k) -> QPoly:
    """Gaussian binomial [total; k]; zero unless 0 <= k <= total (integers)."""
    if isinstance(total, Rational) and not isinstance(total, int):
        if Fraction(total).denominator != 1:
            return ZERO
        total = int(total)
    if isinstance(k, Rational) and not isinstance(k, int):
        if Fraction(k).denominator != 1:
            return ZERO
        k = int(k)
    if k < 0 or total - k < 0:
        return ZERO
    return QPoly(enumerate(_qbinom_coeffs(total, k)))


def pochhammer(k: int, n: int) -> QPoly:
    """(q^k; q)_n = prod_{t<n} (1 - q^(k+t))."""
    out = ONE
    for t in range(n):
        out = out * (ONE - qpow(k + t))
    return out


def binom2(x: int) -> int:
    """x(x-1)/2 for any integer x."""
    return x * (x - 1) // 2
