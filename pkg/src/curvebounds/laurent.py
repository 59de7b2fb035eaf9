"""Exact Laurent polynomials in two variables.

A :class:`LaurentPoly2` is an immutable mapping from exponent pairs
``(a, b)`` to nonzero Python integers.  Monomial substitutions
``(x, y) -> (x^m11 y^m21, x^m12 y^m22)`` are represented by
:class:`MonomialMap`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly2",
    "MonomialMap",
    "add",
    "multiply",
    "substitute_monomial",
    "support",
    "parse_poly",
    "equal_up_to_unit",
]


def _grlex_key(exp: tuple[int, int]) -> tuple[int, int]:
    return (exp[0] + exp[1], exp[0])


class LaurentPoly2:
    """Laurent polynomial in two variables with integer coefficients."""

    __slots__ = ("_terms", "_vars", "_hash")

    def __init__(
        self,
        terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
        variables: tuple[str, str] = ("x", "y"),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (a, b), c in items:
            key = (int(a), int(b))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._vars = (str(variables[0]), str(variables[1]))
        self._hash = None

    # construction helpers

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1, variables=("x", "y")) -> LaurentPoly2:
        return cls({(a, b): coeff}, variables)

    @classmethod
    def constant(cls, c: int, variables=("x", "y")) -> LaurentPoly2:
        return cls({(0, 0): c}, variables)

    @classmethod
    def gens(cls, variables=("x", "y")) -> tuple[LaurentPoly2, LaurentPoly2]:
        return cls({(1, 0): 1}, variables), cls({(0, 1): 1}, variables)

    # read access

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    @property
    def variables(self) -> tuple[str, str]:
        return self._vars

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        """Terms in descending graded-lex order on the exponent pair."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def degrees(self, var: int) -> tuple[int, int]:
        """(min, max) exponent of variable ``var`` (0 or 1) over the support."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        exps = [e[var] for e in self._terms]
        return min(exps), max(exps)

    def bidegree(self) -> tuple[int, int]:
        """Exponent spread ``(max - min)`` in each variable."""
        lo0, hi0 = self.degrees(0)
        lo1, hi1 = self.degrees(1)
        return hi0 - lo0, hi1 - lo1

    def with_variables(self, variables: tuple[str, str]) -> LaurentPoly2:
        return LaurentPoly2(self._terms, variables)

    # ring structure

    def _coerce(self, other) -> LaurentPoly2:
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.constant(other, self._vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly2(out, self._vars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -v for k, v in self._terms.items()}, self._vars)

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
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly2(out, self._vars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible")
            ((a, b), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly2({(a * n, b * n): c ** (-n)}, self._vars)
        result = LaurentPoly2.constant(1, self._vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.constant(other, self._vars)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly2({str(self)!r})"

    def __str__(self):
        return format_poly(self)

    # substitution

    def compose(self, x_image: LaurentPoly2, y_image: LaurentPoly2) -> LaurentPoly2:
        """Substitute Laurent polynomials for both variables.

        Negative exponents require the corresponding image to be a unit
        monomial.
        """
        out = LaurentPoly2((), x_image.variables)
        cache: dict[tuple[int, int], LaurentPoly2] = {}

        def power(which: int, e: int) -> LaurentPoly2:
            if (which, e) not in cache:
                cache[(which, e)] = (x_image if which == 0 else y_image) ** e
            return cache[(which, e)]

        for (a, b), c in self._terms.items():
            out = out + power(0, a) * power(1, b) * c
        return out


@dataclass(frozen=True)
class MonomialMap:
    """Monomial substitution given by a 2x2 integer matrix.

    Column ``j`` is the exponent vector of the image of the ``j``-th
    variable: ``x -> x^m11 y^m21``, ``y -> x^m12 y^m22``.
    """

    m11: int
    m12: int
    m21: int
    m22: int

    @classmethod
    def from_columns(cls, col_x: tuple[int, int], col_y: tuple[int, int]) -> MonomialMap:
        return cls(col_x[0], col_y[0], col_x[1], col_y[1])

    @classmethod
    def identity(cls) -> MonomialMap:
        return cls(1, 0, 0, 1)

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.m11, self.m12), (self.m21, self.m22))

    @property
    def determinant(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def is_unimodular(self) -> bool:
        return self.determinant in (1, -1)

    def apply(self, exp: tuple[int, int]) -> tuple[int, int]:
        a, b = exp
        return (self.m11 * a + self.m12 * b, self.m21 * a + self.m22 * b)

    def inverse(self) -> MonomialMap:
        det = self.determinant
        if det not in (1, -1):
            raise ValueError(f"matrix with determinant {det} is not invertible over Z")
        return MonomialMap(self.m22 * det, -self.m12 * det, -self.m21 * det, self.m11 * det)

    def compose(self, other: MonomialMap) -> MonomialMap:
        """Matrix product ``self @ other`` (apply ``other`` first)."""
        return MonomialMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def to_json(self) -> list[list[int]]:
        return [[self.m11, self.m12], [self.m21, self.m22]]


def add(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p + q


def multiply(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p * q


def substitute_monomial(p: LaurentPoly2, m: MonomialMap) -> LaurentPoly2:
    """Replace each monomial ``x^a y^b`` by its image under ``m``."""
    if m.determinant == 0:
        raise ValueError("monomial map must have nonzero determinant")
    return LaurentPoly2(((m.apply(e), c) for e, c in p.terms.items()), p.variables)


def support(p: LaurentPoly2) -> set[tuple[int, int]]:
    return set(p.terms)


def content_monomial(p: LaurentPoly2) -> tuple[int, int]:
    """Exponent of the largest monomial dividing ``p`` in the polynomial sense."""
    if p.is_zero():
        return (0, 0)
    return (p.degrees(0)[0], p.degrees(1)[0])


def normalize_unit(p: LaurentPoly2) -> LaurentPoly2:
    """Shift ``p`` so its lowest exponents are zero and its leading coefficient is positive."""
    if p.is_zero():
        return p
    a0, b0 = content_monomial(p)
    shifted = LaurentPoly2({(a - a0, b - b0): c for (a, b), c in p.terms.items()}, p.variables)
    lead = shifted.sorted_terms()[0][1]
    return -shifted if lead < 0 else shifted


def equal_up_to_unit(p: LaurentPoly2, q: LaurentPoly2) -> bool:
    """True iff ``p = +-x^a y^b * q`` for some integers ``a, b``."""
    return normalize_unit(p).terms == normalize_unit(q).terms


# text form

def _format_monomial(a: int, b: int, names: tuple[str, str]) -> str:
    parts = []
    for e, name in ((a, names[0]), (b, names[1])):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: LaurentPoly2) -> str:
    """Render in descending graded-lex order, e.g. ``x^3*y^2 - 1``."""
    if p.is_zero():
        return "0"
    out = []
    for i, ((a, b), c) in enumerate(p.sorted_terms()):
        mono = _format_monomial(a, b, p.variables)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{mono}"
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


_TERM_SPLIT = re.compile(r"([+-])")


def parse_poly(text: str, variables: tuple[str, str] = ("x", "y")) -> LaurentPoly2:
    """Parse ``x^3*y^2 - 1``-style text.

    Exponents may be negative (``x^-2`` or ``x^(-2)``); ``*`` between a
    coefficient and variables is optional.  Raises ``ValueError`` on
    malformed input.
    """
    if re.search(r"\d\s+\d", text):
        raise ValueError(f"malformed polynomial: {text!r}")
    src = re.sub(r"\^\(([+-]?\d+)\)", r"^\1", text.replace(" ", ""))
    if not src:
        raise ValueError("empty polynomial")
    vx, vy = variables
    factor_re = re.compile(
        rf"(?P<num>\d+)|(?P<var>{re.escape(vx)}|{re.escape(vy)})(?:\^(?P<exp>[+-]?\d+))?"
    )
    # protect exponent signs from the term split
    protected = re.sub(r"\^([+-])", lambda m: "^" + ("P" if m.group(1) == "+" else "M"), src)
    pieces = _TERM_SPLIT.split(protected)
    terms: dict[tuple[int, int], int] = {}
    sign = 1
    pending_sign = False
    for piece in pieces:
        if piece in ("+", "-"):
            if pending_sign:
                raise ValueError(f"malformed polynomial: {text!r}")
            sign = 1 if piece == "+" else -1
            pending_sign = True
            continue
        if piece == "":
            continue
        piece = piece.replace("^P", "^+").replace("^M", "^-")
        coeff, a, b = 1, 0, 0
        pos = 0
        seen_num = False
        while pos < len(piece):
            if piece[pos] == "*":
                if pos == 0 or pos == len(piece) - 1 or piece[pos + 1] == "*":
                    raise ValueError(f"malformed polynomial: {text!r}")
                pos += 1
                continue
            m = factor_re.match(piece, pos)
            if not m:
                raise ValueError(f"unexpected character {piece[pos]!r} in {text!r}")
            if m.group("num") is not None:
                if seen_num:
                    raise ValueError(f"malformed polynomial: {text!r}")
                coeff *= int(m.group("num"))
                seen_num = True
            else:
                e = int(m.group("exp")) if m.group("exp") is not None else 1
                if m.group("var") == vx:
                    a += e
                else:
                    b += e
            pos = m.end()
        terms[(a, b)] = terms.get((a, b), 0) + sign * coeff
        sign = 1
        pending_sign = False
    if pending_sign:
        raise ValueError(f"dangling sign in {text!r}")
    return LaurentPoly2(terms, variables)
