"""Double twist knots J(k,l) and once-punctured torus bundles M_n.

Defining equations and exact genus/gonality tables for the canonical
components of their character varieties.  ``Y0`` is the PSL(2,C)
component and ``X0`` the SL(2,C) component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import invariants
from .laurent import LaurentPoly2, MonomialMap, substitute_monomial
from .tracepoly import TracePoly, fib, g

__all__ = [
    "DomainError",
    "DtkParams",
    "OptbParams",
    "FamilyInvariants",
    "dtk_params",
    "optb_params",
    "dtk_defining_polynomial",
    "dtk_invariants",
    "DiagonalModel",
    "dtk_diagonal_model",
    "optb_invariants",
]


class DomainError(ValueError):
    """Parameters outside the range where the family results apply."""


def _b_sign(k: int, l: int) -> int:
    s = (-1) ** ((k + l) % 2)
    return s if s * k * l > 0 else 0


@dataclass(frozen=True)
class DtkParams:
    k: int
    l: int

    def __post_init__(self):
        if (self.k * self.l) % 2:
            raise DomainError(f"J({self.k},{self.l}) is a two-component link, not a knot")

    @property
    def m(self) -> int:
        return abs(self.k) // 2

    @property
    def n(self) -> int:
        return abs(self.l) // 2

    @property
    def b(self) -> int:
        return _b_sign(self.k, self.l)

    @property
    def hyperbolic(self) -> bool:
        return self.hyperbolicity_failure() is None

    def hyperbolicity_failure(self) -> Optional[str]:
        if abs(self.k) < 2 or abs(self.l) < 2:
            return f"J({self.k},{self.l}) is not hyperbolic: |k| or |l| is less than 2"
        if self.k == self.l and abs(self.k) == 2:
            return f"J({self.k},{self.l}) is the trefoil, which is not hyperbolic"
        return None

    def require_hyperbolic(self) -> None:
        reason = self.hyperbolicity_failure()
        if reason:
            raise DomainError(reason)

    def oriented(self) -> DtkParams:
        """Same knot with ``l`` even (``J(k,l)`` and ``J(l,k)`` are isotopic)."""
        if self.l % 2 and not self.k % 2:
            return DtkParams(self.l, self.k)
        return self


@dataclass(frozen=True)
class OptbParams:
    n: int

    @property
    def hyperbolic(self) -> bool:
        return abs(self.n) > 2

    def require_hyperbolic(self) -> None:
        if not self.hyperbolic:
            raise DomainError(f"M_{self.n} is not hyperbolic (need |n| > 2)")


def dtk_params(k: int, l: int) -> DtkParams:
    return DtkParams(k, l)


def optb_params(n: int) -> OptbParams:
    return OptbParams(n)


@dataclass(frozen=True)
class FamilyInvariants:
    """Exact genus and gonality of the canonical components.

    For torus bundles only the SL(2,C) fields are meaningful for genus;
    the PSL(2,C) component is rational.  ``asserted_for`` describes the
    parameter range on which the source results are stated.
    """

    genus_y: int
    genus_x: int
    gonality_y: int
    gonality_x: int
    bidegree: Optional[tuple[int, int]] = None
    b: Optional[int] = None
    asserted_for: str = ""
    notes: tuple[str, ...] = field(default_factory=tuple)


def _lift(p: TracePoly, variables: tuple[str, str], slot: int) -> LaurentPoly2:
    return p.to_laurent(variables, slot)


def dtk_defining_polynomial(params: DtkParams, variables: tuple[str, str] = ("r", "t")) -> LaurentPoly2:
    """Left minus right side of the birational model of ``Y0(k,l)`` in ``P^1 x P^1``.

    With ``l = 2n'``: ``g_{m'+1}(r) g_{n'}(t) - g_{m'}(r) g_{n'+1}(t)`` when
    ``k = 2m'`` and ``f_{m'+1}(r) g_{n'}(t) - f_{m'}(r) g_{n'+1}(t)`` when
    ``k = 2m'+1``.  For ``k = l`` the component is the diagonal ``r - t``.
    When only ``l`` is odd the roles are swapped internally and the result
    transposed back, so ``r`` always carries the ``k`` twist region.
    """
    params.require_hyperbolic()
    p = params.oriented()
    if p.k == p.l:
        r, t = LaurentPoly2.gens(variables)
        return r - t
    n1 = p.l // 2
    if p.k % 2 == 0:
        m1 = p.k // 2
        left_a, left_b = g(m1 + 1), g(m1)
    else:
        m1 = (p.k - 1) // 2
        left_a, left_b = fib(m1 + 1), fib(m1)
    eq = _lift(left_a, variables, 0) * _lift(g(n1), variables, 1) - _lift(left_b, variables, 0) * _lift(
        g(n1 + 1), variables, 1
    )
    if p is not params:
        # keep r attached to k so the bidegree reads (m, n)
        eq = substitute_monomial(eq, MonomialMap.from_columns((0, 1), (1, 0)))
    return eq


def dtk_invariants(params: DtkParams) -> FamilyInvariants:
    """Genus and gonality of ``Y0(k,l)`` and ``X0(k,l)`` for a hyperbolic ``J(k,l)``."""
    params.require_hyperbolic()
    m, n = params.m, params.n
    if params.k == params.l:
        return FamilyInvariants(
            genus_y=0,
            genus_x=n - 1,
            gonality_y=1,
            gonality_x=2,
            bidegree=(1, 1),
            b=params.b,
            asserted_for="hyperbolic J(k,k)",
        )
    gamma_y = invariants.bidegree_gonality(m, n)
    return FamilyInvariants(
        genus_y=(m - 1) * (n - 1),
        genus_x=3 * m * n - m - n - params.b,
        gonality_y=gamma_y,
        gonality_x=2 * gamma_y,
        bidegree=(m, n),
        b=params.b,
        asserted_for="hyperbolic J(k,l), k != l",
    )


@dataclass(frozen=True)
class DiagonalModel:
    """Hyperelliptic model ``w^2 = (r+2) f_{n'}(r)^2 - 1`` of ``X0(2n', 2n')``."""

    n_prime: int
    rhs: LaurentPoly2
    genus: int

    @property
    def degree(self) -> int:
        return self.rhs.degrees(0)[1]


def dtk_diagonal_model(n_prime: int) -> DiagonalModel:
    if abs(n_prime) <= 2:
        raise DomainError(f"diagonal model needs |n'| > 2, got {n_prime}")
    f = fib(n_prime).to_laurent(("r", "_"))
    r, _ = LaurentPoly2.gens(("r", "_"))
    rhs = ((r + 2) * f * f - 1).with_variables(("r", "w"))
    return DiagonalModel(n_prime, rhs, invariants.hyperelliptic_genus(rhs.degrees(0)[1]))


def _optb_genus(n: int) -> int:
    if n % 4 == 2:
        return (abs(n - 1) - 3) // 2
    return (abs(n - 1) - 1) // 2


def optb_invariants(params: OptbParams) -> FamilyInvariants:
    """Genus and gonality for the torus bundle ``M_n``.

    ``X0(M_n)`` is hyperelliptic of genus ``floor((|n-1|-1)/2)``, or
    ``floor((|n-1|-3)/2)`` when ``n = 2 mod 4``; the PSL(2,C) canonical
    component is rational.
    """
    params.require_hyperbolic()
    gx = _optb_genus(params.n)
    notes = []
    if abs(params.n) <= 6:
        notes.append("small |n|: some family statements are only asserted for |n| > 4 or |n| > 6")
    return FamilyInvariants(
        genus_y=0,
        genus_x=gx,
        gonality_y=1,
        gonality_x=1 if gx == 0 else 2,
        asserted_for="|n| > 2 (hyperelliptic statement for |n| > 6)",
        notes=tuple(notes),
    )
