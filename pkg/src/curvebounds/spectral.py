"""Eigenvalue and injectivity-radius bounds from gonality.

For a compact Riemann surface of genus ``g >= 2`` and gonality ``gamma``:
``lambda_1 * (g - 1) <= gamma`` and the injectivity radius is at most
``2 arccosh(gamma)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .families import DtkParams, OptbParams, dtk_invariants, optb_invariants

__all__ = [
    "SpectralBounds",
    "li_yau_bound",
    "hwang_to_bound",
    "spectral_bounds",
    "dtk_spectral",
    "optb_spectral",
    "optb_display_bounds",
    "REAL_TOLERANCE",
]

REAL_TOLERANCE = 1e-9


def decimal12(x: float | Fraction) -> str:
    return format(float(x), ".12g")


@dataclass(frozen=True)
class SpectralBounds:
    genus: int
    gonality: int
    lambda1_upper: Fraction
    injectivity_radius_upper: float

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("spectral bounds need genus >= 2")

    @property
    def lambda1_decimal(self) -> str:
        return decimal12(self.lambda1_upper)


def li_yau_bound(gamma: int, g: int) -> Fraction:
    """Upper bound ``gamma / (g - 1)`` on the first nonzero Laplace eigenvalue."""
    if g < 2:
        raise ValueError(
            f"genus {g} < 2: genus 0 curves are rational and genus 1 curves elliptic"
        )
    if gamma < 1:
        raise ValueError("gonality must be positive")
    return Fraction(gamma, g - 1)


def hwang_to_bound(gamma: int) -> float:
    """Upper bound ``2 arccosh(gamma)`` on the injectivity radius."""
    if gamma < 1:
        raise ValueError("gonality must be positive")
    if gamma == 1:
        return 0.0
    return 2.0 * math.acosh(gamma)


def spectral_bounds(gamma: int, g: int) -> SpectralBounds:
    return SpectralBounds(g, gamma, li_yau_bound(gamma, g), hwang_to_bound(gamma))


def _maybe(gamma: int, g: int) -> Optional[SpectralBounds]:
    return spectral_bounds(gamma, g) if g >= 2 else None


def dtk_spectral(params: DtkParams) -> dict[str, Optional[SpectralBounds]]:
    """Bounds for ``Y0`` and ``X0`` of ``J(k,l)``; ``None`` where the genus is below 2."""
    inv = dtk_invariants(params)
    return {
        "Y0": _maybe(inv.gonality_y, inv.genus_y),
        "X0": _maybe(inv.gonality_x, inv.genus_x),
    }


def optb_spectral(params: OptbParams) -> Optional[SpectralBounds]:
    inv = optb_invariants(params)
    return _maybe(inv.gonality_x, inv.genus_x)


def optb_display_bounds(n: int) -> dict[str, Optional[Fraction]]:
    """The two closed-form torus-bundle eigenvalue bounds, next to the genus-table one.

    ``floor_form`` is ``2 / floor((|n-2|-2)/2)`` and ``linear_form`` is
    ``4 / (|n-1|-3)``; both are quoted for ``|n| > 4``.  ``from_genus`` is
    ``li_yau_bound`` evaluated on the genus table.  The three do not agree
    at every ``n``; they are returned side by side, not reconciled.
    """
    floor_den = (abs(n - 2) - 2) // 2
    lin_den = abs(n - 1) - 3
    out: dict[str, Optional[Fraction]] = {
        "floor_form": Fraction(2, floor_den) if floor_den > 0 else None,
        "linear_form": Fraction(4, lin_den) if lin_den > 0 else None,
        "from_genus": None,
    }
    params = OptbParams(n)
    if params.hyperbolic:
        sb = optb_spectral(params)
        out["from_genus"] = sb.lambda1_upper if sb else None
    return out
