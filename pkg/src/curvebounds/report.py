"""Invariant reports: assembly from library calls, JSON and text rendering.

Every field carries a provenance tag:

* ``exact-theorem`` -- the value is pinned exactly by a proven result;
* ``upper-bound`` -- the value bounds the true invariant from above;
* ``consistency-check`` -- an independently computed cross-check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import families, filling, invariants, polygon, spectral, tracepoly
from .laurent import LaurentPoly2, substitute_monomial
from .spectral import decimal12

__all__ = [
    "Real",
    "ReportField",
    "InvariantReport",
    "emit_json",
    "parse_json",
    "render_text",
    "poly_report",
    "dtk_report",
    "optb_report",
    "fill_report",
    "fib_report",
    "spectral_report",
    "SCHEMA_VERSION",
]

SCHEMA_VERSION = 1
EXACT = "exact-theorem"
UPPER = "upper-bound"
CHECK = "consistency-check"
TAGS = (EXACT, UPPER, CHECK)


class Real(float):
    """Float rounded to 12 significant digits; serialized as a decimal string."""

    def __new__(cls, value):
        return super().__new__(cls, float(decimal12(value)))

    def __str__(self):
        return decimal12(self)

    __repr__ = __str__


def _type_of(value) -> str:
    if isinstance(value, bool):
        return "bool"
    if isinstance(value, int):
        return "int"
    if isinstance(value, Fraction):
        return "rational"
    if isinstance(value, float):
        return "real"
    if isinstance(value, str):
        return "str"
    if value is None:
        return "null"
    return "json"


@dataclass(frozen=True)
class ReportField:
    value: Any
    provenance: str
    source: str = ""

    def __post_init__(self):
        if self.provenance not in TAGS:
            raise ValueError(f"unknown provenance tag {self.provenance!r}")
        if isinstance(self.value, float) and not isinstance(self.value, Real):
            object.__setattr__(self, "value", Real(self.value))


@dataclass
class InvariantReport:
    subject: dict[str, Any]
    fields: dict[str, ReportField] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, value, provenance: str, source: str = "") -> None:
        if name in self.fields:
            raise KeyError(f"duplicate report field {name!r}")
        self.fields[name] = ReportField(value, provenance, source)

    def value(self, name: str):
        return self.fields[name].value


def _encode(value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, float):
        return decimal12(value)
    return value


def _decode(value, kind: str):
    if kind == "rational":
        return Fraction(value["num"], value["den"])
    if kind == "real":
        return Real(value)
    return value


def report_to_dict(report: InvariantReport) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "subject": report.subject,
        "fields": {k: _encode(f.value) for k, f in report.fields.items()},
        "provenance": {
            k: {"tag": f.provenance, "source": f.source, "type": _type_of(f.value)}
            for k, f in report.fields.items()
        },
        "notes": list(report.notes),
    }


def emit_json(report: InvariantReport) -> bytes:
    """Deterministic UTF-8 JSON: sorted keys, two-space indent, trailing newline."""
    text = json.dumps(report_to_dict(report), sort_keys=True, indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def parse_json(data: bytes | str) -> InvariantReport:
    raw = json.loads(data)
    if raw.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {raw.get('schema')!r}")
    fields = {}
    for name, prov in raw["provenance"].items():
        fields[name] = ReportField(_decode(raw["fields"][name], prov["type"]), prov["tag"], prov["source"])
    return InvariantReport(dict(raw["subject"]), fields, list(raw["notes"]))


def _fmt_value(value) -> str:
    if isinstance(value, Fraction):
        text = str(value)
        return text if value.denominator == 1 else f"{text} (~{decimal12(value)})"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value)
    return str(value)


def render_text(report: InvariantReport) -> str:
    head = ", ".join(f"{k}={v}" for k, v in report.subject.items())
    lines = [head]
    width = max((len(k) for k in report.fields), default=0)
    for name, f in report.fields.items():
        cite = f" [{f.source}]" if f.source else ""
        lines.append(f"  {name.ljust(width)}  {_fmt_value(f.value)}{cite}  ({f.provenance})")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


# builders

def _polygon_fields(report: InvariantReport, p: LaurentPoly2, prefix: str = "") -> None:
    poly = polygon.newton_polygon(p)
    kind = polygon.norm_curve_test(poly)
    interior = polygon.interior_lattice_points(poly)
    width, witness = polygon.lattice_width(poly)
    report.add(prefix + "newton_polygon", [list(v) for v in poly.vertices], EXACT, "convex hull of support")
    report.add(prefix + "polygon_dimension", kind, EXACT, "norm-curve test")
    report.add(prefix + "genus_bound", interior, UPPER, "Baker")
    if kind == polygon.TWO_DIMENSIONAL:
        report.add(prefix + "gonality_bound", width, UPPER, "Castryck-Cools")
    else:
        report.add(prefix + "lattice_width", width, CHECK, "lattice width")
    report.add(prefix + "width_direction", list(witness), CHECK, "lattice width")
    if kind == polygon.TWO_DIMENSIONAL:
        report.add(prefix + "pick_interior", polygon.pick_interior(poly), CHECK, "Pick")


def poly_report(p: LaurentPoly2) -> InvariantReport:
    report = InvariantReport({"kind": "polynomial", "polynomial": str(p)})
    report.add("bidegree", list(p.bidegree()), EXACT, "exponent spread")
    _polygon_fields(report, p)
    if report.value("polygon_dimension") != polygon.TWO_DIMENSIONAL:
        report.notes.append("Newton polygon has empty interior: each component has genus 0")
    return report


def _add_spectral(report: InvariantReport, suffix: str, sb: Optional[spectral.SpectralBounds]) -> None:
    if sb is None:
        report.notes.append(f"{suffix}: genus below 2, spectral bounds not defined")
        return
    report.add(f"lambda1_upper_{suffix}", sb.lambda1_upper, UPPER, "Li-Yau")
    report.add(f"injectivity_radius_upper_{suffix}", sb.injectivity_radius_upper, UPPER, "Hwang-To")


def dtk_report(k: int, l: int) -> InvariantReport:
    params = families.dtk_params(k, l)
    params.require_hyperbolic()
    inv = families.dtk_invariants(params)
    report = InvariantReport({"kind": "dtk", "k": k, "l": l})
    eq = families.dtk_defining_polynomial(params)
    report.add("defining_polynomial", str(eq), EXACT, "double twist model")
    report.add("m", params.m, EXACT, "floor(|k|/2)")
    report.add("n", params.n, EXACT, "floor(|l|/2)")
    report.add("b", params.b, EXACT, "double twist genus table")
    report.add("bidegree", list(inv.bidegree), EXACT, "double twist model")
    report.add("genus_Y0", inv.genus_y, EXACT, "double twist genus table")
    report.add("genus_X0", inv.genus_x, EXACT, "double twist genus table")
    report.add("gonality_Y0", inv.gonality_y, EXACT, "bidegree gonality")
    report.add("gonality_X0", inv.gonality_x, EXACT, "Castelnuovo-Severi")
    report.add("brill_noether_Y0", invariants.brill_noether(inv.genus_y), UPPER, "Brill-Noether")
    report.add("brill_noether_X0", invariants.brill_noether(inv.genus_x), UPPER, "Brill-Noether")
    if params.k != params.l:
        thr = invariants.castelnuovo_severi_threshold(inv.genus_x, inv.genus_y, 2)
        report.add("castelnuovo_severi_threshold", thr, CHECK, "Castelnuovo-Severi")
        _polygon_fields(report, eq, prefix="Y0_")
    else:
        n_prime = params.l // 2
        if abs(n_prime) > 2:
            model = families.dtk_diagonal_model(n_prime)
            report.add("hyperelliptic_model_rhs", str(model.rhs), EXACT, "diagonal hyperelliptic model")
            report.add("hyperelliptic_model_genus", model.genus, CHECK, "hyperelliptic genus")
    sb = spectral.dtk_spectral(params)
    _add_spectral(report, "Y0", sb["Y0"])
    _add_spectral(report, "X0", sb["X0"])
    return report


def optb_report(n: int) -> InvariantReport:
    params = families.optb_params(n)
    params.require_hyperbolic()
    inv = families.optb_invariants(params)
    report = InvariantReport({"kind": "optb", "n": n})
    slope = filling.Slope.of(-(n + 2), 1)
    report.add("filling_slope", str(slope), EXACT, "Whitehead link filling")
    report.add("height", filling.height(slope), EXACT, "naive height")
    report.add("genus_X0", inv.genus_x, EXACT, "torus bundle genus table")
    report.add("gonality_X0", inv.gonality_x, EXACT, "hyperelliptic")
    report.add("genus_Y0", inv.genus_y, EXACT, "rational PSL component")
    report.add("gonality_Y0", inv.gonality_y, EXACT, "rational PSL component")
    _add_spectral(report, "X0", spectral.optb_spectral(params))
    displays = spectral.optb_display_bounds(n)
    for key in ("floor_form", "linear_form"):
        if displays[key] is not None:
            report.add(f"lambda1_upper_X0_{key}", displays[key], UPPER, "closed-form eigenvalue bound")
    if displays["from_genus"] is not None:
        others = [displays[k] for k in ("floor_form", "linear_form") if displays[k] is not None]
        if any(o != displays["from_genus"] for o in others):
            report.notes.append("closed-form eigenvalue bounds differ from the genus-table bound at this n")
    report.notes.append(f"asserted for {inv.asserted_for}")
    report.notes.extend(inv.notes)
    return report


def fill_report(slope: filling.Slope, surface_degree: int = 1, isolated: bool = False) -> InvariantReport:
    report = InvariantReport({"kind": "slope", "slope": str(slope)})
    gens = filling.cr_polynomials(slope)
    phi = filling.normalization_map(slope)
    bounds = filling.bezout_bounds(surface_degree, slope, isolated)
    report.add("slope", str(slope), EXACT, "lowest terms")
    report.add("height", filling.height(slope), EXACT, "naive height")
    report.add("generators", [str(gp) for gp in gens], EXACT, "filling curve")
    report.add("map", phi.to_json(), EXACT, "unimodular monomial map")
    pullback = substitute_monomial(gens[0], phi.inverse())
    report.add("pullback", str(pullback), CHECK, "unimodular monomial map")
    report.add("trace_relation", str(tracepoly.filling_trace_relation(slope)), EXACT, "trace of M^p L^q")
    report.add("surface_degree", surface_degree, EXACT, "input")
    report.add("degree_bound", bounds.degree_bound, UPPER, "Bezout")
    report.add("genus_bound", bounds.genus_bound, UPPER, "genus-degree formula")
    if bounds.constant_bound_applies:
        report.add("constant_degree_bound_applies", True, CHECK, "geometric isolation")
        report.notes.append("isolated cusp: degree is also bounded by a constant independent of the slope")
    if slope.notice:
        report.notes.append(slope.notice)
    return report


def fib_report(kind: str, k: int) -> InvariantReport:
    poly = tracepoly.trace_poly(kind, k)
    report = InvariantReport({"kind": "trace_polynomial", "family": kind, "index": k})
    report.add("polynomial", str(poly), EXACT, "Fibonacci recurrence")
    report.add("coefficients", list(poly.coefficients), EXACT, "Fibonacci recurrence")
    report.add("degree", poly.degree, EXACT, "Fibonacci recurrence")
    report.add("closed_form_check", tracepoly.closed_form_check(kind, k), CHECK, "x = s + 1/s")
    return report


def spectral_report(gamma: int, g: int) -> InvariantReport:
    sb = spectral.spectral_bounds(gamma, g)
    report = InvariantReport({"kind": "spectral", "gonality": gamma, "genus": g})
    report.add("lambda1_upper", sb.lambda1_upper, UPPER, "Li-Yau")
    report.add("injectivity_radius_upper", sb.injectivity_radius_upper, UPPER, "Hwang-To")
    return report
