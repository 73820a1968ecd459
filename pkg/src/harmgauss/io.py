"""JSON encodings for polynomials, surfaces and Weierstrass data.

Rationals are strings ``"num/den"``. A bivariate polynomial is a list of
``{"i": int, "j": int, "c": "num/den"}``; an analytic polynomial is a list of
``{"re": ..., "im": ...}`` in ascending degree. Surface coordinates accept
either form; bivariate input goes through the harmonicity gate.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List

from .harmonic import AnalyticPolynomial, HarmonicFunction, Poly2, to_analytic
from .rational import CQ, format_rational, parse_rational
from .surface import UNIT_SQUARE, Domain, HarmonicSurface
from .weierstrass import PhiTriple, WeierstrassData


class ParseError(ValueError):
    pass


def _rational(value):
    if isinstance(value, int) and not isinstance(value, bool):
        return parse_rational(str(value))
    if not isinstance(value, str):
        raise ParseError(f"rational must be a 'num/den' string, got {value!r}")
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc)) from None


def encode_poly2(p: Poly2) -> List[Dict[str, Any]]:
    return [{"i": i, "j": j, "c": format_rational(c)} for (i, j), c in p.sorted_terms()]


def decode_poly2(data) -> Poly2:
    if not isinstance(data, list):
        raise ParseError("bivariate polynomial must be a list of terms")
    terms = {}
    for t in data:
        try:
            key = (int(t["i"]), int(t["j"]))
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"bad term {t!r}") from None
        if key[0] < 0 or key[1] < 0:
            raise ParseError(f"negative exponent in {t!r}")
        terms[key] = terms.get(key, 0) + _rational(t.get("c"))
    return Poly2(terms)


def encode_analytic(F: AnalyticPolynomial) -> List[Dict[str, str]]:
    return [{"re": format_rational(c.re), "im": format_rational(c.im)} for c in F.coeffs]


def decode_analytic(data) -> AnalyticPolynomial:
    if not isinstance(data, list):
        raise ParseError("analytic polynomial must be a list of coefficients")
    out = []
    for c in data:
        if not isinstance(c, dict):
            raise ParseError(f"bad coefficient {c!r}")
        out.append(CQ(_rational(c.get("re", "0/1")), _rational(c.get("im", "0/1"))))
    return AnalyticPolynomial(out)


def decode_harmonic(data, label: str = "") -> HarmonicFunction:
    """Accept either encoding; bivariate input must pass the harmonicity gate."""
    if isinstance(data, list) and data and isinstance(data[0], dict) and "i" in data[0]:
        return to_analytic(decode_poly2(data), label)
    if isinstance(data, list) and all(isinstance(c, dict) and "i" not in c for c in data):
        return HarmonicFunction(decode_analytic(data))
    raise ParseError(f"cannot decode polynomial for {label or 'coordinate'}")


def encode_domain(d: Domain) -> Dict[str, List[str]]:
    return {"x": [format_rational(d.x_lo), format_rational(d.x_hi)],
            "y": [format_rational(d.y_lo), format_rational(d.y_hi)]}


def decode_domain(data) -> Domain:
    if data is None:
        return UNIT_SQUARE
    try:
        (xl, xh), (yl, yh) = data["x"], data["y"]
        return Domain(_rational(xl), _rational(xh), _rational(yl), _rational(yh))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad domain: {exc}") from None


def encode_surface(s: HarmonicSurface) -> Dict[str, Any]:
    return {
        "a": encode_poly2(s.a.bivariate),
        "b": encode_poly2(s.b.bivariate),
        "c": encode_poly2(s.c.bivariate),
        "domain": encode_domain(s.domain),
    }


def raw_surface_polys(data) -> Dict[str, Poly2]:
    """Bivariate form of each coordinate without the harmonicity gate (for diagnostics)."""
    out = {}
    for k in "abc":
        entry = data[k]
        if isinstance(entry, list) and entry and "i" in entry[0]:
            out[k] = decode_poly2(entry)
        else:
            out[k] = HarmonicFunction(decode_analytic(entry)).bivariate
    return out


def decode_surface(data) -> HarmonicSurface:
    if not isinstance(data, dict) or not all(k in data for k in "abc"):
        raise ParseError("surface JSON needs keys a, b, c")
    return HarmonicSurface(
        decode_harmonic(data["a"], "a"),
        decode_harmonic(data["b"], "b"),
        decode_harmonic(data["c"], "c"),
        decode_domain(data.get("domain")),
    )


def decode_weierstrass(data):
    """Either ``{"p", "q"}`` data or a user-supplied ``{"phi": [f1, f2, f3]}`` triple."""
    if not isinstance(data, dict):
        raise ParseError("Weierstrass JSON must be an object")
    if "phi" in data:
        phis = data["phi"]
        if not isinstance(phis, list) or len(phis) != 3:
            raise ParseError("phi must list three analytic polynomials")
        return PhiTriple(*(decode_analytic(f) for f in phis))
    try:
        return WeierstrassData(decode_analytic(data["p"]), decode_analytic(data["q"]))
    except KeyError as exc:
        raise ParseError(f"missing key {exc}") from None


def load_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(str(exc)) from None


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
