"""Ideal files and JSON encodings.

An ideal file is plain text: a ``vars:`` header naming the context, then one
generator per line in the polynomial grammar.  ``#`` starts a comment; a
``# meta:`` comment carries a JSON metadata block (orbit files record their
eigenvalue spec and construction style there) and survives a round trip.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import IO

from .groebner import IdealPresentation, ReducedGB
from .hilbert import HilbertData
from .parsing import parse_poly, poly_to_string
from .polyring import PolyError, VarContext

__all__ = [
    "read_ideal",
    "write_ideal",
    "ideal_to_json",
    "ideal_from_json",
    "gb_to_json",
    "hilbert_to_json",
]

_META_PREFIX = "# meta:"


def write_ideal(out: IO[str], ideal: IdealPresentation, meta: dict | None = None) -> None:
    if meta:
        out.write(f"{_META_PREFIX} {json.dumps(meta, sort_keys=True)}\n")
    out.write("vars: " + ",".join(ideal.ctx.names) + "\n")
    for g in ideal.generators:
        out.write(poly_to_string(g) + "\n")


def read_ideal(inp: IO[str]) -> tuple[IdealPresentation, dict]:
    meta: dict = {}
    ctx: VarContext | None = None
    gens = []
    for lineno, raw in enumerate(inp, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(_META_PREFIX):
            meta = json.loads(line[len(_META_PREFIX):])
            continue
        if line.startswith("#"):
            continue
        if line.startswith("vars:"):
            names = [n.strip() for n in line[len("vars:"):].split(",") if n.strip()]
            ctx = VarContext(names)
            continue
        if ctx is None:
            raise PolyError(f"line {lineno}: polynomial before the vars: header")
        gens.append(parse_poly(line, ctx))
    if ctx is None:
        raise PolyError("missing vars: header")
    return IdealPresentation(ctx, gens), meta


def ideal_to_json(ideal: IdealPresentation, meta: dict | None = None) -> str:
    doc = {
        "vars": list(ideal.ctx.names),
        "generators": [poly_to_string(g) for g in ideal.generators],
    }
    if meta:
        doc["meta"] = meta
    return json.dumps(doc)


def ideal_from_json(text: str) -> tuple[IdealPresentation, dict]:
    doc = json.loads(text)
    ctx = VarContext(doc["vars"])
    gens = [parse_poly(s, ctx) for s in doc["generators"]]
    return IdealPresentation(ctx, gens), doc.get("meta", {})


def gb_to_json(G: ReducedGB) -> str:
    return json.dumps(
        {
            "vars": list(G.ctx.names),
            "order": str(G.order),
            "basis": [poly_to_string(g, G.order) for g in G.basis],
        }
    )


def hilbert_to_json(h: HilbertData) -> str:
    return json.dumps(
        {
            "numerator": list(h.numerator),
            "krull_dim": h.krull_dim,
            "proj_dim": h.proj_dim,
            "degree": h.degree,
        }
    )


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise PolyError(f"bad rational list {text!r}: {e}") from None
