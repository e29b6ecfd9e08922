"""JSON encoding and decoding.

Integers beyond the 53-bit range of IEEE doubles are written as decimal
strings; rationals are written as "p/q" strings (integral rationals as
integers). Input parsing reports the JSON path of the first problem.

Root-datum JSON: {"rank": r, "roots": [[...], ...], "coroots": [[...], ...]}
or a named group {"named": "gl", "n": 3}. Named groups: gl, sl, pgl, sp
(n means Sp_2n), so_odd, torus, gm. Products: {"product": [datum, datum, ...]}.

Triple JSON: {"group": <root datum>, "lambda": [int, ...]} with λ in
cocharacter coordinates of the group.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .lattice import IntMatrix, QuotientStructure
from .rootdata import RootDatum, direct_product, named

SAFE_INT = 2 ** 53 - 1


class InputError(ValueError):
    """Malformed input; ``location`` is a JSON path such as $.group.roots[2]."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


def encode_int(x: int):
    return x if -SAFE_INT <= x <= SAFE_INT else str(x)


def encode_fraction(x: Fraction):
    if x.denominator == 1:
        return encode_int(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def jsonable(obj: Any) -> Any:
    """Recursively convert tuples, Fractions, big ints and matrices to JSON values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return encode_int(obj)
    if isinstance(obj, Fraction):
        return encode_fraction(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, IntMatrix):
        return [[encode_int(x) for x in row] for row in obj.tolist()]
    if isinstance(obj, QuotientStructure):
        return encode_quotient(obj)
    if isinstance(obj, RootDatum):
        return encode_root_datum(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def encode_quotient(q: QuotientStructure) -> dict:
    return {"free_rank": q.free_rank, "torsion": [encode_int(t) for t in q.torsion], "text": str(q)}


def encode_root_datum(rd: RootDatum) -> dict:
    return {"rank": rd.rank, "roots": jsonable(rd.roots), "coroots": jsonable(rd.coroots)}


# ---------------------------------------------------------------------------
# decoding

def decode_int(v: Any, loc: str) -> int:
    if isinstance(v, bool):
        raise InputError(loc, "expected an integer, got a boolean")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            pass
    raise InputError(loc, f"expected an integer, got {json.dumps(v)}")


def decode_fraction(v: Any, loc: str) -> Fraction:
    if isinstance(v, str) and "/" in v:
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise InputError(loc, f"bad rational {v!r}") from None
    return Fraction(decode_int(v, loc))


def decode_vector(v: Any, loc: str, length: int | None = None) -> tuple[int, ...]:
    if not isinstance(v, list):
        raise InputError(loc, "expected an array of integers")
    out = tuple(decode_int(x, f"{loc}[{i}]") for i, x in enumerate(v))
    if length is not None and len(out) != length:
        raise InputError(loc, f"expected {length} coordinates, got {len(out)}")
    return out


def decode_matrix(v: Any, loc: str) -> IntMatrix:
    if not isinstance(v, list) or not v:
        raise InputError(loc, "expected a nonempty array of rows")
    rows = [decode_vector(r, f"{loc}[{i}]") for i, r in enumerate(v)]
    if len({len(r) for r in rows}) != 1:
        raise InputError(loc, "rows have different lengths")
    return IntMatrix.from_rows(rows, len(rows[0]))


def decode_root_datum(obj: Any, loc: str = "$") -> RootDatum:
    if not isinstance(obj, dict):
        raise InputError(loc, "expected a root-datum object")
    if "named" in obj:
        name = obj["named"]
        if not isinstance(name, str):
            raise InputError(f"{loc}.named", "expected a string")
        n = decode_int(obj["n"], f"{loc}.n") if "n" in obj else None
        try:
            return named(name, n)
        except ValueError as e:
            raise InputError(loc, str(e)) from None
    if "product" in obj:
        parts = obj["product"]
        if not isinstance(parts, list) or not parts:
            raise InputError(f"{loc}.product", "expected a nonempty array of root data")
        rd = decode_root_datum(parts[0], f"{loc}.product[0]")
        for i, p in enumerate(parts[1:], 1):
            rd = direct_product(rd, decode_root_datum(p, f"{loc}.product[{i}]"))
        return rd
    for key in ("rank", "roots", "coroots"):
        if key not in obj:
            raise InputError(loc, f"missing key {key!r}")
    r = decode_int(obj["rank"], f"{loc}.rank")
    if r < 0:
        raise InputError(f"{loc}.rank", "rank must be nonnegative")
    for key in ("roots", "coroots"):
        if not isinstance(obj[key], list):
            raise InputError(f"{loc}.{key}", "expected an array")
    roots = tuple(decode_vector(v, f"{loc}.roots[{i}]", r) for i, v in enumerate(obj["roots"]))
    coroots = tuple(decode_vector(v, f"{loc}.coroots[{i}]", r) for i, v in enumerate(obj["coroots"]))
    if len(roots) != len(coroots):
        raise InputError(loc, f"{len(roots)} roots but {len(coroots)} coroots")
    return RootDatum(r, roots, coroots)


def decode_triple(obj: Any, loc: str = "$") -> tuple[RootDatum, tuple[int, ...]]:
    if not isinstance(obj, dict):
        raise InputError(loc, "expected a triple object with keys 'group' and 'lambda'")
    if "group" not in obj:
        raise InputError(loc, "missing key 'group'")
    if "lambda" not in obj:
        raise InputError(loc, "missing key 'lambda'")
    g = decode_root_datum(obj["group"], f"{loc}.group")
    lam = decode_vector(obj["lambda"], f"{loc}.lambda", g.rank)
    return g, lam


def load_json_text(text: str, source: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}:{e.lineno}:{e.colno}", e.msg) from None
