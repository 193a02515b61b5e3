"""JSON serialization of partial tensors, reports, and completions.

Rationals travel as strings ("p/q" or "p") so nothing is ever rounded;
decimal rendering is display-only and opt-in.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .completability import CompletabilityReport
from .completion import Completion, SignedMonomial
from .errors import InputError
from .segre import Circuit
from .tensor import IndexDomain, PartialTensor


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise InputError("bad-value", f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError("bad-value", f"not a rational: {value!r}") from exc
    raise InputError("bad-value", f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _index_key(idx) -> str:
    return ",".join(str(i) for i in idx)


def tensor_from_document(doc) -> PartialTensor:
    """Parse a tensor document {dims, entries: [{index, value}], ...}."""
    if not isinstance(doc, dict):
        raise InputError("bad-document", "document must be a JSON object")
    dims = doc.get("dims")
    if (
        not isinstance(dims, list)
        or not dims
        or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims)
    ):
        raise InputError("bad-dims", "dims must be a nonempty list of integers")
    if any(d < 2 for d in dims):
        raise InputError("bad-dims", "every axis length must be at least 2")
    raw = doc.get("entries", [])
    if not isinstance(raw, list):
        raise InputError("bad-entries", "entries must be a list")
    domain = IndexDomain(tuple(dims))
    entries = {}
    for item in raw:
        if not isinstance(item, dict) or "index" not in item or "value" not in item:
            raise InputError("bad-entry", f"entry must have index and value: {item!r}")
        idx = item["index"]
        if not isinstance(idx, list) or not all(
            isinstance(i, int) and not isinstance(i, bool) for i in idx
        ):
            raise InputError("bad-index", f"index must be a list of integers: {idx!r}")
        idx = tuple(idx)
        if idx not in domain:
            raise InputError(
                "bad-index", f"index {list(idx)} out of range for dims {dims}"
            )
        if idx in entries:
            raise InputError("duplicate-index", f"index {list(idx)} appears twice")
        entries[idx] = parse_rational(item["value"])
    return PartialTensor(domain, entries)


def tensor_to_document(t: PartialTensor, name=None, comment=None) -> dict:
    doc = {
        "dims": list(t.domain.dims),
        "entries": [
            {"index": list(idx), "value": format_rational(v)}
            for idx, v in sorted(t.entries.items())
        ],
    }
    if name is not None:
        doc["name"] = name
    if comment is not None:
        doc["comment"] = comment
    return doc


def load_tensor(path: str) -> PartialTensor:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError("bad-file", f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError("bad-json", f"malformed JSON in {path}: {exc}") from exc
    return tensor_from_document(doc)


def circuit_to_json(c: Circuit) -> dict:
    return {
        "support": [list(i) for i in c.support],
        "vector": list(c.vector),
    }


def report_to_json(r: CompletabilityReport) -> dict:
    closure = (
        sorted(r.finitely_completable_entries)
        if r.finitely_completable_entries is not None
        else None
    )
    return {
        "zero_consistent": r.zero_consistent,
        "complex_completable": r.complex_completable,
        "real_completable": r.real_completable,
        "finitely_completable_entries": (
            [list(i) for i in closure] if closure is not None else None
        ),
        "uniquely_completable_complex": r.uniquely_completable_complex,
        "uniquely_completable_real": r.uniquely_completable_real,
        "saturation_index": r.saturation_index,
        "failing_circuit": (
            circuit_to_json(r.failing_circuit) if r.failing_circuit else None
        ),
    }


def monomial_to_json(m: SignedMonomial, base: dict, digits: int = 12) -> dict:
    exact = m.as_fraction(base)
    return {
        "sign": m.sign,
        "exponents": {
            _index_key(idx): format_rational(q) for idx, q in sorted(m.exponents.items())
        },
        "exact": format_rational(exact) if exact is not None else None,
        "decimal": m.decimal(base, digits),
        "text": m.to_text(),
    }


def completion_to_json(
    c: Completion, digits: int = 12, include_witness: bool = False
) -> dict:
    out = {
        "values": {
            _index_key(idx): monomial_to_json(m, c.base, digits)
            for idx, m in sorted(c.values.items())
        },
        "free_entries": [list(i) for i in sorted(c.free_entries)],
    }
    if include_witness:
        witness = {}
        for idx, v in sorted(c.witness.items()):
            if isinstance(v, Fraction):
                witness[_index_key(idx)] = {"exact": format_rational(v)}
            else:
                witness[_index_key(idx)] = monomial_to_json(v, c.base, digits)
        out["witness"] = witness
    return out
