"""JSON documents for vectors in every space.

One document per vector::

    {"space": "boson",   "terms": [{"coeff": "3/2", "exponents": {"1": 2}}]}
    {"space": "symm-p",  "terms": [{"coeff": "1",   "mu": [2, 1]}]}
    {"space": "symm-s",  "terms": [{"coeff": "-1",  "lambda": [1, 1]}]}
    {"space": "asymm",   "terms": [{"coeff": "1",   "partition": [2]}]}
    {"space": "fermion", "terms": [{"coeff": "1",   "partition": []}]}

Maya indices travel as their partitions; a display-only ``"maya"`` prefix
is written alongside and ignored on input.  Terms are written in the same
order the text renderer uses.
"""

from __future__ import annotations

import json

from .asymm import AsymmVector
from .boson import BosonPolynomial, ZMonomial
from .combinatorics import MayaIndex, Partition
from .fermion import FockVector
from .linear import as_fraction, format_rational
from .symm import SchurExpansion, SymmElement

SPACES = {
    "boson": (BosonPolynomial, "exponents"),
    "symm-p": (SymmElement, "mu"),
    "symm-s": (SchurExpansion, "lambda"),
    "asymm": (AsymmVector, "partition"),
    "fermion": (FockVector, "partition"),
}


class DocumentError(ValueError):
    pass


def space_of(vector) -> str:
    for name, (cls, _) in SPACES.items():
        if type(vector) is cls:
            return name
    raise TypeError(f"no document space for {type(vector).__name__}")


def to_document(vector) -> dict:
    space = space_of(vector)
    terms = []
    for key, coeff in vector.sorted_items():
        entry = {"coeff": format_rational(coeff)}
        if space == "boson":
            entry["exponents"] = {str(j): k for j, k in key.exponents}
        elif space in ("symm-p", "symm-s"):
            entry[SPACES[space][1]] = list(key)
        else:
            entry["partition"] = list(key.partition)
            entry["maya"] = list(key.prefix)
        terms.append(entry)
    return {"space": space, "terms": terms}


def _partition(raw, where: str) -> Partition:
    if not isinstance(raw, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
        raise DocumentError(f"{where}: expected a list of integers, got {raw!r}")
    try:
        return Partition(raw)
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def from_document(doc) -> object:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    space = doc.get("space")
    if space not in SPACES:
        raise DocumentError(f"unknown space {space!r}; expected one of {sorted(SPACES)}")
    cls, field = SPACES[space]
    raw_terms = doc.get("terms")
    if not isinstance(raw_terms, list):
        raise DocumentError("'terms' must be a list")
    pairs = []
    for i, term in enumerate(raw_terms):
        where = f"terms[{i}]"
        if not isinstance(term, dict) or "coeff" not in term or field not in term:
            raise DocumentError(f"{where}: needs 'coeff' and {field!r}")
        try:
            coeff = as_fraction(str(term["coeff"]))
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: bad coefficient {term['coeff']!r}: {exc}") from None
        raw = term[field]
        if space == "boson":
            if not isinstance(raw, dict):
                raise DocumentError(f"{where}: 'exponents' must be an object")
            try:
                key = ZMonomial({int(j): int(k) for j, k in raw.items()})
            except (TypeError, ValueError) as exc:
                raise DocumentError(f"{where}: {exc}") from None
        elif space in ("symm-p", "symm-s"):
            key = _partition(raw, where)
        else:
            key = MayaIndex(_partition(raw, where))
        pairs.append((key, coeff))
    return cls(pairs)


def dumps(vector) -> str:
    return json.dumps(to_document(vector), indent=2) + "\n"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_document(doc)
