"""JSON documents for rings, modules and reports."""

import hashlib
import json

from .errors import SpecError
from .module import FPModule, Presentation
from .ring import build_ring


def load_document(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"input is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecError("input document must be a JSON object")
    return doc


def digest(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def parse_ring(doc):
    if "ring" not in doc:
        raise SpecError("document has no 'ring' object")
    return build_ring(doc["ring"])


def parse_presentation(R, pres):
    try:
        return Presentation(R, pres["rows"], pres["cols"], pres["entries"])
    except KeyError as exc:
        raise SpecError(f"presentation is missing field {exc}") from None
    except TypeError as exc:
        raise SpecError(f"malformed presentation: {exc}") from None


def parse_module(doc, R=None):
    R = parse_ring(doc) if R is None else R
    if "presentation" not in doc:
        raise SpecError("document has no 'presentation' object")
    return FPModule(parse_presentation(R, doc["presentation"]))


def module_document(ring_spec, presentation):
    return {"ring": ring_spec,
            "presentation": {"rows": presentation.rows, "cols": presentation.cols,
                             "entries": [[list(x) for x in row] for row in presentation.entries]}}


def elements_json(items):
    return [list(x) for x in items]


def ideal_json(I):
    return {"order": I.order, "elements": elements_json(I.sorted_elements())}


def dumps(obj):
    """Canonical JSON text: identical inputs give identical bytes."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
