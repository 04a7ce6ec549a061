"""The fixed test corpus of small local rings and their small presentations."""

import json
from itertools import product
from pathlib import Path

from .config import check_cap
from .ideal import enumerate_ideals, minimal_generators
from .module import FPModule, Presentation
from .ring import build_ring

F4_TABLE = {"kind": "table", "orders": [2, 2], "one": [1, 0],
            "mul": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]], "label": "F4"}

RING_SPECS = [
    ("Z2", {"kind": "zmod", "n": 2}),
    ("Z4", {"kind": "zmod", "n": 4}),
    ("Z8", {"kind": "zmod", "n": 8}),
    ("Z16", {"kind": "zmod", "n": 16}),
    ("F4", F4_TABLE),
    ("F2_eps", {"kind": "truncated_poly", "base": {"kind": "zmod", "n": 2}, "vars": 1, "degree": 2}),
    ("F2_xy", {"kind": "truncated_poly", "base": {"kind": "zmod", "n": 2}, "vars": 2, "degree": 2}),
    ("Z4_eps", {"kind": "quotient",
                "of": {"kind": "truncated_poly", "base": {"kind": "zmod", "n": 4}, "vars": 1, "degree": 2},
                "ideal": [[0, 2]]}),
]

_ring_cache = {}


def corpus_rings(bound=16):
    """(name, spec, ring) for the corpus rings of order <= bound, in fixed order."""
    check_cap(bound, "ring", "corpus bound")
    out = []
    for name, spec in RING_SPECS:
        if name not in _ring_cache:
            _ring_cache[name] = build_ring(spec)
        R = _ring_cache[name]
        if R.order <= bound:
            out.append((name, spec, R))
    return out


def entry_set(R):
    """Zero together with the minimal generators of every ideal."""
    entries = {R.zero}
    for I in enumerate_ideals(R):
        entries.update(minimal_generators(R, I))
    return sorted(entries)


def presentations(R, max_rows=2, max_cols=2):
    """Every presentation with p <= max_rows, q <= max_cols over ``entry_set``."""
    entries = entry_set(R)
    for p in range(max_rows + 1):
        for q in range(max_cols + 1):
            for flat in product(entries, repeat=p * q):
                yield Presentation(R, p, q, [list(flat[i * q:(i + 1) * q]) for i in range(p)])


def corpus_modules(bound=16, max_rows=2, max_cols=2):
    for name, _, R in corpus_rings(bound):
        for P in presentations(R, max_rows, max_cols):
            yield name, FPModule(P)


def corpus_generate(bound, outdir):
    """Write ``<name>.ring.json`` and ``<name>.modules.json`` for each corpus ring."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    manifest = []
    for name, spec, R in corpus_rings(bound):
        (outdir / f"{name}.ring.json").write_text(json.dumps({"ring": spec}, indent=2) + "\n")
        mods = [{"rows": P.rows, "cols": P.cols,
                 "entries": [[list(x) for x in row] for row in P.entries]}
                for P in presentations(R)]
        (outdir / f"{name}.modules.json").write_text(
            json.dumps({"ring": spec, "presentations": mods}) + "\n")
        manifest.append({"name": name, "order": R.order, "presentations": len(mods)})
    (outdir / "manifest.json").write_text(json.dumps({"bound": bound, "rings": manifest}, indent=2) + "\n")
    return manifest
