"""Named codes used by the classifiers and tests.

Entries that have a published generator or parity-check matrix ship as
data files transcribed verbatim; the dual cycle code of the Wagner graph
is built from its edge list.  Every entry's parameters are verified at
load time.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources

from .codes import LinearCode, min_weight_bruteforce, parse_code_file
from .graphs import code_from_graph, wagner_graph


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    code: LinearCode
    n: int
    k: int
    d: int | None  # verified when known


def _load(name: str) -> LinearCode:
    text = resources.files("seymour.data").joinpath(name).read_text()
    return parse_code_file(text)


@functools.cache
def load_catalog() -> dict[str, CatalogEntry]:
    """All named codes, with (n, k, d) checked against their labels."""
    specs = [
        ("H7", _load("h7.txt"), 7, 4, 3),
        ("SIMPLEX7", _load("simplex7.txt"), 7, 3, 4),
        ("R10", _load("r10.txt"), 10, 5, 4),
        ("CK5D", _load("ck5d.txt"), 10, 4, 4),
        ("CK33D", _load("ck33d.txt"), 9, 5, 3),
        ("CV8D", code_from_graph(wagner_graph()).dual(), 12, 7, None),
        ("EXT_HAMMING8", _load("ext_hamming8.txt"), 8, 4, 4),
    ]
    catalog: dict[str, CatalogEntry] = {}
    for name, code, n, k, d in specs:
        if (code.n, code.k) != (n, k):
            raise AssertionError(f"catalog entry {name} has parameters {(code.n, code.k)}")
        if d is not None and min_weight_bruteforce(code) != d:
            raise AssertionError(f"catalog entry {name} has the wrong minimum distance")
        catalog[name] = CatalogEntry(name, code, n, k, d)
    return catalog


def catalog_code(name: str) -> LinearCode:
    return load_catalog()[name].code
