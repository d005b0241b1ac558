"""Corpus = directory of RINGSPEC files; the default one ships with the package."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .constructions import (
    cyclic_ring,
    direct_product,
    matrix_ring,
    polynomial_quotient_ring,
    scalar_plus_strict_upper,
    trivial_extension,
    upper_triangular_ring,
)
from .errors import EmptyCorpus, RingLabError
from .ring import FiniteRing, parse_ring, serialize_ring, validate_ring


@dataclass
class CorpusEntry:
    source: str          # file name
    text: str
    ring: FiniteRing | None
    problem: str = ""    # parse or validation failure, empty when usable

    @property
    def label(self):
        return self.ring.name if self.ring is not None else Path(self.source).stem

    @property
    def ok(self):
        return not self.problem


def load_entries(files):
    """``files``: iterable of (name, text) pairs, loaded in name order."""
    out = []
    for name, text in sorted(files):
        try:
            R = parse_ring(text)
        except RingLabError as exc:
            out.append(CorpusEntry(name, text, None, f"parse: {exc}"))
            continue
        rep = validate_ring(R)
        problem = "" if rep.ok else f"{rep.violations[0][0]} at {rep.violations[0][1]}"
        out.append(CorpusEntry(name, text, R, problem))
    return out


def load_corpus(path=None):
    if path is None:
        root = resources.files("ringlab") / "corpus"
        files = [(p.name, p.read_text()) for p in root.iterdir() if p.name.endswith(".ring")]
    else:
        files = [(p.name, p.read_text()) for p in Path(path).glob("*.ring")]
    if not files:
        raise EmptyCorpus(f"no .ring files in {path or 'default corpus'}")
    return load_entries(files)


def digest(entries):
    h = hashlib.sha256()
    for e in entries:
        h.update(e.source.encode())
        h.update(b"\0")
        h.update(e.text.encode())
        h.update(b"\0")
    return h.hexdigest()


def example_s_ring():
    """Order-16 ring of 3x3 matrices a*I + b E12 + c E13 + d E23 over Z2, basis I, E12, E13, E23."""
    z = [0, 0, 0, 0]
    I, E12, E13, E23 = ([int(i == j) for j in range(4)] for i in range(4))
    products = [
        [I, E12, E13, E23],
        [E12, z, z, E13],
        [E13, z, z, z],
        [E23, z, z, z],
    ]
    return FiniteRing("S(Ex2.6)", [2, 2, 2, 2], I, products)


def default_rings():
    """(file name, ring) pairs of the shipped corpus, built from the constructions."""
    Z2, Z4 = cyclic_ring(2), cyclic_ring(4)
    rings = [
        ("z2", Z2), ("z3", cyclic_ring(3)), ("z4", Z4), ("z6", cyclic_ring(6)),
        ("z8", cyclic_ring(8)), ("z12", cyclic_ring(12)),
        ("gf4", polynomial_quotient_ring(2, [1, 1], "GF4")),
        ("z2xz2", direct_product(Z2, Z2)),
        ("t2z2", upper_triangular_ring(Z2, 2)), ("t3z2", upper_triangular_ring(Z2, 3)),
        ("m2z2", matrix_ring(Z2, 2)), ("m2z4", matrix_ring(Z4, 2)),
        ("s_ex26", example_s_ring()),
        ("triv_z2", trivial_extension(Z2)),
        ("su3z2", scalar_plus_strict_upper(Z2, 3)),
    ]
    return [(f"{stem}.ring", R) for stem, R in rings]


def write_default_corpus(directory):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name, R in default_rings():
        (directory / name).write_text(serialize_ring(R))
