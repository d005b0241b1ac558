"""Finite unital rings presented by structure constants.

A ring is given over additive generators e_1..e_k of orders d_1..d_k, so the
additive group is Z_{d_1} x ... x Z_{d_k}; multiplication is the bilinear
extension of the basis products e_i e_j.  Elements are coordinate vectors.

Every element also has an integer index (little-endian mixed radix over the
coordinates).  Index order is the canonical element order used by every
enumeration, report and witness search.  Bulk kernels work on indices through
a cached multiplication table.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import limits
from .errors import (
    BadArity,
    DimensionMismatch,
    DuplicateProduct,
    MalformedLine,
    MissingProduct,
)

__all__ = [
    "FiniteRing",
    "RingElement",
    "ValidationReport",
    "parse_ring",
    "serialize_ring",
    "validate_ring",
    "elem_add",
    "elem_neg",
    "elem_mul",
    "enumerate_elements",
    "is_unit",
    "parse_element",
    "parse_elements",
    "build_mul_table",
]


@dataclass(frozen=True, order=True)
class RingElement:
    coords: tuple

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __len__(self):
        return len(self.coords)


def _reduce(vec, orders):
    return tuple(int(c) % d for c, d in zip(vec, orders))


class FiniteRing:
    """Unital finite ring given by additive orders, identity and basis products.

    ``products[i][j]`` holds the coordinates of e_{i+1} e_{j+1}.  Instances are
    treated as immutable; derived tables are computed lazily and cached.
    """

    def __init__(self, name, orders, one, products):
        self.name = str(name)
        self.orders = tuple(int(d) for d in orders)
        k = len(self.orders)
        if len(one) != k:
            raise BadArity(0, k, len(one))
        if len(products) != k or any(len(row) != k for row in products):
            raise DimensionMismatch(f"products table must be {k}x{k}")
        for row in products:
            for vec in row:
                if len(vec) != k:
                    raise BadArity(0, k, len(vec))
        if any(d < 1 for d in self.orders):
            # kept so validate_ring can report it; reduction needs d >= 1
            safe = tuple(max(d, 1) for d in self.orders)
        else:
            safe = self.orders
        self.one = _reduce(one, safe)
        self.products = tuple(tuple(_reduce(v, safe) for v in row) for row in products)
        self.order = math.prod(safe)
        self._safe_orders = safe
        self._memo = {}

    def __repr__(self):
        return f"FiniteRing({self.name!r}, order={self.order})"

    @property
    def k(self):
        return len(self.orders)

    def presentation(self):
        """Hashable presentation (everything except the name)."""
        return (self.orders, self.one, self.products)

    def same_presentation(self, other):
        return self.presentation() == other.presentation()

    def renamed(self, name):
        return FiniteRing(name, self.orders, self.one, self.products)

    # -- element <-> index ------------------------------------------------

    @cached_property
    def strides(self):
        out, acc = [], 1
        for d in self._safe_orders:
            out.append(acc)
            acc *= d
        return tuple(out)

    def elem(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if len(coords) != self.k:
            raise DimensionMismatch(f"{self.name} needs {self.k} coordinates, got {len(coords)}")
        return RingElement(_reduce(coords, self._safe_orders))

    def index(self, a):
        coords = a.coords if isinstance(a, RingElement) else tuple(a)
        if len(coords) != self.k:
            raise DimensionMismatch(f"{self.name} needs {self.k} coordinates, got {len(coords)}")
        return sum((int(c) % d) * s for c, d, s in zip(coords, self._safe_orders, self.strides))

    def element(self, idx):
        idx = int(idx)
        return RingElement(tuple((idx // s) % d for s, d in zip(self.strides, self._safe_orders)))

    @property
    def zero(self):
        return RingElement((0,) * self.k)

    @property
    def one_element(self):
        return RingElement(self.one)

    @cached_property
    def one_idx(self):
        return self.index(self.one)

    def basis(self):
        return [RingElement(tuple(int(i == j) % self._safe_orders[j] for j in range(self.k)))
                for i in range(self.k)]

    @cached_property
    def basis_idx(self):
        return np.array([self.index(e) for e in self.basis()], dtype=np.int64)

    # -- bulk tables --------------------------------------------------------

    @cached_property
    def coords(self):
        """N x k array of coordinates in canonical order."""
        limits.require_order(self.order)
        idx = np.arange(self.order, dtype=np.int64)
        if self.k == 0:
            return np.zeros((self.order, 0), dtype=np.int64)
        return np.stack([(idx // s) % d for s, d in zip(self.strides, self._safe_orders)], axis=1)

    def to_index(self, coords):
        """Vectorized coordinates (..., k) -> indices; reduces mod orders."""
        coords = np.asarray(coords, dtype=np.int64)
        if self.k == 0:
            return np.zeros(coords.shape[:-1], dtype=np.int64)
        orders = np.array(self._safe_orders, dtype=np.int64)
        strides = np.array(self.strides, dtype=np.int64)
        return (coords % orders) @ strides

    def add_idx(self, x, y):
        return self.to_index(self.coords[x] + self.coords[y])

    def sub_idx(self, x, y):
        return self.to_index(self.coords[x] - self.coords[y])

    @cached_property
    def neg(self):
        return self.to_index(-self.coords)

    @cached_property
    def one_minus(self):
        """Index of 1 - x for every x."""
        return self.to_index(np.asarray(self.one, dtype=np.int64) - self.coords)

    def multiples(self, x):
        """Indices [0, x, 2x, ...] up to the additive order of x."""
        out = [0]
        cur = int(x)
        while cur != 0:
            out.append(cur)
            cur = int(self.add_idx(cur, x))
        return np.array(out, dtype=np.int64)

    @cached_property
    def mul(self):
        """N x N table of product indices: mul[a, b] = index(ab)."""
        limits.require_order(self.order)
        return build_mul_table(self._safe_orders, self.products)

    @cached_property
    def mulT(self):
        return np.ascontiguousarray(self.mul.T)

    @cached_property
    def unit_mask(self):
        hits = self.mul == self.one_idx
        right = hits.any(axis=1)  # a has b with ab = 1
        left = hits.any(axis=0)   # b has a with ab = 1
        # one-sided invertibility implies two-sided in a finite ring
        if not np.array_equal(right, left):
            raise AssertionError(f"{self.name}: one-sided inverse without two-sided inverse")
        return right

    def inverse_idx(self, a):
        row = np.flatnonzero(self.mul[a] == self.one_idx)
        return int(row[0]) if len(row) else None


def build_mul_table(orders, products):
    """Index-valued product table for a (possibly nonunital) presentation."""
    orders = tuple(orders)
    k = len(orders)
    n = math.prod(orders)
    dtype = np.int16 if n < 2**15 else np.int32
    if k == 0:
        return np.zeros((1, 1), dtype=dtype)
    strides, acc = [], 1
    for d in orders:
        strides.append(acc)
        acc *= d
    od = np.array(orders, dtype=np.int64)
    st = np.array(strides, dtype=np.int64)
    idx = np.arange(n, dtype=np.int64)
    C = np.stack([(idx // s) % d for s, d in zip(strides, orders)], axis=1)
    P = np.array(products, dtype=np.int64).reshape(k, k, k)
    # E[b, i, :] = coords(e_i * b)
    E = np.einsum("bj,ijl->bil", C, P) % od
    Et = E.transpose(1, 0, 2).reshape(k, n * k).astype(np.float64)
    Cf = C.astype(np.float64)
    table = np.empty((n, n), dtype=dtype)
    block = max(1, (1 << 22) // max(1, n * k))
    for lo in range(0, n, block):
        hi = min(n, lo + block)
        prod = (Cf[lo:hi] @ Et).reshape(hi - lo, n, k).astype(np.int64)
        table[lo:hi] = (prod % od) @ st
    return table


# -- elementwise arithmetic -------------------------------------------------


def _check(R, *elems):
    for a in elems:
        if len(a.coords) != R.k:
            raise DimensionMismatch(f"element {a} does not belong to {R.name} (k={R.k})")


def elem_add(R, a, b):
    _check(R, a, b)
    return RingElement(tuple((x + y) % d for x, y, d in zip(a.coords, b.coords, R._safe_orders)))


def elem_neg(R, a):
    _check(R, a)
    return RingElement(tuple((d - x) % d for x, d in zip(a.coords, R._safe_orders)))


def elem_mul(R, a, b):
    _check(R, a, b)
    k = R.k
    acc = [0] * k
    for i, x in enumerate(a.coords):
        if not x:
            continue
        row = R.products[i]
        for j, y in enumerate(b.coords):
            if not y:
                continue
            xy = x * y
            for t, c in enumerate(row[j]):
                if c:
                    acc[t] += xy * c
    return RingElement(tuple(c % d for c, d in zip(acc, R._safe_orders)))


def enumerate_elements(R):
    limits.require_order(R.order)
    return [R.element(i) for i in range(R.order)]


def is_unit(R, a):
    """Return (is_unit, inverse or None); both one-sided searches must agree."""
    _check(R, a)
    i = R.index(a)
    right = np.flatnonzero(R.mul[i] == R.one_idx)
    left = np.flatnonzero(R.mul[:, i] == R.one_idx)
    if bool(len(right)) != bool(len(left)):
        raise AssertionError(f"{R.name}: {a} is invertible on one side only")
    if not len(right):
        return False, None
    return True, R.element(right[0])


# -- validation -------------------------------------------------------------


@dataclass
class ValidationReport:
    ok: bool
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _scale(vec, c, orders):
    return tuple((x * c) % d for x, d in zip(vec, orders))


def validate_ring(R, spot_checks=64, seed=0):
    """Check every FiniteRing invariant; witnesses use 1-based generator indices."""
    bad = []
    k = R.k
    raw = R.orders
    for i, d in enumerate(raw):
        if d < 1:
            bad.append(("order", (i + 1,)))
    if bad:
        return ValidationReport(False, bad)
    od = R.orders
    P = R.products
    for i in range(k):
        for j in range(k):
            v = P[i][j]
            if any(x for x in _scale(v, od[i], od)) or any(x for x in _scale(v, od[j], od)):
                bad.append(("additive-order", (i + 1, j + 1)))
    basis = R.basis()
    for i in range(k):
        e = basis[i]
        if elem_mul(R, R.one_element, e) != e or elem_mul(R, e, R.one_element) != e:
            bad.append(("identity", (i + 1,)))
    for i in range(k):
        for j in range(k):
            eij = RingElement(P[i][j])
            for l in range(k):
                lhs = elem_mul(R, eij, basis[l])
                rhs = elem_mul(R, basis[i], RingElement(P[j][l]))
                if lhs != rhs:
                    bad.append(("associativity", (i + 1, j + 1, l + 1)))
    if not bad and k and spot_checks:
        rng = random.Random(seed)
        for _ in range(spot_checks):
            a, b, c = (RingElement(tuple(rng.randrange(d) for d in od)) for _ in range(3))
            if elem_mul(R, elem_mul(R, a, b), c) != elem_mul(R, a, elem_mul(R, b, c)):
                bad.append(("associativity-spot", (a, b, c)))
                break
    return ValidationReport(not bad, bad)


# -- RINGSPEC text format ----------------------------------------------------


def _strip(line):
    return line.split("#", 1)[0].strip()


def _ints(tokens, lineno, text):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedLine(lineno, text, "expected integers") from None


def parse_ring(text):
    """Parse RINGSPEC v1 text into an unvalidated FiniteRing."""
    lines = [(n, raw, _strip(raw)) for n, raw in enumerate(text.splitlines(), start=1)]
    lines = [(n, raw, s) for n, raw, s in lines if s]
    if not lines:
        raise MalformedLine(0, "", "empty ring text")
    it = iter(lines)

    def expect(keyword):
        try:
            n, raw, s = next(it)
        except StopIteration:
            raise MalformedLine(lines[-1][0], lines[-1][1], f"missing '{keyword}' line") from None
        head, _, rest = s.partition(" ")
        if head != keyword:
            raise MalformedLine(n, raw, f"expected '{keyword}'")
        return n, raw, rest.split()

    n, raw, rest = expect("ring")
    if len(rest) != 1:
        raise MalformedLine(n, raw, "ring name must be one token")
    name = rest[0]
    n, raw, rest = expect("orders")
    orders = _ints(rest, n, raw)
    k = len(orders)
    if any(d < 1 for d in orders):
        raise MalformedLine(n, raw, "orders must be >= 1")
    n, raw, rest = expect("one")
    one = _ints(rest, n, raw)
    if len(one) != k:
        raise BadArity(n, k, len(one))
    products = {}
    ended = False
    for n, raw, s in it:
        if ended:
            raise MalformedLine(n, raw, "content after 'end'")
        if s == "end":
            ended = True
            continue
        m = re.fullmatch(r"mul\s+(\S+)\s+(\S+)\s*:(.*)", s)
        if not m:
            raise MalformedLine(n, raw)
        i, j = _ints(m.group(1, 2), n, raw)
        if not (1 <= i <= k and 1 <= j <= k):
            raise MalformedLine(n, raw, f"generator index outside 1..{k}")
        vec = _ints(m.group(3).split(), n, raw)
        if len(vec) != k:
            raise BadArity(n, k, len(vec))
        if (i, j) in products:
            raise DuplicateProduct(n, i, j)
        products[(i, j)] = vec
    if not ended:
        raise MalformedLine(lines[-1][0], lines[-1][1], "missing 'end'")
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if (i, j) not in products:
                raise MissingProduct(i, j)
    table = [[products[(i, j)] for j in range(1, k + 1)] for i in range(1, k + 1)]
    return FiniteRing(name, orders, one, table)


def serialize_ring(R):
    out = [f"ring {R.name}", " ".join(["orders", *map(str, R.orders)]),
           " ".join(["one", *map(str, R.one)])]
    for i in range(R.k):
        for j in range(R.k):
            out.append(" ".join([f"mul {i + 1} {j + 1} :", *map(str, R.products[i][j])]))
    out.append("end")
    return "\n".join(out) + "\n"


_ELEM_RE = re.compile(r"\(([^()]*)\)")


def parse_element(R, text):
    text = text.strip()
    m = re.fullmatch(r"\(([^()]*)\)", text)
    if not m:
        raise MalformedLine(0, text, "element must look like (c1,...,ck)")
    body = m.group(1).strip()
    coords = [int(t) for t in re.split(r"[,\s]+", body) if t] if body else []
    return R.elem(*coords)


def parse_elements(R, text):
    """Parse a whitespace/semicolon separated list of parenthesized elements."""
    found = _ELEM_RE.findall(text)
    leftover = _ELEM_RE.sub("", text).replace(";", " ").replace(",", " ").strip()
    if leftover:
        raise MalformedLine(0, text, "expected a list of (c1,...,ck) elements")
    return [parse_element(R, f"({body})") for body in found]
