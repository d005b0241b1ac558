"""Ring extensions as new structure-constant presentations.

Layouts (generator order) are fixed so that downstream code can locate
sub-blocks without searching:

* ``matrix_ring``: position-major over row-major positions, base basis inner.
* ``upper_triangular_ring``: positions on the diagonal first, then each
  superdiagonal in turn; base basis inner.
* ``scalar_plus_strict_upper``: one scalar block, then strict-upper positions
  in superdiagonal order.
* ``trivial_extension`` / ``dorroh_extension``: the base ring's basis, then
  the module / ideal basis.
* ``truncated_skew_power_series``: x-power major, base basis inner.

Power series appear only as truncations R[x; f]/(x^k); the ideal generated by
x is nilpotent there, which is what keeps the finite surrogates faithful to
the quotient argument for J-reflexivity.  Laurent and polynomial rings are
out of scope.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import limits
from .errors import (
    ActionIncompatible,
    InvalidEndomorphism,
    MalformedLine,
    NotCentral,
    NotIdempotent,
    NotRegular,
    QuasiRegularityFails,
    BadArity,
    MissingProduct,
    DuplicateProduct,
)
from .ideals import ElementSet, idempotent_mask, require_ideal, span, _as_members
from .intlin import lattice_kernel, smith_form
from .ring import FiniteRing, RingElement, build_mul_table, elem_mul

__all__ = [
    "cyclic_ring",
    "polynomial_quotient_ring",
    "matrix_ring",
    "upper_triangular_ring",
    "scalar_plus_strict_upper",
    "quotient_ring",
    "direct_product",
    "corner_ring",
    "trivial_extension",
    "NonUnitalRing",
    "dorroh_extension",
    "Endomorphism",
    "identity_endomorphism",
    "frobenius",
    "truncated_skew_power_series",
    "power_series_ideal",
    "central_regular_localization",
    "subdirect_check",
    "ElementMap",
    "coset_lift",
    "zero_product_module",
    "validate_nonunital",
    "quasi_inverse_witness",
    "strict_upper_positions",
    "parse_endomorphism",
    "serialize_endomorphism",
    "parse_nonunital",
    "serialize_nonunital",
    "Localization",
]


def _zeros(k):
    return (0,) * k


def _check_order(orders):
    limits.require_order(math.prod(orders), "constructed ring")


def cyclic_ring(n, name=None):
    return FiniteRing(name or f"Z{n}", [n], [1], [[[1]]])


def polynomial_quotient_ring(p, modulus, name):
    """Z_p[t]/(f) for a monic f given by its low coefficients c_0..c_{n-1}.

    f = t^n + c_{n-1} t^{n-1} + ... + c_0; basis 1, t, ..., t^{n-1}.
    """
    n = len(modulus)
    # t^m reduced, for m < 2n - 1
    powers = []
    for m in range(2 * n - 1):
        if m < n:
            powers.append([int(i == m) for i in range(n)])
        else:
            prev = powers[-1]
            top = prev[-1]
            shifted = [0] + prev[:-1]
            powers.append([(s - top * c) % p for s, c in zip(shifted, modulus)])
    products = [[powers[i + j] for j in range(n)] for i in range(n)]
    return FiniteRing(name, [p] * n, [1] + [0] * (n - 1), products)


def _block_ring(name, orders, one, rule):
    """Assemble a presentation; ``rule(i, j)`` yields (gen, coords) contributions."""
    k = len(orders)
    prods = []
    for i in range(k):
        row = []
        for j in range(k):
            acc = [0] * k
            for start, vec in rule(i, j):
                for t, c in enumerate(vec):
                    acc[start + t] += c
            row.append([c % d for c, d in zip(acc, orders)])
        prods.append(row)
    return FiniteRing(name, orders, one, prods)


def matrix_ring(R, n):
    """M_n(R) over matrix units E_pq (row-major) tensored with R's basis."""
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    kR = R.k
    pos = [(r, c) for r in range(n) for c in range(n)]
    where = {p: t for t, p in enumerate(pos)}
    orders = [d for _ in pos for d in R.orders]
    _check_order(orders)
    one = [0] * (kR * len(pos))
    for r in range(n):
        one[where[(r, r)] * kR:(where[(r, r)] + 1) * kR] = R.one

    def rule(g, h):
        (p, i), (q, j) = divmod(g, kR), divmod(h, kR)
        (r1, c1), (r2, c2) = pos[p], pos[q]
        if c1 == r2:
            yield where[(r1, c2)] * kR, R.products[i][j]

    return _block_ring(f"M{n}({R.name})", orders, one, rule)


def _triangular_positions(n, strict):
    return [(r, r + off) for off in range(1 if strict else 0, n) for r in range(n - off)]


def upper_triangular_ring(R, n):
    """T_n(R); diagonal positions first, then superdiagonals."""
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    kR = R.k
    pos = _triangular_positions(n, strict=False)
    where = {p: t for t, p in enumerate(pos)}
    orders = [d for _ in pos for d in R.orders]
    _check_order(orders)
    one = [0] * (kR * len(pos))
    for r in range(n):
        one[where[(r, r)] * kR:(where[(r, r)] + 1) * kR] = R.one

    def rule(g, h):
        (p, i), (q, j) = divmod(g, kR), divmod(h, kR)
        (r1, c1), (r2, c2) = pos[p], pos[q]
        if c1 == r2:
            yield where[(r1, c2)] * kR, R.products[i][j]

    return _block_ring(f"T{n}({R.name})", orders, one, rule)


def scalar_plus_strict_upper(R, n):
    """Matrices with one scalar r on the diagonal and arbitrary strict-upper entries."""
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    kR = R.k
    strict = _triangular_positions(n, strict=True)
    where = {p: t + 1 for t, p in enumerate(strict)}  # block 0 is the scalar block
    blocks = 1 + len(strict)
    orders = [d for _ in range(blocks) for d in R.orders]
    _check_order(orders)
    one = list(R.one) + [0] * (kR * len(strict))

    def rule(g, h):
        (p, i), (q, j) = divmod(g, kR), divmod(h, kR)
        v = R.products[i][j]
        if p == 0:
            yield q * kR, v
        elif q == 0:
            yield p * kR, v
        else:
            (r1, c1), (r2, c2) = strict[p - 1], strict[q - 1]
            if c1 == r2:
                yield where[(r1, c2)] * kR, v

    return _block_ring(f"SU{n}({R.name})", orders, one, rule)


def strict_upper_positions(R, n, layout):
    """Generator positions spanning the strictly upper part in a construction's layout."""
    kR = R.k
    if layout == "tri":
        return list(range(n * kR, n * (n + 1) // 2 * kR))
    if layout == "scalarupper":
        return list(range(kR, (1 + n * (n - 1) // 2) * kR))
    raise ValueError(f"unknown layout {layout!r}")


def direct_product(R, S, name=None):
    kR, kS = R.k, S.k
    orders = list(R.orders) + list(S.orders)
    _check_order(orders)
    one = list(R.one) + list(S.one)

    def rule(g, h):
        if g < kR and h < kR:
            yield 0, R.products[g][h]
        elif g >= kR and h >= kR:
            yield kR, S.products[g - kR][h - kR]

    return _block_ring(name or f"{R.name}x{S.name}", orders, one, rule)


def trivial_extension(R):
    """R ⋉ R with (r, m)(r', m') = (rr', rm' + mr')."""
    kR = R.k
    orders = list(R.orders) * 2
    _check_order(orders)
    one = list(R.one) + [0] * kR

    def rule(g, h):
        (p, i), (q, j) = divmod(g, kR), divmod(h, kR)
        if p == 0 and q == 0:
            yield 0, R.products[i][j]
        elif p + q == 1:
            yield kR, R.products[i][j]

    return _block_ring(f"Triv({R.name})", orders, one, rule)


# -- subquotients (quotients and corners) ------------------------------------


class ElementMap:
    """Index-level map between a presented ring and an ambient ring.

    ``to_ambient[t]`` is the ambient index representing new element t;
    ``from_ambient[x]`` is the new index of ambient x, or -1 when undefined.
    """

    def __init__(self, source, target, table):
        self.source = source
        self.target = target
        self.table = np.asarray(table, dtype=np.int64)

    def __call__(self, a):
        i = self.table[self.source.index(a)]
        if i < 0:
            raise ValueError(f"{a} is outside the domain of the map")
        return self.target.element(i)

    def image(self, S):
        mem = _as_members(self.source, S)
        out = self.table[mem]
        if (out < 0).any():
            raise ValueError("set leaves the domain of the map")
        return ElementSet(self.target, out)


def _subquotient(R, gens, ideal, one_idx, name):
    """Present span(gens) modulo ``ideal`` (an ElementSet, additive subgroup) as a ring.

    The caller guarantees the result is a unital ring with identity ``one_idx``
    (a corner eRe, or R/I).  Returns (ring, forward map, backward map).
    """
    C = R.coords
    k = R.k
    gens = [int(g) for g in gens]
    m = len(gens)
    rows = [list(map(int, C[g])) + [int(t == j) for t in range(m)] for j, g in enumerate(gens)]
    rows += [[d if t == i else 0 for t in range(k)] + [0] * m for i, d in enumerate(R.orders)]
    rows += [list(map(int, C[g])) + [0] * m for g in ideal.gens]
    kernel = lattice_kernel(rows, k)
    diag, Vinv = smith_form(kernel, m)
    if any(d == 0 for d in diag):
        raise AssertionError("relation lattice is not of full rank")

    rep = R.add_idx(np.arange(R.order)[:, None], ideal.members[None, :]).min(axis=1)
    new_orders, new_gens = [], []
    for t, d in enumerate(diag):
        if d == 1:
            continue
        vec = [sum(Vinv[t][j] * int(C[gens[j]][i]) for j in range(m)) for i in range(k)]
        new_gens.append(int(rep[R.to_index(vec)]))
        new_orders.append(d)
    kq = len(new_gens)
    nq = math.prod(new_orders)
    limits.require_order(nq, "constructed ring")
    if kq:
        strides = np.cumprod([1] + new_orders[:-1])
        idx = np.arange(nq)
        QC = np.stack([(idx // s) % d for s, d in zip(strides, new_orders)], axis=1)
        G = C[new_gens]
        images = rep[R.to_index(QC @ G)]
    else:
        QC = np.zeros((1, 0), dtype=np.int64)
        images = np.array([rep[0]])
    lookup = np.full(R.order, -1, dtype=np.int64)
    lookup[images] = np.arange(nq)
    if len(np.unique(images)) != nq:
        raise AssertionError("subquotient presentation is not injective")
    fwd = lookup[rep]

    def coords_of(x):
        return tuple(int(c) for c in QC[fwd[int(x)]])

    products = [[coords_of(rep[R.mul[a, b]]) for b in new_gens] for a in new_gens]
    ring = FiniteRing(name, new_orders, coords_of(rep[one_idx]), products)
    return ring, images, fwd


def quotient_ring(R, I, name=None):
    """R/I with minimal coset representatives; returns (ring, projection)."""
    require_ideal(R, I, "ideal")
    if not isinstance(I, ElementSet):
        I = ElementSet(R, _as_members(R, I), "ideal")
    Q, images, fwd = _subquotient(R, R.basis_idx, I, R.one_idx,
                                   name or f"{R.name}/I{len(I)}")
    return Q, ElementMap(R, Q, fwd)


def coset_lift(R, Q, proj):
    """Map sending each element of R/I to its minimal coset representative."""
    table = np.full(Q.order, -1, dtype=np.int64)
    for x in range(R.order - 1, -1, -1):
        table[proj.table[x]] = x
    return ElementMap(Q, R, table)


def corner_ring(R, e, name=None):
    """eRe with identity e; returns (ring, embedding into R)."""
    ei = R.index(e)
    if R.mul[ei, ei] != ei:
        raise NotIdempotent(f"{e} is not idempotent in {R.name}")
    b = R.basis_idx
    gens = R.mul[R.mul[ei, b], ei]
    zero = ElementSet(R, [0], "ideal", gens=[])
    ring, images, _ = _subquotient(R, gens, zero, ei, name or f"corner({R.name},{e})")
    return ring, ElementMap(ring, R, images)


# -- nonunital rings and the ideal extension ------------------------------------


@dataclass(frozen=True)
class NonUnitalRing:
    """Associative ring without identity, with actions of a unital ring R.

    ``lact[i][j]`` = coords of e_i . f_j (e_i in R, f_j in S);
    ``ract[i][j]`` = coords of f_i . e_j.
    """

    name: str
    orders: tuple
    products: tuple
    lact: tuple
    ract: tuple

    @property
    def k(self):
        return len(self.orders)

    @property
    def order(self):
        return math.prod(self.orders)

    def mul(self, a, b):
        return _bilinear(self.products, a, b, self.orders)

    def left(self, R, r, s):
        return _bilinear(self.lact, r, s, self.orders)

    def right(self, R, s, r):
        return _bilinear(self.ract, s, r, self.orders)


def _bilinear(table, a, b, orders):
    acc = [0] * len(orders)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if not y:
                continue
            for t, c in enumerate(table[i][j]):
                acc[t] += x * y * c
    return tuple(c % d for c, d in zip(acc, orders))


def _unit_vec(k, i):
    return tuple(int(t == i) for t in range(k))


def validate_nonunital(R, S):
    """Violations of associativity, bimodule laws and order compatibility."""
    bad = []
    kR, kS = R.k, S.k
    if len(S.lact) != kR or any(len(r) != kS for r in S.lact):
        return [("lact-shape", ())]
    if len(S.ract) != kS or any(len(r) != kR for r in S.ract):
        return [("ract-shape", ())]
    eR = [_unit_vec(kR, i) for i in range(kR)]
    fS = [_unit_vec(kS, i) for i in range(kS)]
    rmul = lambda a, b: elem_mul(R, RingElement(a), RingElement(b)).coords
    smul, L, Rt = S.mul, (lambda r, s: S.left(R, r, s)), (lambda s, r: S.right(R, s, r))
    od = S.orders
    for i in range(kS):
        for j in range(kS):
            v = S.products[i][j]
            if any((c * od[i]) % d for c, d in zip(v, od)) or any((c * od[j]) % d for c, d in zip(v, od)):
                bad.append(("additive-order", (i + 1, j + 1)))
    for i in range(kR):
        for j in range(kS):
            for v in (S.lact[i][j], S.ract[j][i]):
                if any((c * R.orders[i]) % d for c, d in zip(v, od)) or \
                        any((c * od[j]) % d for c, d in zip(v, od)):
                    bad.append(("action-order", (i + 1, j + 1)))
    for s in fS:
        if L(R.one, s) != s or Rt(s, R.one) != s:
            bad.append(("unital-action", (fS.index(s) + 1,)))
    for a, b, c in itertools.product(range(kS), repeat=3):
        if smul(smul(fS[a], fS[b]), fS[c]) != smul(fS[a], smul(fS[b], fS[c])):
            bad.append(("associativity", (a + 1, b + 1, c + 1)))
    for r, s, t in itertools.product(range(kR), range(kS), range(kS)):
        er, fs, ft = eR[r], fS[s], fS[t]
        if smul(L(er, fs), ft) != L(er, smul(fs, ft)):
            bad.append(("(rs)t=r(st)", (r + 1, s + 1, t + 1)))
        if smul(Rt(fs, er), ft) != smul(fs, L(er, ft)):
            bad.append(("(sr)t=s(rt)", (r + 1, s + 1, t + 1)))
        if Rt(smul(fs, ft), er) != smul(fs, Rt(ft, er)):
            bad.append(("(st)r=s(tr)", (r + 1, s + 1, t + 1)))
    for r, q, s in itertools.product(range(kR), range(kR), range(kS)):
        er, eq, fs = eR[r], eR[q], fS[s]
        if L(rmul(er, eq), fs) != L(er, L(eq, fs)):
            bad.append(("(rq)s=r(qs)", (r + 1, q + 1, s + 1)))
        if Rt(fs, rmul(er, eq)) != Rt(Rt(fs, er), eq):
            bad.append(("s(rq)=(sr)q", (r + 1, q + 1, s + 1)))
        if Rt(L(er, fs), eq) != L(er, Rt(fs, eq)):
            bad.append(("(rs)q=r(sq)", (r + 1, q + 1, s + 1)))
    return bad


def quasi_inverse_witness(S):
    """First s in S with no s' satisfying s + s' + ss' = 0, or None."""
    limits.require_order(S.order, "nonunital ring")
    n = S.order
    table = build_mul_table(S.orders, S.products).astype(np.int64)
    strides = np.cumprod([1] + list(S.orders[:-1])) if S.k else np.zeros(0, np.int64)
    idx = np.arange(n)
    C = np.stack([(idx // s) % d for s, d in zip(strides, S.orders)], axis=1) if S.k \
        else np.zeros((1, 0), np.int64)
    od = np.array(S.orders, dtype=np.int64)
    for s in range(n):
        total = (C[s][None, :] + C + C[table[s]]) % od
        if not (total == 0).all(axis=1).any():
            return tuple(int(c) for c in C[s])
    return None


def dorroh_extension(R, S, name=None):
    """R ⊕ S with (r, v)(s, w) = (rs, r.w + v.s + vw)."""
    bad = validate_nonunital(R, S)
    if bad:
        raise ActionIncompatible(f"{S.name}: {bad[0][0]} at {bad[0][1]}")
    w = quasi_inverse_witness(S)
    if w is not None:
        raise QuasiRegularityFails(w)
    kR, kS = R.k, S.k
    orders = list(R.orders) + list(S.orders)
    _check_order(orders)
    one = list(R.one) + [0] * kS

    def rule(g, h):
        if g < kR and h < kR:
            yield 0, R.products[g][h]
        elif g < kR:
            yield kR, S.lact[g][h - kR]
        elif h < kR:
            yield kR, S.ract[g - kR][h]
        else:
            yield kR, S.products[g - kR][h - kR]

    return _block_ring(name or f"I({R.name};{S.name})", orders, one, rule)


def zero_product_module(R, name=None):
    """R viewed as a nonunital ring with zero multiplication and its own actions."""
    k = R.k
    z = tuple(tuple(_zeros(k) for _ in range(k)) for _ in range(k))
    return NonUnitalRing(name or f"{R.name}0", R.orders, z, R.products, R.products)


# -- endomorphisms and skew power series ------------------------------------------


class Endomorphism:
    """Ring endomorphism given by the images of the basis generators."""

    def __init__(self, ring, images, name="f"):
        self.ring = ring
        self.name = name
        self.images = tuple(tuple(int(c) % d for c, d in zip(v, ring.orders)) for v in images)
        if len(self.images) != ring.k or any(len(v) != ring.k for v in self.images):
            raise InvalidEndomorphism("endomorphism needs one image per generator")
        bad = self.violations()
        if bad:
            raise InvalidEndomorphism(f"{name}: {bad[0][0]} at {bad[0][1]}")

    def apply(self, a):
        coords = a.coords if isinstance(a, RingElement) else tuple(a)
        acc = [0] * self.ring.k
        for x, img in zip(coords, self.images):
            for t, c in enumerate(img):
                acc[t] += x * c
        return RingElement(tuple(c % d for c, d in zip(acc, self.ring.orders)))

    def power(self, a, n):
        for _ in range(n):
            a = self.apply(a)
        return a

    def is_identity(self):
        return all(self.images[i] == _unit_vec(self.ring.k, i) for i in range(self.ring.k))

    def violations(self):
        R = self.ring
        bad = []
        if self.apply(R.one_element) != R.one_element:
            bad.append(("unital", ()))
        od = R.orders
        for i, img in enumerate(self.images):
            if any((c * od[i]) % d for c, d in zip(img, od)):
                bad.append(("additive-order", (i + 1,)))
        basis = R.basis()
        for i in range(R.k):
            for j in range(R.k):
                lhs = self.apply(RingElement(R.products[i][j]))
                rhs = elem_mul(R, self.apply(basis[i]), self.apply(basis[j]))
                if lhs != rhs:
                    bad.append(("multiplicative", (i + 1, j + 1)))
        return bad


def identity_endomorphism(R):
    return Endomorphism(R, [_unit_vec(R.k, i) for i in range(R.k)], "id")


def frobenius(R):
    """x -> x^p for a commutative ring of prime characteristic p."""
    char = math.lcm(*R.orders) if R.k else 1
    if char < 2 or any(char % q == 0 for q in range(2, int(math.isqrt(char)) + 1)):
        raise InvalidEndomorphism(f"{R.name} does not have prime characteristic")
    images = []
    for e in R.basis():
        x = R.one_element
        for _ in range(char):
            x = elem_mul(R, x, e)
        images.append(x.coords)
    return Endomorphism(R, images, "frob")


def truncated_skew_power_series(R, f, k):
    """R[x; f]/(x^k) with x r = f(r) x; generator (t, i) is e_i x^t."""
    if k < 1:
        raise ValueError("truncation order must be >= 1")
    kR = R.k
    orders = list(R.orders) * k
    _check_order(orders)
    one = list(R.one) + [0] * (kR * (k - 1))
    twisted = [[f.power(e, s).coords for e in R.basis()] for s in range(k)]

    def rule(g, h):
        (s, a), (t, b) = divmod(g, kR), divmod(h, kR)
        if s + t < k:
            basis = R.basis()
            yield (s + t) * kR, elem_mul(R, basis[a], RingElement(twisted[s][b])).coords

    label = "x" if f.is_identity() else f"x;{f.name}"
    return _block_ring(f"{R.name}[{label}]/(x^{k})", orders, one, rule)


def power_series_ideal(R, f, k):
    """The ideal (x) of R[x; f]/(x^k) as a nonunital ring with R-actions."""
    kR = R.k
    basis = R.basis()
    twisted = [[f.power(e, s).coords for e in basis] for s in range(k)]
    kS = kR * (k - 1)
    orders = tuple(R.orders) * (k - 1)

    def place(t, vec):
        out = [0] * kS
        if 1 <= t < k:
            out[(t - 1) * kR:t * kR] = vec
        return tuple(out)

    prods, lact, ract = [], [], []
    for g in range(kS):
        s, a = divmod(g, kR)
        s += 1
        prods.append(tuple(place(s + t + 1, elem_mul(R, basis[a], RingElement(twisted[s][b])).coords)
                           for t, b in (divmod(h, kR) for h in range(kS))))
        ract.append(tuple(place(s, elem_mul(R, basis[a], RingElement(twisted[s][j])).coords)
                          for j in range(kR)))
    for i in range(kR):
        lact.append(tuple(place(t + 1, elem_mul(R, basis[i], basis[b]).coords)
                          for t, b in (divmod(h, kR) for h in range(kS))))
    label = "x" if f.is_identity() else f"x;{f.name}"
    return NonUnitalRing(f"({label})_{R.name}_{k}", orders, tuple(prods), tuple(lact), tuple(ract))


# -- localization and subdirect products ----------------------------------------------


@dataclass
class Localization:
    ring: FiniteRing
    inverses: dict


def central_regular_localization(R, M):
    """M^{-1}R for central regular M; in a finite ring this is R itself.

    Returns the ring with a certificate mapping each m to m^{-1}, which shows
    M lies in U(R) ∩ Z(R) so every fraction a/m is already the element a m^{-1}.
    """
    mem = [int(x) for x in _as_members(R, M)]
    b = R.basis_idx
    inverses = {}
    for m in mem:
        el = R.element(m)
        if not (R.mul[m, b] == R.mul[b, m]).all():
            raise NotCentral(f"{el} is not central in {R.name}")
        if (R.mul[m] == 0).sum() > 1 or (R.mul[:, m] == 0).sum() > 1:
            raise NotRegular(f"{el} is a zero divisor in {R.name}")
        inv = R.inverse_idx(m)
        if inv is None:
            raise AssertionError(f"central regular {el} is not a unit")
        inverses[el] = R.element(inv)
    return Localization(R, inverses)


def subdirect_check(R, I, K):
    """True iff I ∩ K = 0, i.e. R is a subdirect product of R/I and R/K."""
    require_ideal(R, I, "ideal")
    require_ideal(R, K, "ideal")
    common = np.intersect1d(_as_members(R, I), _as_members(R, K))
    return len(common) == 1 and common[0] == 0


# -- RINGSPEC-style sub-formats ----------------------------------------------------


def _content(text):
    for n, raw in enumerate(text.splitlines(), start=1):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield n, raw, s


def parse_endomorphism(R, text):
    """``endo <name>`` / ``map i : c1 .. ck`` for every generator / ``end``."""
    lines = list(_content(text))
    if not lines or not lines[0][2].startswith("endo"):
        raise MalformedLine(lines[0][0] if lines else 0, lines[0][1] if lines else "", "expected 'endo'")
    name = lines[0][2].split()[1] if len(lines[0][2].split()) > 1 else "f"
    images = {}
    ended = False
    for n, raw, s in lines[1:]:
        if ended:
            raise MalformedLine(n, raw, "content after 'end'")
        if s == "end":
            ended = True
            continue
        head, _, rest = s.partition(":")
        parts = head.split()
        if len(parts) != 2 or parts[0] != "map":
            raise MalformedLine(n, raw)
        i = int(parts[1])
        vec = [int(t) for t in rest.split()]
        if len(vec) != R.k:
            raise BadArity(n, R.k, len(vec))
        if i in images:
            raise MalformedLine(n, raw, "duplicate map line")
        images[i] = vec
    if not ended:
        raise MalformedLine(lines[-1][0], lines[-1][1], "missing 'end'")
    missing = [i for i in range(1, R.k + 1) if i not in images]
    if missing:
        raise MalformedLine(0, "", f"missing 'map {missing[0]}' line")
    return Endomorphism(R, [images[i] for i in range(1, R.k + 1)], name)


def serialize_endomorphism(f):
    out = [f"endo {f.name}"]
    out += [" ".join([f"map {i + 1} :", *map(str, v)]) for i, v in enumerate(f.images)]
    out.append("end")
    return "\n".join(out) + "\n"


def parse_nonunital(text, base_k):
    """``nring <name>`` / ``orders`` / ``mul`` / ``lact`` / ``ract`` lines / ``end``."""
    lines = list(_content(text))
    if not lines or lines[0][2].split()[0] != "nring":
        raise MalformedLine(lines[0][0] if lines else 0, lines[0][1] if lines else "", "expected 'nring'")
    head = lines[0][2].split()
    if len(head) != 2:
        raise MalformedLine(lines[0][0], lines[0][1], "nring name must be one token")
    name = head[1]
    if len(lines) < 2 or lines[1][2].split()[0] != "orders":
        raise MalformedLine(lines[1][0] if len(lines) > 1 else 0, "", "expected 'orders'")
    orders = [int(t) for t in lines[1][2].split()[1:]]
    kS = len(orders)
    tables = {"mul": {}, "lact": {}, "ract": {}}
    ended = False
    for n, raw, s in lines[2:]:
        if ended:
            raise MalformedLine(n, raw, "content after 'end'")
        if s == "end":
            ended = True
            continue
        head, _, rest = s.partition(":")
        parts = head.split()
        if len(parts) != 3 or parts[0] not in tables:
            raise MalformedLine(n, raw)
        i, j = int(parts[1]), int(parts[2])
        vec = [int(t) for t in rest.split()]
        if len(vec) != kS:
            raise BadArity(n, kS, len(vec))
        if (i, j) in tables[parts[0]]:
            raise DuplicateProduct(n, i, j)
        tables[parts[0]][(i, j)] = tuple(vec)
    if not ended:
        raise MalformedLine(lines[-1][0], lines[-1][1], "missing 'end'")

    def grab(kind, rows, cols):
        out = []
        for i in range(1, rows + 1):
            row = []
            for j in range(1, cols + 1):
                if (i, j) not in tables[kind]:
                    raise MissingProduct(i, j)
                row.append(tables[kind][(i, j)])
            out.append(tuple(row))
        return tuple(out)

    return NonUnitalRing(name, tuple(orders), grab("mul", kS, kS),
                         grab("lact", base_k, kS), grab("ract", kS, base_k))


def serialize_nonunital(S):
    out = [f"nring {S.name}", " ".join(["orders", *map(str, S.orders)])]
    for kind, table in (("mul", S.products), ("lact", S.lact), ("ract", S.ract)):
        for i, row in enumerate(table):
            for j, v in enumerate(row):
                out.append(" ".join([f"{kind} {i + 1} {j + 1} :", *map(str, v)]))
    out.append("end")
    return "\n".join(out) + "\n"
