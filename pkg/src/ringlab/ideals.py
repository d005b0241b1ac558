"""Annihilators, generated ideals, the Jacobson radical and right-ideal lattices.

Element sets are kept as sorted index arrays over the ring's canonical order.
Additive subgroups additionally carry a short list of additive generators;
by bilinearity, products of subgroups can be tested on those generators
instead of on every member.
"""

from __future__ import annotations

import numpy as np

from . import limits
from .errors import LatticeExplosion, MalformedTarget
from .ring import RingElement

KINDS = ("plain", "right-ideal", "left-ideal", "ideal")


class ElementSet:
    """Deduplicated, canonically ordered subset of a ring, tagged with a closure kind.

    Equality compares ring presentation and members; the kind is a label.
    """

    __slots__ = ("ring", "members", "kind", "_gens")

    def __init__(self, ring, members, kind="plain", gens=None):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        self.ring = ring
        self.members = np.unique(np.asarray(members, dtype=np.int64))
        self.kind = kind
        self._gens = gens

    @classmethod
    def from_mask(cls, ring, mask, kind="plain", gens=None):
        return cls(ring, np.flatnonzero(mask), kind, gens)

    @classmethod
    def of(cls, ring, elements, kind="plain"):
        return cls(ring, [ring.index(e) for e in elements], kind)

    @property
    def mask(self):
        m = np.zeros(self.ring.order, dtype=bool)
        m[self.members] = True
        return m

    @property
    def gens(self):
        """Additive generators (computed on demand)."""
        if self._gens is None:
            _, self._gens = span(self.ring, self.members)
        return self._gens

    def elements(self):
        return [self.ring.element(i) for i in self.members]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.elements())

    def __contains__(self, a):
        i = self.ring.index(a) if isinstance(a, RingElement) else int(a)
        j = np.searchsorted(self.members, i)
        return bool(j < len(self.members) and self.members[j] == i)

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return (self.ring.same_presentation(other.ring)
                and np.array_equal(self.members, other.members))

    def __hash__(self):
        return hash((self.ring.presentation(), self.members.tobytes()))

    def issubset(self, other):
        return bool(np.isin(self.members, other.members).all())

    def is_zero(self):
        return len(self.members) == 1 and self.members[0] == 0

    def __repr__(self):
        return f"ElementSet({self.ring.name}, n={len(self)}, kind={self.kind})"

    def serialize(self):
        lines = [f"kind: {self.kind}"] + [str(e) for e in self.elements()]
        return "\n".join(lines) + "\n"


def _as_members(R, X):
    if isinstance(X, ElementSet):
        return X.members
    items = list(X)
    if items and isinstance(items[0], RingElement):
        return np.array([R.index(e) for e in items], dtype=np.int64)
    return np.asarray(items, dtype=np.int64)


def span(R, gens, start=None):
    """Additive subgroup generated by ``gens`` (indices), optionally on top of a subgroup.

    Returns ``(mask, basis)`` where ``basis`` lists the generators that were
    actually needed (plus the basis of ``start`` when given as an ElementSet).
    """
    mask = np.zeros(R.order, dtype=bool)
    if start is None:
        members = np.zeros(1, dtype=np.int64)
        basis = []
    else:
        members = start.members
        basis = list(start.gens)
    mask[members] = True
    for g in np.asarray(gens, dtype=np.int64).ravel():
        g = int(g)
        if mask[g]:
            continue
        mult = R.multiples(g)
        members = np.unique(R.add_idx(members[:, None], mult[None, :]).ravel())
        mask[members] = True
        basis.append(g)
    return mask, basis


def is_additively_closed(R, X):
    mem = _as_members(R, X)
    if not len(mem) or 0 not in set(mem.tolist()):
        return False
    mask, _ = span(R, mem)
    return int(mask.sum()) == len(np.unique(mem))


def _closed_under(R, mask, gens, side):
    g = np.asarray(gens, dtype=np.int64)
    if not len(g):
        return True
    b = R.basis_idx
    if side in ("right", "both") and not mask[R.mul[np.ix_(g, b)]].all():
        return False
    if side in ("left", "both") and not mask[R.mul[np.ix_(b, g)]].all():
        return False
    return True


def is_ideal(R, X, kind="ideal"):
    """True when X is an additive subgroup closed under the multiplications of ``kind``."""
    mem = _as_members(R, X)
    if not len(mem):
        return False
    mask, basis = span(R, mem)
    if int(mask.sum()) != len(np.unique(mem)):
        return False
    side = {"right-ideal": "right", "left-ideal": "left", "ideal": "both"}[kind]
    return _closed_under(R, mask, basis, side)


def require_ideal(R, X, kind="ideal"):
    if not is_ideal(R, X, kind):
        raise MalformedTarget(f"given set is not a {kind} of {R.name}")


def annihilator(R, X, side):
    """r_R(X) = {a : Xa = 0} for side='right', l_R(X) = {b : bX = 0} for side='left'."""
    mem = _as_members(R, X)
    if not len(mem):
        raise ValueError("annihilator needs a nonempty set")
    limits.require_order(R.order)
    if side == "right":
        mask = (R.mul[mem] == 0).all(axis=0)
        kind = "right-ideal"
    elif side == "left":
        mask = (R.mulT[mem] == 0).all(axis=0)
        kind = "left-ideal"
    else:
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    return ElementSet.from_mask(R, mask, kind)


def sandwich(R, a, b):
    """The set {a r b : r in R}."""
    ai, bi = R.index(a), R.index(b)
    return ElementSet(R, R.mul[R.mul[ai], bi], "plain")


def principal_gens(R, a, kind):
    """Additive generators of the one/two-sided ideal generated by index a."""
    b = R.basis_idx
    if kind == "right-ideal":
        return R.mul[a, b]
    if kind == "left-ideal":
        return R.mul[b, a]
    return R.mul[R.mul[b, a][:, None], b[None, :]].ravel()


def generated(R, gens, kind):
    """Smallest right/left/two-sided ideal containing ``gens``."""
    if kind not in ("right-ideal", "left-ideal", "ideal"):
        raise ValueError(f"kind must be an ideal kind, not {kind!r}")
    mem = _as_members(R, gens)
    cand = [principal_gens(R, int(a), kind) for a in mem]
    cand = np.concatenate(cand) if cand else np.zeros(0, dtype=np.int64)
    mask, basis = span(R, cand)
    side = {"right-ideal": "right", "left-ideal": "left", "ideal": "both"}[kind]
    if not _closed_under(R, mask, basis, side):
        raise AssertionError(f"{R.name}: generated {kind} failed the closure re-check")
    return ElementSet.from_mask(R, mask, kind, gens=basis)


def set_product_is_zero(R, A, B):
    """True iff ab = 0 for all a in A, b in B.

    For additively closed A and B this is the same as the vanishing of the
    additive span of AB, since that span is generated by the products ab.
    """
    a, b = _as_members(R, A), _as_members(R, B)
    return bool((R.mul[np.ix_(a, b)] == 0).all())


def set_product_in(R, A, B, target):
    """True iff ab lies in ``target`` for all a in A, b in B.

    ``target`` must be additively closed, which makes this equivalent to the
    containment of the additive span of AB.
    """
    if not is_additively_closed(R, target):
        raise MalformedTarget("target set is not additively closed")
    tmask = np.zeros(R.order, dtype=bool)
    tmask[_as_members(R, target)] = True
    a, b = _as_members(R, A), _as_members(R, B)
    return bool(tmask[R.mul[np.ix_(a, b)]].all())


def radical_mask(R):
    """Boolean mask of J(R) = {a : 1 - ra is a unit for every r}."""
    if "J" not in R._memo:
        U = R.unit_mask
        om = R.one_minus
        N = R.order
        J = np.ones(N, dtype=bool)
        block = max(1, (1 << 22) // N)
        for lo in range(0, N, block):
            rows = R.mul[lo:lo + block]  # rows[r, a] = ra
            J &= U[om[rows]].all(axis=0)
        R._memo["J"] = J
    return R._memo["J"]


def jacobson_radical(R):
    return ElementSet.from_mask(R, radical_mask(R), "ideal")


def nil_mask(R):
    if "N" not in R._memo:
        N = R.order
        p = np.arange(N, dtype=np.int64)
        steps = max(1, (N - 1).bit_length()) + 1
        for _ in range(steps):
            p = R.mul[p, p].astype(np.int64)
        R._memo["N"] = p == 0
    return R._memo["N"]


def nil_elements(R):
    """N(R): elements with a^m = 0 for some m <= |R| (2^t >= |R| suffices)."""
    return ElementSet.from_mask(R, nil_mask(R), "plain")


def units(R):
    return ElementSet.from_mask(R, R.unit_mask, "plain")


def idempotent_mask(R):
    ar = np.arange(R.order)
    return R.mul[ar, ar] == ar


def idempotents(R):
    return ElementSet.from_mask(R, idempotent_mask(R), "plain")


def center_mask(R):
    b = R.basis_idx
    return (R.mul[:, b] == R.mulT[:, b]).all(axis=1)


def center(R):
    return ElementSet.from_mask(R, center_mask(R), "plain")


def central_idempotents(R):
    return ElementSet.from_mask(R, idempotent_mask(R) & center_mask(R), "plain")


def ideal_sum(R, I, K, kind=None):
    mask, basis = span(R, K.gens, start=I)
    return ElementSet.from_mask(R, mask, kind or I.kind, gens=basis)


def ideal_intersection(R, I, K, kind=None):
    return ElementSet(R, np.intersect1d(I.members, K.members), kind or I.kind)


def ideal_product(R, I, K):
    """Additive span of IK (a two-sided ideal when I, K are)."""
    gi, gk = np.asarray(I.gens, dtype=np.int64), np.asarray(K.gens, dtype=np.int64)
    prods = R.mul[np.ix_(gi, gk)].ravel() if len(gi) and len(gk) else np.zeros(0, np.int64)
    mask, basis = span(R, prods)
    kind = "ideal" if I.kind == K.kind == "ideal" else "plain"
    return ElementSet.from_mask(R, mask, kind, gens=basis)


def gen_product_is_zero(R, I, K):
    """IK = 0 for additive subgroups, tested on generators."""
    gi, gk = np.asarray(I.gens, dtype=np.int64), np.asarray(K.gens, dtype=np.int64)
    if not len(gi) or not len(gk):
        return True
    return bool((R.mul[np.ix_(gi, gk)] == 0).all())


def gen_product_in(R, I, K, target_mask):
    gi, gk = np.asarray(I.gens, dtype=np.int64), np.asarray(K.gens, dtype=np.int64)
    if not len(gi) or not len(gk):
        return True
    return bool(target_mask[R.mul[np.ix_(gi, gk)]].all())


def generator_span(R, gen_positions, kind="ideal"):
    """Ideal spanned by a subset of the presentation's basis generators."""
    gens = R.basis_idx[list(gen_positions)]
    mask, basis = span(R, gens)
    if kind != "plain":
        side = {"right-ideal": "right", "left-ideal": "left", "ideal": "both"}[kind]
        if not _closed_under(R, mask, basis, side):
            raise MalformedTarget(f"generators {list(gen_positions)} do not span a {kind}")
    return ElementSet.from_mask(R, mask, kind, gens=basis)


def is_nilpotent_ideal(R, I):
    """Return ``(nilpotent, index)``: least m with I^m = 0, or (False, None)."""
    require_ideal(R, I, "ideal")
    if not isinstance(I, ElementSet):
        I = ElementSet(R, _as_members(R, I), "ideal")
    if I.is_zero():
        return True, 1
    gi = np.asarray(I.gens, dtype=np.int64)
    cur_gens, size = gi, len(I)
    for m in range(2, len(I) + 1):
        prods = R.mul[np.ix_(cur_gens, gi)].ravel()
        mask, basis = span(R, prods)
        n = int(mask.sum())
        if n == 1:
            return True, m
        if n == size:
            return False, None
        cur_gens, size = np.asarray(basis, dtype=np.int64), n
    return False, None


# -- right-ideal lattice ------------------------------------------------------


def _lattice(R):
    if "lattice" in R._memo:
        return R._memo["lattice"]
    limits.require_cubic(R.order, "right-ideal lattice")
    bound = limits.current.lattice_bound
    seen = {}
    cyclic = []
    for a in range(R.order):
        mask, basis = span(R, R.mul[a, R.basis_idx])
        key = np.packbits(mask).tobytes()
        if key not in seen:
            seen[key] = (mask, basis)
            cyclic.append((mask, basis))
            if len(seen) > bound:
                raise LatticeExplosion(bound)
    queue = list(seen.values())
    while queue:
        mask, basis = queue.pop()
        for cmask, cbasis in cyclic:
            if not (cmask & ~mask).any():
                continue
            start = ElementSet.from_mask(R, mask, gens=basis)
            nmask, nbasis = span(R, cbasis, start=start)
            key = np.packbits(nmask).tobytes()
            if key not in seen:
                seen[key] = (nmask, nbasis)
                queue.append((nmask, nbasis))
                if len(seen) > bound:
                    raise LatticeExplosion(bound)
    out = [ElementSet.from_mask(R, m, "right-ideal", gens=b) for m, b in seen.values()]
    out.sort(key=lambda s: (len(s), s.members.tolist()))
    R._memo["lattice"] = out
    return out


def right_ideals(R):
    """All right ideals: join-closure of the cyclic right ideals aR (a in aR as 1 in R)."""
    return list(_lattice(R))


def maximal_right_ideals(R):
    lat = [I for I in _lattice(R) if len(I) < R.order]
    masks = [I.mask for I in lat]
    out = []
    for i, I in enumerate(lat):
        above = any(len(lat[j]) > len(I) and not (masks[i] & ~masks[j]).any()
                    for j in range(len(lat)))
        if not above:
            out.append(I)
    return out


def two_sided_ideals(R):
    """Every right ideal that is also a left ideal."""
    if "ideals" not in R._memo:
        out = []
        for I in _lattice(R):
            if _closed_under(R, I.mask, I.gens, "left"):
                out.append(ElementSet(R, I.members, "ideal", gens=I.gens))
        R._memo["ideals"] = out
    return list(R._memo["ideals"])
