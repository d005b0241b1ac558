"""Ring-class predicates with witnesses.

Every predicate returns a :class:`Verdict`; a false verdict carries the first
witness in canonical element order.  The zero ring satisfies everything.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import limits
from .errors import LatticeExplosion, OrderLimitExceeded, UnknownPredicate
from .ideals import (
    ElementSet,
    annihilator,
    center_mask,
    gen_product_in,
    gen_product_is_zero,
    idempotent_mask,
    maximal_right_ideals,
    nil_mask,
    principal_gens,
    radical_mask,
    require_ideal,
    right_ideals,
    sandwich,
    span,
    two_sided_ideals,
    _as_members,
)


@dataclass(frozen=True)
class Verdict:
    value: bool
    witness: tuple | None = None
    note: str = ""

    def __post_init__(self):
        if self.value and self.witness is not None:
            raise ValueError("a true verdict carries no witness")
        if not self.value and self.witness is None:
            raise ValueError("a false verdict needs a witness")

    def __bool__(self):
        return self.value

    def witness_str(self):
        return ";".join(str(e) for e in self.witness) if self.witness else ""


TRUE = Verdict(True)


def _false(R, *idx, note=""):
    return Verdict(False, tuple(R.element(i) for i in idx), note)


def _memo(R, key, fn):
    if key not in R._memo:
        R._memo[key] = fn()
    return R._memo[key]


def _first_pair(bad):
    flat = np.flatnonzero(bad)
    if not len(flat):
        return None
    return divmod(int(flat[0]), bad.shape[1])


def _block(N, per_row):
    return max(1, (1 << 23) // max(1, N * per_row))


def is_commutative(R):
    def run():
        N = R.order
        step = _block(N, 1)
        for lo in range(0, N, step):
            bad = R.mul[lo:lo + step] != R.mulT[lo:lo + step]
            hit = _first_pair(bad)
            if hit:
                return _false(R, lo + hit[0], hit[1])
        return TRUE
    return _memo(R, "commutative", run)


def is_reversible(R):
    """ab = 0 implies ba = 0."""
    def run():
        N = R.order
        step = _block(N, 1)
        for lo in range(0, N, step):
            bad = (R.mul[lo:lo + step] == 0) & (R.mulT[lo:lo + step] != 0)
            hit = _first_pair(bad)
            if hit:
                return _false(R, lo + hit[0], hit[1])
        return TRUE
    return _memo(R, "reversible", run)


def is_j_reversible(R):
    """ab = 0 implies ba in J(R)."""
    def run():
        J = radical_mask(R)
        N = R.order
        step = _block(N, 1)
        for lo in range(0, N, step):
            bad = (R.mul[lo:lo + step] == 0) & ~J[R.mulT[lo:lo + step]]
            hit = _first_pair(bad)
            if hit:
                return _false(R, lo + hit[0], hit[1])
        return TRUE
    return _memo(R, "j-reversible", run)


def sandwich_scan(R, premise, conclusion):
    """First (a, b) with aRb inside ``premise`` but bRa not inside ``conclusion``.

    Both masks must be additive subgroups: then aRb lies in the premise iff
    a e_i b does for every basis generator e_i, and likewise for bRa, so each
    a costs O(k |R|) instead of O(|R|^2).
    """
    N = R.order
    g = R.basis_idx
    k = len(g)
    if k == 0:
        return None
    left = R.mul[:, g]   # left[a, i] = a e_i
    right = R.mul[g, :]  # right[j, a] = e_j a
    step = max(1, (1 << 22) // (N * k))
    for lo in range(0, N, step):
        hi = min(N, lo + step)
        xs = left[lo:hi]                       # (B, k)
        Z = premise[R.mul[xs]].all(axis=1)     # (B, N): a e_i b in P for all i
        ys = right[:, lo:hi].T                 # (B, k): e_j a
        W = conclusion[R.mulT[ys]].all(axis=1)  # (B, N): b e_j a in Q for all j
        hit = _first_pair(Z & ~W)
        if hit:
            return lo + hit[0], hit[1]
    return None


def _bra_witness(R, a, b, conclusion):
    bra = R.mul[R.mul[b], a]  # over all r
    return int(np.flatnonzero(~conclusion[bra])[0])


def _zero_mask(R):
    z = np.zeros(R.order, dtype=bool)
    z[0] = True
    return z


def is_reflexive(R):
    """aRb = 0 implies bRa = 0; witness (a, b)."""
    def run():
        z = _zero_mask(R)
        hit = sandwich_scan(R, z, z)
        return TRUE if hit is None else _false(R, *hit)
    return _memo(R, "reflexive", run)


def is_j_reflexive(R):
    """aRb = 0 implies bRa inside J(R); witness (a, b, r) with bra outside J."""
    def run():
        J = radical_mask(R)
        hit = sandwich_scan(R, _zero_mask(R), J)
        if hit is None:
            return TRUE
        a, b = hit
        return _false(R, a, b, _bra_witness(R, a, b, J))
    return _memo(R, "j-reflexive", run)


def ideal_is_reflexive(R, I):
    """aRb inside I implies bRa inside I; witness (a, b, r)."""
    require_ideal(R, I, "ideal")
    m = np.zeros(R.order, dtype=bool)
    m[_as_members(R, I)] = True
    hit = sandwich_scan(R, m, m)
    if hit is None:
        return TRUE
    a, b = hit
    return _false(R, a, b, _bra_witness(R, a, b, m))


def ideal_is_semiprime(R, I):
    """aRa inside I implies a in I; witness a."""
    require_ideal(R, I, "ideal")
    m = np.zeros(R.order, dtype=bool)
    m[_as_members(R, I)] = True
    g = R.basis_idx
    ar = np.arange(R.order)
    # a e_i a for all a, i
    inside = m[R.mul[R.mul[:, g], ar[:, None]]].all(axis=1)
    bad = np.flatnonzero(inside & ~m)
    return TRUE if not len(bad) else _false(R, bad[0])


def is_reduced(R):
    def run():
        bad = np.flatnonzero(nil_mask(R))
        bad = bad[bad != 0]
        return TRUE if not len(bad) else _false(R, bad[0])
    return _memo(R, "reduced", run)


def is_symmetric(R):
    """abc = 0 implies acb = 0; witness (a, b, c).  Cubic in |R|."""
    def run():
        limits.require_cubic(R.order, "symmetric-ring test")
        for a in range(R.order):
            X = R.mul[R.mul[a]]          # X[b, c] = (ab)c
            hit = _first_pair((X == 0) & (X.T != 0))  # X.T[b, c] = (ac)b
            if hit:
                return _false(R, a, *hit)
        return TRUE
    return _memo(R, "symmetric", run)


def is_abelian(R):
    """All idempotents central; witness the first non-central idempotent."""
    def run():
        bad = np.flatnonzero(idempotent_mask(R) & ~center_mask(R))
        return TRUE if not len(bad) else _false(R, bad[0])
    return _memo(R, "abelian", run)


def is_boolean(R):
    def run():
        bad = np.flatnonzero(~idempotent_mask(R))
        return TRUE if not len(bad) else _false(R, bad[0])
    return _memo(R, "boolean", run)


def clean_counts(R):
    """Number of ways to write each element as idempotent + unit."""
    U = R.unit_mask
    counts = np.zeros(R.order, dtype=np.int64)
    ar = np.arange(R.order)
    for e in np.flatnonzero(idempotent_mask(R)):
        counts += U[R.sub_idx(ar, e)]
    return counts


def is_uniquely_clean(R):
    def run():
        bad = np.flatnonzero(clean_counts(R) != 1)
        return TRUE if not len(bad) else _false(R, bad[0])
    return _memo(R, "uniquely-clean", run)


def _row_image_masks(R, idx):
    """Masks of eR for each index e (the row image of left multiplication)."""
    out = {}
    for e in idx:
        m = np.zeros(R.order, dtype=bool)
        m[R.mul[e]] = True
        out[np.packbits(m).tobytes()] = int(e)
    return out


def _col_image_masks(R, idx):
    out = {}
    for e in idx:
        m = np.zeros(R.order, dtype=bool)
        m[R.mul[:, e]] = True
        out[np.packbits(m).tobytes()] = int(e)
    return out


def _annihilator_closure(R, table):
    """All intersections of the single-element annihilators given by ``table == 0``.

    Maps mask bytes -> (mask, subset of elements whose annihilator it is).
    """
    bound = limits.current.lattice_bound
    singles = {}
    for x in range(R.order):
        m = table[x] == 0
        key = np.packbits(m).tobytes()
        singles.setdefault(key, (m, (x,)))
    closure = dict(singles)
    queue = list(closure.values())
    single_list = list(singles.values())
    while queue:
        m, xs = queue.pop()
        for sm, sx in single_list:
            n = m & sm
            key = np.packbits(n).tobytes()
            if key not in closure:
                closure[key] = (n, tuple(sorted(set(xs + sx))))
                queue.append(closure[key])
                if len(closure) > bound:
                    raise LatticeExplosion(bound)
    return closure


def is_baer(R, mode="standard"):
    """Baer test.

    ``standard``: every right annihilator r(X) is eR and every left annihilator
    l(X) is Re for an idempotent e; the witness is the subset X.
    ``paper-literal``: for every b, l(bR) = eR for an idempotent e; witness b.
    """
    if mode not in ("standard", "paper-literal"):
        raise ValueError(f"unknown Baer mode {mode!r}")
    key = "baer" if mode == "standard" else "paper-baer"

    def run():
        limits.require_cubic(R.order, "Baer test")
        idem = np.flatnonzero(idempotent_mask(R))
        eR = _row_image_masks(R, idem)
        if mode == "paper-literal":
            g = R.basis_idx
            for b in range(R.order):
                bR_gens = R.mul[b, g]
                m = (R.mul[:, bR_gens] == 0).all(axis=1)  # a (b e_j) = 0 for all j
                if np.packbits(m).tobytes() not in eR:
                    return _false(R, b, note="l(bR) is not eR")
            return TRUE
        for key_, (m, xs) in sorted(_annihilator_closure(R, R.mul).items(),
                                     key=lambda kv: kv[1][1]):
            if key_ not in eR:
                return _false(R, *xs, note="right annihilator of X is not eR")
        Re = _col_image_masks(R, idem)
        for key_, (m, xs) in sorted(_annihilator_closure(R, R.mulT).items(),
                                     key=lambda kv: kv[1][1]):
            if key_ not in Re:
                return _false(R, *xs, note="left annihilator of X is not Re")
        return TRUE
    return _memo(R, key, run)


def is_quasi_duo(R):
    """Every maximal right ideal is two-sided; witness (r, m) with rm outside M."""
    def run():
        g = R.basis_idx
        for M in maximal_right_ideals(R):
            mask = M.mask
            gens = np.asarray(M.gens, dtype=np.int64)
            prods = R.mul[np.ix_(g, gens)]
            bad = np.argwhere(~mask[prods])
            if len(bad):
                i, j = bad[0]
                return _false(R, g[i], gens[j], note=f"maximal right ideal of size {len(M)}")
        return TRUE
    return _memo(R, "quasi-duo", run)


PREDICATES = {
    "commutative": is_commutative,
    "reduced": is_reduced,
    "symmetric": is_symmetric,
    "reversible": is_reversible,
    "reflexive": is_reflexive,
    "j-reversible": is_j_reversible,
    "j-reflexive": is_j_reflexive,
    "baer": lambda R: is_baer(R, "standard"),
    "paper-baer": lambda R: is_baer(R, "paper-literal"),
    "quasi-duo": is_quasi_duo,
    "uniquely-clean": is_uniquely_clean,
    "abelian": is_abelian,
    "boolean": is_boolean,
}


def evaluate(R, name):
    try:
        fn = PREDICATES[name]
    except KeyError:
        raise UnknownPredicate(name) from None
    if R.order == 1:
        return TRUE
    return fn(R)


@dataclass
class PredicateProfile:
    ring: str
    results: dict = field(default_factory=dict)

    def __getitem__(self, name):
        return self.results[name]


def profile(R, names=None):
    names = list(PREDICATES) if names is None else list(names)
    return PredicateProfile(R.name, {n: evaluate(R, n) for n in names})


# -- the six equivalent conditions ---------------------------------------------


@dataclass
class ConditionProfile:
    conditions: dict
    modes: dict
    agree: bool
    witnesses: dict = field(default_factory=dict)


def _cond2(R, J):
    """r(aR)Ra inside J and aR l(Ra) inside J, for every a."""
    N = R.order
    for a in range(N):
        aR = ElementSet(R, R.mul[a])
        Z = annihilator(R, aR, "right").members
        if len(Z) and not J[R.mul[R.mul[Z], a]].all():
            return False, (a,)
        Ra = ElementSet(R, R.mul[:, a])
        L = annihilator(R, Ra, "left").members
        if len(L) and not J[R.mul[R.mul[a][:, None], L[None, :]]].all():
            return False, (a,)
    return True, None


def _sandwich_zero(R, a, b):
    return sandwich(R, R.element(a), R.element(b)).is_zero()


def _sandwich_in(R, a, b, J):
    return bool(J[sandwich(R, R.element(a), R.element(b)).members].all())


def _cond3_exact(R, J):
    N = R.order
    zero = [[_sandwich_zero(R, a, b) for b in range(N)] for a in range(N)]
    inj = [[_sandwich_in(R, b, a, J) for b in range(N)] for a in range(N)]
    full = (1 << N) - 1
    zrow = [sum(1 << b for b in range(N) if zero[a][b]) for a in range(N)]
    wrow = [sum(1 << b for b in range(N) if inj[a][b]) for a in range(N)]
    for I in range(1, full + 1):
        zb = wb = full
        for a in range(N):
            if I >> a & 1:
                zb &= zrow[a]
                wb &= wrow[a]
        # some nonempty K inside zb but not inside wb exists iff zb has a bit outside wb
        if zb & ~wb:
            b = (zb & ~wb).bit_length() - 1
            a = next(a for a in range(N) if I >> a & 1 and not inj[a][b])
            return False, (a, b)
    return True, None


def _cond3_sampled(R, J, samples, rng):
    """Subset pairs with the hypothesis forced: K drawn inside r(IR)."""
    N = R.order
    for _ in range(samples):
        I = rng.sample(range(N), rng.randint(1, min(3, N)))
        ok = [b for b in range(N) if all(_sandwich_zero(R, a, b) for a in I)]
        K = rng.sample(ok, rng.randint(1, min(3, len(ok))))
        for a in I:
            for b in K:
                if not _sandwich_in(R, b, a, J):
                    return False, (a, b)
    return True, None


def _principal_ideals(R):
    seen = {}
    for a in range(R.order):
        mask, basis = span(R, principal_gens(R, a, "ideal"))
        seen.setdefault(np.packbits(mask).tobytes(), ElementSet.from_mask(R, mask, "ideal", basis))
    return list(seen.values())


def _pairwise_ideal_condition(ideals_, J):
    for I in ideals_:
        for K in ideals_:
            if gen_product_is_zero(I.ring, I, K) and not gen_product_in(I.ring, K, I, J):
                return False, (int(I.gens[0]) if I.gens else 0, int(K.gens[0]) if K.gens else 0)
    return True, None


def _cyclic_right_sample(R, samples, rng):
    out = []
    for _ in range(samples):
        a = rng.randrange(R.order)
        mask, basis = span(R, principal_gens(R, a, "right-ideal"))
        out.append(ElementSet.from_mask(R, mask, "right-ideal", basis))
    return out


def six_conditions_profile(R, subset_samples=200, seed=0):
    """Evaluate the six equivalent characterizations of J-reflexivity."""
    rng = random.Random(seed)
    J = radical_mask(R)
    conds, modes, wit = {}, {}, {}

    conds[1] = is_j_reflexive(R).value if R.order > 1 else True
    modes[1] = "exact"

    conds[2], wit[2] = _cond2(R, J)
    modes[2] = "exact"

    if R.order <= 8:
        conds[3], wit[3] = _cond3_exact(R, J)
        modes[3] = "exact"
    else:
        conds[3], wit[3] = _cond3_sampled(R, J, subset_samples, rng)
        modes[3] = f"sampled({subset_samples})"

    conds[4], wit[4] = _pairwise_ideal_condition(_principal_ideals(R), J)
    modes[4] = "exact"

    try:
        rights = right_ideals(R)
        conds[5], wit[5] = _pairwise_ideal_condition(rights, J)
        modes[5] = "lattice"
        conds[6], wit[6] = _pairwise_ideal_condition(two_sided_ideals(R), J)
        modes[6] = "lattice"
    except (LatticeExplosion, OrderLimitExceeded):
        sample = _cyclic_right_sample(R, subset_samples, rng)
        conds[5], wit[5] = _pairwise_ideal_condition(sample, J)
        modes[5] = f"sampled({subset_samples})"
        principal = _principal_ideals(R)
        conds[6], wit[6] = _pairwise_ideal_condition(principal, J)
        modes[6] = "principal"

    agree = len(set(conds.values())) == 1
    return ConditionProfile(conds, modes, agree, {k: v for k, v in wit.items() if v})
