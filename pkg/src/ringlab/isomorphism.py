"""Brute-force ring isomorphism by backtracking over generator images."""

from __future__ import annotations

import numpy as np

from .ideals import center_mask, idempotent_mask, nil_mask
from .ring import FiniteRing

MAX_ISO_ORDER = 64


def _additive_order(R):
    out = np.ones(R.order, dtype=np.int64)
    acc = np.arange(R.order)
    step = np.arange(R.order)
    while True:
        open_ = acc != 0
        if not open_.any():
            return out
        out[open_] += 1
        acc = R.add_idx(acc, step)
        acc[~open_] = 0


def signature(R):
    """Per-element invariants preserved by any ring isomorphism."""
    return np.stack([
        _additive_order(R),
        R.unit_mask.astype(np.int64),
        idempotent_mask(R).astype(np.int64),
        nil_mask(R).astype(np.int64),
        center_mask(R).astype(np.int64),
    ], axis=1)


def _apply(S, images, coords):
    acc = np.zeros(S.k, dtype=np.int64)
    for c, y in zip(coords, images):
        if c:
            acc += c * S.coords[y]
    return int(S.to_index(acc % np.array(S.orders)))


def find_isomorphism(R: FiniteRing, S: FiniteRing, limit=MAX_ISO_ORDER):
    """Return an index table phi with phi[x] the image of x, or None."""
    if R.order != S.order:
        return None
    if R.order > limit:
        raise ValueError(f"isomorphism search is capped at order {limit}")
    if R.order == 1:
        return np.zeros(1, dtype=np.int64)
    sigR, sigS = signature(R), signature(S)
    if sorted(map(tuple, sigR)) != sorted(map(tuple, sigS)):
        return None
    gens = R.basis_idx
    cands = [[y for y in range(S.order) if (sigS[y] == sigR[g]).all()] for g in gens]
    order = sorted(range(R.k), key=lambda i: len(cands[i]))
    images = [None] * R.k
    target_one = S.one_idx

    def consistent(assigned):
        for i in assigned:
            for j in assigned:
                prod = R.products[i][j]
                if all(c == 0 or t in assigned for t, c in enumerate(prod)):
                    partial = [images[t] if t in assigned else 0 for t in range(R.k)]
                    if _apply(S, partial, prod) != S.mul[images[i], images[j]]:
                        return False
        return True

    def finish():
        if _apply(S, images, R.one) != target_one:
            return None
        phi = S.to_index((R.coords @ S.coords[images]) % np.array(S.orders))
        if len(np.unique(phi)) != S.order:
            return None
        return phi

    def search(depth, assigned):
        if depth == R.k:
            return finish()
        i = order[depth]
        for y in cands[i]:
            images[i] = y
            assigned.add(i)
            if consistent(assigned):
                res = search(depth + 1, assigned)
                if res is not None:
                    return res
            assigned.discard(i)
        images[i] = None
        return None

    return search(0, set())


def is_isomorphism(R, S, phi):
    phi = np.asarray(phi)
    if len(phi) != R.order or len(np.unique(phi)) != S.order:
        return False
    a = np.arange(R.order)
    if not (phi[R.add_idx(a[:, None], a[None, :])] == S.add_idx(phi[:, None], phi[None, :])).all():
        return False
    return bool((phi[R.mul] == S.mul[phi[:, None], phi[None, :]]).all()) and phi[R.one_idx] == S.one_idx


def isomorphic(R, S, limit=MAX_ISO_ORDER):
    return find_isomorphism(R, S, limit) is not None
