"""Complexity guards shared by the enumeration kernels.

``max_order`` bounds every operation that materializes the element table,
``cubic_cap`` bounds operations cubic in |R| (right-ideal lattices, the
symmetric-ring test), ``lattice_bound`` aborts lattice enumeration.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass

from .errors import OrderLimitExceeded

DEFAULT_MAX_ORDER = 4096
DEFAULT_CUBIC_CAP = 512
DEFAULT_LATTICE_BOUND = 100_000
ENV_MAX_ORDER = "RINGLAB_MAX_ORDER"


@dataclass
class Limits:
    max_order: int = DEFAULT_MAX_ORDER
    cubic_cap: int = DEFAULT_CUBIC_CAP
    lattice_bound: int = DEFAULT_LATTICE_BOUND


def _from_env():
    lim = Limits()
    raw = os.environ.get(ENV_MAX_ORDER)
    if raw:
        lim.max_order = int(raw)
    return lim


current = _from_env()


@contextmanager
def override(**kw):
    """Temporarily replace fields of the active limits."""
    old = {name: getattr(current, name) for name in kw}
    for name, value in kw.items():
        setattr(current, name, value)
    try:
        yield current
    finally:
        for name, value in old.items():
            setattr(current, name, value)


def require_order(order, what="ring"):
    if order > current.max_order:
        raise OrderLimitExceeded(order, current.max_order, what)


def require_cubic(order, what="cubic enumeration"):
    cap = min(current.cubic_cap, current.max_order)
    if order > cap:
        raise OrderLimitExceeded(order, cap, what)
