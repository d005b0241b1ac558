"""Exception hierarchy shared by every ringlab module."""


class RingLabError(Exception):
    """Base class for all ringlab errors."""


class MalformedLine(RingLabError):
    def __init__(self, lineno, text, why="malformed line"):
        self.lineno = lineno
        self.text = text
        super().__init__(f"line {lineno}: {why}: {text!r}")


class MissingProduct(RingLabError):
    def __init__(self, i, j):
        self.pair = (i, j)
        super().__init__(f"missing product line 'mul {i} {j}'")


class DuplicateProduct(RingLabError):
    def __init__(self, lineno, i, j):
        self.lineno = lineno
        self.pair = (i, j)
        super().__init__(f"line {lineno}: duplicate product 'mul {i} {j}'")


class BadArity(RingLabError):
    def __init__(self, lineno, expected, got):
        self.lineno = lineno
        super().__init__(f"line {lineno}: expected {expected} coordinates, got {got}")


class DimensionMismatch(RingLabError):
    pass


class OrderLimitExceeded(RingLabError):
    def __init__(self, order, limit, what="ring"):
        self.order = order
        self.limit = limit
        super().__init__(f"{what} of order {order} exceeds the limit {limit}")


class MalformedTarget(RingLabError):
    pass


class LatticeExplosion(RingLabError):
    def __init__(self, bound):
        self.bound = bound
        super().__init__(f"right-ideal lattice exceeds {bound} members")


class NotIdempotent(RingLabError):
    pass


class InvalidEndomorphism(RingLabError):
    pass


class QuasiRegularityFails(RingLabError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"element {witness} has no quasi-inverse s' with s+s'+ss'=0")


class ActionIncompatible(RingLabError):
    pass


class NotRegular(RingLabError):
    pass


class NotCentral(RingLabError):
    pass


class UnknownTheorem(RingLabError):
    pass


class EmptyCorpus(RingLabError):
    pass


class InsufficientCorpus(RingLabError):
    def __init__(self, ids):
        self.ids = tuple(ids)
        super().__init__("no corpus ring satisfies the hypothesis of: " + ", ".join(self.ids))


class UnknownPredicate(RingLabError):
    def __init__(self, name, col=None):
        self.name = name
        self.col = col
        where = f" at col {col}" if col is not None else ""
        super().__init__(f"unknown predicate {name!r}{where}")


class ExpressionSyntaxError(RingLabError):
    def __init__(self, msg, col):
        self.col = col
        super().__init__(f"{msg} at col {col}")
