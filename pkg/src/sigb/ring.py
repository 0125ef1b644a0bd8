"""Prime-field scalars and grevlex monomial arithmetic.

Monomials live in two representations:

* an exponent tuple ``(e_1, ..., e_n)`` -- the readable form used at API
  boundaries and in tests;
* a single integer *key* used everywhere performance matters.

The key of a monomial with exponents ``e_i`` and total degree ``d`` is

    key = d * S**n - sum(e_i * S**(i-1)),   S = 2**FIELD_BITS.

Two properties make this encoding the workhorse of the whole engine:
plain integer comparison of keys is exactly the graded reverse
lexicographical order, and ``key(a*b) == key(a) + key(b)``, so monomial
products inside reduction loops are single integer additions.
"""

from __future__ import annotations

from functools import reduce

from .errors import ArityMismatch, DegreeOverflow, InversionOfZero, NotDivisible

FIELD_BITS = 16
FIELD_BASE = 1 << FIELD_BITS
FIELD_MASK = FIELD_BASE - 1

LESS, EQUAL, GREATER = -1, 0, 1

DEFAULT_CHARACTERISTIC = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Arithmetic in GF(p) on plain ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_CHARACTERISTIC):
        if not is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p}")
        self.p = p

    def add(self, a: int, b: int) -> int:
        r = a + b
        return r - self.p if r >= self.p else r

    def sub(self, a: int, b: int) -> int:
        r = a - b
        return r + self.p if r < 0 else r

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return self.p - a if a else 0

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise InversionOfZero("0 has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class Ring:
    """A polynomial ring GF(p)[x_1..x_n] under grevlex.

    Holds the variable names and all monomial-key plumbing.  Rings are
    immutable and safe to share between threads.
    """

    __slots__ = ("field", "p", "names", "nvars", "_sn", "_var_keys")

    def __init__(self, names, p: int = DEFAULT_CHARACTERISTIC):
        self.field = PrimeField(p)
        self.p = p
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names) or not self.names:
            raise ValueError("variable names must be nonempty and distinct")
        self.nvars = len(self.names)
        self._sn = 1 << (FIELD_BITS * self.nvars)
        self._var_keys = tuple(
            self.key(tuple(1 if j == i else 0 for j in range(self.nvars)))
            for i in range(self.nvars)
        )

    # -- exponent tuple <-> key ------------------------------------------

    def key(self, exps) -> int:
        if len(exps) != self.nvars:
            raise ArityMismatch(f"expected {self.nvars} exponents, got {len(exps)}")
        deg = 0
        low = 0
        shift = 0
        for e in exps:
            if e < 0:
                raise ValueError("negative exponent")
            deg += e
            low += e << shift
            shift += FIELD_BITS
        if deg >= FIELD_BASE:
            raise DegreeOverflow(f"total degree {deg} exceeds {FIELD_MASK}")
        return deg * self._sn - low

    def exps(self, key: int) -> tuple:
        if key == 0:
            return (0,) * self.nvars
        deg = -(-key // self._sn)
        low = deg * self._sn - key
        out = []
        for _ in range(self.nvars):
            out.append(low & FIELD_MASK)
            low >>= FIELD_BITS
        return tuple(out)

    def deg(self, key: int) -> int:
        # ceil(key / S**n); exact because 0 <= deg*S**n - key < S**n
        return -(-key // self._sn)

    @property
    def one(self) -> int:
        return 0

    def var(self, i: int) -> int:
        return self._var_keys[i]

    # -- monomial operations on keys -------------------------------------

    def mmul(self, a: int, b: int) -> int:
        if self.deg(a) + self.deg(b) >= FIELD_BASE:
            raise DegreeOverflow("monomial product overflows degree field")
        return a + b

    def mdivides(self, a: int, b: int) -> bool:
        """Whether the monomial with key ``a`` divides the one with key ``b``."""
        diff = b - a
        if diff < 0:
            return False
        if diff == 0:
            return True
        # diff is a genuine monomial key iff the field digits of its low
        # part sum to its degree field (any borrow inflates the digit sum).
        deg = -(-diff // self._sn)
        low = deg * self._sn - diff
        if low < 0:
            return False
        s = 0
        for _ in range(self.nvars):
            s += low & FIELD_MASK
            low >>= FIELD_BITS
        return low == 0 and s == deg

    def mquo(self, b: int, a: int) -> int:
        """Key of b/a; raises NotDivisible when a does not divide b."""
        if not self.mdivides(a, b):
            raise NotDivisible("monomial quotient of a non-divisor")
        return b - a

    def mlcm(self, a: int, b: int) -> int:
        ea, eb = self.exps(a), self.exps(b)
        return self.key(tuple(map(max, ea, eb)))

    def mcoprime(self, a: int, b: int) -> bool:
        ea, eb = self.exps(a), self.exps(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    # -- rendering --------------------------------------------------------

    def monomial_str(self, key: int) -> str:
        exps = self.exps(key)
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.p == self.p
            and other.names == self.names
        )

    def __hash__(self):
        return hash((self.p, self.names))

    def __repr__(self):
        return f"Ring(vars={','.join(self.names)}, p={self.p})"


# -- tuple-level operations (the readable API mirrored by the key ops) ----


def _check_arity(a, b):
    if len(a) != len(b):
        raise ArityMismatch(f"arity {len(a)} vs {len(b)}")


def cmp_grevlex(a, b) -> int:
    """Compare exponent tuples under grevlex: total degree first, ties by
    the smaller exponent in the last differing position (scanning from the
    last variable)."""
    _check_arity(a, b)
    da, db = sum(a), sum(b)
    if da != db:
        return GREATER if da > db else LESS
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return GREATER if x < y else LESS
    return EQUAL


def monomial_lcm(a, b):
    _check_arity(a, b)
    return tuple(map(max, a, b))


def monomial_mul(a, b):
    _check_arity(a, b)
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b) -> bool:
    _check_arity(a, b)
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b, a):
    _check_arity(a, b)
    if not monomial_divides(a, b):
        raise NotDivisible("monomial quotient of a non-divisor")
    return tuple(y - x for x, y in zip(a, b))


def monomial_degree(a) -> int:
    return sum(a)
