"""Sparse polynomials over GF(p) and the classic (non-signature) reduction layer."""

from __future__ import annotations

from .errors import ZeroOperand
from .ring import Ring
from .stats import RunStats


class Polynomial:
    """A sparse polynomial: parallel lists of monomial keys (strictly
    decreasing in grevlex) and nonzero coefficients in [1, p)."""

    __slots__ = ("ring", "keys", "coeffs")

    def __init__(self, ring: Ring, keys, coeffs):
        self.ring = ring
        self.keys = keys
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls(ring, [], [])

    @classmethod
    def from_dict(cls, ring: Ring, acc: dict) -> "Polynomial":
        keys = sorted((k for k, c in acc.items() if c % ring.p), reverse=True)
        return cls(ring, keys, [acc[k] % ring.p for k in keys])

    @classmethod
    def from_terms(cls, ring: Ring, terms) -> "Polynomial":
        """Build from (coefficient, exponent-tuple) pairs; merges duplicates."""
        acc: dict = {}
        for c, exps in terms:
            k = ring.key(exps)
            acc[k] = (acc.get(k, 0) + c) % ring.p
        return cls.from_dict(ring, acc)

    def is_zero(self) -> bool:
        return not self.keys

    def __len__(self):
        return len(self.keys)

    @property
    def lt_key(self) -> int:
        return self.keys[0]

    @property
    def lc(self) -> int:
        return self.coeffs[0]

    def degree(self) -> int:
        return self.ring.deg(self.keys[0]) if self.keys else -1

    def is_homogeneous(self) -> bool:
        if not self.keys:
            return True
        d = self.ring.deg(self.keys[0])
        return all(self.ring.deg(k) == d for k in self.keys)

    def monic(self) -> "Polynomial":
        if not self.keys or self.coeffs[0] == 1:
            return self
        inv = self.ring.field.inv(self.coeffs[0])
        p = self.ring.p
        return Polynomial(self.ring, self.keys, [(c * inv) % p for c in self.coeffs])

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if c == 0:
            return Polynomial.zero(self.ring)
        if c == 1:
            return self
        return Polynomial(self.ring, self.keys, [(x * c) % p for x in self.coeffs])

    def mul_monomial(self, mkey: int) -> "Polynomial":
        if mkey == 0:
            return self
        return Polynomial(self.ring, [k + mkey for k in self.keys], self.coeffs)

    def terms(self):
        """Iterate (coefficient, exponent-tuple) pairs, lead term first."""
        for k, c in zip(self.keys, self.coeffs):
            yield c, self.ring.exps(k)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.keys == self.keys
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.ring, tuple(self.keys), tuple(self.coeffs)))

    def __str__(self):
        if not self.keys:
            return "0"
        parts = []
        for k, c in zip(self.keys, self.coeffs):
            m = self.ring.monomial_str(k)
            if m == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            else:
                parts.append(f"{c}*{m}")
        return "+".join(parts)

    __repr__ = __str__


def add_scaled(f: Polynomial, c: int, mkey: int, g: Polynomial, stats: RunStats | None = None) -> Polynomial:
    """Return f + c * m * g in canonical form.

    This is the single reduction-step primitive; it charges one coefficient
    multiplication per term of g to ``stats``.
    """
    ring = f.ring
    p = ring.p
    c %= p
    if c == 0 or g.is_zero():
        return f
    if stats is not None:
        stats.multiplications += len(g.keys)
    acc = dict(zip(f.keys, f.coeffs))
    for k, gc in zip(g.keys, g.coeffs):
        nk = k + mkey
        v = acc.get(nk)
        if v is None:
            acc[nk] = (c * gc) % p
        else:
            v = (v + c * gc) % p
            if v:
                acc[nk] = v
            else:
                del acc[nk]
    return Polynomial.from_dict(ring, acc)


def find_classic_reducer(tkey: int, basis) -> Polynomial | None:
    """First basis element (insertion order) whose lead divides the term."""
    for g in basis:
        if not g.is_zero() and g.ring.mdivides(g.lt_key, tkey):
            return g
    return None


def reduce(f: Polynomial, basis, mode: str = "full", stats: RunStats | None = None) -> Polynomial:
    """Classic polynomial reduction of f modulo a list of polynomials.

    ``mode="top"`` reduces the lead term only; ``mode="full"`` reduces every
    term.  The result is congruent to f modulo the ideal of ``basis``.
    """
    if mode not in ("top", "full"):
        raise ValueError(f"unknown reduction mode {mode!r}")
    ring = f.ring
    p = ring.p
    basis = [g for g in basis if not g.is_zero()]
    work = f
    done_keys: list = []
    done_coeffs: list = []
    while not work.is_zero():
        tkey = work.lt_key
        g = find_classic_reducer(tkey, basis)
        if g is None:
            if mode == "top":
                return Polynomial(ring, done_keys + work.keys, done_coeffs + work.coeffs)
            done_keys.append(tkey)
            done_coeffs.append(work.lc)
            work = Polynomial(ring, work.keys[1:], work.coeffs[1:])
            continue
        c = (-work.lc * ring.field.inv(g.lc)) % p
        work = add_scaled(work, c, tkey - g.lt_key, g, stats)
        if stats is not None:
            stats.s_reduction_steps += 1
    return Polynomial(ring, done_keys, done_coeffs)


def spoly(f: Polynomial, g: Polynomial, stats: RunStats | None = None) -> Polynomial:
    """S-polynomial (lam/lt f) * f - (lam/lt g) * g with lam the monic lcm
    of the lead monomials."""
    if f.is_zero() or g.is_zero():
        raise ZeroOperand("S-polynomial of the zero polynomial")
    ring = f.ring
    lam = ring.mlcm(f.lt_key, g.lt_key)
    fscaled = f.monic().mul_monomial(lam - f.lt_key)
    c = ring.p - 1
    return add_scaled(fscaled, c, lam - g.lt_key, g.monic(), stats)
