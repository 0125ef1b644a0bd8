"""Signatures (module monomials) and the compatible module-monomial orders.

A signature is a pair ``(index, monomial key)`` with 0-based generator
index; signatures are stored monic.  A :class:`ModuleOrder` turns a
signature into a totally ordered sort key, so every comparison in the
engine is a tuple comparison.
"""

from __future__ import annotations

from .errors import AmbiguousOrder
from .ring import LESS, EQUAL, GREATER, Ring

Sig = tuple  # (index: int, monomial key: int)

ORDER_KINDS = ("pot", "top", "dpot", "dtop", "ltpot", "ext1", "ext2")


def mul_sig(sig: Sig, mkey: int) -> Sig:
    return (sig[0], sig[1] + mkey)


def sig_divides(s: Sig, t: Sig, ring: Ring) -> bool:
    """s | t: same generator index and the monomial of s divides that of t."""
    return s[0] == t[0] and ring.mdivides(s[1], t[1])


class ModuleOrder:
    """One of the compatible extensions of grevlex to the free module.

    ``kind`` is one of pot, top, dpot, dtop, ltpot, ext1, ext2.  The orders
    that weigh generators (dpot/dtop/ltpot/ext1/ext2) need the generator
    context: lead-monomial keys and total degrees of the current input
    generators.  ``legacy_index_direction`` flips pot's index comparison so
    that lower indices win, the convention of the earliest incremental
    implementations; it defaults to off.
    """

    __slots__ = ("kind", "ring", "gen_lt_keys", "gen_degrees", "legacy_index_direction")

    def __init__(self, kind: str, ring: Ring, gen_lt_keys=None, gen_degrees=None,
                 legacy_index_direction: bool = False):
        if kind not in ORDER_KINDS:
            raise ValueError(f"unknown module order {kind!r}")
        self.kind = kind
        self.ring = ring
        self.gen_lt_keys = tuple(gen_lt_keys or ())
        self.gen_degrees = tuple(gen_degrees or ())
        self.legacy_index_direction = legacy_index_direction
        if kind in ("dpot", "dtop", "ext2") and not self.gen_degrees:
            raise ValueError(f"{kind} needs generator degrees")
        if kind in ("ltpot", "ext1") and not self.gen_lt_keys:
            raise ValueError(f"{kind} needs generator lead terms")
        if kind == "ext1" and len(set(self.gen_lt_keys)) != len(self.gen_lt_keys):
            raise AmbiguousOrder("ext1 needs pairwise distinct generator lead terms")

    def with_generators(self, gen_lt_keys, gen_degrees) -> "ModuleOrder":
        return ModuleOrder(self.kind, self.ring, gen_lt_keys, gen_degrees,
                           self.legacy_index_direction)

    def _index_key(self, i: int) -> int:
        return -i if self.legacy_index_direction else i

    def sort_key(self, sig: Sig):
        """Totally ordered key: bigger tuple means bigger signature."""
        i, m = sig
        kind = self.kind
        if kind == "pot":
            return (self._index_key(i), m)
        if kind == "top":
            return (m, self._index_key(i))
        if kind == "dpot":
            return (self.ring.deg(m) + self.gen_degrees[i], self._index_key(i), m)
        if kind == "dtop":
            return (self.ring.deg(m) + self.gen_degrees[i], m, self._index_key(i))
        if kind == "ltpot":
            return (m + self.gen_lt_keys[i], self._index_key(i), m)
        if kind == "ext1":
            return (m + self.gen_lt_keys[i], self.gen_lt_keys[i])
        # ext2
        return (self.ring.deg(m) + self.gen_degrees[i], m, i)

    def cmp(self, s: Sig, t: Sig) -> int:
        ks, kt = self.sort_key(s), self.sort_key(t)
        if ks < kt:
            return LESS
        if ks > kt:
            return GREATER
        return EQUAL

    def max(self, s: Sig, t: Sig) -> Sig:
        return s if self.sort_key(s) >= self.sort_key(t) else t

    def sig_str(self, sig: Sig) -> str:
        m = self.ring.monomial_str(sig[1])
        return f"e{sig[0] + 1}" if m == "1" else f"{m}*e{sig[0] + 1}"

    def __repr__(self):
        return f"ModuleOrder({self.kind})"
