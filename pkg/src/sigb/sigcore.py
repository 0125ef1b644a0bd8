"""Sig-poly pairs, s-reduction, S-pairs, Koszul syzygies and rewrite orders.

Everything here operates on a :class:`SigBasis` (the basis G of sig-poly
pairs) and a :class:`SyzygySet` (the lead signatures H of known syzygies).
S-pair elimination is a single combined criterion: a multiplied basis
element is *rewritable* when it is not the canonical rewriter in its own
signature, where the rewriter candidates range over G and H and H members
are maximal in both rewrite orders.
"""

from __future__ import annotations

from heapq import heappush, heappop

import numpy as np

from .errors import NoRewriter, ZeroOperand
from .poly import Polynomial
from .ring import Ring
from .sigorder import ModuleOrder, Sig

REWRITE_KINDS = ("add", "rat")


class DivisorTable:
    """Append-only table of exponent vectors with vectorized divisor queries."""

    __slots__ = ("nvars", "_rows", "_n")

    def __init__(self, nvars: int):
        self.nvars = nvars
        self._rows = np.zeros((16, nvars), dtype=np.int32)
        self._n = 0

    def __len__(self):
        return self._n

    def append(self, exps) -> int:
        if self._n == self._rows.shape[0]:
            grown = np.zeros((2 * self._n, self.nvars), dtype=np.int32)
            grown[: self._n] = self._rows
            self._rows = grown
        self._rows[self._n] = exps
        self._n += 1
        return self._n - 1

    def divisor_rows(self, exps) -> np.ndarray:
        """Indices of stored vectors that divide ``exps`` componentwise."""
        if self._n == 0:
            return _EMPTY_ROWS
        sub = self._rows[: self._n]
        return np.flatnonzero((sub <= exps).all(axis=1))

    def multiple_rows(self, exps) -> np.ndarray:
        """Indices of stored vectors that are divisible by ``exps``."""
        if self._n == 0:
            return _EMPTY_ROWS
        sub = self._rows[: self._n]
        return np.flatnonzero((sub >= exps).all(axis=1))


_EMPTY_ROWS = np.zeros(0, dtype=np.intp)


class BasisElement:
    """One sig-poly pair of G.  The polynomial is stored monic."""

    __slots__ = ("sig", "poly", "ordinal", "lt_key", "lt_exps", "sig_exps")

    def __init__(self, sig: Sig, poly: Polynomial, ordinal: int):
        self.sig = sig
        self.poly = poly
        self.ordinal = ordinal
        self.lt_key = poly.lt_key
        self.lt_exps = np.asarray(poly.ring.exps(self.lt_key), dtype=np.int32)
        self.sig_exps = np.asarray(poly.ring.exps(sig[1]), dtype=np.int32)

    def __repr__(self):
        return f"<g{self.ordinal + 1}: sig=({self.sig[0]},{self.sig[1]}) lt={self.lt_key}>"


class SigBasis:
    """The basis G with divisor indexes over lead terms and signatures."""

    def __init__(self, ring: Ring, order: ModuleOrder, rewrite: str):
        if rewrite not in REWRITE_KINDS:
            raise ValueError(f"unknown rewrite order {rewrite!r}")
        self.ring = ring
        self.order = order
        self.rewrite = rewrite
        self.elements: list[BasisElement] = []
        self._lead_table = DivisorTable(ring.nvars)
        self._sig_tables: dict[int, DivisorTable] = {}
        self._sig_elements: dict[int, list[BasisElement]] = {}

    def __len__(self):
        return len(self.elements)

    def add(self, sig: Sig, poly: Polynomial) -> BasisElement:
        elt = BasisElement(sig, poly, len(self.elements))
        self.elements.append(elt)
        self._lead_table.append(elt.lt_exps)
        idx = sig[0]
        table = self._sig_tables.get(idx)
        if table is None:
            table = self._sig_tables[idx] = DivisorTable(self.ring.nvars)
            self._sig_elements[idx] = []
        table.append(elt.sig_exps)
        self._sig_elements[idx].append(elt)
        return elt

    def lead_divisors(self, exps) -> list[BasisElement]:
        rows = self._lead_table.divisor_rows(exps)
        elements = self.elements
        return [elements[i] for i in rows]

    def sig_divisors(self, sig: Sig) -> list[BasisElement]:
        table = self._sig_tables.get(sig[0])
        if table is None:
            return []
        rows = table.divisor_rows(np.asarray(self.ring.exps(sig[1]), dtype=np.int32))
        per_index = self._sig_elements[sig[0]]
        return [per_index[i] for i in rows]


class SyzygySet:
    """Lead signatures of known syzygies, kept minimal under divisibility.

    ``inserted_total`` counts every successful insertion over the whole run
    (reset-survivors included) while ``active_count`` is the size of the
    current minimal set; the benchmark tables are reproduced by the former.
    """

    def __init__(self, ring: Ring):
        self.ring = ring
        self._tables: dict[int, DivisorTable] = {}
        self._sig_keys: dict[int, list[int]] = {}
        self._active: dict[int, list[bool]] = {}
        self.inserted_total = 0
        self.active_count = 0

    def members(self) -> list[Sig]:
        out = []
        for idx, keys in self._sig_keys.items():
            act = self._active[idx]
            out.extend((idx, k) for k, a in zip(keys, act) if a)
        return out

    def divides(self, sig: Sig) -> bool:
        table = self._tables.get(sig[0])
        if table is None or not len(table):
            return False
        rows = table.divisor_rows(np.asarray(self.ring.exps(sig[1]), dtype=np.int32))
        if rows.size == 0:
            return False
        act = self._active[sig[0]]
        return any(act[i] for i in rows)

    def insert(self, sig: Sig) -> bool:
        """Add a syzygy lead signature; returns False when an active member
        already divides it.  Members the new signature strictly divides are
        deactivated so that no member divides another."""
        idx, mkey = sig
        exps = np.asarray(self.ring.exps(mkey), dtype=np.int32)
        table = self._tables.get(idx)
        if table is None:
            table = self._tables[idx] = DivisorTable(self.ring.nvars)
            self._sig_keys[idx] = []
            self._active[idx] = []
        else:
            act = self._active[idx]
            rows = table.divisor_rows(exps)
            if any(act[i] for i in rows):
                return False
            for i in table.multiple_rows(exps):
                if act[i]:
                    act[i] = False
                    self.active_count -= 1
        table.append(exps)
        self._sig_keys[idx].append(mkey)
        self._active[idx].append(True)
        self.inserted_total += 1
        self.active_count += 1
        return True

    def reset(self):
        """Drop the active set (between incremental steps); counters persist."""
        self._tables.clear()
        self._sig_keys.clear()
        self._active.clear()
        self.active_count = 0


def is_predictably_syzygy(sig: Sig, syz: SyzygySet) -> bool:
    """Whether a known syzygy signature divides ``sig``."""
    return syz.divides(sig)


def koszul_init(polys, order: ModuleOrder, syz: SyzygySet) -> SyzygySet:
    """Seed H with the lead signatures of the pairwise Koszul syzygies of
    the input polynomials: for i < j the module-order-larger of
    lt(f_i)*e_j and lt(f_j)*e_i."""
    lts = [f.lt_key for f in polys]
    for j in range(len(polys)):
        for i in range(j):
            s1 = (j, lts[i])
            s2 = (i, lts[j])
            if s1 == s2:
                continue
            syz.insert(order.max(s1, s2))
    return syz


def koszul_update(new_elt: BasisElement, others, order: ModuleOrder, syz: SyzygySet) -> int:
    """Record the principal-syzygy lead signatures between a freshly inserted
    basis element and existing ones; returns the number actually inserted.

    Keeping these signatures around is what lets the rewritability check
    discard almost all predictable zero reductions for non-incremental
    module orders, where no interreduction step reseeds H.
    """
    inserted = 0
    gi, gm = new_elt.sig
    glt = new_elt.lt_key
    for alpha in others:
        ai, am = alpha.sig
        s1 = (gi, gm + alpha.lt_key)
        s2 = (ai, am + glt)
        if s1 == s2:
            continue
        if syz.insert(order.max(s1, s2)):
            inserted += 1
    return inserted


# -- rewrite orders ----------------------------------------------------------


def cmp_rewrite(rewrite: str, a, b, order: ModuleOrder) -> int:
    """Compare two members of G or H under the rewrite order.

    Members of H (represented as plain signature tuples) are greater than
    every member of G.  Among G, ``add`` prefers the later insertion and
    ``rat`` the element whose lead term is smaller relative to its
    signature (cross-multiplied comparison, ties by signature).
    """
    a_is_h = not isinstance(a, BasisElement)
    b_is_h = not isinstance(b, BasisElement)
    if a_is_h or b_is_h:
        if a_is_h and b_is_h:
            return 0
        return 1 if a_is_h else -1
    if a is b:
        return 0
    if rewrite == "add":
        return 1 if a.ordinal > b.ordinal else -1
    ka = order.sort_key((a.sig[0], a.sig[1] + b.lt_key))
    kb = order.sort_key((b.sig[0], b.sig[1] + a.lt_key))
    if ka != kb:
        return 1 if ka > kb else -1
    ka = order.sort_key(a.sig)
    kb = order.sort_key(b.sig)
    if ka != kb:
        return 1 if ka > kb else -1
    return 1 if a.ordinal > b.ordinal else -1


def canonical_rewriter(sig: Sig, basis: SigBasis, syz: SyzygySet):
    """The rewrite-order-maximal member of G and H whose signature divides
    ``sig``.  Returns a plain signature tuple for an H member, otherwise a
    :class:`BasisElement`."""
    if syz.divides(sig):
        for member in syz.members():
            if member[0] == sig[0] and basis.ring.mdivides(member[1], sig[1]):
                return member
    candidates = basis.sig_divisors(sig)
    if not candidates:
        raise NoRewriter(f"no rewriter in signature {sig}")
    best = candidates[0]
    for cand in candidates[1:]:
        if cmp_rewrite(basis.rewrite, cand, best, basis.order) > 0:
            best = cand
    return best


def is_rewritable(mult_key: int, elt: BasisElement, basis: SigBasis, syz: SyzygySet) -> bool:
    """Whether the multiple x^mult * elt is not the canonical rewriter in
    its signature (and hence discardable)."""
    sig = (elt.sig[0], elt.sig[1] + mult_key)
    if syz.divides(sig):
        return True
    candidates = basis.sig_divisors(sig)
    if len(candidates) <= 1:
        return False
    rewrite = basis.rewrite
    order = basis.order
    best = candidates[0]
    for cand in candidates[1:]:
        if cmp_rewrite(rewrite, cand, best, order) > 0:
            best = cand
    return best is not elt


# -- S-pairs -----------------------------------------------------------------

SINGULAR = "singular"


class SPair:
    """A regular S-pair, oriented so that ``sig`` is the larger multiplied
    signature (the left side)."""

    __slots__ = ("sig", "left", "left_mult", "right", "right_mult", "lcm_key", "degree")

    def __init__(self, sig, left, left_mult, right, right_mult, lcm_key, degree):
        self.sig = sig
        self.left = left
        self.left_mult = left_mult
        self.right = right
        self.right_mult = right_mult
        self.lcm_key = lcm_key
        self.degree = degree

    def __repr__(self):
        return (f"SPair(g{self.left.ordinal + 1}, g{self.right.ordinal + 1}, "
                f"sig=({self.sig[0]},{self.sig[1]}))")


def make_spair(a: BasisElement, b: BasisElement, order: ModuleOrder, ring: Ring):
    """S-pair of two basis elements, or SINGULAR when both multiplied
    signatures coincide."""
    if a.poly.is_zero() or b.poly.is_zero():
        raise ZeroOperand("S-pair of a zero polynomial")
    lam = ring.mlcm(a.lt_key, b.lt_key)
    ma = lam - a.lt_key
    mb = lam - b.lt_key
    sa = (a.sig[0], a.sig[1] + ma)
    sb = (b.sig[0], b.sig[1] + mb)
    if sa == sb:
        return SINGULAR
    if order.sort_key(sa) > order.sort_key(sb):
        return SPair(sa, a, ma, b, mb, lam, ring.deg(lam))
    return SPair(sb, b, mb, a, ma, lam, ring.deg(lam))


def spair_rewritable(pair: SPair, basis: SigBasis, syz: SyzygySet) -> bool:
    """The combined elimination check: the pair is discarded when either
    multiplied generator fails to be the canonical rewriter in its
    signature (a dividing H member always wins, covering the syzygy
    criterion)."""
    return (
        is_rewritable(pair.left_mult, pair.left, basis, syz)
        or is_rewritable(pair.right_mult, pair.right, basis, syz)
    )


def is_singular_top_reducible(sig: Sig, poly: Polynomial, basis: SigBasis) -> bool:
    """Whether some basis multiple has the same lead term and the same
    signature as (sig, poly)."""
    if poly.is_zero():
        raise ZeroOperand("zero polynomial")
    ring = basis.ring
    t_exps = np.asarray(ring.exps(poly.lt_key), dtype=np.int32)
    for e in basis.lead_divisors(t_exps):
        mult = poly.lt_key - e.lt_key
        if (e.sig[0], e.sig[1] + mult) == sig:
            return True
    return False


# -- regular s-reduction -------------------------------------------------------


def find_regular_reducer(tkey: int, cap_sort_key, basis: SigBasis, syz: SyzygySet):
    """Pick the reducer for term ``tkey`` under the signature cap.

    Candidates are basis multiples with matching lead term and multiplied
    signature strictly below the cap (regular steps only).  Among them the
    non-rewritable one of minimal signature is chosen, mirroring the
    reducer choice of the linear-algebra path so both paths agree on every
    intermediate result.  Returns (element, multiplier key) or None.
    """
    ring = basis.ring
    t_exps = np.asarray(ring.exps(tkey), dtype=np.int32)
    candidates = basis.lead_divisors(t_exps)
    if not candidates:
        return None
    order = basis.order
    admissible = []
    for e in candidates:
        mult = tkey - e.lt_key
        skey = order.sort_key((e.sig[0], e.sig[1] + mult))
        if skey < cap_sort_key:
            admissible.append((skey, e.ordinal, mult, e))
    if not admissible:
        return None
    if len(admissible) == 1:
        _, _, mult, e = admissible[0]
        return e, mult
    admissible.sort(key=lambda t: (t[0], t[1]))
    for skey, _, mult, e in admissible:
        if not is_rewritable(mult, e, basis, syz):
            return e, mult
    _, _, mult, e = admissible[0]
    return e, mult


def regular_s_reduce(start_terms, cap_sig: Sig, mode: str, basis: SigBasis,
                     syz: SyzygySet, stats) -> Polynomial:
    """Regular s-reduction of a polynomial given as (key, coeff) pairs.

    Every reduction step uses a reducer whose multiplied signature is
    strictly below ``cap_sig``, so the signature of the element never
    changes.  ``mode="top"`` stops once the lead term is irreducible;
    ``mode="full"`` continues through the tail.
    """
    ring = basis.ring
    p = ring.p
    order = basis.order
    cap_key = order.sort_key(cap_sig)
    acc: dict = {}
    heap: list = []
    for k, c in start_terms:
        v = acc.get(k)
        if v is None:
            acc[k] = c % p
            heappush(heap, -k)
        else:
            v = (v + c) % p
            if v:
                acc[k] = v
            else:
                del acc[k]
    out_keys: list = []
    out_coeffs: list = []
    while heap:
        k = -heappop(heap)
        c = acc.get(k)
        if not c:
            continue
        found = find_regular_reducer(k, cap_key, basis, syz)
        if found is None:
            del acc[k]
            out_keys.append(k)
            out_coeffs.append(c)
            if mode == "top":
                tail = sorted(acc.items(), reverse=True)
                out_keys.extend(t[0] for t in tail)
                out_coeffs.extend(t[1] for t in tail)
                return Polynomial(ring, out_keys, out_coeffs)
            continue
        e, mult = found
        stats.s_reduction_steps += 1
        gkeys = e.poly.keys
        gcoeffs = e.poly.coeffs
        stats.multiplications += len(gkeys)
        cc = p - c
        for gk, gc in zip(gkeys, gcoeffs):
            nk = gk + mult
            v = acc.get(nk)
            if v is None:
                acc[nk] = (cc * gc) % p
                heappush(heap, -nk)
            else:
                v = (v + cc * gc) % p
                if v:
                    acc[nk] = v
                else:
                    del acc[nk]
    return Polynomial(ring, out_keys, out_coeffs)
