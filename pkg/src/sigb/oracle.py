"""Classic Buchberger engine with the Product and Chain criteria.

This is the independent correctness oracle for the signature engines: it
shares only the scalar/monomial/polynomial layers with them and knows
nothing about signatures.
"""

from __future__ import annotations

from .poly import Polynomial, reduce as classic_reduce, spoly
from .ring import Ring
from .stats import RunStats


def _update(G, B, h, ring: Ring, use_criteria: bool):
    """Pair-set update in the Gebauer-Moeller style: new pairs of h against
    G pruned by the Product and Chain criteria, old pairs pruned by the
    Chain criterion, and basis elements with lead terms divisible by lt(h)
    dropped."""
    h_lt = h.lt_key

    C = list(G)
    D: list = []
    while C:
        g = C.pop(0)
        lam = ring.mlcm(h_lt, g.lt_key)
        if not use_criteria:
            D.append((g, lam))
            continue
        coprime = ring.mcoprime(h_lt, g.lt_key)
        if coprime or (
            not any(ring.mdivides(ring.mlcm(h_lt, g2.lt_key), lam) for g2 in C)
            and not any(ring.mdivides(lam2, lam) for _, lam2 in D)
        ):
            D.append((g, lam))

    if use_criteria:
        E = [(g, lam) for g, lam in D if not ring.mcoprime(h_lt, g.lt_key)]
    else:
        E = D

    B_new = []
    for f1, f2, lam in B:
        if not use_criteria:
            B_new.append((f1, f2, lam))
            continue
        if (
            not ring.mdivides(h_lt, lam)
            or ring.mlcm(f1.lt_key, h_lt) == lam
            or ring.mlcm(f2.lt_key, h_lt) == lam
        ):
            B_new.append((f1, f2, lam))
    B_new.extend((g, h, lam) for g, lam in E)

    G_new = [g for g in G if not ring.mdivides(h_lt, g.lt_key)]
    G_new.append(h)
    return G_new, B_new


def buchberger(inputs, stats: RunStats | None = None, use_criteria: bool = True):
    """Groebner basis of the input ideal by the classic critical-pair
    algorithm with the normal (minimal lcm, degree first) selection
    strategy and deterministic tie-breaks."""
    if stats is None:
        stats = RunStats()
    ring = inputs[0].ring
    G: list[Polynomial] = []
    B: list = []
    ordinal: dict = {}
    for f in inputs:
        if f.is_zero():
            continue
        h = classic_reduce(f, G, mode="full", stats=stats).monic()
        if h.is_zero():
            continue
        ordinal[id(h)] = len(ordinal)
        G, B = _update(G, B, h, ring, use_criteria)

    def pair_key(entry):
        f1, f2, lam = entry
        return (ring.deg(lam), lam, ordinal[id(f1)], ordinal[id(f2)])

    while B:
        entry = min(B, key=pair_key)
        B.remove(entry)
        f1, f2, _ = entry
        s = spoly(f1, f2, stats)
        if s.is_zero():
            continue
        h = classic_reduce(s, G, mode="full", stats=stats)
        if h.is_zero():
            stats.zero_reductions += 1
            continue
        h = h.monic()
        ordinal[id(h)] = len(ordinal)
        G, B = _update(G, B, h, ring, use_criteria)

    stats.basis_size = len(G)
    return G


def reduced_gb(G, stats: RunStats | None = None):
    """The canonical reduced Groebner basis: monic, pairwise fully
    interreduced, sorted by increasing lead monomial.  Unique per ideal."""
    if stats is None:
        stats = RunStats()
    basis = [g.monic() for g in G if not g.is_zero()]
    if not basis:
        return []
    ring = basis[0].ring
    basis.sort(key=lambda f: f.lt_key)
    kept: list[Polynomial] = []
    for f in basis:
        if not any(ring.mdivides(g.lt_key, f.lt_key) for g in kept):
            kept.append(f)
    out = []
    for i, f in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        r = classic_reduce(f, others, mode="full", stats=stats)
        if not r.is_zero():
            out.append(r.monic())
    out.sort(key=lambda f: f.lt_key)
    return out


def verify_equivalence(A, B) -> bool:
    """Whether two bases generate the same ideal, by comparing reduced
    Groebner bases term for term."""
    ra = reduced_gb(A)
    rb_ = reduced_gb(B)
    if len(ra) != len(rb_):
        return False
    return all(f == g for f, g in zip(ra, rb_))
