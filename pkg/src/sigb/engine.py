"""The main signature-basis loops: the generic algorithm and the rewrite-basis
algorithm, with the S-pair queue, optional interreduction between incremental
steps, and statistics."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, replace

from .poly import Polynomial, reduce as classic_reduce
from .ring import Ring
from .sigorder import ModuleOrder, Sig
from .sigcore import (
    SINGULAR,
    BasisElement,
    SigBasis,
    SPair,
    SyzygySet,
    is_predictably_syzygy,
    is_singular_top_reducible,
    koszul_init,
    koszul_update,
    make_spair,
    regular_s_reduce,
    spair_rewritable,
)
from .stats import RunStats

PAIR_POLICIES = ("sig_increasing", "degree_then_sig")
ALGORITHMS = ("rb", "gensb", "f4rb", "buchberger")


@dataclass(frozen=True)
class EngineConfig:
    """Knobs of one run; mirrors the CLI vocabulary."""

    module_order: str = "pot"
    rewrite: str = "rat"
    reduction_mode: str = "top"
    pair_policy: str = "sig_increasing"
    algorithm: str = "rb"
    interreduce: bool = False         # reduced-basis restarts between indices (pot only)
    koszul_on_insert: bool = True     # regenerate principal-syzygy signatures per insertion
    legacy_index_direction: bool = False

    def pair_sort_key(self, order: ModuleOrder, sig: Sig, degree: int):
        if self.pair_policy == "degree_then_sig":
            return (degree,) + order.sort_key(sig)
        return order.sort_key(sig)


class PairQueue:
    """Min-heap of pending S-pairs plus the initial unit entries.

    Entries pop by the configured policy (signature-increasing by default),
    with deterministic tie-breaks: lcm monomial, then generator ordinals.
    Same-signature duplicates are weeded at pop time by re-running the
    rewritability check, so exactly one element per signature survives.
    """

    def __init__(self):
        self._heap: list = []
        self._count = 0

    def __len__(self):
        return len(self._heap)

    def push_unit(self, key, index: int):
        self._count += 1
        heapq.heappush(self._heap, (key, 0, -1, index, self._count, ("unit", index)))

    def push_pair(self, key, pair: SPair):
        self._count += 1
        heapq.heappush(
            self._heap,
            (key, pair.lcm_key, pair.left.ordinal, pair.right.ordinal, self._count,
             ("pair", pair)),
        )

    def pop(self):
        return heapq.heappop(self._heap)[-1]


def _spair_start_terms(pair: SPair, p: int, stats: RunStats):
    """Terms of the S-polynomial a*f - b*g; both sides are monic so the
    subtraction is one add_scaled step charged to the counters."""
    stats.s_reduction_steps += 1
    stats.multiplications += len(pair.right.poly.keys)
    lm, rm = pair.left_mult, pair.right_mult
    terms = [(k + lm, c) for k, c in zip(pair.left.poly.keys, pair.left.poly.coeffs)]
    terms.extend(
        (k + rm, p - c) for k, c in zip(pair.right.poly.keys, pair.right.poly.coeffs)
    )
    return terms


class SigEngine:
    """One signature-basis computation over a fixed generator list."""

    def __init__(self, ring: Ring, inputs, config: EngineConfig, stats: RunStats,
                 order: ModuleOrder | None = None):
        self.ring = ring
        self.inputs = [f.monic() for f in inputs]
        if any(f.is_zero() for f in self.inputs):
            raise ValueError("zero input polynomial")
        self.config = config
        self.stats = stats
        if order is None:
            order = ModuleOrder(
                config.module_order,
                ring,
                gen_lt_keys=[f.lt_key for f in self.inputs],
                gen_degrees=[f.degree() for f in self.inputs],
                legacy_index_direction=config.legacy_index_direction,
            )
        self.order = order
        self.basis = SigBasis(ring, order, config.rewrite)
        self.syz = SyzygySet(ring)
        self.queue = PairQueue()

    def _push_unit(self, index: int):
        sig = (index, 0)
        key = self.config.pair_sort_key(self.order, sig, self.inputs[index].degree())
        self.queue.push_unit(key, index)

    def _push_pairs_for(self, elt: BasisElement, use_criteria: bool):
        order, ring = self.order, self.ring
        for alpha in self.basis.elements:
            if alpha is elt:
                continue
            pair = make_spair(elt, alpha, order, ring)
            if pair is SINGULAR:
                continue
            if use_criteria and spair_rewritable(pair, self.basis, self.syz):
                continue
            key = self.config.pair_sort_key(order, pair.sig, pair.degree)
            self.queue.push_pair(key, pair)

    def _insert(self, sig: Sig, poly: Polynomial, use_criteria: bool):
        elt = self.basis.add(sig, poly.monic())
        self._push_pairs_for(elt, use_criteria)
        if use_criteria and self.config.koszul_on_insert:
            koszul_update(elt, self.basis.elements[:-1], self.order, self.syz)
        return elt

    def seed_basis_element(self, sig: Sig, poly: Polynomial):
        """Install an already-final element (interreduced restart) without
        generating S-pairs or syzygies."""
        self.basis.add(sig, poly.monic())

    def run_rb(self):
        """The rewrite-basis loop: pop by increasing signature, skip
        rewritable S-pairs, regular-s-reduce the rest, record zero
        reductions into H and insert everything else."""
        cfg, stats = self.config, self.stats
        mode = cfg.reduction_mode
        while len(self.queue):
            kind, payload = self.queue.pop()
            if kind == "unit":
                sig = (payload, 0)
                if is_predictably_syzygy(sig, self.syz):
                    continue
                start = [(k, c) for k, c in
                         zip(self.inputs[payload].keys, self.inputs[payload].coeffs)]
            else:
                if spair_rewritable(payload, self.basis, self.syz):
                    continue
                sig = payload.sig
                start = _spair_start_terms(payload, self.ring.p, stats)
            gamma = regular_s_reduce(start, sig, mode, self.basis, self.syz, stats)
            if gamma.is_zero():
                stats.zero_reductions += 1
                self.syz.insert(sig)
            else:
                self._insert(sig, gamma, use_criteria=True)

    def run_gensb(self):
        """The generic loop: no Koszul seeding, no rewritability; discard
        results that are singular top reducible at insertion time."""
        stats = self.stats
        mode = self.config.reduction_mode
        while len(self.queue):
            kind, payload = self.queue.pop()
            if kind == "unit":
                sig = (payload, 0)
                start = [(k, c) for k, c in
                         zip(self.inputs[payload].keys, self.inputs[payload].coeffs)]
            else:
                sig = payload.sig
                start = _spair_start_terms(payload, self.ring.p, stats)
            gamma = regular_s_reduce(start, sig, mode, self.basis, self.syz, stats)
            if gamma.is_zero():
                stats.zero_reductions += 1
                self.syz.insert(sig)
            elif not is_singular_top_reducible(sig, gamma, self.basis):
                self._insert(sig, gamma, use_criteria=False)


def _interreduce(polys, ring: Ring, stats: RunStats):
    """Reduced Groebner basis of an already-complete basis; work is charged
    to the interreduction counters."""
    side = RunStats()
    basis = [p.monic() for p in polys if not p.is_zero()]
    # drop elements whose lead is divisible by another lead (keep first)
    basis.sort(key=lambda f: f.lt_key)
    kept: list[Polynomial] = []
    for f in basis:
        if not any(ring.mdivides(g.lt_key, f.lt_key) for g in kept):
            kept.append(f)
    out = []
    for i, f in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        r = classic_reduce(f, others, mode="full", stats=side)
        if not r.is_zero():
            out.append(r.monic())
    stats.interred_reduction_steps += side.s_reduction_steps
    stats.interred_multiplications += side.multiplications
    out.sort(key=lambda f: f.lt_key)
    return out


def _run_incremental(ring: Ring, inputs, config: EngineConfig, stats: RunStats):
    """Position-over-term processing with reduced-basis restarts: after each
    index the basis is interreduced and becomes the generator list for the
    next index, with H reseeded from its Koszul signatures."""
    current: list[Polynomial] = []
    syz_total = 0
    basis = None
    engine = None
    for k, f in enumerate(inputs):
        gens = current + [f]
        engine = SigEngine(ring, gens, config, stats)
        m = len(gens) - 1
        for j, b in enumerate(current):
            engine.seed_basis_element((j, 0), b)
        for j in range(m):
            engine.syz.insert(engine.order.max((m, current[j].lt_key), (j, f.monic().lt_key)))
        engine._push_unit(m)
        engine.run_rb()
        syz_total += engine.syz.inserted_total
        basis = engine.basis
        if k + 1 < len(inputs):
            current = _interreduce([e.poly for e in basis.elements], ring, stats)
    stats.basis_size = len(basis)
    stats.syzygy_count = syz_total
    return basis.elements, engine.syz, stats


def run_signature_engine(ring: Ring, inputs, config: EngineConfig,
                         stats: RunStats | None = None):
    """Run rb or gensb per the config; returns (elements, syzygies, stats)."""
    if stats is None:
        stats = RunStats()
    if config.algorithm == "rb" and config.interreduce:
        if config.module_order != "pot":
            raise ValueError("interreduced restarts need the pot module order")
        return _run_incremental(ring, inputs, config, stats)
    engine = SigEngine(ring, inputs, config, stats)
    if config.algorithm == "rb":
        koszul_init(engine.inputs, engine.order, engine.syz)
        for i in range(len(engine.inputs)):
            engine._push_unit(i)
        engine.run_rb()
    elif config.algorithm == "gensb":
        for i in range(len(engine.inputs)):
            engine._push_unit(i)
        engine.run_gensb()
    else:
        raise ValueError(f"not a signature engine: {config.algorithm!r}")
    stats.basis_size = len(engine.basis)
    stats.syzygy_count = engine.syz.inserted_total
    return engine.basis.elements, engine.syz, stats


def gen_sb(inputs, config: EngineConfig | None = None):
    """Generic signature Groebner basis computation (differential-testing
    partner of the rewrite-basis loop)."""
    config = replace(config or EngineConfig(), algorithm="gensb")
    ring = inputs[0].ring
    return run_signature_engine(ring, inputs, config)


def rb(inputs, config: EngineConfig | None = None):
    """Rewrite-basis computation; the production signature engine."""
    config = replace(config or EngineConfig(), algorithm="rb")
    ring = inputs[0].ring
    return run_signature_engine(ring, inputs, config)
