"""Benchmark system generators, the system-file format, and homogenization.

The named systems follow the community-standard (POSSO-style) definitions;
the exact formulas are written out in docs/benchmark_systems.md.
"""

from __future__ import annotations

import random as _random
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import ParseError, UnknownSystem, UnknownVariable
from .poly import Polynomial
from .ring import DEFAULT_CHARACTERISTIC, Ring


@dataclass
class SystemSpec:
    """A polynomial system: field characteristic, variables, generators."""

    ring: Ring
    polys: list
    name: str = ""

    @property
    def characteristic(self) -> int:
        return self.ring.p


def _vars(n: int, base: str = "x") -> list[str]:
    if n <= 4 and base == "x":
        return ["x", "y", "z", "t"][:n]
    return [f"{base}{i + 1}" for i in range(n)]


def gen_cyclic(n: int, p: int = DEFAULT_CHARACTERISTIC) -> SystemSpec:
    ring = Ring(_vars(n), p)
    polys = []
    for k in range(1, n):
        terms = []
        for i in range(n):
            exps = [0] * n
            for j in range(k):
                exps[(i + j) % n] += 1
            terms.append((1, tuple(exps)))
        polys.append(Polynomial.from_terms(ring, terms))
    terms = [(1, tuple([1] * n)), (p - 1, tuple([0] * n))]
    polys.append(Polynomial.from_terms(ring, terms))
    return SystemSpec(ring, polys, f"cyclic-{n}")


def gen_katsura(n: int, p: int = DEFAULT_CHARACTERISTIC) -> SystemSpec:
    """katsura-n: n+1 variables u0..un, the linear relation and the n
    convolution equations."""
    nv = n + 1
    ring = Ring([f"u{i}" for i in range(nv)], p)

    def unit(i):
        e = [0] * nv
        e[i] = 1
        return tuple(e)

    polys = []
    linear = [(1, unit(0))] + [(2, unit(i)) for i in range(1, nv)]
    linear.append((p - 1, tuple([0] * nv)))
    polys.append(Polynomial.from_terms(ring, linear))
    for m in range(n):
        terms = []
        for i in range(-n, n + 1):
            j = m - i
            if abs(j) > n:
                continue
            e = [0] * nv
            e[abs(i)] += 1
            e[abs(j)] += 1
            terms.append((1, tuple(e)))
        terms.append((p - 1, unit(m)))
        polys.append(Polynomial.from_terms(ring, terms))
    return SystemSpec(ring, polys, f"katsura-{n}")


def gen_eco(n: int, p: int = DEFAULT_CHARACTERISTIC) -> SystemSpec:
    """eco-n: the n-variable economics system."""
    ring = Ring([f"x{i + 1}" for i in range(n)], p)
    nv = n

    def unit(i):
        e = [0] * nv
        e[i] = 1
        return tuple(e)

    polys = []
    for k in range(1, n):
        terms = [(1, tuple(a + b for a, b in zip(unit(k - 1), unit(nv - 1))))]
        for i in range(1, n - k):
            e = [0] * nv
            e[i - 1] += 1
            e[i + k - 1] += 1
            e[nv - 1] += 1
            terms.append((1, tuple(e)))
        terms.append(((p - k) % p, tuple([0] * nv)))
        polys.append(Polynomial.from_terms(ring, terms))
    last = [(1, unit(i)) for i in range(n - 1)]
    last.append((1, tuple([0] * nv)))
    polys.append(Polynomial.from_terms(ring, last))
    return SystemSpec(ring, polys, f"eco-{n}")


def gen_noon(n: int, p: int = DEFAULT_CHARACTERISTIC) -> SystemSpec:
    """noon-n: the Noonburg neural-network system with the usual 10/-11/10
    coefficients."""
    ring = Ring([f"x{i + 1}" for i in range(n)], p)
    polys = []
    for i in range(n):
        terms = []
        for j in range(n):
            if j == i:
                continue
            e = [0] * n
            e[i] += 1
            e[j] += 2
            terms.append((10 % p, tuple(e)))
        e = [0] * n
        e[i] = 1
        terms.append(((p - 11) % p, tuple(e)))
        terms.append((10 % p, tuple([0] * n)))
        polys.append(Polynomial.from_terms(ring, terms))
    return SystemSpec(ring, polys, f"noon-{n}")


_NAMED = {
    "cyclic": gen_cyclic,
    "katsura": gen_katsura,
    "eco": gen_eco,
    "noon": gen_noon,
}


def gen_named(name: str, n: int, p: int = DEFAULT_CHARACTERISTIC) -> SystemSpec:
    if name not in _NAMED:
        raise UnknownSystem(f"unknown system {name!r}; know {sorted(_NAMED)}")
    if n < 2:
        raise ValueError("need n >= 2")
    return _NAMED[name](n, p)


def _monomials_of_degree(nvars: int, d: int):
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def gen_random(n: int, dmin: int, dmax: int, seed: int, homogeneous: bool = False,
               p: int = DEFAULT_CHARACTERISTIC) -> SystemSpec:
    """n random dense polynomials in n variables; each generator draws a
    degree uniformly from [dmin, dmax] and is dense in all monomials of
    that degree (homogeneous) or of all degrees up to it (affine), with
    uniform nonzero coefficients.  Reproducible from the seed."""
    if not (2 <= dmin <= dmax):
        raise ValueError("need 2 <= dmin <= dmax")
    rng = _random.Random(seed)
    ring = Ring(_vars(n) if n <= 4 else [f"x{i + 1}" for i in range(n)], p)
    polys = []
    for _ in range(n):
        d = rng.randint(dmin, dmax)
        degrees = [d] if homogeneous else list(range(d + 1))
        terms = []
        for dd in degrees:
            for exps in _monomials_of_degree(n, dd):
                terms.append((rng.randrange(1, p), exps))
        polys.append(Polynomial.from_terms(ring, terms))
    tag = "hrandom" if homogeneous else "random"
    return SystemSpec(ring, polys, f"{tag}({n},{dmin},{dmax})#{seed}")


def homogenize(spec: SystemSpec, var: str = "h") -> SystemSpec:
    """Standard homogenization with one extra (grevlex-smallest) variable."""
    ring = spec.ring
    new_ring = Ring(ring.names + (var,), ring.p)
    polys = []
    for f in spec.polys:
        d = f.degree()
        terms = []
        for c, exps in f.terms():
            terms.append((c, exps + (d - sum(exps),)))
        polys.append(Polynomial.from_terms(new_ring, terms))
    return SystemSpec(new_ring, polys, spec.name + "-h")


# -- the system file format -------------------------------------------------
#
# line 1: p <prime>
# line 2: vars <comma-separated names>
# then one polynomial per line; terms like 3*x^2*y, joined by + or -.

_FACTOR = re.compile(r"\s*(?:\*\s*)?(?:(?P<num>\d+)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)(?:\^(?P<exp>\d+))?)\s*")


def _parse_term(piece: str, lineno: int, col: int, ring: Ring, var_index: dict):
    """One signed term: optional integer coefficient then var[^exp] factors."""
    if not piece.strip():
        raise ParseError("empty term", lineno, col)
    coeff = 1
    saw_coeff = False
    exps = [0] * ring.nvars
    pos = 0
    first = True
    while pos < len(piece):
        m = _FACTOR.match(piece, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {piece[pos]!r}", lineno, col + pos)
        if m.group("num") is not None:
            if not first or saw_coeff:
                raise ParseError("coefficient must lead the term", lineno, col + pos)
            coeff = int(m.group("num")) % ring.p
            saw_coeff = True
        else:
            name = m.group("var")
            if name not in var_index:
                raise UnknownVariable(f"line {lineno}: unknown variable {name!r}")
            exps[var_index[name]] += int(m.group("exp") or 1)
        first = False
        pos = m.end()
    return coeff, tuple(exps)


def _parse_poly_line(text: str, lineno: int, ring: Ring, var_index: dict) -> Polynomial:
    terms = []
    sign = 1
    start = 0
    i = 0
    saw_any = False
    while i <= len(text):
        ch = text[i] if i < len(text) else "+"
        if ch in "+-":
            piece = text[start:i]
            if piece.strip():
                c, e = _parse_term(piece, lineno, start + 1, ring, var_index)
                terms.append(((sign * c) % ring.p, e))
                saw_any = True
            elif saw_any and i < len(text):
                raise ParseError("empty term", lineno, i + 1)
            sign = -1 if ch == "-" else 1
            start = i + 1
        i += 1
    if not saw_any:
        raise ParseError("empty polynomial", lineno, 1)
    f = Polynomial.from_terms(ring, terms)
    if f.is_zero():
        raise ParseError("polynomial is zero", lineno, 1)
    return f


def parse_system(text: str, name: str = "file") -> SystemSpec:
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines)
            if ln.strip() and not ln.strip().startswith("#")]
    if len(rows) < 3:
        raise ParseError("need a p line, a vars line and one polynomial", 1, 1)
    lineno, first = rows[0]
    m = re.fullmatch(r"p\s+([0-9]+)", first)
    if not m:
        raise ParseError("expected 'p <prime>'", lineno, 1)
    p = int(m.group(1))
    lineno, second = rows[1]
    m = re.fullmatch(r"vars\s+(.+)", second)
    if not m:
        raise ParseError("expected 'vars <names>'", lineno, 1)
    names = [v.strip() for v in m.group(1).split(",")]
    if any(not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v) for v in names):
        raise ParseError("bad variable name", lineno, 1)
    ring = Ring(names, p)
    var_index = {v: i for i, v in enumerate(names)}
    polys = [_parse_poly_line(ln, no, ring, var_index) for no, ln in rows[2:]]
    return SystemSpec(ring, polys, name)


def emit_system(spec: SystemSpec) -> str:
    lines = [f"p {spec.ring.p}", "vars " + ",".join(spec.ring.names)]
    lines.extend(str(f) for f in spec.polys)
    return "\n".join(lines) + "\n"
