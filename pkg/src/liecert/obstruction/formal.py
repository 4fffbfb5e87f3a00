"""Formal weight calculus on ``V = sum_k M_{2k} (x) U_k`` and its symmetric square.

A basis symbol ``(k, r, s)`` stands for ``m_r (x) s`` where ``m_r`` is the
weight-index-``r`` vector of the standard basis of ``M_{2k}`` and ``s`` names
a vector of the multiplicity space ``U_k``. Symbols with different names are
treated as unrelated vectors. Elements of ``S^2(V)`` are dictionaries keyed by
sorted symbol pairs. Coefficients are exact ``Fraction`` values.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

Key = tuple  # (k, r, name)
Mono = tuple  # (Key, Key), sorted
Vec = dict
Circ = dict

__all__ = [
    "raise_key",
    "lower_key",
    "apply_E",
    "circ",
    "circ_E",
    "circ_add",
    "circ_scale",
    "component",
    "component_label",
    "project",
    "restrict_to",
    "is_s2v1",
    "is_s2v2",
    "drop_symbols",
    "substitute_proportional",
    "symbols_in",
]


def raise_key(key: Key):
    k, r, s = key
    c = k - r
    return ((k, r + 1, s), c) if c else None


def lower_key(key: Key):
    k, r, s = key
    c = k + r
    return ((k, r - 1, s), c) if c else None


_OPS = {"+": raise_key, "-": lower_key}


def apply_E(sign: str, v: Vec) -> Vec:
    op = _OPS[sign]
    out: Vec = {}
    for key, c in v.items():
        img = op(key)
        if img is not None:
            nk, f = img
            out[nk] = out.get(nk, 0) + c * f
    return {k: c for k, c in out.items() if c}


def _mono(a: Key, b: Key) -> Mono:
    return (a, b) if a <= b else (b, a)


def circ(x: Vec, y: Vec) -> Circ:
    out: Circ = {}
    for a, ca in x.items():
        for b, cb in y.items():
            m = _mono(a, b)
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def circ_E(sign: str, C: Circ) -> Circ:
    """``[E, x o y] = (E x) o y + x o (E y)``."""
    op = _OPS[sign]
    out: Circ = {}
    for (a, b), c in C.items():
        for moved, fixed in ((a, b), (b, a)):
            img = op(moved)
            if img is not None:
                nk, f = img
                m = _mono(nk, fixed)
                out[m] = out.get(m, 0) + c * f
    return {m: c for m, c in out.items() if c}


def circ_add(*Cs: Circ) -> Circ:
    out: Circ = {}
    for C in Cs:
        for m, c in C.items():
            out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}


def circ_scale(s, C: Circ) -> Circ:
    s = Fraction(s)
    return {m: c * s for m, c in C.items() if c * s}


def component(m: Mono) -> tuple:
    """The ``W_k^r o W_k'^r'`` component of a monomial as a sorted pair of ``(k, r)``."""
    (k1, r1, _), (k2, r2, _) = m
    return tuple(sorted(((k1, r1), (k2, r2))))


def component_label(comp: tuple) -> str:
    (k1, r1), (k2, r2) = comp
    return f"W_{k1}^{r1} o W_{k2}^{r2}"


def project(C: Circ, keep: Callable[[tuple], bool]) -> Circ:
    return {m: c for m, c in C.items() if keep(component(m))}


def restrict_to(C: Circ, comp: Iterable) -> Circ:
    want = tuple(sorted(tuple(x) for x in comp))
    return project(C, lambda cp: cp == want)


def is_s2v1(comp: tuple) -> bool:
    return comp[0][1] % 2 != 0 and comp[1][1] % 2 != 0


def is_s2v2(comp: tuple) -> bool:
    return comp[0][1] % 2 == 0 and comp[1][1] % 2 == 0


def drop_symbols(C: Circ, zero: set) -> Circ:
    """Set the vectors ``(k, name)`` in ``zero`` to 0."""
    return {m: c for m, c in C.items() if (m[0][0], m[0][2]) not in zero and (m[1][0], m[1][2]) not in zero}


def substitute_proportional(C: Circ, k: int, src: str = "w", dst: str = "u") -> dict:
    """Replace ``src_k`` by ``rho * dst_k``; returns ``{mono: {power of rho: coeff}}``."""
    out: dict = {}
    for (a, b), c in C.items():
        p = 0
        keys = []
        for key in (a, b):
            if key[0] == k and key[2] == src:
                keys.append((key[0], key[1], dst))
                p += 1
            else:
                keys.append(key)
        m = _mono(*keys)
        poly = out.setdefault(m, {})
        poly[p] = poly.get(p, 0) + c
    return {m: {e: c for e, c in poly.items() if c} for m, poly in out.items() if any(poly.values())}


def symbols_in(C: Circ) -> set:
    return {(key[0], key[2]) for m in C for key in m}
