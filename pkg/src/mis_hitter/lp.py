"""Exact covering / packing LP pair over a set family.

The covering LP is ``min sum g(v)`` subject to ``sum_{v in F} g(v) >= 1`` for
every member ``F``; its dual is the fractional packing ``max sum y(F)`` with
load at most 1 on every vertex.  The packing side has the origin as a feasible
basis, so a single-phase simplex on it suffices; the covering optimum is read
off the slack reduced costs.

Arithmetic is integer-only: the tableau is kept fraction-free (every pivot
divides exactly by the previous pivot), and the represented values are the
integer entries over one common denominator.  Bland's rule prevents cycling.
"""
from __future__ import annotations

from fractions import Fraction


class CertificateError(ArithmeticError):
    """Primal/dual pair failed exact verification."""


def solve_covering_lp(masks, n: int):
    """Return ``(weights, dual, total)`` as exact ``Fraction`` values.

    ``masks`` are nonempty vertex bitmasks over ``0..n-1``; ``weights`` has
    length ``n`` and ``dual`` one entry per mask.
    """
    masks = list(masks)
    if not masks:
        raise ValueError("empty family")
    if any(m == 0 for m in masks):
        raise ValueError("empty member: covering LP infeasible")
    union = 0
    for m in masks:
        union |= m
    rows = [v for v in range(n) if union >> v & 1]
    nm, nr = len(masks), len(rows)
    width = nm + nr + 1
    rhs = width - 1

    tab = []
    for i, v in enumerate(rows):
        row = [1 if masks[j] >> v & 1 else 0 for j in range(nm)] + [0] * nr + [1]
        row[nm + i] = 1
        tab.append(row)
    obj = [-1] * nm + [0] * nr + [0]
    basis = [nm + i for i in range(nr)]
    denom = 1

    while True:
        enter = next((j for j in range(nm + nr) if obj[j] < 0), -1)
        if enter < 0:
            break
        leave = -1
        for i in range(nr):
            a = tab[i][enter]
            if a <= 0:
                continue
            if leave < 0:
                leave = i
                continue
            # compare tab[i][rhs]/a with tab[leave][rhs]/tab[leave][enter]
            lhs = tab[i][rhs] * tab[leave][enter]
            cur = tab[leave][rhs] * a
            if lhs < cur or (lhs == cur and basis[i] < basis[leave]):
                leave = i
        if leave < 0:
            raise ArithmeticError("packing LP unbounded; family data inconsistent")
        prow = tab[leave]
        p = prow[enter]
        for row in (*tab[:leave], *tab[leave + 1:], obj):
            f = row[enter]
            if f:
                for k in range(width):
                    row[k] = (row[k] * p - f * prow[k]) // denom
            else:
                for k in range(width):
                    row[k] = row[k] * p // denom
        denom = p
        basis[leave] = enter

    dual = [Fraction(0)] * nm
    for i, b in enumerate(basis):
        if b < nm:
            dual[b] = Fraction(tab[i][rhs], denom)
    weights = [Fraction(0)] * n
    for i, v in enumerate(rows):
        weights[v] = Fraction(obj[nm + i], denom)
    total = Fraction(obj[rhs], denom)
    verify_certificate(masks, n, weights, dual, total)
    return weights, dual, total


def verify_certificate(masks, n: int, weights, dual, total) -> None:
    """Raise ``CertificateError`` unless the pair is feasible and tight."""
    if any(w < 0 or w > 1 for w in weights):
        raise CertificateError("covering weights outside [0, 1]")
    if any(y < 0 for y in dual):
        raise CertificateError("negative packing value")
    for j, m in enumerate(masks):
        if sum(weights[v] for v in range(n) if m >> v & 1) < 1:
            raise CertificateError(f"member {j} is covered with weight below 1")
    for v in range(n):
        load = sum(y for y, m in zip(dual, masks) if m >> v & 1)
        if load > 1:
            raise CertificateError(f"vertex {v} carries packing load {load} > 1")
    if sum(weights) != total or sum(dual) != total:
        raise CertificateError("primal and dual totals differ")
