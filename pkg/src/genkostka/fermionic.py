"""Fermionic (bosonic-free) sums: the Kirillov-Reshetikhin Kostka formula and
its rectangle generalization F(L, lam).

Configurations are tuples of partitions alpha^(1), alpha^(2), ...; alpha_i^(a)
is the i-th part of alpha^(a).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

from . import shapes
from .qpoly import ONE, ZERO, QPoly, binom2, qbinom


def _part(alpha, i):
    return alpha[i - 1] if i <= len(alpha) else 0


def _vacancy_product(configs, extra, imax):
    """prod over a, i of [P + alpha_i - alpha_{i+1}; alpha_i - alpha_{i+1}].

    configs[0] is alpha^(0), configs[-1] the last (zero) level; extra(a, i)
    is added to the vacancy number.
    """
    out = ONE
    for a in range(1, len(configs) - 1):
        lo, mid, hi = configs[a - 1], configs[a], configs[a + 1]
        acc = 0
        for i in range(1, imax + 1):
            acc += _part(lo, i) - 2 * _part(mid, i) + _part(hi, i)
            m = _part(mid, i) - _part(mid, i + 1)
            f = qbinom(acc + extra(a, i) + m, m)
            if f.is_zero():
                return ZERO
            if m:
                out = out * f
    return out


def kostka_kr(lam, mu) -> QPoly:
    """K_{lam mu}(q) for partitions lam, mu (mu may be given in any order)."""
    lam = shapes.strip(tuple(lam))
    mu = tuple(sorted((m for m in mu if m), reverse=True))
    if sum(lam) != sum(mu):
        return ZERO
    if not lam:
        return ONE
    alpha0 = shapes.transpose(mu)
    sizes = [sum(lam[a:]) for a in range(1, len(lam))]
    levels = [shapes.partitions(s) for s in sizes]
    imax = max([len(alpha0), sum(mu)]) + 1
    acc = Counter()
    for choice in product(*levels):
        configs = (alpha0,) + choice + ((),)
        f = _vacancy_product(configs, lambda a, i: 0, imax)
        if f.is_zero():
            continue
        c = 0
        for a in range(1, len(configs)):
            for i in range(1, imax + 1):
                c += binom2(_part(configs[a - 1], i) - _part(configs[a], i))
        for e, k in f.items():
            acc[e + c] += k
    return QPoly(acc)


def _A(L, a, i):
    """sum_{k >= i, b >= a} L_k^(b)."""
    return sum(
        shapes.lmatrix_entry(L, b, k)
        for b in range(a, len(L) + 1)
        for k in range(i, (len(L[0]) if L else 0) + 1)
    )


@lru_cache(maxsize=None)
def fermionic(L, lam) -> QPoly:
    """F(L, lam) for an n x N matrix L and lam in Z>=0^n."""
    L = tuple(tuple(r) for r in L)
    lam = tuple(lam)
    n = len(L)
    if len(lam) > n:
        if any(lam[n:]):
            return ZERO
        lam = lam[:n]
    lam = lam + (0,) * (n - len(lam))
    if any(x < 0 for x in lam):
        return ZERO
    if sum(lam) != shapes.lmatrix_size(L):
        return ZERO
    N = len(L[0]) if L else 0
    sizes = []
    for a in range(1, n):
        s = sum(j * shapes.ellbar(L, a, j) for j in range(1, N + 1)) - sum(lam[:a])
        if s < 0:
            return ZERO
        sizes.append(s)
    levels = [shapes.partitions(s) for s in sizes]
    imax = max([N] + sizes + [0]) + 1
    acc = Counter()
    for choice in product(*levels):
        configs = ((),) + choice + ((),)
        f = _vacancy_product(configs, lambda a, i: shapes.ell(L, a, i), imax)
        if f.is_zero():
            continue
        c = 0
        for a in range(1, len(configs)):
            for i in range(1, imax + 1):
                c += binom2(_A(L, a, i) + _part(configs[a - 1], i) - _part(configs[a], i))
        for e, k in f.items():
            acc[e + c] += k
    return QPoly(acc)


def theorem_hypothesis(L) -> bool:
    """L_i^(a) >= L_i^(a+2) for all a, i, or L_i^(a) >= L_{i+2}^(a) for all a, i."""
    n = len(L)
    N = len(L[0]) if L else 0
    e = shapes.lmatrix_entry
    rows = all(e(L, a, i) >= e(L, a + 2, i) for a in range(1, n + 1) for i in range(1, N + 1))
    cols = all(e(L, a, i) >= e(L, a, i + 2) for a in range(1, n + 1) for i in range(1, N + 1))
    return rows or cols
