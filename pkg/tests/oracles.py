"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations

import sympy


def longest_k_increasing_brute(word, k):
    """Max total length of k disjoint weakly increasing subsequences."""
    n = len(word)
    best = 0

    # assign every position to one of k sequences or to none
    def rec(i, seqs):
        nonlocal best
        if i == n:
            best = max(best, sum(len(s) for s in seqs))
            return
        rec(i + 1, seqs)
        for s in seqs:
            if not s or word[s[-1]] <= word[i]:
                s.append(i)
                rec(i + 1, seqs)
                s.pop()
    rec(0, [[] for _ in range(k)])
    return best


def knuth_class_brute(word, insert_fn):
    """All distinct rearrangements of word with the same insertion tableau."""
    target = insert_fn(tuple(word))
    return sorted({p for p in permutations(word) if insert_fn(p) == target})


def lascoux_schutzenberger_charge(word):
    """Charge of a word of partition content via standard subwords.

    Reading cyclically from the right, pick 1, then 2 to its left (wrapping
    around), and so on; the index increases by one each time we wrap.
    """
    word = list(word)
    total = 0
    alive = list(range(len(word)))
    while alive:
        letters = sorted({word[i] for i in alive})
        assert letters == list(range(1, len(letters) + 1))
        # positions in alive, scanning right to left cyclically
        chosen = []
        pos = None
        index = 0
        for letter in letters:
            cands = [i for i in alive if word[i] == letter]
            if pos is None:
                nxt = max(cands)
            else:
                left = [i for i in cands if i < pos]
                if left:
                    nxt = max(left)
                else:
                    nxt = max(cands)
                    index += 1
            total += index
            chosen.append(nxt)
            pos = nxt
        alive = [i for i in alive if i not in chosen]
    return total


def schur_product_coefficients(rect_partitions, n):
    """{exponent tuple: coefficient} of prod_i s_{nu_i}(x_1..x_n), via the
    Jacobi-Trudi determinant in complete homogeneous polynomials."""
    xs = sympy.symbols(f"x1:{n + 1}")

    def h(k):
        if k < 0:
            return sympy.Integer(0)
        if k == 0:
            return sympy.Integer(1)
        return sum(sympy.Mul(*c) for c in _multisets(xs, k))

    prod = sympy.Integer(1)
    for nu in rect_partitions:
        m = len(nu)
        M = sympy.Matrix(m, m, lambda i, j: h(nu[i] - i + j))
        prod = sympy.expand(prod * M.det())
    poly = sympy.Poly(prod, *xs)
    return {tuple(e): int(c) for e, c in zip(poly.monoms(), poly.coeffs())}


def _multisets(xs, k):
    from itertools import combinations_with_replacement
    return combinations_with_replacement(xs, k)


def kostka_number_brute(lam, content):
    """Number of SSYT of shape lam and given content, by filling row by row."""
    n = len(content)
    letters = [v for v in range(1, n + 1) for _ in range(content[v - 1])]
    count = 0
    for perm in set(permutations(letters)):
        rows = []
        k = 0
        for part in lam:
            rows.append(perm[k:k + part])
            k += part
        ok = all(all(r[i] <= r[i + 1] for i in range(len(r) - 1)) for r in rows)
        ok = ok and all(rows[a][c] < rows[a + 1][c]
                        for a in range(len(rows) - 1) for c in range(len(rows[a + 1])))
        count += ok
    return count


def q_binomial_product_formula(total, k):
    """[total; k] as (q;q)_total / ((q;q)_k (q;q)_{total-k}) via sympy."""
    q = sympy.Symbol("q")
    if k < 0 or k > total:
        return {}

    def poch(m):
        out = sympy.Integer(1)
        for t in range(1, m + 1):
            out *= (1 - q ** t)
        return out
    expr = sympy.cancel(poch(total) / (poch(k) * poch(total - k)))
    poly = sympy.Poly(sympy.expand(expr), q)
    return {e[0]: int(c) for e, c in zip(poly.monoms(), poly.coeffs())}


def subsets(iterable, k):
    return list(combinations(iterable, k))


def counter_of(values):
    return dict(Counter(values))
