"""Paths of rectangular tableaux, their energy and the supernomials.

A path is stored as a tuple of steps ``(p_1, p_2, ..., p_L)``; written as a
tensor product it reads p_L (x) ... (x) p_1, so ``steps[0]`` is the rightmost
factor. Each step is a tableau (see ``tableaux``) of rectangular shape filled
with plain ints. JSON lists the steps p_L first.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from fractions import Fraction
from functools import lru_cache

from . import shapes
from . import tableaux as tb
from .errors import DefectError, UserInputError
from .qpoly import ZERO, QPoly

DEFAULT_MAX_ORBIT = 50000


def max_orbit() -> int:
    raw = os.environ.get("KOSTKA_MAX_ORBIT")
    if raw is None:
        return DEFAULT_MAX_ORBIT
    try:
        return int(raw)
    except ValueError as exc:
        raise UserInputError(f"KOSTKA_MAX_ORBIT={raw!r} is not an integer") from exc


# steps

@lru_cache(maxsize=None)
def step_set(r, n: int) -> tuple:
    """All fillings of the rectangle r = (w, h) with entries 1..n."""
    return tb.ssyt(shapes.rect_partition(r), n)


@lru_cache(maxsize=None)
def _step_set_with_content(r, n: int) -> tuple:
    out = []
    for t in step_set(r, n):
        cnt = tb.content(t)
        out.append((t, tuple(cnt.get(v, 0) for v in range(1, n + 1))))
    return tuple(out)


def step_shape(step) -> tuple:
    return (len(step[0]), len(step)) if step else (0, 0)


def path_shapes(path) -> tuple:
    return tuple(step_shape(s) for s in path)


def path_content(path, n: int) -> tuple:
    cnt = Counter(x for s in path for row in s for x in row)
    return tuple(cnt.get(v, 0) for v in range(1, n + 1))


def enumerate_paths(mu, lam):
    """All paths with step shapes mu and content lam (a composition).

    Order: lexicographic on step fillings, the step p_L outermost and p_1
    varying fastest.
    """
    lam = tuple(lam)
    n = len(lam)
    if any(x < 0 for x in lam) or sum(lam) != shapes.rectlist_size(mu):
        return
    if any(h > n for _, h in mu):
        return
    cands = [_step_set_with_content(r, n) for r in mu]
    L = len(mu)
    chosen = [None] * L

    def rec(k, remaining):
        # k runs from L-1 (p_L) down to 0 (p_1)
        if k < 0:
            if not any(remaining):
                yield tuple(chosen)
            return
        for t, c in cands[k]:
            if all(a <= b for a, b in zip(c, remaining)):
                chosen[k] = t
                yield from rec(k - 1, tuple(b - a for a, b in zip(c, remaining)))

    yield from rec(L - 1, lam)


# energy

@lru_cache(maxsize=None)
def local_energy(p, p2) -> int:
    """h(p (x) p2) = |nu + nu'| - |shape(p . p2) intersect (nu + nu')|."""
    nu = tb.shape(p)
    nu2 = tb.shape(p2)
    s = shapes.add(nu, nu2)
    prod = tb.shape(tb.product(p, p2))
    return sum(s) - sum(shapes.intersect(prod, s))


def local_energy_at(path, i: int) -> int:
    """h_i(P) = h(p_{i+1} (x) p_i), 1 <= i < L."""
    return local_energy(path[i], path[i - 1])


def energy(path) -> int:
    """h(P) = sum_i i * h(p_{i+1} (x) p_i)."""
    return sum(i * local_energy(path[i], path[i - 1]) for i in range(1, len(path)))


def _sub_contents(cnt, k):
    items = sorted(cnt.items())

    def rec(idx, left):
        if idx == len(items):
            if left == 0:
                yield ()
            return
        v, m = items[idx]
        for take in range(min(m, left), -1, -1):
            for rest in rec(idx + 1, left - take):
                yield ((v, take),) + rest

    for sel in rec(0, k):
        yield [(v, c) for v, c in sel if c]


@lru_cache(maxsize=None)
def sigma_pair(p, p2):
    """The combinatorial R-matrix on p (x) p2.

    Returns (q2, q) with shape(q2) = shape(p2), shape(q) = shape(p) and
    q2 . q = p . p2. Found by exhaustive search; raises DefectError unless
    exactly one pair qualifies.
    """
    a, a2 = tb.shape(p), tb.shape(p2)
    if a == a2:
        return p, p2
    target = tb.product(p, p2)
    cnt = tb.content(target)
    found = []
    for sel in _sub_contents(cnt, sum(a2)):
        rest = Counter(cnt)
        rest.subtract(dict(sel))
        rest_items = sorted((v, c) for v, c in rest.items() if c)
        ys = list(tb.tableaux_with_content(a, rest_items))
        if not ys:
            continue
        for x in tb.tableaux_with_content(a2, sel):
            for y in ys:
                if tb.product(x, y) == target:
                    found.append((x, y))
    if len(found) != 1:
        raise DefectError(
            f"R-matrix search found {len(found)} candidates",
            witness={"left": tb.to_json(p), "right": tb.to_json(p2)},
        )
    return found[0]


def sigma(path, i: int):
    """sigma_i acting on the factors p_{i+1} (x) p_i."""
    if not 1 <= i < len(path):
        raise UserInputError(f"sigma_{i} undefined on a path of length {len(path)}")
    q2, q = sigma_pair(path[i], path[i - 1])
    out = list(path)
    out[i] = q2
    out[i - 1] = q
    return tuple(out)


def orbit(path, cap: int | None = None) -> list:
    """Closure of path under all sigma_i, in BFS order."""
    if cap is None:
        cap = max_orbit()
    seen = {path}
    order = [path]
    todo = deque([path])
    L = len(path)
    while todo:
        cur = todo.popleft()
        for i in range(1, L):
            nxt = sigma(cur, i)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                if len(order) > cap:
                    raise DefectError(
                        f"orbit exceeds the cap of {cap} elements (set KOSTKA_MAX_ORBIT)",
                        witness=path_to_json(path),
                    )
                todo.append(nxt)
    return order


_WEIGHT = {}


def weight(path) -> int:
    """H(P): mean energy over the orbit of P."""
    w = _WEIGHT.get(path)
    if w is not None:
        return w
    orb = orbit(path)
    avg = Fraction(sum(energy(x) for x in orb), len(orb))
    if avg.denominator != 1:
        raise DefectError("orbit-averaged energy is not an integer", witness=path_to_json(path))
    w = int(avg)
    for x in orb:
        _WEIGHT[x] = w
    return w


def clear_caches():
    _WEIGHT.clear()
    sigma_pair.cache_clear()
    local_energy.cache_clear()
    path_table.cache_clear()


def supernomial(mu, lam) -> QPoly:
    """S_{lam mu} = sum over paths of q^H."""
    lam = tuple(lam)
    if any(x < 0 for x in lam):
        return ZERO
    terms = Counter(weight(p) for p in enumerate_paths(tuple(mu), lam))
    return QPoly(terms)


# the map from paths to words

def omega(path) -> tuple:
    """Word obtained by repeatedly removing the rightmost maximal entry.

    Letter (j, k) records that the entry sat in row k of step j. Among equal
    maximal entries the one in the lowest-indexed step, then the largest
    column, is taken first.
    """
    boxes = []
    for j, step in enumerate(path, 1):
        for k, row in enumerate(step, 1):
            for c, v in enumerate(row):
                boxes.append((-v, j, -c, k))
    boxes.sort()
    return tuple((j, k) for _, j, _, k in boxes)


def word_rectlist(word) -> tuple:
    """Step shapes mu read off from a balanced word in letters (j, k)."""
    cnt = Counter(word)
    if not cnt:
        return ()
    L = max(j for j, _ in cnt)
    mu = []
    for j in range(1, L + 1):
        h = max((k for jj, k in cnt if jj == j), default=0)
        if h == 0:
            raise UserInputError(f"word has no letters for step {j}")
        ws = {cnt.get((j, k), 0) for k in range(1, h + 1)}
        if len(ws) != 1:
            raise UserInputError(f"letters of step {j} are not balanced")
        mu.append((ws.pop(), h))
    return tuple(mu)


def omega_inverse(word) -> tuple:
    """Standard path whose omega-word is word.

    The first letter gets the largest value; letter (j, k) places its value
    in the rightmost empty box of row k of step j.
    """
    word = tuple(word)
    mu = word_rectlist(word)
    grid = [[[None] * w for _ in range(h)] for w, h in mu]
    fill = [[w for _ in range(h)] for w, h in mu]
    v = len(word)
    for j, k in word:
        fill[j - 1][k - 1] -= 1
        grid[j - 1][k - 1][fill[j - 1][k - 1]] = v
        v -= 1
    path = tuple(tuple(tuple(r) for r in g) for g in grid)
    if not all(tb.is_tableau(s) for s in path):
        raise UserInputError("word does not come from a path (a step is not a tableau)")
    return path


def omega_shape(path) -> tuple:
    return tb.word_shape(omega(path))


def restricted_paths(mu, lam):
    """Paths with content lam whose omega-word has insertion shape lam."""
    lam = tuple(lam)
    target = shapes.strip(lam)
    for p in enumerate_paths(tuple(mu), lam):
        if omega_shape(p) == target:
            yield p


def kostka_tilde(lam, mu) -> QPoly:
    """sum over restricted paths of q^H."""
    lam = shapes.partition(lam)
    n = max([len(lam)] + [h for _, h in mu])
    lam_n = lam + (0,) * (n - len(lam))
    return QPoly(Counter(weight(p) for p in restricted_paths(tuple(mu), lam_n)))


def kostka(lam, mu) -> QPoly:
    """q^{||mu||} Ktilde(1/q)."""
    return kostka_tilde(lam, mu).substitute_inverse_q().shift(shapes.rectlist_norm(mu))


@lru_cache(maxsize=None)
def path_table(mu, n: int) -> dict:
    """For every content lam in Z>=0^n: (S_{lam mu}, Ktilde_{lam mu}).

    Ktilde is only recorded for partition contents.
    """
    mu = tuple(mu)
    size = shapes.rectlist_size(mu)
    out = {}
    for lam in shapes.compositions(size, n):
        s_terms = Counter()
        k_terms = Counter()
        is_part = all(lam[i] >= lam[i + 1] for i in range(n - 1))
        target = shapes.strip(lam)
        for p in enumerate_paths(mu, lam):
            w = weight(p)
            s_terms[w] += 1
            if is_part and omega_shape(p) == target:
                k_terms[w] += 1
        out[lam] = (QPoly(s_terms), QPoly(k_terms) if is_part else None)
    return out


# dualities on paths

def omega_step(step, n: int):
    """Reverse the row word, complement letters v -> n+1-v, and insert."""
    w = tb.row_word(step)
    return tb.tableau_of_word(tuple(n + 1 - v for v in reversed(w)))


def omega_path(path, n: int):
    """Omega(p_1) (x) ... (x) Omega(p_L)."""
    return tuple(omega_step(s, n) for s in reversed(path))


def standard_size(path) -> int:
    return sum(len(r) for s in path for r in s)


def cp_cyclage(path):
    """Remove the largest entry, slide the hole to the bottom-left corner of
    its step, put 0 there and raise every entry by one."""
    m = standard_size(path)
    steps = [[list(r) for r in s] for s in path]
    loc = None
    for j, s in enumerate(steps):
        if s[-1][-1] == m:
            loc = j
    if loc is None:
        raise UserInputError("largest entry is not in a top-right corner")
    g = steps[loc]
    r, c = len(g) - 1, len(g[0]) - 1
    while r > 0 or c > 0:
        left = g[r][c - 1] if c > 0 else None
        below = g[r - 1][c] if r > 0 else None
        if below is not None and (left is None or below >= left):
            g[r][c] = below
            r -= 1
        else:
            g[r][c] = left
            c -= 1
    g[0][0] = 0
    return tuple(tuple(tuple(v + 1 for v in row) for row in s) for s in steps)


def cp_inverse(path):
    """Inverse of cp_cyclage."""
    m = standard_size(path)
    steps = [[list(r) for r in s] for s in path]
    loc = None
    for j, s in enumerate(steps):
        if s[0][0] == 1:
            loc = j
    if loc is None:
        raise UserInputError("entry 1 is not in a bottom-left corner")
    g = steps[loc]
    h, w = len(g), len(g[0])
    r = c = 0
    while r < h - 1 or c < w - 1:
        right = g[r][c + 1] if c < w - 1 else None
        above = g[r + 1][c] if r < h - 1 else None
        if above is not None and (right is None or above <= right):
            g[r][c] = above
            r += 1
        else:
            g[r][c] = right
            c += 1
    g[h - 1][w - 1] = m + 1
    return tuple(tuple(tuple(v - 1 for v in row) for row in s) for s in steps)


def standard_restricted_paths(mu):
    """Paths over 1..|mu| whose omega word is a row word (one per LR tableau)."""
    m = shapes.rectlist_size(mu)
    for p in enumerate_paths(tuple(mu), (1,) * m):
        if tb.is_row_word(omega(p)):
            yield p


def h_vector(path) -> tuple:
    return tuple(local_energy_at(path, i) for i in range(1, len(path)))


def max_step(path) -> int:
    """1-based index of the step holding the largest entry of a standard path."""
    m = standard_size(path)
    return next(j for j, s in enumerate(path, 1) if s[-1][-1] == m)


def orbit_chains(orb) -> list:
    """Split an orbit of standard paths into chains U -> V with V = sigma_{i-1}(U),
    where U has its largest entry in step i and V in step i-1. Each chain is
    listed from its highest step downwards."""
    nxt = {}
    has_prev = set()
    for u in orb:
        i = max_step(u)
        if i >= 2:
            v = sigma(u, i - 1)
            if max_step(v) == i - 1:
                nxt[u] = v
                has_prev.add(v)
    out = []
    for u in orb:
        if u in has_prev:
            continue
        chain = [u]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        out.append(chain)
    return out


def chain_h_shift(top: int, bottom: int, k: int, L: int) -> tuple:
    """Expected h(C_p(P_k)) - h(P_k) for the element with largest entry in
    step k of a chain running from step top down to step bottom."""
    def e(j):
        return [1 if t == j else 0 for t in range(1, L)]
    if top == bottom:
        return tuple(a - b for a, b in zip(e(top), e(top - 1)))
    if k == top:
        return tuple(e(top))
    if k == bottom:
        return tuple(-a for a in e(bottom - 1))
    return (0,) * (L - 1)


def symmetric_energy_bruteforce(p, p2, mode: str) -> int:
    """Energy of two single-row ("row") or single-column ("col") steps of
    equal shape, by optimizing over matchings of their entries."""
    from itertools import permutations

    a = tb.row_word(p)
    b = tb.row_word(p2)
    vals = [sum(1 for x, y in zip(a, perm) if x > y) for perm in permutations(b)]
    return max(vals) if mode == "row" else min(vals)


# JSON

def path_to_json(path, mu=None) -> dict:
    if mu is None:
        mu = path_shapes(path)
    return {
        "mu": shapes.rectlist_to_json(mu),
        "steps": [tb.to_json(s) for s in reversed(path)],
    }


def path_from_json(data) -> tuple:
    try:
        steps = tuple(tb.from_json(s, plain=True) for s in reversed(data["steps"]))
    except (KeyError, TypeError) as exc:
        raise UserInputError(f"bad path JSON {data!r}") from exc
    if "mu" in data:
        mu = shapes.rectlist_from_json(data["mu"])
        if path_shapes(steps) != mu:
            raise UserInputError("step shapes do not match mu")
    return steps
