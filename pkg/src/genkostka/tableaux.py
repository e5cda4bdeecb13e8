"""Young tableaux, row insertion, Knuth equivalence and classical cocharge.

A tableau is a tuple of rows, bottom row first; each row is a tuple of
letters. Letters are any totally ordered hashable values: plain ints for
ordinary alphabets, ``(i, j)`` pairs for the graded alphabet where ``(i, j)``
stands for x_i^(j) and compares lexicographically.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter, deque
from functools import lru_cache

from . import shapes
from .errors import DefectError, UserInputError

EMPTY = ()


def insert(tab, x):
    """Schensted row insertion of x into tab."""
    rows = list(tab)
    r = 0
    while True:
        if r == len(rows):
            rows.append((x,))
            break
        row = rows[r]
        k = bisect_right(row, x)
        if k == len(row):
            rows[r] = row + (x,)
            break
        bumped = row[k]
        rows[r] = row[:k] + (x,) + row[k + 1:]
        x = bumped
        r += 1
    return tuple(rows)


@lru_cache(maxsize=200000)
def tableau_of_word(word) -> tuple:
    """The insertion tableau [w]."""
    tab = EMPTY
    for x in word:
        tab = insert(tab, x)
    return tab


def row_word(tab) -> tuple:
    """Rows read top to bottom, each left to right."""
    out = []
    for row in reversed(tab):
        out.extend(row)
    return tuple(out)


def is_row_word(word) -> bool:
    return row_word(tableau_of_word(word)) == tuple(word)


def shape(tab) -> tuple:
    return tuple(len(r) for r in tab)


def word_shape(word) -> tuple:
    return shape(tableau_of_word(tuple(word)))


def size(tab) -> int:
    return sum(len(r) for r in tab)


def content(tab) -> Counter:
    return Counter(x for r in tab for x in r)


def product(s, t) -> tuple:
    """S . T = [w_S w_T]."""
    out = s
    for x in row_word(t):
        out = insert(out, x)
    return out


def is_tableau(tab) -> bool:
    lens = [len(r) for r in tab]
    if any(l == 0 for l in lens):
        return False
    if any(lens[i] < lens[i + 1] for i in range(len(lens) - 1)):
        return False
    for row in tab:
        if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
            return False
    for r in range(1, len(tab)):
        below = tab[r - 1]
        if any(not below[c] < x for c, x in enumerate(tab[r])):
            return False
    return True


def check_tableau(tab) -> tuple:
    if not is_tableau(tab):
        raise UserInputError(f"not a semistandard tableau: {tab}")
    return tab


def knuth_equivalent(u, v) -> bool:
    return tableau_of_word(tuple(u)) == tableau_of_word(tuple(v))


def _knuth_moves(w):
    # elementary Knuth relations for row insertion:
    #   y x z ~ y z x  (x < y <= z)
    #   x z y ~ z x y  (x <= y < z)
    n = len(w)
    for k in range(n - 2):
        a, b, c = w[k], w[k + 1], w[k + 2]
        # a b c read as y x z  ->  y z x
        if b < a <= c:
            yield w[:k + 1] + (c, b) + w[k + 3:]
        # a b c read as y z x  ->  y x z
        if c < a <= b:
            yield w[:k + 1] + (c, b) + w[k + 3:]
        # a b c read as x z y  ->  z x y
        if a <= c < b:
            yield w[:k] + (b, a) + w[k + 2:]
        # a b c read as z x y  ->  x z y
        if b <= c < a:
            yield w[:k] + (b, a) + w[k + 2:]


@lru_cache(maxsize=20000)
def knuth_class(word) -> tuple:
    """All words Knuth equivalent to word, sorted."""
    word = tuple(word)
    seen = {word}
    todo = deque([word])
    while todo:
        w = todo.popleft()
        for v in _knuth_moves(w):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return tuple(sorted(seen))


def longest_k_increasing(word, k: int) -> int:
    """Largest total length of k disjoint weakly increasing subsequences."""
    return sum(word_shape(word)[:k])


# enumeration

def horizontal_strips(outer_limit, inner, k):
    """Shapes obtained from inner by adding a horizontal strip of k boxes,
    staying inside outer_limit (a partition, or None for no bound)."""
    inner = list(inner)
    rows = len(inner) + 1
    if outer_limit is not None:
        rows = min(rows, len(outer_limit))
    inner_ext = inner + [0] * (rows - len(inner))

    def rec(r, left):
        if r == rows:
            if left == 0:
                yield ()
            return
        cap = inner[r - 1] - inner_ext[r] if r > 0 else left
        if outer_limit is not None:
            cap = min(cap, outer_limit[r] - inner_ext[r])
        for add in range(min(cap, left), -1, -1):
            for rest in rec(r + 1, left - add):
                yield (add,) + rest

    if rows == 0:
        if k == 0:
            yield tuple(inner)
        return
    for adds in rec(0, k):
        yield shapes.strip(tuple(inner_ext[r] + adds[r] for r in range(rows)))


def tableaux_with_content(lam, letters_counts):
    """SSYT of shape lam with the given content.

    letters_counts is a sequence of (letter, multiplicity) in increasing
    letter order. Results come in a deterministic order.
    """
    lam = tuple(lam)
    total = sum(c for _, c in letters_counts)
    if total != sum(lam):
        return

    def rec(idx, cur, rows):
        if idx == len(letters_counts):
            if cur == lam:
                yield tuple(tuple(r) for r in rows)
            return
        letter, cnt = letters_counts[idx]
        for nxt in horizontal_strips(lam, cur, cnt):
            new_rows = [list(r) for r in rows]
            for r, ln in enumerate(nxt):
                old = cur[r] if r < len(cur) else 0
                if ln > old:
                    if r == len(new_rows):
                        new_rows.append([])
                    new_rows[r].extend([letter] * (ln - old))
            yield from rec(idx + 1, nxt, new_rows)

    yield from rec(0, (), [])


@lru_cache(maxsize=None)
def ssyt(lam, n: int) -> tuple:
    """All SSYT of shape lam with entries in 1..n."""
    lam = tuple(lam)
    out = []
    for cont in shapes.compositions(sum(lam), n):
        out.extend(tableaux_with_content(lam, [(v, c) for v, c in enumerate(cont, 1) if c]))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def kostka_number(lam, cont) -> int:
    """Number of SSYT of shape lam and content cont (a composition)."""
    return sum(1 for _ in tableaux_with_content(tuple(lam), [(v, c) for v, c in enumerate(cont, 1) if c]))


def standard_tableaux(lam):
    return tableaux_with_content(tuple(lam), [(v, 1) for v in range(1, sum(lam) + 1)])


# classical cyclage on plain tableaux with partition content

def _plain_content(tab):
    cnt = content(tab)
    if not cnt:
        return ()
    n = max(cnt)
    cont = tuple(cnt.get(v, 0) for v in range(1, n + 1))
    if any(cont[i] < cont[i + 1] for i in range(len(cont) - 1)):
        raise UserInputError(f"content {cont} is not a partition")
    return cont


def classical_cyclage(tab):
    """C(T) = [u x] for w_T = x u; T must not be the one-row tableau."""
    if len(tab) <= 1:
        raise UserInputError("the one-row tableau has no cyclage")
    w = row_word(tab)
    return tableau_of_word(w[1:] + w[:1])


def classical_cyclage_chain(tab) -> list:
    """T, C(T), C^2(T), ... ending at the one-row tableau."""
    cont = _plain_content(tab)
    cap = shapes.content_norm(cont) + 1
    chain = [tab]
    while len(chain[-1]) > 1:
        if len(chain) > cap:
            raise DefectError("cyclage did not reach the one-row tableau", witness=tab)
        chain.append(classical_cyclage(chain[-1]))
    return chain


def classical_cocharge(tab) -> int:
    return len(classical_cyclage_chain(tab)) - 1


def classical_charge(tab) -> int:
    return shapes.content_norm(_plain_content(tab)) - classical_cocharge(tab)


# text / JSON

def letter_text(x) -> str:
    if isinstance(x, tuple):
        i, j = x
        return str(i) if j == 1 else f"{i}^{j}"
    return str(x)


def to_text(tab) -> str:
    """One row per line, top row first (bottom row last)."""
    return "\n".join(" ".join(letter_text(x) for x in row) for row in reversed(tab))


def to_json(tab) -> list:
    return [[list(x) if isinstance(x, tuple) else [x, 1] for x in row] for row in tab]


def from_json(data, plain: bool = False) -> tuple:
    try:
        if plain:
            tab = tuple(tuple(int(x[0]) for x in row) for row in data)
        else:
            tab = tuple(tuple((int(x[0]), int(x[1])) for x in row) for row in data)
    except (TypeError, ValueError, IndexError) as exc:
        raise UserInputError(f"bad tableau JSON {data!r}") from exc
    return check_tableau(tab)
