"""Littlewood-Richardson tableaux over graded alphabets and their cyclages.

Letters are pairs ``(i, j)`` standing for x_i^(j), ordered lexicographically.
For a rectangle list mu = ((w_1, a_1), ...), index i carries the letters
(i, 1) .. (i, a_i), each w_i times. A word is in W_mu when, for every i, its
i-letters form a balanced Yamanouchi word: reading any suffix there are at
least as many (i, j) as (i, j+1).

An LR tableau determines its own content, so most functions take only the
tableau. Tableaux produced by dropping components may use a non-contiguous
set of indices; ``compress`` relabels them 1..L'.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from . import paths as pa
from . import shapes
from . import tableaux as tb
from .errors import DefectError, UserInputError


# content and membership

def word_content(word) -> dict:
    """{i: (w_i, a_i)} for a balanced word; raises if unbalanced."""
    cnt = Counter(word)
    out = {}
    for i in sorted({x[0] for x in cnt}):
        a = max(j for ii, j in cnt if ii == i)
        ws = {cnt.get((i, j), 0) for j in range(1, a + 1)}
        if len(ws) != 1:
            raise UserInputError(f"letters with index {i} are not balanced")
        out[i] = (ws.pop(), a)
    return out


def tableau_content(tab) -> dict:
    return word_content(tb.row_word(tab))


def rectlist_of(tab) -> tuple:
    """Content as a rectangle list, in index order."""
    return tuple(tableau_content(tab).values())


def is_lr_word(word, mu=None) -> bool:
    word = tuple(word)
    try:
        cont = word_content(word)
    except UserInputError:
        return False
    if mu is not None:
        mu = tuple(mu)
        if sorted(cont) != list(range(1, len(mu) + 1)):
            return False
        if tuple(cont[i] for i in sorted(cont)) != mu:
            return False
    counts = Counter()
    for x in reversed(word):
        i, j = x
        counts[x] += 1
        if j > 1 and counts[x] > counts[(i, j - 1)]:
            return False
    return True


def is_lr_tableau(tab, mu=None) -> bool:
    return tb.is_tableau(tab) and is_lr_word(tb.row_word(tab), mu)


def _alphabet(mu):
    return [((i, j), w) for i, (w, a) in enumerate(mu, 1) for j in range(1, a + 1)]


@lru_cache(maxsize=None)
def enumerate_lrt(lam, mu) -> tuple:
    """LRT(lam, mu): tableaux of shape lam, content mu, row word in W_mu."""
    lam = shapes.partition(lam)
    mu = tuple(mu)
    if sum(lam) != shapes.rectlist_size(mu):
        return ()
    out = []
    for t in tb.tableaux_with_content(lam, _alphabet(mu)):
        if is_lr_word(tb.row_word(t)):
            out.append(t)
    return tuple(sorted(out))


def enumerate_all_lrt(mu) -> tuple:
    out = []
    for lam in shapes.partitions(shapes.rectlist_size(mu)):
        out.extend(enumerate_lrt(lam, tuple(mu)))
    return tuple(out)


def block_word(i, r) -> tuple:
    """x_i^{mu_i} = (x_i^(a) ... x_i^(1)) repeated w times."""
    w, a = r
    return tuple((i, j) for _ in range(w) for j in range(a, 0, -1))


def min_word(mu) -> tuple:
    out = ()
    for i, r in enumerate(mu, 1):
        out += block_word(i, r)
    return out


def max_word(mu) -> tuple:
    out = ()
    for i in range(len(mu), 0, -1):
        out += block_word(i, mu[i - 1])
    return out


def t_min(mu):
    return tb.tableau_of_word(min_word(tuple(mu)))


def t_max(mu):
    return tb.tableau_of_word(max_word(tuple(mu)))


def norm(tab) -> int:
    return shapes.rectlist_norm(rectlist_of(tab))


# relabeling

def compress_word(word):
    """Relabel indices to 1..L'; returns (word, forward map, inverse map)."""
    idx = sorted({x[0] for x in word})
    fwd = {i: k for k, i in enumerate(idx, 1)}
    inv = {k: i for i, k in fwd.items()}
    return tuple((fwd[i], j) for i, j in word), fwd, inv


def relabel_tableau(tab, mapping):
    return tuple(tuple((mapping[i], j) for i, j in row) for row in tab)


def relabel_word(word, mapping):
    return tuple((mapping[i], j) for i, j in word)


# the initial cyclage

def _pairing(cur, lo, hi):
    """Bracket-match hi-letters (open) with later lo-letters (close).

    Returns (pairs, free lo positions, free hi positions)."""
    stack = []
    free_lo = []
    pairs = {}
    for pos, x in enumerate(cur):
        if x == hi:
            stack.append(pos)
        elif x == lo:
            if stack:
                p = stack.pop()
                pairs[pos] = p
                pairs[p] = pos
            else:
                free_lo.append(pos)
    return pairs, free_lo, stack


def cyclage_word(word) -> tuple:
    """Z(w) for w = x_i^(a_i) u: move the first letter to the end, then for
    j = a_i - 1 .. 1 swap the unique unpaired (i, j), (i, j+1)."""
    word = tuple(word)
    i, a = word[0]
    cur = list(word[1:]) + [word[0]]
    for j in range(a - 1, 0, -1):
        _, free_lo, free_hi = _pairing(cur, (i, j), (i, j + 1))
        if len(free_lo) != 1 or len(free_hi) != 1 or free_lo[0] > free_hi[0]:
            raise DefectError("cyclage chain lost its unpaired letters", witness=word)
        cur[free_lo[0]] = (i, j + 1)
        cur[free_hi[0]] = (i, j)
    return tuple(cur)


def cocyclage_word(word) -> tuple:
    """Inverse of cyclage_word for w = u x_i^(1)."""
    word = tuple(word)
    i, one = word[-1]
    if one != 1:
        raise UserInputError("word must end with a letter (i, 1)")
    a = word_content(word)[i][1]
    cur = list(word)
    last = len(cur) - 1
    for j in range(1, a):
        pairs, _, _ = _pairing(cur, (i, j), (i, j + 1))
        if last not in pairs:
            raise DefectError("last letter has no partner in the cocyclage chain", witness=word)
        p = pairs[last]
        cur[p] = (i, j)
        cur[last] = (i, j + 1)
    return (cur[-1],) + tuple(cur[:-1])


def initial_cyclage(tab):
    """C(T) = [Z(w_T)]."""
    w = tb.row_word(tab)
    if not w:
        raise UserInputError("empty tableau has no cyclage")
    i, a = w[0]
    if tableau_content(tab)[i][1] != a:
        raise DefectError("row word does not start with a top letter", witness=tb.to_json(tab))
    return tb.tableau_of_word(cyclage_word(w))


# dropping and reinserting full components

def drop(tab):
    """Remove every component i for which row j holds x_i^(j) for all rows j.

    Returns (reduced tableau, record); the record lists, in drop order, the
    dropped letters with their rows.
    """
    record = []
    while tab:
        h = len(tab)
        cont = tableau_content(tab)
        pick = None
        for i, (w, a) in cont.items():
            if a == h and all((i, j) in tab[j - 1] for j in range(1, h + 1)):
                pick = i
                break
        if pick is None:
            break
        letters = tuple((x, r) for r, row in enumerate(tab, 1) for x in row if x[0] == pick)
        new = tuple(tuple(x for x in row if x[0] != pick) for row in tab)
        new = tuple(row for row in new if row)
        if not tb.is_tableau(new) and new:
            raise DefectError("dropping a component broke the tableau", witness=tb.to_json(tab))
        record.append((pick, letters))
        tab = new
    return tab, tuple(record)


def undrop(tab, record):
    """Reinsert dropped letters x_i^(j) into row j, in sorted position."""
    rows = [list(r) for r in tab]
    for pick, letters in reversed(record):
        for (i, j), _ in sorted(letters, key=lambda t: t[0][1]):
            while len(rows) < j:
                rows.append([])
            row = rows[j - 1]
            k = 0
            while k < len(row) and row[k] <= (i, j):
                k += 1
            row.insert(k, (i, j))
    out = tuple(tuple(r) for r in rows)
    if not tb.is_tableau(out):
        raise DefectError("reinsertion does not give a tableau", witness=tb.to_json(out))
    return out


def dropped_rows_match(record) -> bool:
    """True when every dropped x_i^(j) sat in row j (so undrop inverts drop)."""
    return all(r == x[1] for _, letters in record for x, r in letters)


def modified_cyclage(tab):
    """Cbar = U . C . D."""
    reduced, record = drop(tab)
    if not reduced:
        raise UserInputError("the minimal tableau has no cyclage")
    return undrop(initial_cyclage(reduced), record)


_COCHARGE = {}


def cocharge(tab) -> int:
    """Number of modified cyclages needed to reach T_min."""
    c = _COCHARGE.get(tab)
    if c is not None:
        return c
    mu = rectlist_of(tab)
    target = t_min(mu)
    cap = shapes.rectlist_norm(mu) + 1
    chain = [tab]
    cur = tab
    while cur != target:
        if len(chain) > cap:
            raise DefectError("cocharge exceeds ||mu||", witness=tb.to_json(tab))
        if cur in _COCHARGE:
            break
        cur = modified_cyclage(cur)
        chain.append(cur)
    base = 0 if cur == target else _COCHARGE[cur]
    n = len(chain) - 1
    for k, t in enumerate(chain):
        _COCHARGE[t] = base + n - k
    return _COCHARGE[tab]


def charge(tab) -> int:
    return norm(tab) - cocharge(tab)


def cyclage_chain(tab) -> list:
    chain = [tab]
    target = t_min(rectlist_of(tab))
    while chain[-1] != target:
        chain.append(modified_cyclage(chain[-1]))
    return chain


# involutions

def lambda_involution(tab):
    """Relabel the k-th (i, j) from the left as (i, k), reverse, insert."""
    seen = Counter()
    out = []
    for x in tb.row_word(tab):
        seen[x] += 1
        out.append((x[0], seen[x]))
    return tb.tableau_of_word(tuple(reversed(out)))


def omega_word(word) -> tuple:
    """Reverse and dualize x_i^(j) -> x_{L+1-i}^(a_i+1-j); indices 1..L."""
    cont = word_content(word)
    L = len(cont)
    if sorted(cont) != list(range(1, L + 1)):
        raise UserInputError("omega needs contiguous indices")
    return tuple((L + 1 - i, cont[i][1] + 1 - j) for i, j in reversed(word))


def omega_tableau(tab):
    return tb.tableau_of_word(omega_word(tb.row_word(tab)))


def lr_dual_content(mu) -> tuple:
    """Content after omega: reversed order."""
    return tuple(reversed(tuple(mu)))


# orbit moves and standardization

def tau(tab, i: int):
    """Transport sigma_i through the path bijection: [omega(sigma_i(omega^-1(w_T)))]."""
    w, _, inv = compress_word(tb.row_word(tab))
    p = pa.omega_inverse(w)
    moved = pa.omega(pa.sigma(p, i))
    return tb.tableau_of_word(relabel_word(moved, inv))


def phi(tab):
    """Change the rightmost x_1^(j) into x_2^(j) for every j <= a_1.

    Needs a_1 = a_2 and w_1 > w_2 (or index 2 empty, see ``phi_prime``).
    """
    cont = tableau_content(tab)
    w1, a1 = cont[1]
    if 2 in cont:
        w2, a2 = cont[2]
        if a2 != a1 or w1 <= w2:
            raise UserInputError("phi needs equal heights and a wider first component")
    rows = [list(r) for r in tab]
    for j in range(1, a1 + 1):
        spot = None
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if x == (1, j):
                    if spot is None or c > spot[1]:
                        spot = (r, c)
        rows[spot[0]][spot[1]] = (2, j)
    out = tuple(tuple(r) for r in rows)
    if not is_lr_tableau(out):
        raise DefectError("phi did not give an LR tableau", witness=tb.to_json(tab))
    return out


def phi_prime(tab):
    """Split one column off the first component into a new second one."""
    cont = tableau_content(tab)
    if cont[1][0] < 2:
        raise UserInputError("first component must have width at least 2")
    shifted = relabel_tableau(tab, {i: (i + 1 if i >= 2 else i) for i in cont})
    return phi(shifted)


def move_to_front(tab, k: int):
    """Apply tau_{k-1}, ..., tau_1 so component k becomes component 1."""
    for i in range(k - 1, 0, -1):
        tab = tau(tab, i)
    return tab


def theta(tab):
    """Standardize to a content of columns with weakly decreasing heights."""
    while True:
        mu = rectlist_of(tab)
        wide = [k for k, (w, _) in enumerate(mu, 1) if w >= 2]
        if not wide:
            break
        tab = phi_prime(move_to_front(tab, wide[0]))
    # bubble sort the columns by decreasing height
    while True:
        mu = rectlist_of(tab)
        for i in range(1, len(mu)):
            if mu[i - 1][1] < mu[i][1]:
                tab = tau(tab, i)
                break
        else:
            return tab


# text / JSON

def word_text(word) -> str:
    return " ".join(f"x{i}^({j})" for i, j in word)
