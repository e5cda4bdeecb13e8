"""Partitions, rectangles and rectangle lists.

Partitions are tuples of positive ints in weakly decreasing order (French
convention: part 0 is the bottom row). A rectangle of width w and height h is
the partition (w,) * h. A rectangle list is a tuple of such rectangles; it is
kept as ``((w1, h1), (w2, h2), ...)`` pairs.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache

from .errors import UserInputError


def partition(parts) -> tuple:
    """Normalize to a partition, stripping trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise UserInputError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise UserInputError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def size(lam) -> int:
    return sum(lam)


def height(lam) -> int:
    return sum(1 for p in lam if p > 0)


def width(lam) -> int:
    return lam[0] if lam else 0


def transpose(lam) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def add(lam, mu) -> tuple:
    """Part-wise sum (as used for nu + nu')."""
    n = max(len(lam), len(mu))
    a = tuple(lam) + (0,) * (n - len(lam))
    b = tuple(mu) + (0,) * (n - len(mu))
    return strip(tuple(x + y for x, y in zip(a, b)))


def intersect(lam, mu) -> tuple:
    """Cell-wise intersection of Young diagrams."""
    return strip(tuple(min(x, y) for x, y in zip(lam, mu)))


def strip(parts) -> tuple:
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def dominates(lam, mu) -> bool:
    """lam >= mu in dominance order (sizes must agree)."""
    if sum(lam) != sum(mu):
        return False
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam[i] if i < len(lam) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return True


def contains(lam, mu) -> bool:
    """mu fits inside lam."""
    return len(mu) <= len(lam) and all(m <= l for l, m in zip(lam, mu))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> tuple:
    """All partitions of n, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def compositions(total: int, k: int):
    """Weak compositions of total into k parts, lexicographically."""
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, k - 1):
            yield (first,) + rest


# rectangles

def rect(w: int, h: int) -> tuple:
    if w < 1 or h < 1:
        raise UserInputError(f"rectangle needs positive width and height, got {w}x{h}")
    return (w, h)


def rect_partition(r) -> tuple:
    w, h = r
    return (w,) * h


def rect_intersection_size(r1, r2) -> int:
    return min(r1[0], r2[0]) * min(r1[1], r2[1])


def rectlist_size(mu) -> int:
    return sum(w * h for w, h in mu)


def rectlist_norm(mu) -> int:
    """Sum over i < j of |mu_i intersect mu_j|."""
    return sum(
        rect_intersection_size(mu[i], mu[j])
        for i in range(len(mu))
        for j in range(i + 1, len(mu))
    )


def rectlist_dual(mu) -> tuple:
    """Component-wise transpose."""
    return tuple((h, w) for w, h in mu)


def rectlist_heights(mu) -> tuple:
    return tuple(h for _, h in mu)


def content_norm(content) -> int:
    """Sum over i < j of min(mu_i, mu_j) for a content vector."""
    return sum(
        min(content[i], content[j])
        for i in range(len(content))
        for j in range(i + 1, len(content))
    )


@lru_cache(maxsize=None)
def rectangles_of_size(s: int, max_height: int | None = None) -> tuple:
    out = []
    for h in range(1, s + 1):
        if s % h == 0 and (max_height is None or h <= max_height):
            out.append((s // h, h))
    return tuple(out)


def rectlists(total: int, max_height: int | None = None):
    """All ordered rectangle lists of the given total size."""
    if total == 0:
        yield ()
        return
    for s in range(1, total + 1):
        for r in rectangles_of_size(s, max_height):
            for rest in rectlists(total - s, max_height):
                yield (r,) + rest


def rect_multisets(total: int, max_height: int | None = None, max_width: int | None = None):
    """Rectangle lists of the given size up to reordering (sorted canonical form)."""
    seen = set()
    for mu in rectlists(total, max_height):
        key = tuple(sorted(mu, reverse=True))
        if max_width is not None and any(w > max_width for w, _ in key):
            continue
        if key not in seen:
            seen.add(key)
            yield key


# L-matrices: L[a-1][i-1] = number of components equal to (i^a)

def lmatrix_from_rectlist(mu, n: int | None = None, N: int | None = None) -> tuple:
    if n is None:
        n = max((h for _, h in mu), default=0)
    if N is None:
        N = max((w for w, _ in mu), default=0)
    L = [[0] * N for _ in range(n)]
    for w, h in mu:
        if h > n or w > N:
            raise UserInputError(f"rectangle {w}x{h} does not fit a {n}x{N} matrix")
        L[h - 1][w - 1] += 1
    return tuple(tuple(r) for r in L)


def rectlist_from_lmatrix(L) -> tuple:
    """Canonical ordering: by height, then width, as in the matrix scan."""
    out = []
    for a, row in enumerate(L, 1):
        for i, cnt in enumerate(row, 1):
            if cnt < 0:
                raise UserInputError("negative entry in L-matrix")
            out.extend([(i, a)] * cnt)
    return tuple(out)


def lmatrix_entry(L, a: int, i: int) -> int:
    if a < 1 or i < 1 or a > len(L) or i > len(L[a - 1]):
        return 0
    return L[a - 1][i - 1]


def ell(L, a: int, i: int) -> int:
    """sum_j min(i, j) L_j^(a)."""
    if a < 1 or a > len(L):
        return 0
    return sum(min(i, j) * c for j, c in enumerate(L[a - 1], 1))


def ellbar(L, a: int, i: int) -> int:
    """sum_b min(a, b) L_i^(b)."""
    return sum(min(a, b) * lmatrix_entry(L, b, i) for b in range(1, len(L) + 1))


def lmatrix_size(L) -> int:
    return sum(a * i * c for a, row in enumerate(L, 1) for i, c in enumerate(row, 1))


def lmatrix_shift(L, changes) -> tuple | None:
    """Add {(a, i): delta} to L, growing it as needed.

    Row 0 and column 0 are ignored. Returns None if an entry goes negative.
    """
    n = max([len(L)] + [a for (a, _), _ in changes.items()])
    N = max([len(L[0]) if L else 0] + [i for (_, i), _ in changes.items()])
    M = [[lmatrix_entry(L, a, i) for i in range(1, N + 1)] for a in range(1, n + 1)]
    for (a, i), d in changes.items():
        if a < 1 or i < 1:
            continue
        M[a - 1][i - 1] += d
    if any(x < 0 for r in M for x in r):
        return None
    return tuple(tuple(r) for r in M)


# parsing / JSON

def rectlist_to_json(mu) -> list:
    return [{"w": w, "h": h} for w, h in mu]


def rectlist_from_json(data) -> tuple:
    try:
        return tuple(rect(int(d["w"]), int(d["h"])) for d in data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UserInputError(f"bad rectangle list {data!r}") from exc


_REPEAT = re.compile(r"^(.*\])\s*x\s*(\d+)$", re.S)


def parse_rectlist(text: str) -> tuple:
    """Parse a rectangle list.

    Accepted forms: a JSON array of {"w","h"} objects, optionally followed by
    ``xK`` to repeat it K times; or a compact list of partitions such as
    ``(2),(2),(1x2)`` where ``(AxB)`` means part A repeated B times.
    """
    text = text.strip()
    m = _REPEAT.match(text)
    if m:
        return parse_rectlist(m.group(1)) * int(m.group(2))
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UserInputError(f"cannot parse rectangle list {text!r}") from exc
        return rectlist_from_json(data)
    out = []
    for body in re.findall(r"\(([^()]*)\)", text):
        parts = []
        for tok in body.split(","):
            tok = tok.strip()
            if not tok:
                continue
            mm = re.fullmatch(r"(\d+)\s*(?:[x^]\s*(\d+))?", tok)
            if not mm:
                raise UserInputError(f"cannot parse part {tok!r}")
            parts.extend([int(mm.group(1))] * int(mm.group(2) or 1))
        if not parts or len(set(parts)) != 1:
            raise UserInputError(f"({body}) is not a rectangle")
        out.append(rect(parts[0], len(parts)))
    if not out:
        raise UserInputError(f"cannot parse rectangle list {text!r}")
    return tuple(out)


def parse_int_list(text: str) -> tuple:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise UserInputError(f"cannot parse integer list {text!r}") from exc


def lmatrix_from_json(data) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in data)


def all_rect_fits(mu, n: int) -> bool:
    return all(h <= n for _, h in mu)
