"""Lambda-cyclages on LR tableaux and the cyclage graph.

``lambda_cyclage(T, lam)`` picks a word w = x_i^(a_i) u Knuth equivalent to
the row word of T with shape(u) = lam, and applies the cyclage chain to it.
The result is None (the zero of the construction) when no such word exists
or when some element of the path orbit of w starts with x_1^(a_1).
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from . import lrtab as lr
from . import paths as pa
from . import tableaux as tb
from .errors import DefectError

_FRONT = {}
_BACK = {}


def _orbit_flag(path, memo, test):
    hit = memo.get(path)
    if hit is not None:
        return hit
    orb = pa.orbit(path)
    hit = any(test(p) for p in orb)
    for p in orb:
        memo[p] = hit
    return hit


def _max_in_first_step(p):
    m = pa.standard_size(p)
    return p[0][-1][-1] == m


def _one_in_first_step(p):
    return p[0][0][0] == 1


def orbit_starts_with_top(word) -> bool:
    """Some orbit element's word starts with x_1^(a_1)."""
    w, _, _ = lr.compress_word(word)
    return _orbit_flag(pa.omega_inverse(w), _FRONT, _max_in_first_step)


def orbit_ends_with_bottom(word) -> bool:
    """Some orbit element's word ends with x_1^(1)."""
    w, _, _ = lr.compress_word(word)
    return _orbit_flag(pa.omega_inverse(w), _BACK, _one_in_first_step)


@lru_cache(maxsize=None)
def _lambda_cyclages(tab) -> dict:
    """{lam: Z_lam(T)} over all lam with a nonzero result."""
    groups = defaultdict(list)
    for w in tb.knuth_class(tb.row_word(tab)):
        groups[tb.word_shape(w[1:])].append(w)
    out = {}
    for lam, words in groups.items():
        results = set()
        blocked = 0
        for w in words:
            if orbit_starts_with_top(w):
                blocked += 1
            else:
                results.add(tb.tableau_of_word(lr.cyclage_word(w)))
        if len(results) > 1:
            raise DefectError("lambda-cyclage is not well defined", witness=tb.to_json(tab))
        if results and blocked:
            raise DefectError("orbit condition differs within a Knuth class", witness=tb.to_json(tab))
        if results:
            out[lam] = results.pop()
    return out


@lru_cache(maxsize=None)
def _lambda_cocyclages(tab) -> dict:
    groups = defaultdict(list)
    for w in tb.knuth_class(tb.row_word(tab)):
        if w[-1][1] == 1:
            groups[tb.word_shape(w[:-1])].append(w)
    out = {}
    for lam, words in groups.items():
        results = set()
        blocked = 0
        for w in words:
            if orbit_ends_with_bottom(w):
                blocked += 1
            else:
                results.add(tb.tableau_of_word(lr.cocyclage_word(w)))
        if len(results) > 1:
            raise DefectError("lambda-cocyclage is not well defined", witness=tb.to_json(tab))
        if results and blocked:
            raise DefectError("orbit condition differs within a Knuth class", witness=tb.to_json(tab))
        if results:
            out[lam] = results.pop()
    return out


def lambda_cyclage(tab, lam):
    return _lambda_cyclages(tab).get(tuple(lam))


def lambda_cocyclage(tab, lam):
    return _lambda_cocyclages(tab).get(tuple(lam))


def modified_lambda_cyclages(tab) -> dict:
    """{lam: U(Z_lam(D(T)))} for all nonzero results."""
    reduced, record = lr.drop(tab)
    if not reduced:
        return {}
    return {lam: lr.undrop(t, record) for lam, t in _lambda_cyclages(reduced).items()}


def modified_lambda_cyclage(tab, lam):
    return modified_lambda_cyclages(tab).get(tuple(lam))


def _drop_prime(tab):
    reduced, record = lr.drop(lr.lambda_involution(tab))
    return lr.lambda_involution(reduced), record


def _undrop_prime(tab, record):
    return lr.lambda_involution(lr.undrop(lr.lambda_involution(tab), record))


def modified_lambda_cocyclages(tab) -> dict:
    """{lam: U'(Z_lam^-1(D'(T)))} with D' = Lambda D Lambda, U' likewise."""
    reduced, record = _drop_prime(tab)
    if not reduced:
        return {}
    return {lam: _undrop_prime(t, record) for lam, t in _lambda_cocyclages(reduced).items()}


def modified_lambda_cocyclage(tab, lam):
    return modified_lambda_cocyclages(tab).get(tuple(lam))


# the graph

class CyclageGraph:
    """Vertices: all LR tableaux of content mu. Edges: T -> Zbar_lam(T)."""

    def __init__(self, mu, cocyclage: bool = False):
        self.mu = tuple(mu)
        self.cocyclage = cocyclage
        self.vertices = lr.enumerate_all_lrt(self.mu)
        self.edges = []
        step = modified_lambda_cocyclages if cocyclage else modified_lambda_cyclages
        for t in self.vertices:
            initial = None
            if not cocyclage and t != lr.t_min(self.mu):
                initial = lr.modified_cyclage(t)
            for lam, u in sorted(step(t).items()):
                self.edges.append((t, u, lam, u == initial))
        self.edges.sort(key=lambda e: (self.vertices.index(e[0]), e[2]))

    def rank(self, t) -> int:
        return lr.cocharge(t)

    def sinks(self) -> list:
        has_out = {e[0] for e in self.edges}
        return [t for t in self.vertices if t not in has_out]

    def sources(self) -> list:
        has_in = {e[1] for e in self.edges}
        return [t for t in self.vertices if t not in has_in]

    def is_ranked(self) -> bool:
        """Every edge lowers cocharge by exactly one (raises, for cocyclages)."""
        d = 1 if self.cocyclage else -1
        return all(self.rank(u) - self.rank(t) == d for t, u, _, _ in self.edges)

    def rank_counts(self) -> dict:
        out = defaultdict(int)
        for t in self.vertices:
            out[self.rank(t)] += 1
        return dict(sorted(out.items()))

    def edge_set(self) -> set:
        return {(t, u, lam) for t, u, lam, _ in self.edges}

    def to_dot(self) -> str:
        ids = {t: f"v{k}" for k, t in enumerate(self.vertices)}
        lines = ["digraph cyclage {", "  rankdir=TB;", "  node [shape=box, fontname=monospace];"]
        by_rank = defaultdict(list)
        for t in self.vertices:
            by_rank[self.rank(t)].append(t)
        for r in sorted(by_rank):
            names = " ".join(ids[t] for t in by_rank[r])
            lines.append(f"  {{ rank=same; {names} }}")
        for t in self.vertices:
            label = tb.to_text(t).replace("\n", "\\n")
            lines.append(f'  {ids[t]} [label="{label}", tooltip="cocharge {self.rank(t)}"];')
        for t, u, lam, initial in self.edges:
            lab = ",".join(map(str, lam)) or "0"
            if initial:
                style = "color=black"
            else:
                style = 'style=dashed, color=black, fillcolor=white, arrowhead=onormal'
            lines.append(f'  {ids[t]} -> {ids[u]} [label="({lab})", {style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def cyclage_graph(mu) -> CyclageGraph:
    return CyclageGraph(mu)


def cocyclage_graph(mu) -> CyclageGraph:
    return CyclageGraph(mu, cocyclage=True)


def clear_caches():
    _FRONT.clear()
    _BACK.clear()
    _lambda_cyclages.cache_clear()
    _lambda_cocyclages.cache_clear()
