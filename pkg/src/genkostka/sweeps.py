"""Exhaustive verification sweeps.

A sweep is a list of independent tasks; each task returns ``(checked,
records)`` where ``records`` holds every failure and every conjecture
finding as plain JSON-ready dicts. Passing theorem checks are only counted.
Tasks are module-level functions so they can be farmed out to processes.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import product

from . import cyclage as cy
from . import fermionic as fe
from . import identities as ids
from . import lrtab as lr
from . import paths as pa
from . import shapes
from . import tableaux as tb
from .errors import DefectError
from .qpoly import QPoly

SUITES = ("hco", "duality", "recurrences", "sassb", "a1", "rr", "anrr", "poset", "fermionic")
EXPERIMENTAL = ("anrr",)
# informational records: neither failures nor conjectures
NOTES = ("fixed_point",)


@dataclass
class SweepSummary:
    suite: str
    max_boxes: int
    checked: int = 0
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        verdict = "pass" if self.ok else "FAIL"
        out = f"{self.suite}: {verdict} ({self.checked} checks, {len(self.failures)} failures"
        if self.findings:
            held = sum(1 for f in self.findings if f["verdict"] == "pass")
            out += f", conjectures {held}/{len(self.findings)} held"
        return out + f", {self.elapsed:.1f}s)"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_boxes": self.max_boxes,
            "checked": self.checked,
            "ok": self.ok,
            "failures": self.failures,
            "findings": self.findings,
            "notes": self.notes,
        }


def _record(rep: ids.IdentityReport) -> dict:
    d = rep.to_json()
    d.pop("elapsed", None)
    return d


def _collect(reports):
    checked = 0
    records = []
    for rep in reports:
        checked += 1
        if rep.conjecture or not rep.ok:
            records.append(_record(rep))
    return checked, records


def _fail(name, instance, detail) -> dict:
    return {"name": name, "instance": instance, "verdict": "fail", "conjecture": False, "detail": detail}


def _mu_json(mu):
    return shapes.rectlist_to_json(mu)


# weight = cocharge

def hco_target(path):
    """The LR tableau Omega(omega(P)) whose cocharge should equal H(P)."""
    return tb.tableau_of_word(lr.omega_word(pa.omega(path)))


def task_hco(mu, n):
    checked = 0
    records = []
    for lam in shapes.compositions(shapes.rectlist_size(mu), n):
        for p in pa.enumerate_paths(mu, lam):
            checked += 1
            h = pa.weight(p)
            t = hco_target(p)
            try:
                co = lr.cocharge(t)
            except DefectError as exc:
                co = f"defect: {exc}"
            if co != h:
                records.append(_fail("weight_equals_cocharge",
                                     {"mu": _mu_json(mu), "path": pa.path_to_json(p)["steps"]},
                                     {"H": h, "co": co, "tableau": tb.to_json(t)}))
    return checked, records


def tasks_hco(max_boxes, n=3):
    return [(task_hco, (mu, n)) for s in range(1, max_boxes + 1) for mu in shapes.rectlists(s, n)]


# duality, linear relations, recurrences

def _lams(L):
    n = len(L)
    return [lam + (0,) * (n - len(lam))
            for lam in shapes.partitions(shapes.lmatrix_size(L), max_len=n)]


def task_duality(mu, n):
    reps = []
    for lam in shapes.partitions(shapes.rectlist_size(mu), max_len=n):
        reps.append(ids.check_duality(lam, mu, method="paths"))
    return _collect(reps)


def tasks_duality(max_boxes, n=3):
    return [(task_duality, (mu, n)) for s in range(1, max_boxes + 1)
            for mu in shapes.rect_multisets(s, n)]


def task_sassb(L):
    n = len(L)
    # the charge route is only reliable with the rectangles in descending order
    mu = ids.canonical(shapes.rectlist_from_lmatrix(L))
    reps = []
    for lam in shapes.compositions(shapes.lmatrix_size(L), n):
        reps.append(ids.check_s_as_sum(lam, mu))
    for lam in _lams(L):
        reps.append(ids.check_ktilde_as_sum(lam, mu, n))
    return _collect(reps)


def tasks_sassb(max_boxes, n=3):
    return [(task_sassb, (L,)) for L in ids.lmatrices(max_boxes, n)]


def task_recurrences(L):
    n = len(L)
    N = len(L[0])
    reps = []
    for a in range(1, n):
        for i in range(1, N + 1):
            if shapes.lmatrix_entry(L, a, i) < 2:
                continue
            for lam in _lams(L):
                reps.append(ids.check_recurrence_S(L, i, a, lam))
                reps.append(ids.check_recurrence_K(L, i, a, lam))
                reps.append(ids.check_recurrence_K(L, i, a, lam, fermionic_side=True))
    for i in range(1, N + 1):
        for lam in _lams(L):
            reps.append(ids.check_column_removal(L, i, lam, "S"))
            reps.append(ids.check_column_removal(L, i, lam, "K"))
    return _collect(reps)


def tasks_recurrences(max_boxes, n=3):
    return [(task_recurrences, (L,)) for L in ids.lmatrices(max_boxes, n)]


# the n = 2 closed form and the Rogers-Ramanujan type identities

def a1_vectors(max_ell, N):
    """L = (L_1..L_N) with sum_j j L_j <= max_ell."""
    def rec(j, left):
        if j > N:
            yield ()
            return
        for c in range(left // j + 1):
            for rest in rec(j + 1, left - c * j):
                yield (c,) + rest
    return [L for L in rec(1, max_ell) if any(L)]


def a1_range(L):
    half = Fraction(ids.ells(L)[-1], 2)
    a = -half
    while a <= half:
        yield a
        a += 1


def task_a1(L):
    reps = [ids.check_a1(L, a) for a in a1_range(L)]
    N = len(L)
    for A in range(1, N):
        for B in range(A, N):
            if A < B and any(L[k] for k in range(B - 1)):
                continue
            for a in a1_range(L):
                reps.append(ids.check_a1_family(L, A, B, a))
    return _collect(reps)


def tasks_a1(max_boxes, max_N=3):
    return [(task_a1, (L,)) for N in range(1, max_N + 1) for L in a1_vectors(max_boxes, N)]


def task_rr(L, p):
    N = len(L)
    reps = []
    for a in range(1, p):
        for b in range(1, p - N):
            reps.append(ids.check_rr(L, p, a, b))
    return _collect(reps)


def tasks_rr(max_boxes, max_p=6, max_N=2):
    return [(task_rr, (L, p)) for p in range(4, max_p + 1) for N in range(1, min(max_N, p - 3) + 1)
            for L in a1_vectors(max_boxes, N)]


def anrr_instances(max_boxes, n=3, p=5):
    N = p - n - 1
    out = []
    for entries in product(range(max_boxes + 1), repeat=n * N):
        L = tuple(tuple(entries[a * N:(a + 1) * N]) for a in range(n))
        s = shapes.lmatrix_size(L)
        if 0 < s <= max_boxes and ids.anrr_admissible(L, p):
            out.append((L, p))
    return out


def task_anrr(L, p):
    return _collect([ids.check_anrr(L, p)])


def tasks_anrr(max_boxes, n=3, p=5):
    return [(task_anrr, inst) for inst in anrr_instances(max_boxes, n, p)]


# fermionic formula

def task_fermionic(L):
    return _collect([ids.check_fermionic(L, lam, method="paths") for lam in _lams(L)])


def task_classical(mu):
    """KR sum = charge sum over plain tableaux = fermionic F."""
    checked = 0
    records = []
    n = len(mu)
    L = shapes.lmatrix_from_rectlist(tuple((m, 1) for m in mu), n)
    for lam in shapes.partitions(sum(mu)):
        checked += 1
        charge = QPoly(Counter(tb.classical_charge(t) for t in _plain_tableaux(lam, mu)))
        kr = fe.kostka_kr(lam, mu)
        f = fe.fermionic(L, lam + (0,) * (n - len(lam))) if len(lam) <= n else QPoly({})
        if not (charge == kr == f):
            records.append(_fail("classical_kostka", {"lambda": list(lam), "mu": list(mu)},
                                 {"charge": charge.to_text(), "kr": kr.to_text(), "F": f.to_text()}))
    return checked, records


def _plain_tableaux(lam, mu):
    return tb.tableaux_with_content(lam, [(k, m) for k, m in enumerate(mu, 1)])


def tasks_fermionic(max_boxes, n=3, classical_boxes=6):
    out = [(task_fermionic, (L,)) for L in ids.lmatrices(max_boxes, n)]
    out += [(task_classical, (mu,)) for s in range(1, classical_boxes + 1)
            for mu in shapes.partitions(s)]
    return out


# the cyclage poset

FIXTURE_MU = ((2, 1), (2, 1), (1, 2))


def graph_fixture_json(g: cy.CyclageGraph) -> dict:
    return {
        "mu": _mu_json(g.mu),
        "vertices": [{"tableau": tb.to_json(t), "rank": g.rank(t)} for t in g.vertices],
        "edges": [{"from": g.vertices.index(t), "to": g.vertices.index(u), "lambda": list(lam),
                   "initial": ini} for t, u, lam, ini in g.edges],
    }


def load_graph_fixture() -> dict:
    text = resources.files("genkostka").joinpath("data/cyclage_graph_2_2_1x2.json").read_text()
    return json.loads(text)


def poset_checks(mu) -> tuple:
    """(checked, failures, fixed points) for one content mu."""
    inst = {"mu": _mu_json(mu)}
    failures = []
    checked = 0
    try:
        g = cy.CyclageGraph(mu)
        nm = shapes.rectlist_norm(mu)
        tmin = lr.t_min(mu)
        ranks = {t: g.rank(t) for t in g.vertices}
        checked += 1
        bad = [(t, u) for t, u, _, _ in g.edges if ranks[u] != ranks[t] - 1]
        if bad:
            t, u = bad[0]
            failures.append(_fail("graph_ranked", inst, {"edges_off_by_rank": len(bad),
                                  "from": tb.to_json(t), "to": tb.to_json(u),
                                  "ranks": [ranks[t], ranks[u]]}))
        checked += 1
        if g.sinks() != [tmin]:
            failures.append(_fail("unique_sink", inst, {"sinks": [tb.to_json(t) for t in g.sinks()]}))
        checked += 1
        top = max(ranks.values())
        if not (top == nm == ranks[lr.t_max(mu)]):
            failures.append(_fail("max_rank", inst, {"max_rank": top, "norm": nm,
                                                     "co_tmax": ranks[lr.t_max(mu)]}))
        checked += 1
        off = [t for t in g.vertices if not 0 <= ranks[t] <= nm]
        if off:
            failures.append(_fail("rank_bounds", inst, {"count": len(off), "example": tb.to_json(off[0])}))
        for t in g.vertices:
            checked += 1
            dual = lr.cocharge(lr.lambda_involution(t))
            if nm - ranks[t] != dual:
                failures.append(_fail("charge_is_dual_cocharge", inst,
                                      {"tableau": tb.to_json(t), "c": nm - ranks[t], "co_dual": dual}))
        fixed = [t for t in g.vertices if t != tmin and lr.initial_cyclage(t) == t]
    except DefectError as exc:
        failures.append(_fail("defect", inst, {"message": str(exc), "witness": exc.witness}))
        fixed = []
    return checked, failures, fixed


def task_poset(mu):
    checked, records, fixed = poset_checks(mu)
    for t in fixed:
        records.append({"name": "fixed_point", "instance": {"mu": _mu_json(mu)}, "verdict": "pass",
                        "conjecture": False, "detail": {"tableau": tb.to_json(t),
                                                        "norm": shapes.rectlist_norm(mu)}})
    if tuple(mu) == FIXTURE_MU:
        checked += 1
        if graph_fixture_json(cy.CyclageGraph(mu)) != load_graph_fixture():
            records.append(_fail("graph_fixture", {"mu": _mu_json(mu)}, {}))
    return checked, records


def tasks_poset(max_boxes, mu=None):
    if mu is not None:
        return [(task_poset, (tuple(mu),))]
    return [(task_poset, (m,)) for s in range(1, max_boxes + 1) for m in shapes.rectlists(s)]


# driver

_TASKS = {
    "hco": tasks_hco,
    "duality": tasks_duality,
    "recurrences": tasks_recurrences,
    "sassb": tasks_sassb,
    "a1": tasks_a1,
    "rr": tasks_rr,
    "anrr": tasks_anrr,
    "poset": tasks_poset,
    "fermionic": tasks_fermionic,
}



def _run_task(task):
    fn, args = task
    return fn(*args)


def run_suite(suite: str, max_boxes: int = 6, workers: int = 1, **kw) -> SweepSummary:
    t0 = time.perf_counter()
    tasks = _TASKS[suite](max_boxes, **kw)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [_run_task(t) for t in tasks]
    summary = SweepSummary(suite, max_boxes)
    for checked, records in results:
        summary.checked += checked
        for r in records:
            if r["name"] in NOTES:
                summary.notes.append(r)
            elif r.get("conjecture"):
                summary.findings.append(r)
            else:
                summary.failures.append(r)
    summary.elapsed = time.perf_counter() - t0
    return summary
