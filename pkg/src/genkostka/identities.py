"""Identity checks between the independently computed polynomials.

Every check returns an ``IdentityReport``. Theorems get verdict "pass" or
"fail"; conjectures are evaluated the same way but tagged ``conjecture``.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import permutations, product

from sympy import Matrix, eye, kronecker_product

from . import fermionic as fe
from . import lrtab as lr
from . import paths as pa
from . import shapes
from . import tableaux as tb
from .errors import UserInputError
from .qpoly import ONE, ZERO, QPoly, qbinom


@dataclass
class IdentityReport:
    name: str
    instance: dict
    left: QPoly
    right: QPoly
    conjecture: bool = False
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.left == self.right

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"

    def to_json(self) -> dict:
        d = asdict(self)
        d["left"] = self.left.to_text()
        d["right"] = self.right.to_text()
        d["verdict"] = self.verdict
        return d


def _report(name, instance, fn, conjecture=False):
    t0 = time.perf_counter()
    left, right = fn()
    return IdentityReport(name, instance, left, right, conjecture, time.perf_counter() - t0)


# polynomials by method

# above this many letters a full path table is too large; enumerate one content
TABLE_MAX_N = 4


def canonical(mu) -> tuple:
    return tuple(sorted(mu, reverse=True))


def supernomial(lam, mu) -> QPoly:
    """S_{lam mu} from paths; lam a composition with len(lam) = n."""
    lam = tuple(lam)
    if any(x < 0 for x in lam):
        return ZERO
    mu = canonical(mu)
    n = len(lam)
    if any(h > n for _, h in mu):
        raise UserInputError("a rectangle is taller than n")
    if sum(lam) != shapes.rectlist_size(mu):
        return ZERO
    return pa.path_table(mu, n)[lam][0]


def _pad(lam, n):
    lam = shapes.strip(tuple(lam))
    if len(lam) > n:
        return None
    return lam + (0,) * (n - len(lam))


def kostka_tilde(lam, mu, method: str = "paths") -> QPoly:
    lam = shapes.strip(tuple(lam))
    if method == "paths":
        mu = canonical(mu)
        n = max([len(lam)] + [h for _, h in mu] + [1])
        if sum(lam) != shapes.rectlist_size(mu):
            return ZERO
        if n > TABLE_MAX_N:
            return pa.kostka_tilde(lam, mu)
        return pa.path_table(mu, n)[_pad(lam, n)][1]
    if method == "charge":
        return QPoly(Counter(lr.cocharge(t) for t in lr.enumerate_lrt(lam, tuple(mu))))
    if method == "fermionic":
        return kostka(lam, mu, "fermionic").substitute_inverse_q().shift(shapes.rectlist_norm(mu))
    raise UserInputError(f"unknown method {method!r}")


def kostka(lam, mu, method: str = "paths") -> QPoly:
    lam = shapes.strip(tuple(lam))
    if method == "charge":
        return QPoly(Counter(lr.charge(t) for t in lr.enumerate_lrt(lam, tuple(mu))))
    if method == "fermionic":
        n = max([len(lam)] + [h for _, h in mu] + [1])
        L = shapes.lmatrix_from_rectlist(mu, n)
        return fe.fermionic(L, _pad(lam, n))
    return kostka_tilde(lam, mu, method).substitute_inverse_q().shift(shapes.rectlist_norm(mu))


def S_of(L, lam) -> QPoly:
    return supernomial(lam, shapes.rectlist_from_lmatrix(L))


def K_of(L, lam, method="paths") -> QPoly:
    mu = shapes.rectlist_from_lmatrix(L)
    lam = shapes.strip(tuple(lam))
    if sum(lam) != shapes.rectlist_size(mu):
        return ZERO
    if len(lam) > len(L):
        return ZERO
    if not mu:
        return ONE if not lam else ZERO
    return kostka(lam, mu, method)


# duality and the linear relations

def check_duality(lam, mu, method="charge") -> IdentityReport:
    """K_{lam mu}(q) = q^{||mu||} K_{lam^t mu*}(1/q)."""
    def fn():
        left = kostka(lam, mu, method)
        dual = kostka(shapes.transpose(lam), shapes.rectlist_dual(mu), method)
        return left, dual.substitute_inverse_q().shift(shapes.rectlist_norm(mu))
    return _report("duality", {"lambda": list(lam), "mu": shapes.rectlist_to_json(mu)}, fn)


def check_s_as_sum(lam, mu) -> IdentityReport:
    """S_{lam mu} = sum_eta K_{eta lam}(1) Ktilde_{eta mu}."""
    lam = tuple(lam)
    n = len(lam)

    def fn():
        right = ZERO
        for eta in shapes.partitions(sum(lam), max_len=n):
            k = tb.kostka_number(eta, lam)
            if k:
                right = right + k * kostka_tilde(eta, mu, "charge")
        return supernomial(lam, mu), right
    return _report("S_as_sum", {"lambda": list(lam), "mu": shapes.rectlist_to_json(mu)}, fn)


def perm_sign(t) -> int:
    s = 1
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            if t[i] > t[j]:
                s = -s
    return s


def check_ktilde_as_sum(lam, mu, n) -> IdentityReport:
    """Ktilde_{lam mu} = sum_tau sign(tau) S_{(lam_j + tau_j - j) mu}."""
    lam = _pad(lam, n)

    def fn():
        right = ZERO
        for tau in permutations(range(1, n + 1)):
            comp = tuple(lam[j] + tau[j] - (j + 1) for j in range(n))
            if all(x >= 0 for x in comp):
                right = right + perm_sign(tau) * supernomial(comp, mu)
        return kostka_tilde(lam, mu, "charge"), right
    return _report("Ktilde_as_sum", {"lambda": list(lam), "mu": shapes.rectlist_to_json(mu)}, fn)


# recurrences

def _shift1(L, i, a):
    return shapes.lmatrix_shift(L, {(a, i - 1): 1, (a, i): -2, (a, i + 1): 1})


def _shift2(L, i, a):
    return shapes.lmatrix_shift(L, {(a - 1, i): 1, (a, i): -2, (a + 1, i): 1})


def _rec_precondition(L, i, a):
    n = len(L)
    if not (1 <= a < n and i >= 1 and shapes.lmatrix_entry(L, a, i) >= 2):
        raise UserInputError("recurrence needs 1 <= a < n and L_i^(a) >= 2")


def _grow(L, N):
    return tuple(tuple(r) + (0,) * (N - len(r)) for r in L)


def check_recurrence_S(L, i, a, lam) -> IdentityReport:
    _rec_precondition(L, i, a)
    L = _grow(L, max(len(L[0]), i + 1))

    def fn():
        q = shapes.ell(L, a, i) - i
        right = S_of(_shift1(L, i, a), lam) + S_of(_shift2(L, i, a), lam).shift(q)
        return S_of(L, lam), right
    return _report("recurrence_S", {"L": L, "i": i, "a": a, "lambda": list(lam)}, fn)


def check_recurrence_K(L, i, a, lam, method="paths", fermionic_side=False) -> IdentityReport:
    """Same recurrence for K, or for F when fermionic_side is set."""
    _rec_precondition(L, i, a)
    L = _grow(L, max(len(L[0]), i + 1))
    if fermionic_side:
        def X(M):
            return fe.fermionic(M, lam)
        name = "recurrence_F"
    else:
        def X(M):
            return K_of(M, lam, method)
        name = "recurrence_K"

    def fn():
        q = shapes.ellbar(L, a, i) - a
        right = X(_shift1(L, i, a)).shift(q) + X(_shift2(L, i, a))
        return X(L), right
    return _report(name, {"L": L, "i": i, "a": a, "lambda": list(lam)}, fn)


def check_column_removal(L, i, lam, kind="S") -> IdentityReport:
    """Adding a height-n rectangle (i^n) and adding i to every part of lam."""
    n = len(L)
    L2 = shapes.lmatrix_shift(L, {(n, i): 1})
    lam = tuple(lam) + (0,) * (n - len(lam))
    lam2 = tuple(x + i for x in lam)

    def fn():
        if kind == "S":
            return S_of(L2, lam2), S_of(L, lam)
        e = sum(a * shapes.ell(L, a, i) for a in range(1, n + 1))
        return K_of(L2, lam2), K_of(L, lam).shift(e)
    return _report(f"column_removal_{kind}", {"L": L, "i": i, "lambda": list(lam)}, fn)


# the n = 2 case

def ells(L) -> list:
    N = len(L)
    return [sum(min(k, j) * L[j - 1] for j in range(1, N + 1)) for k in range(1, N + 1)]


def a1_closed_form(L, a) -> QPoly:
    """Closed-form sum over j_1 + ... + j_N = a + l_N/2 of products of q-binomials."""
    L = tuple(L)
    N = len(L)
    l = ells(L)
    J = Fraction(a) + Fraction(l[-1], 2)
    if J.denominator != 1 or J < 0:
        return ZERO
    out = ZERO
    for js in shapes.compositions(int(J), N):
        e = sum((l[k] - l[k - 1] - js[k]) * js[k - 1] for k in range(1, N))
        f = qbinom(L[-1], js[-1])
        for k in range(N - 2, -1, -1):
            if f.is_zero():
                break
            f = f * qbinom(L[k] + js[k + 1], js[k])
        if not f.is_zero():
            out = out + f.shift(e)
    return out


def a1_rectlist(L) -> tuple:
    return tuple((i, 1) for i, c in enumerate(L, 1) for _ in range(c))


def a1_paths(L, a) -> QPoly:
    """S_1(L, a) from paths: one-row steps, lam = (l_N/2 + a, l_N/2 - a)."""
    lN = ells(L)[-1] if L else 0
    x = Fraction(lN, 2) + Fraction(a)
    y = Fraction(lN, 2) - Fraction(a)
    if x.denominator != 1 or x < 0 or y < 0:
        return ZERO
    return supernomial((int(x), int(y)), a1_rectlist(L))


def check_a1(L, a) -> IdentityReport:
    return _report("a1_closed_form", {"L": list(L), "a": str(Fraction(a))},
                   lambda: (a1_paths(L, a), a1_closed_form(L, a)))


def check_a1_family(L, A, B, a) -> IdentityReport:
    """S_1(L+e_A+e_B) = S_1(L+e_{A-1}+e_{B+1}) + q^{l_A + A} S_1(L+e_{B-A})."""
    L = list(L)
    N = len(L)
    if not (1 <= A <= B < N):
        raise UserInputError("need 1 <= A <= B < N")
    if A < B and any(L[k] for k in range(B - 1)):
        raise UserInputError("need L_1 = ... = L_{B-1} = 0 when A < B")

    def plus(*idx):
        M = list(L)
        for k in idx:
            if k >= 1:
                M[k - 1] += 1
        return tuple(M)

    def fn():
        left = a1_closed_form(plus(A, B), a)
        right = a1_closed_form(plus(A - 1, B + 1), a) + \
            a1_closed_form(plus(B - A), a).shift(ells(L)[A - 1] + A)
        return left, right
    return _report("a1_family_recurrence", {"L": L, "A": A, "B": B, "a": str(Fraction(a))}, fn)


def rr_T1(L, a) -> QPoly:
    N = len(L)
    l = ells(L)
    e = Fraction(1, 4) * sum(x * y for x, y in zip(L, l)) - Fraction(a) ** 2 / N
    return a1_closed_form(L, a).substitute_inverse_q().shift(e)


def rr_lhs(L, p, a, b) -> QPoly:
    N = len(L)
    half = Fraction(ells(L)[-1], 2)
    out = ZERO
    jmax = int(half) // p + 2
    for j in range(-jmax, jmax + 1):
        x = Fraction(b - a, 2) + p * j
        if abs(x) <= half:
            out = out + rr_T1(L, x).shift(Fraction(j, N) * (p * (p - N) * j + p * b - (p - N) * a))
        y = Fraction(b + a, 2) + p * j
        if abs(y) <= half:
            out = out - rr_T1(L, y).shift(Fraction(1, N) * (p * j + a) * ((p - N) * j + b))
    return out


def cartan(d) -> Matrix:
    return Matrix(d, d, lambda i, j: 2 if i == j else (-1 if abs(i - j) == 1 else 0))


def _unit(k, d):
    v = [0] * d
    if 1 <= k <= d:
        v[k - 1] = 1
    return v


def _Qvec(i, d):
    v = [0] * d
    k = i - 1
    while k >= 1:
        if k <= d:
            v[k - 1] += 1
        k -= 2
    return v


def rr_rhs(L, p, a, b) -> QPoly:
    N = len(L)
    d = p - 3
    C = cartan(d)
    v = [x + y for x, y in zip(_unit(a - 1, d), _unit(p - b - 1, d))]
    Q = [x + y + z for x, y, z in zip(_Qvec(a - 1, d), _Qvec(p - b - 1, d), _Qvec(p - 2, d))]
    for i in range(1, N + 1):
        v = [x + L[i - 1] * y for x, y in zip(v, _unit(i, d))]
        if i >= 2:
            Q = [x + L[i - 1] * y for x, y in zip(Q, _Qvec(i, d))]
    bound = C.inv() * Matrix(v)
    out = ZERO
    for m in product(*[range(int(bk) + 1) for bk in bound]):
        if any((x - y) % 2 for x, y in zip(m, Q)):
            continue
        mv = Matrix(m)
        nv2 = Matrix(v) - C * mv
        if any(x % 2 or x < 0 for x in nv2):
            continue
        f = ONE
        for j in range(d):
            f = f * qbinom(int(m[j] + nv2[j] // 2), int(m[j]))
        ma = m[a - 2] if 2 <= a <= d + 1 else 0
        out = out + f.shift(Fraction(int((mv.T * C * mv)[0]), 4) - Fraction(ma, 2))
    return out.shift(Fraction((b - a) * (a - b - N), 4 * N))


def rr_admissible(L, p, a, b) -> bool:
    N = len(L)
    return N >= 1 and N < p - 2 and 1 <= a <= p - 1 and 1 <= b <= p - N - 1


def check_rr(L, p, a, b) -> IdentityReport:
    if not rr_admissible(L, p, a, b):
        raise UserInputError("need N < p-2, 1 <= a <= p-1, 1 <= b <= p-N-1")
    return _report("rogers_ramanujan", {"L": list(L), "p": p, "a": a, "b": b},
                   lambda: (rr_lhs(L, p, a, b), rr_rhs(L, p, a, b)))


# higher rank (conjecture)

def _cinv(n):
    return cartan(n - 1).inv()


def anrr_admissible(L, p) -> bool:
    n = len(L)
    N = len(L[0])
    if not (n >= 2 and N >= 1 and N < p - n):
        return False
    Ci = _cinv(n)
    for i in range(N):
        col = Matrix([L[b][i] for b in range(n - 1)])
        if any(Fraction(str(x)).denominator != 1 for x in Ci * col):
            return False
    return True


def anrr_T(L, lam) -> QPoly:
    n = len(L)
    N = len(L[0])
    Ci = _cinv(n)
    e = Fraction(0)
    for i in range(1, N + 1):
        for a in range(1, n):
            for b in range(1, n):
                e += Fraction(str(Ci[a - 1, b - 1])) * L[a - 1][i - 1] * shapes.ell(L, b, i)
    e /= 2
    tot = Fraction(sum(lam))
    e -= Fraction(1, 2 * N) * sum((x - tot / n) ** 2 for x in lam)
    return S_of(L, lam).substitute_inverse_q().shift(e)


def anrr_lhs(L, p) -> QPoly:
    n = len(L)
    N = len(L[0])
    size = shapes.lmatrix_size(L)
    base = Fraction(size, n)
    out = ZERO
    K = size // p + 2
    for k in product(range(-K, K + 1), repeat=n):
        if sum(k):
            continue
        for tau in permutations(range(1, n + 1)):
            lam = [base + p * k[j] + tau[j] - (j + 1) for j in range(n)]
            if any(x < 0 or x.denominator != 1 for x in lam):
                continue
            ex = sum(Fraction(1, 2 * N) * (p * k[i] + tau[i] - (i + 1)) ** 2
                     - Fraction(p, 2) * k[i] ** 2 + (i + 1) * k[i] for i in range(n))
            out = out + perm_sign(tau) * anrr_T(L, tuple(int(x) for x in lam)).shift(ex)
    return out


def anrr_rhs(L, p) -> QPoly:
    n = len(L)
    N = len(L[0])
    d1, d2 = n - 1, p - n - 1
    C1, C2 = cartan(d1), cartan(d2)
    C1i, C2i = C1.inv(), C2.inv()
    Lv = Matrix(d1 * d2, 1, lambda r, _: L[r // d2][r % d2] if (r % d2) < N else 0)
    A = kronecker_product(C1, eye(d2))
    B = kronecker_product(eye(d1), C2)
    Ai = A.inv()
    KI = kronecker_product(C1i, eye(d2))
    quad = kronecker_product(C1i, C2)
    top = kronecker_product(C1i, C2i) * Lv
    bounds = [int(top[a * d2 + i] / C1i[a, a]) for a in range(d1) for i in range(d2)]
    out = ZERO
    for m in product(*[range(max(bd, 0) + 1) for bd in bounds]):
        mv = Matrix(m)
        if any(Fraction(str(x)).denominator != 1 for x in KI * mv):
            continue
        nv = Ai * (Lv - B * mv)
        if any(Fraction(str(x)).denominator != 1 or x < 0 for x in nv):
            continue
        f = ONE
        for r in range(d1 * d2):
            f = f * qbinom(int(mv[r] + nv[r]), int(mv[r]))
        out = out + f.shift(Fraction(str((mv.T * quad * mv)[0])) / 2)
    return out


def check_anrr(L, p) -> IdentityReport:
    if not anrr_admissible(L, p):
        raise UserInputError("inadmissible instance for the higher-rank identity")
    return _report("higher_rank_rr", {"L": L, "p": p},
                   lambda: (anrr_lhs(L, p), anrr_rhs(L, p)), conjecture=True)


# fermionic = Kostka

def check_fermionic(L, lam, method="charge") -> IdentityReport:
    conj = not fe.theorem_hypothesis(L)
    n = len(L)
    return _report("fermionic_equals_kostka", {"L": L, "lambda": list(lam)},
                   lambda: (fe.fermionic(L, _pad(lam, n)), K_of(L, lam, method)), conjecture=conj)


# instance generators for the sweeps

def lmatrices(max_size, n, min_size=1):
    """L-matrices (n rows) of all rectangle multisets with heights <= n."""
    for s in range(min_size, max_size + 1):
        for mu in shapes.rect_multisets(s, n):
            yield shapes.lmatrix_from_rectlist(mu, n)
