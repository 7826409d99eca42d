"""Griess algebras of ``V_L^+`` for ``L = sqrt(2) R``, ``R`` a simply laced root lattice.

Coordinates live in the simple-root frame of ``R``. The weight-2 space of
``V_L^+`` has basis

* ``q(i,j) = alpha_i(-1) alpha_j(-1) 1`` for ``i <= j``,
* ``x(alpha) = e^{g} + e^{-g}`` with ``g = sqrt(2) alpha``, one per positive root ``alpha``.

With the trivial cocycle (``L`` is doubly even) the products are

* ``q(h,h') q(k,k') = (h|k) q(h',k') + (h|k') q(h',k) + (h'|k) q(h,k') + (h'|k') q(h,k)``
* ``q(h,h') x(alpha) = (h|g)(h'|g) x(alpha)``
* ``x(alpha) x(alpha) = q(g, g)``, and ``x(alpha) x(beta) = x(alpha -+ beta)`` when
  ``(alpha|beta) = +-1``, zero otherwise

and the form is ``(q(h,h')|q(k,k')) = (h|k)(h'|k') + (h|k')(h'|k)``, ``(x|x) = 2``.
The constant in ``x x`` is the one that makes ``w^+-`` idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple

from . import linalg
from .algebra import (
    Element,
    GriessAlgebra,
    GriessError,
    check_automorphism,
    close_subalgebra,
    conformal_vector,
    is_ising,
    is_virasoro,
)

F = Fraction
Root = Tuple[int, ...]


class OracleMismatch(GriessError):
    pass


class NotDoublyEven(GriessError):
    pass


# ---------------------------------------------------------------------------
# root systems


def _cartan(edges, rank):
    G = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        G[i][j] = G[j][i] = -1
    return G


def _dynkin_edges(kind: str, n: int):
    if kind == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E":
        # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4 (zero-based here)
        return [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2] + [(1, 3)]
    raise ValueError(kind)


def _coxeter(kind, n):
    if kind == "A":
        return n + 1
    if kind == "D":
        return 2 * n - 2
    return {6: 12, 7: 18, 8: 30}[n]


@dataclass(frozen=True)
class RootSystemData:
    type: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    positive: Tuple[Root, ...]
    coxeter_number: int

    @property
    def roots(self) -> List[Root]:
        return list(self.positive) + [tuple(-c for c in a) for a in self.positive]

    def ip(self, a: Sequence[int], b: Sequence[int]) -> int:
        G = self.cartan
        return sum(a[i] * G[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j])

    def pairing(self, a: Sequence[int]) -> List[int]:
        """``((alpha_i | a))_i``."""
        G = self.cartan
        return [sum(G[i][j] * a[j] for j in range(self.rank)) for i in range(self.rank)]

    def canonical(self, a: Sequence[int]) -> Root:
        """Representative of ``+-a`` with first nonzero coordinate positive."""
        a = tuple(a)
        first = next(c for c in a if c)
        return a if first > 0 else tuple(-c for c in a)

    def sub_chain(self, k: int) -> "RootSystemData":
        """Roots supported on the first ``k`` simple roots (``A_k`` inside ``A_n``)."""
        if self.type[0] != "A":
            raise ValueError("nested chains are only provided for type A")
        return root_system(f"A{k}")

    def check(self) -> None:
        roots = self.roots
        if len(set(roots)) != len(roots):
            raise GriessError("repeated roots")
        if any(self.ip(a, a) != 2 for a in roots):
            raise GriessError("a root does not have norm 2")
        if len(roots) != self.rank * self.coxeter_number:
            raise GriessError("root count differs from rank times Coxeter number")
        s = set(roots)
        if any(tuple(-c for c in a) not in s for a in roots):
            raise GriessError("roots not closed under negation")


def root_system(name: str) -> RootSystemData:
    """``A1``..``An``, ``D4``.., ``E6``, ``E7``, ``E8`` (``A_5`` and ``A5`` both accepted)."""
    name = name.replace("_", "").upper()
    kind, n = name[0], int(name[1:])
    if kind not in "ADE" or n < 1 or (kind == "D" and n < 4) or (kind == "E" and n not in (6, 7, 8)):
        raise ValueError(f"unsupported root system {name!r}")
    G = _cartan(_dynkin_edges(kind, n), n)
    simple = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    found = list(simple)
    seen = set(found)
    for beta in found:
        for i in range(n):
            # simply laced: beta + alpha_i is a root exactly when (beta|alpha_i) = -1
            if sum(G[i][j] * beta[j] for j in range(n)) == -1:
                nb = tuple(c + (1 if j == i else 0) for j, c in enumerate(beta))
                if nb not in seen:
                    seen.add(nb)
                    found.append(nb)
    found.sort(key=lambda a: (sum(a), a))
    R = RootSystemData(f"{kind}{n}", n, tuple(map(tuple, G)), tuple(found), _coxeter(kind, n))
    R.check()
    return R


# ---------------------------------------------------------------------------
# the algebra


def qlabel(i, j):
    i, j = min(i, j), max(i, j)
    return f"q{i + 1}.{j + 1}"


def xlabel(a: Root):
    return "x(" + ",".join(map(str, a)) + ")"


class LatticeGriess:
    """Weight-2 Griess algebra of ``V_{sqrt2 R}^+`` with named vectors."""

    def __init__(self, R: RootSystemData, validate: bool = True):
        self.R = R
        n = R.rank
        G = R.cartan
        # sqrt(2) R has Gram 2G; doubly even iff every norm is in 4Z
        if any((2 * G[i][i]) % 4 for i in range(n)) or any((2 * G[i][j]) % 2 for i in range(n) for j in range(n)):
            raise NotDoublyEven("sqrt(2) R is not doubly even")
        self.qpairs = [(i, j) for i in range(n) for j in range(i, n)]
        self.qindex = {p: k for k, p in enumerate(self.qpairs)}
        self.roots = list(R.positive)
        nq = len(self.qpairs)
        self.xindex = {a: nq + k for k, a in enumerate(self.roots)}
        labels = [qlabel(i, j) for i, j in self.qpairs] + [xlabel(a) for a in self.roots]
        products, form = self._table()
        self.algebra = GriessAlgebra(labels, products, form, validate=validate)

    # -- construction --------------------------------------------------------

    def _q(self, i, j):
        return self.qindex[(min(i, j), max(i, j))]

    def _qq_vector(self, a: Sequence, b: Sequence) -> Dict[int, Fraction]:
        """Coordinates of ``q(h, h')`` for ``h, h'`` given in simple-root coordinates."""
        out: Dict[int, Fraction] = {}
        n = self.R.rank
        for i in range(n):
            if not a[i]:
                continue
            for j in range(n):
                if b[j]:
                    k = self._q(i, j)
                    out[k] = out.get(k, 0) + F(a[i]) * b[j]
        return {k: v for k, v in out.items() if v}

    def _table(self):
        R, G = self.R, self.R.cartan
        products = {}
        qp = self.qpairs
        for s, (i, j) in enumerate(qp):
            for t in range(s, len(qp)):
                k, l = qp[t]
                vec: Dict[int, Fraction] = {}
                for c, (p, q) in ((G[i][k], (j, l)), (G[i][l], (j, k)), (G[j][k], (i, l)), (G[j][l], (i, k))):
                    if c:
                        m = self._q(p, q)
                        vec[m] = vec.get(m, 0) + F(c)
                products[(s, t)] = {m: v for m, v in vec.items() if v}
        for a in self.roots:
            xa = self.xindex[a]
            pa = R.pairing(a)
            for s, (i, j) in enumerate(qp):
                c = 2 * pa[i] * pa[j]  # (alpha_i|g)(alpha_j|g) with g = sqrt2 alpha
                products[(s, xa)] = {xa: F(c)} if c else {}
            products[(xa, xa)] = {k: 2 * v for k, v in self._qq_vector(a, a).items()}
        for a, b in combinations(self.roots, 2):
            ip = R.ip(a, b)
            if ip == -1:
                c = tuple(x + y for x, y in zip(a, b))
            elif ip == 1:
                c = tuple(x - y for x, y in zip(a, b))
            else:
                products[(self.xindex[a], self.xindex[b])] = {}
                continue
            products[(self.xindex[a], self.xindex[b])] = {self.xindex[R.canonical(c)]: F(1)}
        dim = len(qp) + len(self.roots)
        form = [[F(0)] * dim for _ in range(dim)]
        for s, (i, j) in enumerate(qp):
            for t, (k, l) in enumerate(qp):
                form[s][t] = F(G[i][k] * G[j][l] + G[i][l] * G[j][k])
        for a in self.roots:
            form[self.xindex[a]][self.xindex[a]] = F(2)
        return products, form

    # -- named vectors -------------------------------------------------------

    def q(self, h: Sequence, hp: Sequence = None) -> Element:
        """``h(-1) h'(-1) 1`` with ``h, h'`` in simple-root coordinates of ``R``."""
        hp = h if hp is None else hp
        c = [F(0)] * self.algebra.dim
        for k, v in self._qq_vector(h, hp).items():
            c[k] = v
        return Element(self.algebra, c)

    def x(self, a: Sequence[int]) -> Element:
        return self.algebra.basis(self.xindex[self.R.canonical(a)])

    def w(self, a: Sequence[int], sign: int) -> Element:
        """``w^{+-}(sqrt2 alpha) = 1/16 g(-1)^2 1 +- 1/4 x(alpha)``; note ``g(-1)^2 = 2 q(alpha)``."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return F(1, 8) * self.q(a) + F(sign, 4) * self.x(a)

    @cached_property
    def omega(self) -> Element:
        """``1/2 sum h_i(-1)^2`` over an orthonormal basis: ``1/2 q`` of the inverse Gram."""
        Ginv = _inverse(self.R.cartan)
        n = self.R.rank
        c = [F(0)] * self.algebra.dim
        for i in range(n):
            for j in range(i, n):
                c[self._q(i, j)] = Ginv[i][j] / 2 if i == j else Ginv[i][j]
        return Element(self.algebra, c)

    def sum_x(self, roots=None, chi=None) -> Element:
        """``sum_{alpha in Phi} e^{sqrt2 alpha}`` (each ``x`` counts both signs), twisted by ``chi``."""
        out = [F(0)] * self.algebra.dim
        for a in self.roots if roots is None else roots:
            out[self.xindex[a]] = F(-1 if chi and chi(a) else 1)
        return Element(self.algebra, out)

    def phi(self, y: Sequence[int]) -> list:
        """Diagonal matrix of ``phi_x`` for ``x = y / sqrt2``, ``y`` in ``R`` (simple-root coordinates):
        ``x(alpha) -> (-1)^{(y|alpha)} x(alpha)``, identity on quadratics."""
        dim = self.algebra.dim
        M = [[F(0)] * dim for _ in range(dim)]
        for k in range(dim):
            M[k][k] = F(1)
        for a in self.roots:
            if self.R.ip(y, a) % 2:
                M[self.xindex[a]][self.xindex[a]] = F(-1)
        return M


def _inverse(G):
    n = len(G)
    cols = [linalg.solve_linear([[F(x) for x in row] for row in G], [F(int(i == j)) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def build_lattice_griess(R: RootSystemData, validate: bool = True, oracle: bool = True) -> LatticeGriess:
    LG = LatticeGriess(R, validate=validate)
    if oracle:
        bad = w_product_failures(LG)
        if bad:
            raise OracleMismatch(f"{len(bad)} root pairs disagree with the w-product rules, first {bad[0]}")
    return LG


def _combine(*terms) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for c, v in terms:
        for k, x in v.items():
            out[k] = out.get(k, 0) + c * x
    return {k: x for k, x in out.items() if x}


def _int_support(v: Element) -> Dict[int, int]:
    out = {}
    for k, c in v.support().items():
        if F(c).denominator != 1:
            raise OracleMismatch("non-integral product of integral lattice vectors")
        out[k] = int(c)
    return out


def w_product_failures(LG: LatticeGriess, stop_after: int = 1) -> List[tuple]:
    """Check inner products and products of ``w^{+-}`` on every pair of positive roots.

    Since ``8 w^e(a) = q(a) + 2e x(a)``, forms and products are expanded
    bilinearly from the pieces on ``q`` and ``x`` (integral vectors) and
    compared after scaling by 64; every piece is evaluated on the structure table.
    """
    A, R = LG.algebra, LG.R
    bad = []
    Q = {a: LG.q(a) for a in LG.roots}
    X = {a: LG.x(a) for a in LG.roots}
    Qs = {a: _int_support(Q[a]) for a in LG.roots}
    Xs = {a: _int_support(X[a]) for a in LG.roots}
    for ia, a in enumerate(LG.roots):
        for b in LG.roots[ia:]:
            ip = R.ip(a, b)  # (sqrt2 a | sqrt2 b) = 2 ip
            qq, qx, xq, xx = (A.inner(Q[a], Q[b]), A.inner(Q[a], X[b]),
                              A.inner(X[a], Q[b]), A.inner(X[a], X[b]))
            for e1, e2 in product((1, -1), repeat=2):
                v = (qq + 2 * e2 * qx + 2 * e1 * xq + 4 * e1 * e2 * xx) / 64
                if a == b:
                    want = F(1, 4) if e1 == e2 else F(0)
                elif ip == 0:
                    want = F(0)
                elif ip in (1, -1):
                    want = F(1, 32)
                else:
                    want = None
                if want is not None and v != want:
                    bad.append(("form", a, b, e1, e2, v, want))
            if ip in (1, -1) and a != b:
                # (a|b') = +1 with b' = ip * b, and w(b') = w(b)
                d = R.canonical(tuple(x - ip * y for x, y in zip(a, b)))
                pqq, pqx = _int_support(A.mul(Q[a], Q[b])), _int_support(A.mul(Q[a], X[b]))
                pxq, pxx = _int_support(A.mul(X[a], Q[b])), _int_support(A.mul(X[a], X[b]))
                for e1, e2 in product((1, -1), repeat=2):
                    # 64 w(a) w(b)  versus  16 (w(a) + w(b) - w^{-e1 e2}(a - b'))
                    got = _combine((1, pqq), (2 * e2, pqx), (2 * e1, pxq), (4 * e1 * e2, pxx))
                    want = _combine((2, Qs[a]), (4 * e1, Xs[a]), (2, Qs[b]), (4 * e2, Xs[b]),
                                    (-2, Qs[d]), (4 * e1 * e2, Xs[d]))
                    if got != want:
                        bad.append(("product", a, b, e1, e2))
            if len(bad) >= stop_after:
                return bad
    return bad


# ---------------------------------------------------------------------------
# Virasoro decompositions


def t_charge(R: RootSystemData) -> Fraction:
    kind, n = R.type[0], R.rank
    if kind == "A":
        return F(2 * n, n + 3)
    if kind == "D":
        return F(1)
    return {6: F(6, 7), 7: F(7, 10), 8: F(1, 2)}[n]


def s_vector(LG: LatticeGriess, roots: Sequence[Root], h: int) -> Element:
    out = LG.algebra.zero()
    for a in roots:
        out = out + LG.w(a, -1)
    return F(4, h + 2) * out


@dataclass
class STDecomposition:
    s: Element
    t: Element
    omega: Element
    c_s: Fraction
    c_t: Fraction


def s_t_decomposition(LG: LatticeGriess, R: RootSystemData = None) -> STDecomposition:
    """``s_R = 4/(h+2) sum_+ w^-``, ``t_R = omega - s_R``; both checked Virasoro and orthogonal."""
    R = R or LG.R
    A = LG.algebra
    h = R.coxeter_number
    s = s_vector(LG, R.positive, h)
    omega = LG.omega
    t = omega - s
    alt = F(2, h + 2) * omega + F(1, h + 2) * LG.sum_x(R.positive)
    if t != alt:
        raise GriessError("t_R disagrees with its closed form")
    for name, v in (("omega", omega), ("s", s), ("t", t)):
        if not is_virasoro(A, v):
            raise GriessError(f"{name}_R is not a Virasoro vector")
    if A.inner(s, t) != 0 or not A.mul(s, t).is_zero():
        raise GriessError("s_R and t_R are not orthogonal")
    c_t = 2 * A.inner(t, t)
    if c_t != t_charge(R):
        raise GriessError(f"t_R has central charge {c_t}, expected {t_charge(R)}")
    return STDecomposition(s, t, omega, 2 * A.inner(s, s), c_t)


@dataclass
class MRAlgebra:
    sub: object  # Subalgebra
    conformal: Element  # in ambient coordinates
    t_kills: bool


def m_r_algebra(LG: LatticeGriess) -> MRAlgebra:
    """Closure of the ``w^-(alpha)``; its conformal vector is ``s_R`` and ``ad(t_R)`` kills it."""
    A = LG.algebra
    gens = [LG.w(a, -1) for a in LG.roots]
    sub = close_subalgebra(A, gens, labels=[f"w-{xlabel(a)[1:]}" for a in LG.roots])
    B = sub.algebra
    eta = conformal_vector(B, [B.basis(i) for i in range(B.dim)]).element
    eta_amb = sub.to_ambient(eta)
    st = s_t_decomposition(LG)
    if eta_amb != st.s:
        raise GriessError("conformal vector of the w^- closure is not s_R")
    kills = all(A.mul(st.t, v).is_zero() for v in sub.embedding)
    return MRAlgebra(sub, eta_amb, kills)


def eta_frame(LG: LatticeGriess, n: int = None) -> List[Element]:
    """``eta^1 = s^1``, ``eta^k = s^k - s^{k-1}`` for the chain ``A_1 < ... < A_n``."""
    R = LG.R
    if R.type[0] != "A":
        raise ValueError("eta frame needs a type A lattice")
    n = R.rank if n is None else n
    if not 1 <= n <= R.rank:
        raise ValueError(f"n must be between 1 and {R.rank}")
    A = LG.algebra
    s_prev = A.zero()
    out = []
    for k in range(1, n + 1):
        roots = [a for a in R.positive if not any(a[k:])]
        s_k = s_vector(LG, roots, k + 1)
        out.append(s_k - s_prev)
        s_prev = s_k
    return out


def eta_charge(k: int) -> Fraction:
    return 1 - F(6, (k + 2) * (k + 3))


def eta_frame_check(LG: LatticeGriess, etas: Sequence[Element]) -> Dict[str, bool]:
    A = LG.algebra
    out = {}
    for k, e in enumerate(etas, 1):
        out[f"eta{k} virasoro c={eta_charge(k)}"] = is_virasoro(A, e) and 2 * A.inner(e, e) == eta_charge(k)
    out["pairwise orthogonal"] = all(
        A.inner(e, f) == 0 and A.mul(e, f).is_zero() for e, f in combinations(etas, 2))
    if len(etas) == LG.R.rank:
        t = s_t_decomposition(LG).t
        total = A.zero()
        for e in etas:
            total = total + e
        out["sum with t is omega"] = total + t == LG.omega
    return out


# ---------------------------------------------------------------------------
# E8


def standard_e8_ising(LG: LatticeGriess, chi=None) -> Element:
    """``1/16 omega + 1/32 sum_{Phi} (+-) e^{sqrt2 alpha}``."""
    return F(1, 16) * LG.omega + F(1, 32) * LG.sum_x(chi=chi)


def f2_vectors(rank: int):
    return list(product((0, 1), repeat=rank))


@dataclass
class NamedVector:
    name: str
    kind: str  # "A1" or "E8"
    vector: Element


def e8_ising_enumeration(LG: LatticeGriess, check: bool = True) -> List[NamedVector]:
    """The 240 ``w^{+-}(alpha)`` and the 256 ``phi_y t_E8``, ``y`` over ``E8 / 2 E8``."""
    if LG.R.type != "E8":
        raise ValueError("enumeration is for E8")
    A, R = LG.algebra, LG.R
    out = []
    for a in LG.roots:
        for sgn in (1, -1):
            out.append(NamedVector(f"w{'+' if sgn > 0 else '-'}{xlabel(a)[1:]}", "A1", LG.w(a, sgn)))
    for y in f2_vectors(R.rank):
        chi = lambda a, y=y: R.ip(y, a) % 2 == 1
        out.append(NamedVector("phi[" + "".join(map(str, y)) + "]t", "E8", standard_e8_ising(LG, chi)))
    if check:
        if len({v.vector.coords for v in out}) != len(out):
            raise GriessError("enumerated Ising vectors are not distinct")
        for v in out:
            if not is_ising(A, v.vector):
                raise GriessError(f"{v.name} is not an Ising vector")
    return out


def scaled_inner_products(A: GriessAlgebra, vectors: Sequence[Element], scale: int = 1024) -> List[List[int]]:
    """``scale * (u|v)`` for all pairs, computed exactly in integers.

    Coordinates and form are cleared of denominators; the products run in
    numpy ``int64`` after a bound check, otherwise in Python integers.
    """
    import math

    import numpy as np

    den_v = 1
    for v in vectors:
        for c in v.coords:
            den_v = math.lcm(den_v, F(c).denominator)
    den_g = 1
    for row in A.form:
        for c in row:
            den_g = math.lcm(den_g, F(c).denominator)
    V = [[int(F(c) * den_v) for c in v.coords] for v in vectors]
    G = [[int(F(c) * den_g) for c in row] for row in A.form]
    vmax = max((abs(x) for row in V for x in row), default=0)
    gmax = max((abs(x) for row in G for x in row), default=0)
    bound = vmax * vmax * gmax * A.dim * A.dim
    total_den = den_v * den_v * den_g
    if bound < 2 ** 62:
        Vn = np.array(V, dtype=np.int64)
        P = (Vn @ np.array(G, dtype=np.int64)) @ Vn.T
        raw = P.tolist()
    else:  # pragma: no cover - not reached by the shipped lattices
        raw = [[sum(V[i][p] * G[p][q] * V[j][q] for p in range(A.dim) for q in range(A.dim)) for j in range(len(V))] for i in range(len(V))]
    out = []
    for row in raw:
        r = []
        for x in row:
            val = F(int(x) * scale, total_den)
            if val.denominator != 1:
                raise GriessError("scaled inner product is not an integer")
            r.append(int(val))
        out.append(r)
    return out


ALLOWED_SCALED = {256, 32, 13, 8, 6, 5, 4, 0}


def e8_pair_values(LG: LatticeGriess, vectors: Sequence[NamedVector]) -> Dict[int, int]:
    """Histogram of ``2^10 (e|f)`` over unordered pairs of distinct vectors."""
    P = scaled_inner_products(LG.algebra, [v.vector for v in vectors])
    hist: Dict[int, int] = {}
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            hist[P[i][j]] = hist.get(P[i][j], 0) + 1
    return dict(sorted(hist.items()))


def phi_checks(LG: LatticeGriess, ys: Sequence[Sequence[int]]) -> Dict[str, bool]:
    """Each ``phi_y`` is a form-preserving automorphism and ``phi_y phi_z = phi_{y+z}``."""
    auto = all(check_automorphism(LG.algebra, LG.phi(y)) is None for y in ys)
    hom = all(
        linalg.matmul(LG.phi(y), LG.phi(z)) == LG.phi([(p + q) % 2 for p, q in zip(y, z)])
        for y, z in combinations(ys, 2)
    )
    return {"automorphism": auto, "homomorphism": hom}
