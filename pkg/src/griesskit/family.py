"""Algebras generated by a 3A pair ``a, b`` and further axes 2A-paired with both.

* :func:`build_xn` is the algebra ``X^[n]`` of ``a, b, x^1..x^n`` with the
  ``x^i`` mutually 2A.
* :func:`build_abxy_2A` is ``X^[2]`` in the ``x, y, z = x o y`` naming.
* :func:`build_abxy_3A` is the 18-dimensional algebra for a 3A pair ``x, y``.

Structure constants come from charts: subalgebras whose tables are known
(3A, 2A, 6A, Matsuo), written into a :class:`TableBuilder` that rejects
contradictions and refuses to finish with a pair unaccounted for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional

from . import linalg
from .algebra import (
    Element,
    GriessAlgebra,
    GriessError,
    VirasoroVector,
    check_automorphism,
    conformal_vector,
    miyamoto_tau,
    sigma_image,
    tau_apply,
)
from .dihedral import IdentityReport
from .tables import TableBuilder, UnresolvedPair, lin
from .virasoro import central_charge

F = Fraction
GROUND = ("a", "b", "c")
DEFAULT_N_CAP = 12


class ForbiddenType(GriessError):
    pass


def xl(i: int) -> str:
    return f"x{i}"


def cl(g: str, i: int) -> str:
    """Label of ``g o x^i``."""
    return f"{g}.x{i}"


def xx(j: int, k: int) -> str:
    """Label of ``x^j o x^k``."""
    j, k = min(j, k), max(j, k)
    return f"x{j}.x{k}"


def xn_labels(n: int) -> List[str]:
    labels = ["u", "a", "b", "c"]
    labels += [xl(i) for i in range(1, n + 1)]
    labels += [cl(g, i) for i in range(1, n + 1) for g in GROUND]
    labels += [xx(j, k) for j, k in combinations(range(1, n + 1), 2)]
    return labels


def xn_dim(n: int) -> int:
    return 4 + 4 * n + n * (n - 1) // 2


def _hexagon(p, q, r, circ):
    """Hexagon of a 3A triple ``p, q, r`` around a central axis; ``circ(g)`` is ``g o centre``."""
    return [p, circ(r), q, circ(p), r, circ(q)]


def _matsuo_chart(tb: TableBuilder, g: str, n: int, source: str) -> None:
    """Transposition model of ``<g, x^1..x^n>``.

    Points are ``inf, 0, 1..n``: ``g = (0 inf)``, ``x^i = (0 i)``,
    ``g o x^i = (i inf)``, ``x^j o x^k = (j k)``. Transpositions sharing a
    point form a 2A triple with their conjugate; disjoint ones are 2B.
    """
    INF = -1

    def name(t):
        s, r = sorted(t)
        if s == INF:
            return g if r == 0 else cl(g, r)
        if s == 0:
            return xl(r)
        return xx(s, r)

    pts = [INF] + list(range(n + 1))
    trans = [frozenset(p) for p in combinations(pts, 2)]
    for t in trans:
        tb.ising(name(t), source)
    for s, t in combinations(trans, 2):
        common = s & t
        if common:
            third = frozenset(s ^ t)
            tb.two_a(name(s), name(t), name(third), source)
        else:
            tb.two_b(name(s), name(t), source)


TAU_A = {"b": "c", "c": "b"}
TAU_B = {"a": "c", "c": "a"}


def _ground_perm(swap: Dict[str, str], n: int) -> Dict[str, str]:
    perm = dict(swap)
    for i in range(1, n + 1):
        for g, h in swap.items():
            perm[cl(g, i)] = cl(h, i)
    return perm


@dataclass
class FamilyAlgebraXn:
    n: int
    algebra: GriessAlgebra
    log: list = field(repr=False, default_factory=list)

    def __getitem__(self, label) -> Element:
        return self.algebra[label]

    @property
    def u(self):
        return self.algebra["u"]

    def v(self) -> Element:
        A = self.algebra
        return F(-5, 14) * A["u"] + F(16, 21) * (A["a"] + A["b"] + A["c"])

    def omega(self, k: int) -> Element:
        return omega_n(self, k).element

    def f(self, k: int) -> Element:
        """``f^k = omega^k - omega^{k-1}`` for ``1 <= k <= n``."""
        if not 1 <= k <= self.n:
            raise ValueError(f"f^{k} needs 1 <= k <= {self.n}")
        return self.omega(k) - self.omega(k - 1)

    def frame(self) -> List[Element]:
        return [self.u, self.v()] + [self.f(k) for k in range(1, self.n + 1)]

    def sub_basis(self, k: int) -> List[Element]:
        """Basis vectors of ``X^[k]`` inside this algebra."""
        keep = set(xn_labels(k))
        return [self.algebra[lab] for lab in self.algebra.labels if lab in keep]

    def tau_permutation(self, swap: Dict[str, str]) -> list:
        A = self.algebra
        perm = _ground_perm(swap, self.n)
        idx = [A.index(perm.get(lab, lab)) for lab in A.labels]
        M = linalg.zeros(A.dim, A.dim)
        for j, i in enumerate(idx):
            M[i][j] = F(1)
        return M

    def verify_transports(self) -> Dict[str, bool]:
        """The relabellings used for transport are automorphisms equal to the Miyamoto maps."""
        A = self.algebra
        out = {}
        for name, swap, axis in (("tau_a", TAU_A, "a"), ("tau_b", TAU_B, "b")):
            M = self.tau_permutation(swap)
            out[name] = check_automorphism(A, M) is None and miyamoto_tau(A, A[axis]).matrix == M
        return out


def build_xn(n: int, cap: int = DEFAULT_N_CAP, validate: bool = True) -> FamilyAlgebraXn:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the cap {cap} (dim {xn_dim(n)})")
    tb = TableBuilder(xn_labels(n))
    tb.three_a("u", "a", "b", "c", "3A <a,b>")
    for i in range(1, n + 1):
        tb.six_a("u", xl(i), _hexagon("a", "b", "c", lambda g, i=i: cl(g, i)), f"6A <a,b,x{i}>")
    for i, j in combinations(range(1, n + 1), 2):
        hexagon = _hexagon(cl("a", i), cl("b", i), cl("c", i), lambda lab, j=j: cl(lab[0], j))
        tb.six_a("u", xx(i, j), hexagon, f"6A <a.x{i},b.x{j}>")
    _matsuo_chart(tb, "a", n, "Matsuo <a,x1..xn>")
    tb.transport(_ground_perm(TAU_B, n), "transport by tau_b")
    tb.transport(_ground_perm(TAU_A, n), "transport by tau_a")
    A = tb.build(validate=validate)
    return FamilyAlgebraXn(n, A, tb.log)


def omega_closed_form(F_: FamilyAlgebraXn, k: int) -> Element:
    A = F_.algebra
    ground = A["a"] + A["b"] + A["c"]
    for i in range(1, k + 1):
        for g in GROUND:
            ground = ground + A[cl(g, i)]
    matsuo = A.zero()
    for i in range(1, k + 1):
        matsuo = matsuo + A[xl(i)]
    for j, l in combinations(range(1, k + 1), 2):
        matsuo = matsuo + A[xx(j, l)]
    return (F(3 * (3 - k), 2 * (k + 7)) * A["u"] + F(16, 3 * (k + 7)) * ground
            + F(4, k + 7) * matsuo)


def omega_n(F_: FamilyAlgebraXn, k: int, cross_check: bool = False) -> VirasoroVector:
    """Closed form of the conformal vector of ``X^[k]`` inside ``F_``.

    With ``cross_check`` the Gram solver is run on the ``X^[k]`` basis and must agree.
    """
    if not 0 <= k <= F_.n:
        raise ValueError(f"k = {k} outside 0..{F_.n}")
    A = F_.algebra
    w = omega_closed_form(F_, k)
    if cross_check:
        solved = conformal_vector(A, F_.sub_basis(k))
        if solved.element != w:
            raise GriessError(f"closed form of omega^{k} disagrees with the Gram solver")
    if A.mul(w, w) != 2 * w:
        raise GriessError(f"omega^{k} is not a Virasoro vector")
    return VirasoroVector(w, 2 * A.inner(w, w))


def omega_charge(n: int) -> Fraction:
    return F((n + 2) * (5 * n + 29), 5 * (n + 7))


def matsuo_part(F_: FamilyAlgebraXn):
    """Closure of ``x^1..x^n`` as a subalgebra."""
    from .algebra import close_subalgebra

    A = F_.algebra
    gens = [A[xl(i)] for i in range(1, F_.n + 1)]
    return close_subalgebra(A, gens, labels=[xl(i) for i in range(1, F_.n + 1)])


def matsuo_axes(F_: FamilyAlgebraXn) -> List[str]:
    n = F_.n
    return [xl(i) for i in range(1, n + 1)] + [xx(j, k) for j, k in combinations(range(1, n + 1), 2)]


def frame_relations_check(F_: FamilyAlgebraXn) -> IdentityReport:
    """Products of ``a``, ``x^1`` and ``x^i o x^{i+1}`` with the Virasoro frame."""
    A = F_.algebra
    u, v, a = F_.u, F_.v(), A["a"]
    out = {
        "a.u": A.mul(a, u) - (F(2, 3) * a + F(5, 24) * u - F(7, 24) * v),
        "a.v": A.mul(a, v) - (F(4, 3) * a - F(5, 24) * u + F(7, 24) * v),
    }
    if F_.n >= 1:
        x1, f1 = A[xl(1)], F_.f(1)
        out["x1.v"] = A.mul(x1, v) - (F(5, 7) * x1 + F(3, 14) * v - F(2, 7) * f1)
        out["x1.f1"] = A.mul(x1, f1) - (F(9, 7) * x1 - F(3, 14) * v + F(2, 7) * f1)
    for i in range(1, F_.n):
        t = A[xx(i, i + 1)]
        fi, fj = F_.f(i), F_.f(i + 1)
        d = 4 * (i + 7)
        out[f"x{i}.x{i + 1}*f{i}"] = A.mul(t, fi) - (
            F(i + 5, i + 7) * t + F(i + 6, d) * fi - F(i + 8, d) * fj)
        out[f"x{i}.x{i + 1}*f{i + 1}"] = A.mul(t, fj) - (
            F(i + 9, i + 7) * t - F(i + 6, d) * fi + F(i + 8, d) * fj)
    return IdentityReport(out)


# ---------------------------------------------------------------------------
# <a, b, x, y> with <x, y> of type 2A


@dataclass
class AbxyTwoA:
    family: FamilyAlgebraXn
    named: Dict[str, Element]

    @property
    def algebra(self):
        return self.family.algebra

    def basis_list(self) -> List[Element]:
        """Basis in the order ``u, a, b, c, a.x, b.x, c.x, a.y, b.y, c.y, x, y, z``."""
        order = ["u", "a", "b", "c", "a.x", "b.x", "c.x", "a.y", "b.y", "c.y", "x", "y", "z"]
        return [self.named[k] for k in order]

    def f(self) -> Element:
        A, e = self.algebra, self.named
        return (F(-5, 24) * e["u"]
                - F(2, 27) * (e["a"] + e["b"] + e["c"] + e["a.x"] + e["b.x"] + e["c.x"])
                + F(16, 27) * (e["a.y"] + e["b.y"] + e["c.y"])
                - F(1, 18) * e["x"] + F(4, 9) * (e["y"] + e["z"]))

    def eta(self) -> Element:
        e = self.named
        nine = sum((e[k] for k in ("a", "b", "c", "a.x", "b.x", "c.x", "a.y", "b.y", "c.y")),
                   self.algebra.zero())
        return F(1, 6) * e["u"] + F(16, 27) * nine + F(4, 9) * (e["x"] + e["y"] + e["z"])


TWO_A_NAMES = {"x": "x1", "y": "x2", "z": "x1.x2",
               "a.x": "a.x1", "b.x": "b.x1", "c.x": "c.x1",
               "a.y": "a.x2", "b.y": "b.x2", "c.y": "c.x2"}


def build_abxy_2A() -> AbxyTwoA:
    fam = build_xn(2)
    A = fam.algebra
    named = {k: A[k] for k in ("u", "a", "b", "c")}
    named.update({k: A[v] for k, v in TWO_A_NAMES.items()})
    return AbxyTwoA(fam, named)


# ---------------------------------------------------------------------------
# <a, b, x, y> with <x, y> of type 3A


GS = ("a", "b", "c")
HS = ("x", "y", "z")


def nine_label(i: int, j: int) -> str:
    return f"{GS[i % 3]}.{HS[j % 3]}"


NINE = [nine_label(i, j) for i in range(3) for j in range(3)]


def nine_lines() -> Dict[int, List[List[str]]]:
    """Parallel classes of the affine plane on the nine ``g o h``.

    With ``g = a, b, c -> i = 0, 1, 2`` and ``h = x, y, z -> j = 0, 1, 2``:
    class 1 fixes ``j``, class 2 fixes ``i``, class 3 fixes ``j - i`` and class 4
    fixes ``i + j`` (mod 3).
    """
    return {
        1: [[nine_label(i, j) for i in range(3)] for j in range(3)],
        2: [[nine_label(i, j) for j in range(3)] for i in range(3)],
        3: [[nine_label(i, i + k) for i in range(3)] for k in range(3)],
        4: [[nine_label(i, k - i) for i in range(3)] for k in range(3)],
    }


@dataclass
class NinePointConfig:
    points: List[str]
    lines: Dict[int, List[List[str]]]
    u: Dict[int, Element]  # u^1..u^4 in ambient coordinates


def nine_point_gram():
    """Gram matrix of the nine points followed by ``u^1..u^4``, from inner products alone.

    Points: 1/4 on the diagonal, 13/1024 off it (any two lie on a 3A line).
    Each point lies on one line of every class, so ``(p|u^k) = 1/16``; the
    ``u^k`` are mutually orthogonal with ``(u^k|u^k) = 2/5``.
    """
    G = linalg.zeros(13, 13)
    for i in range(9):
        for j in range(9):
            G[i][j] = F(1, 4) if i == j else F(13, 1024)
        for k in range(9, 13):
            G[i][k] = G[k][i] = F(1, 16)
    for k in range(9, 13):
        G[k][k] = F(2, 5)
    return G


ABXY3A_LABELS = ["u1", "u2", "u3", "a", "b", "c", "x", "y", "z"] + NINE


def _sum(*labels):
    return {k: F(1) for k in labels}


@dataclass
class AbxyThreeA:
    algebra: GriessAlgebra
    config: NinePointConfig
    log: list = field(repr=False, default_factory=list)
    u4_relation: dict = field(default_factory=dict)

    def __getitem__(self, label) -> Element:
        if label == "u4":
            return self.config.u[4]
        return self.algebra[label]

    def spanning_set(self) -> List[Element]:
        """The 19 spanning vectors ``u^1..u^4``, ``a, b, c, x, y, z`` and the nine points."""
        return [self[f"u{k}"] for k in range(1, 5)] + [self[k] for k in GS + HS] + [self[k] for k in NINE]

    def basis_list(self) -> List[Element]:
        """The spanning set without ``u^4``."""
        return [s for k, s in zip(range(19), self.spanning_set()) if k != 3]

    def eta(self) -> Element:
        s = self
        return (F(17, 22) * (s["u1"] + s["u2"]) + F(10, 11) * (s["u3"] + s["u4"])
                + F(16, 33) * sum((s[k] for k in GS + HS), self.algebra.zero()))

    def xi(self) -> Element:
        return self.eta() - (self["u1"] + self["u2"] + self["u3"] + self["u4"])

    def circle(self, g: str, h: str) -> Element:
        return self[f"{g}.{h}"]


def _ground_times_u(e: str, u: str, tau_u: str) -> dict:
    """``e * u`` for a ground axis ``e`` and ``u`` in ``{u^3, u^4}`` with ``tau_e u = tau_u``."""
    nine = _sum(*NINE)
    if e in GS:
        circ = _sum(*[f"{e}.{h}" for h in HS])
        return lin((F(1, 16), "u1"), (F(1, 8), "u2"), (F(5, 32), u), (F(3, 32), tau_u),
                   (F(1, 15), e), (F(1, 15), circ), (F(2, 45), _sum(*GS)),
                   (F(-1, 15), _sum(*HS)), (F(-4, 45), nine))
    circ = _sum(*[f"{g}.{e}" for g in GS])
    return lin((F(1, 8), "u1"), (F(1, 16), "u2"), (F(5, 32), u), (F(3, 32), tau_u),
               (F(1, 15), e), (F(1, 15), circ), (F(-1, 15), _sum(*GS)),
               (F(2, 45), _sum(*HS)), (F(-4, 45), nine))


# coefficient of e o (x+y+z) in sigma_e(u + tau_e u) for e in {a, b, c}; the value
# forced by e*u through e*v = 8(e|v)e + 5/32 v + 3/32 tau v - 1/8 sigma(v + tau v)
GROUND_SIGMA_CIRCLE = F(-8, 15)


def _sigma_u_sum(e: str, ground_circle=GROUND_SIGMA_CIRCLE) -> dict:
    """``sigma_e (u + tau_e u)`` for ``u`` in ``{u^3, u^4}``."""
    nine = _sum(*NINE)
    if e in GS:
        circ = _sum(*[f"{e}.{h}" for h in HS])
        return lin((F(-1, 2), "u1"), (F(-1), "u2"), (F(4, 15), e), (ground_circle, circ),
                   (F(-16, 45), _sum(*GS)), (F(8, 15), _sum(*HS)), (F(32, 45), nine))
    circ = _sum(*[f"{g}.{e}" for g in GS])
    return lin((F(-1), "u1"), (F(-1, 2), "u2"), (F(4, 15), e), (F(-8, 15), circ),
               (F(8, 15), _sum(*GS)), (F(-16, 45), _sum(*HS)), (F(32, 45), nine))


def build_abxy_3A(validate: bool = True) -> AbxyThreeA:
    tb = TableBuilder(ABXY3A_LABELS)
    u4 = lin((F(32, 45), _sum(*NINE)), (F(-1), "u1"), (F(-1), "u2"), (F(-1), "u3"))
    tb.alias("u4", u4)

    tb.three_a("u1", "a", "b", "c", "3A <a,b>")
    tb.three_a("u2", "x", "y", "z", "3A <x,y>")
    for h in HS:
        tb.six_a("u1", h, _hexagon("a", "b", "c", lambda g, h=h: f"{g}.{h}"), f"6A <a,b,{h}>")
    for g in GS:
        tb.six_a("u2", g, _hexagon("x", "y", "z", lambda h, g=g: f"{g}.{h}"), f"6A <{g},x,y>")
    lines = nine_lines()
    for k, cls in lines.items():
        for line in cls:
            tb.three_a(f"u{k}", *line, f"3A line class {k}")
    for p, q in combinations(["u1", "u2", "u3"], 2):
        tb.orthogonal(p, q, "u^i orthogonal")
    for e in GS + HS:
        tb.product(e, "u3", _ground_times_u(e, "u3", "u4"), "e*u3 via tau_e u3 = u4")
        tb.form(e, "u3", F(1, 80), "(e|u3)")
    A = tb.build(validate=validate)
    us = {k: A[f"u{k}"] for k in (1, 2, 3)}
    us[4] = A.element(tb.aliases["u4"])
    cfg = NinePointConfig(list(NINE), lines, us)
    return AbxyThreeA(A, cfg, tb.log)


@dataclass
class DispatchResult:
    xy_type: str
    algebra: GriessAlgebra
    generators: Dict[str, Element]
    source: object


def dispatch_abxy(xy_type: str) -> DispatchResult:
    """Algebra generated by ``a, b`` (3A) and ``x, y`` with ``<x, y>`` of the given type."""
    if xy_type == "1A":
        fam = build_xn(1)
        A = fam.algebra
        g = {"a": A["a"], "b": A["b"], "x": A["x1"], "y": A["x1"]}
        return DispatchResult("1A", A, g, fam)
    if xy_type in ("2A", "2B"):
        ab = build_abxy_2A()
        A, e = ab.algebra, ab.named
        if xy_type == "2A":
            g = {"a": e["a"], "b": e["b"], "x": e["x"], "y": e["y"]}
        else:
            # a o x and y are orthogonal; replacing x by a o x recovers the 2A case
            g = {"a": e["a"], "b": e["b"], "x": e["a.x"], "y": e["y"]}
        return DispatchResult(xy_type, A, g, ab)
    if xy_type == "3A":
        t = build_abxy_3A()
        A = t.algebra
        g = {"a": A["a"], "b": A["b"], "x": A["x"], "y": A["y"]}
        return DispatchResult("3A", A, g, t)
    if xy_type in ("3C", "4A", "4B", "5A", "6A"):
        raise ForbiddenType(f"<x, y> of type {xy_type} cannot occur for x, y 2A-paired with a 3A pair")
    raise ValueError(f"unknown dihedral type {xy_type!r}")


def abxy_3A_identities(T: AbxyThreeA) -> IdentityReport:
    """Inner products with ``u^3, u^4``, ``tau_e u^3 = u^4``, ``sigma_e (u + tau_e u)``
    and ``e * u`` for both ``u = u^3`` and ``u = u^4``."""
    A = T.algebra
    out = {}
    u3, u4 = T["u3"], T["u4"]
    one = A["a"]  # any nonzero vector to carry scalar residuals
    for e in GS + HS:
        E = A[e]
        for name, u in (("u3", u3), ("u4", u4)):
            out[f"({e}|{name})"] = (A.inner(E, u) - F(1, 80)) * one
        out[f"tau_{e} u3"] = tau_apply(A, E, u3) - u4
        out[f"tau_{e} u4"] = tau_apply(A, E, u4) - u3
        s = A.element(expand_u4(_sigma_u_sum(e)))
        for name, u in (("u3", u3), ("u4", u4)):
            out[f"sigma_{e}({name} + tau {name})"] = sigma_image(A, E, u + tau_apply(A, E, u)) - s
        for name, other in (("u3", "u4"), ("u4", "u3")):
            rhs = A.element(expand_u4(_ground_times_u(e, name, other)))
            out[f"{e}*{name}"] = A.mul(E, T[name]) - rhs
    return IdentityReport(out)


def expand_u4(vec: dict) -> dict:
    out = {}
    for k, c in vec.items():
        if k == "u4":
            for j, d in {**_sum(*NINE)}.items():
                out[j] = out.get(j, 0) + c * F(32, 45) * d
            for j in ("u1", "u2", "u3"):
                out[j] = out.get(j, 0) - c
        else:
            out[k] = out.get(k, 0) + c
    return out
