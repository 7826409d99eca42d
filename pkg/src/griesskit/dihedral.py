"""Dihedral Griess algebras generated by two Ising vectors.

Only 1A, 2A, 2B, 3A and 6A carry full structure constants; the other types
are kept as classification metadata.

Basis orders (fixed, so serialized output is stable):

* 1A: ``a``
* 2A: ``a, b, a.b`` where ``a.b`` is the third Ising vector ``a o b``
* 2B: ``a, b``
* 3A: ``u, a, b, c`` with ``c = tau_a b``
* 6A: ``u, x, e0, ..., e5`` with ``e^i = rho^i a``, ``a = e0``, ``b = e1``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from .algebra import (
    Element,
    GriessAlgebra,
    conformal_vector,
    is_ising,
    is_virasoro,
    miyamoto_sigma,
    miyamoto_tau,
    sigma_image,
)
from .tables import TableBuilder

F = Fraction


@dataclass(frozen=True)
class DihedralType:
    name: str
    inner_product: int  # 2^10 (a|b)
    griess_dim: int
    ising_count: int
    full_table_available: bool


DIHEDRAL_TYPES: Dict[str, DihedralType] = {
    t.name: t
    for t in [
        DihedralType("1A", 256, 1, 1, True),
        DihedralType("2A", 32, 3, 3, True),
        DihedralType("3A", 13, 4, 3, True),
        DihedralType("4A", 8, 5, 4, False),
        DihedralType("5A", 6, 6, 5, False),
        DihedralType("6A", 5, 8, 7, True),
        DihedralType("4B", 4, 5, 4, False),
        DihedralType("2B", 0, 2, 2, True),
        DihedralType("3C", 4, 3, 3, False),
    ]
}


def metadata_csv() -> str:
    rows = ["type,inner_product_2^10,griess_dim,ising_count,full_table_available"]
    for t in DIHEDRAL_TYPES.values():
        rows.append(f"{t.name},{t.inner_product},{t.griess_dim},{t.ising_count},{str(t.full_table_available).lower()}")
    return "\n".join(rows) + "\n"


@dataclass
class CatalogAlgebra:
    type: DihedralType
    algebra: GriessAlgebra
    distinguished: Dict[str, Element]
    axes: List[str] = field(default_factory=list)  # names of all Ising vectors

    def __getitem__(self, name) -> Element:
        return self.distinguished[name]

    def ising_vectors(self) -> List[Element]:
        return [self.distinguished[k] for k in self.axes]


def _basis_names(A):
    return {lab: A.basis(lab) for lab in A.labels}


def make_1A() -> CatalogAlgebra:
    tb = TableBuilder(["a"])
    tb.ising("a")
    A = tb.build()
    return CatalogAlgebra(DIHEDRAL_TYPES["1A"], A, {"a": A["a"]}, ["a"])


def make_2A() -> CatalogAlgebra:
    tb = TableBuilder(["a", "b", "a.b"])
    tb.two_a("a", "b", "a.b")
    A = tb.build()
    return CatalogAlgebra(DIHEDRAL_TYPES["2A"], A, _basis_names(A), ["a", "b", "a.b"])


def make_2B() -> CatalogAlgebra:
    tb = TableBuilder(["a", "b"])
    tb.two_b("a", "b")
    A = tb.build()
    return CatalogAlgebra(DIHEDRAL_TYPES["2B"], A, _basis_names(A), ["a", "b"])


def make_3A() -> CatalogAlgebra:
    tb = TableBuilder(["u", "a", "b", "c"])
    tb.three_a("u", "a", "b", "c")
    A = tb.build()
    named = _basis_names(A)
    named["v"] = F(-5, 14) * A["u"] + F(16, 21) * (A["a"] + A["b"] + A["c"])
    return CatalogAlgebra(DIHEDRAL_TYPES["3A"], A, named, ["a", "b", "c"])


SIX_A_ORBIT = [f"e{i}" for i in range(6)]


def make_6A() -> CatalogAlgebra:
    tb = TableBuilder(["u", "x"] + SIX_A_ORBIT)
    tb.six_a("u", "x", SIX_A_ORBIT)
    A = tb.build()
    named = _basis_names(A)
    e = [A[k] for k in SIX_A_ORBIT]
    named.update({
        "a": e[0],
        "b": e[1],
        "tau_b a": e[2],
        "tau_b tau_a b": e[3],
        "tau_a tau_b a": e[4],
        "tau_a b": e[5],
    })
    return CatalogAlgebra(DIHEDRAL_TYPES["6A"], A, named, ["x"] + SIX_A_ORBIT)


def frame_6A(C: CatalogAlgebra):
    """Mutually orthogonal Virasoro vectors ``(u, v, f)`` of central charges 4/5, 6/7, 25/28.

    ``v`` is the c=6/7 vector of the 3A triple ``{e0, e2, e4}`` and ``f``
    generates its commutant.
    """
    A = C.algebra
    u, x = A["u"], A["x"]
    even = A["e0"] + A["e2"] + A["e4"]
    odd = A["e1"] + A["e3"] + A["e5"]
    v = F(-5, 14) * u + F(16, 21) * even
    f = F(-15, 56) * u + F(1, 2) * x - F(2, 21) * even + F(2, 3) * odd
    return u, v, f


@dataclass
class IdentityReport:
    residuals: Dict[str, Element]

    def all_zero(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values())

    def failures(self) -> List[str]:
        return [k for k, r in self.residuals.items() if not r.is_zero()]


def three_a_sigma_identities(C: CatalogAlgebra) -> IdentityReport:
    """``sigma_a u`` and ``sigma_a (b + c)`` in the 3A algebra, evaluated by the
    closed form for tau-fixed vectors."""
    A = C.algebra
    u, a, b, c = (A[k] for k in ("u", "a", "b", "c"))
    lhs1 = sigma_image(A, a, u)
    rhs1 = F(-1, 4) * u + F(2, 9) * a + F(8, 9) * (b + c)
    lhs2 = sigma_image(A, a, b + c)
    rhs2 = F(135, 128) * u - F(3, 16) * a + F(1, 4) * (b + c)
    return IdentityReport({"sigma_a u": lhs1 - rhs1, "sigma_a (b+c)": lhs2 - rhs2})


def _hexagon_labels(shift: int):
    return [f"e{(k + shift) % 6}" for k in range(6)]


def hexagon_identities(C: CatalogAlgebra, shift: int = 0) -> IdentityReport:
    """Double product and sigma identities of the 6A algebra.

    Checked in two labellings: the 6A one (``a, b`` a 6A pair) and the 3A one
    (``a, b`` a 3A pair, ``x`` central). ``shift`` rotates ``e^i -> e^{i+shift}``.
    """
    A = C.algebra
    e = [A[k] for k in _hexagon_labels(shift)]
    u, x = A["u"], A["x"]
    out = {}

    # 6A labelling: a=e0, b=e1, tau_b a=e2, tau_b tau_a b=e3, tau_a tau_b a=e4, tau_a b=e5
    a, b, tba, tbtab, tatba, tab = e
    lhs = A.mul(a, A.mul(tba, x))
    rhs = F(-45, 1024) * u + F(1, 128) * (
        7 * x + 11 * a + b + 5 * tba - 7 * tbtab + 3 * tatba - tab
    )
    out["a.(tau_b a . x)"] = lhs - rhs
    lhs = sigma_image(A, a, b + tab)
    rhs = (F(-45, 128) * u - F(1, 4) * x + F(1, 16) * a + F(1, 4) * tbtab
           + b + tab + F(1, 4) * (tba + tatba))
    out["sigma_a (b + tau_a b)"] = lhs - rhs

    # 3A labelling: a=e0, b=e2, c=e4; g o x = g' three steps round the hexagon
    a3, b3, c3 = e[0], e[2], e[4]
    ax, bx, cx = e[3], e[5], e[1]
    lhs = A.mul(a3, A.mul(b3, x))
    rhs = F(-45, 1024) * u + F(1, 128) * (
        7 * x + 11 * a3 + 5 * b3 + 3 * c3 - 7 * ax - bx + cx
    )
    out["a.(b.x)"] = lhs - rhs
    lhs = sigma_image(A, a3, bx + cx)
    rhs = (F(-45, 128) * u - F(1, 4) * x + F(1, 16) * a3 + F(1, 4) * ax
           + F(1, 4) * (b3 + c3) + bx + cx)
    out["sigma_a (b o x + c o x)"] = lhs - rhs
    return IdentityReport(out)


CONSTRUCTORS = {
    "1A": make_1A,
    "2A": make_2A,
    "2B": make_2B,
    "3A": make_3A,
    "6A": make_6A,
}


def make(name: str) -> CatalogAlgebra:
    try:
        return CONSTRUCTORS[name]()
    except KeyError:
        if name in DIHEDRAL_TYPES:
            raise ValueError(f"{name} is metadata-only; no structure constants available") from None
        raise ValueError(f"unknown dihedral type {name!r}") from None
