"""Finite-dimensional commutative algebras with an invariant symmetric form.

A :class:`GriessAlgebra` is given by sparse structure constants on a labelled
basis together with a Gram matrix. Everything is exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from . import linalg
from .linalg import EigenSplit, ResidualNonzero
from .scalar import QuadScalar, format_scalar, parse_scalar, to_scalar

HALF = Fraction(1, 2)
SIXTEENTH = Fraction(1, 16)
ISING_SPECTRUM = (Fraction(2), Fraction(0), HALF, SIXTEENTH)


class GriessError(ValueError):
    pass


class InvariantViolation(GriessError):
    pass


class SchemaViolation(GriessError):
    pass


class BadSpectrum(GriessError):
    pass


class NotAutomorphism(GriessError):
    pass


class NotSigmaType(GriessError):
    pass


class NotTauFixed(GriessError):
    pass


class NotIsing(GriessError):
    pass


class NotTwoAPair(GriessError):
    pass


class NotThreeAPair(GriessError):
    pass


class NotVirasoro(GriessError):
    pass


class SingularGram(GriessError):
    pass


class NotConformal(GriessError):
    pass


class UnknownType(GriessError):
    pass


def _scalar_zero(d):
    return Fraction(0) if d == 1 else QuadScalar(0, 0, d)


class Element:
    """A coordinate vector in the basis of a :class:`GriessAlgebra`.

    ``x * y`` is the algebra product when both operands are elements and
    scalar multiplication otherwise.
    """

    __slots__ = ("alg", "coords")

    def __init__(self, alg: "GriessAlgebra", coords: Sequence):
        coords = tuple(coords)
        if len(coords) != alg.dim:
            raise ValueError(f"element of length {len(coords)} in a {alg.dim}-dim algebra")
        self.alg = alg
        self.coords = coords

    def _wrap(self, coords):
        return Element(self.alg, coords)

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self._wrap(a + b if b else a for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self._wrap(a - b if b else a for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return self._wrap(-a for a in self.coords)

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.alg.mul(self, other)
        return self._wrap(a * other if a else a for a in self.coords)

    def __rmul__(self, other):
        return self._wrap(other * a if a else a for a in self.coords)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        return self._wrap(a / other if a else a for a in self.coords)

    def inner(self, other: "Element"):
        return self.alg.inner(self, other)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> Dict[int, object]:
        return {i: c for i, c in enumerate(self.coords) if c}

    def __repr__(self):
        terms = [f"{format_scalar(c)}*{self.alg.labels[i]}" for i, c in self.support().items()]
        return "Element(" + (" + ".join(terms) if terms else "0") + ")"


class GriessAlgebra:
    """Commutative algebra with symmetric bilinear form on a labelled basis.

    ``products[(i, j)]`` (any order) maps to a sparse dict ``{k: coeff}`` for
    ``e_i * e_j``; missing pairs are zero. ``form`` is the Gram matrix.
    """

    def __init__(self, labels, products, form, d: int = 1, validate: bool = True):
        self.labels = list(labels)
        self.dim = len(self.labels)
        if len(set(self.labels)) != self.dim:
            raise InvariantViolation("basis labels must be distinct")
        self.d = d
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        n = self.dim
        table = [[None] * n for _ in range(n)]
        for (i, j), vec in products.items():
            vec = {k: c for k, c in vec.items() if c}
            if table[i][j] is not None and table[i][j] != vec:
                raise InvariantViolation(
                    f"product {self.labels[i]}*{self.labels[j]} is not symmetric"
                )
            table[i][j] = vec
            if table[j][i] is not None and table[j][i] != vec:
                raise InvariantViolation(
                    f"product {self.labels[i]}*{self.labels[j]} is not symmetric"
                )
            table[j][i] = vec
        for i in range(n):
            for j in range(n):
                if table[i][j] is None:
                    table[i][j] = {}
        self._table = table
        self.form = [list(row) for row in form]
        if len(self.form) != n or any(len(r) != n for r in self.form):
            raise InvariantViolation("form must be a square matrix matching the basis")
        self._form_rows = [{j: c for j, c in enumerate(row) if c} for row in self.form]
        self._int_cache = None
        if validate:
            self.check_invariants()

    # -- basic access ---------------------------------------------------------

    def index(self, label: str) -> int:
        return self._index[label]

    def zero(self) -> Element:
        z = _scalar_zero(self.d)
        return Element(self, [z] * self.dim)

    def basis(self, label) -> Element:
        i = label if isinstance(label, int) else self._index[label]
        z = _scalar_zero(self.d)
        c = [z] * self.dim
        c[i] = z + 1
        return Element(self, c)

    def __getitem__(self, label) -> Element:
        return self.basis(label)

    def element(self, coeffs: dict) -> Element:
        """Element from ``{label: coefficient}``."""
        z = _scalar_zero(self.d)
        c = [z] * self.dim
        for lab, v in coeffs.items():
            c[self._index[lab]] += to_scalar(v, self.d)
        return Element(self, c)

    def vector(self, coords) -> Element:
        return Element(self, [to_scalar(c, self.d) for c in coords])

    def structure(self, i: int, j: int) -> dict:
        return self._table[i][j]

    # -- products -------------------------------------------------------------

    def _integer_tables(self):
        """Structure constants and form over a common denominator (rational case only)."""
        if self._int_cache is None:
            dt = 1
            for row in self._table:
                for vec in row:
                    for c in vec.values():
                        dt = math.lcm(dt, c.denominator)
            df = 1
            for row in self._form_rows:
                for c in row.values():
                    df = math.lcm(df, c.denominator)
            table = [[{k: c.numerator * (dt // c.denominator) for k, c in vec.items()} for vec in row]
                     for row in self._table]
            form = [{j: c.numerator * (df // c.denominator) for j, c in row.items()} for row in self._form_rows]
            self._int_cache = (table, dt, form, df)
        return self._int_cache

    @staticmethod
    def _clear(coords):
        """``(den, [(i, n_i)])`` with ``coords[i] = n_i / den`` on the support."""
        nz = [(i, c) for i, c in enumerate(coords) if c]
        den = 1
        for _, c in nz:
            den = math.lcm(den, c.denominator)
        return den, [(i, c.numerator * (den // c.denominator)) for i, c in nz]

    def _rational(self, *els) -> bool:
        # over d = 1 every coordinate is a Fraction (or int)
        return self.d == 1

    def mul(self, u: Element, v: Element) -> Element:
        if self._rational(u, v):
            return self._mul_int(u, v)
        z = _scalar_zero(self.d)
        acc: dict = {}
        nu = [(i, c) for i, c in enumerate(u.coords) if c]
        table = self._table
        if u is v or u.coords == v.coords:
            for p, (i, ci) in enumerate(nu):
                row = table[i]
                for j, cj in nu[p:]:
                    t = row[j]
                    if t:
                        f = ci * cj if i == j else 2 * ci * cj
                        for k, ck in t.items():
                            acc[k] = acc.get(k, z) + f * ck
        else:
            nv = [(j, c) for j, c in enumerate(v.coords) if c]
            for i, ci in nu:
                row = table[i]
                for j, cj in nv:
                    t = row[j]
                    if t:
                        f = ci * cj
                        for k, ck in t.items():
                            acc[k] = acc.get(k, z) + f * ck
        out = [z] * self.dim
        for k, c in acc.items():
            out[k] = c
        return Element(self, out)

    def _mul_int(self, u: Element, v: Element) -> Element:
        table, dt, _, _ = self._integer_tables()
        du, nu = self._clear(u.coords)
        acc: dict = {}
        if u is v or u.coords == v.coords:
            dv = du
            for p, (i, ci) in enumerate(nu):
                row = table[i]
                for j, cj in nu[p:]:
                    t = row[j]
                    if t:
                        f = ci * cj if i == j else 2 * ci * cj
                        for k, ck in t.items():
                            acc[k] = acc.get(k, 0) + f * ck
        else:
            dv, nv = self._clear(v.coords)
            for i, ci in nu:
                row = table[i]
                for j, cj in nv:
                    t = row[j]
                    if t:
                        f = ci * cj
                        for k, ck in t.items():
                            acc[k] = acc.get(k, 0) + f * ck
        den = du * dv * dt
        zero = Fraction(0)
        out = [zero] * self.dim
        for k, c in acc.items():
            if c:
                out[k] = Fraction(c, den)
        return Element(self, out)

    def inner(self, u: Element, v: Element):
        if self._rational(u, v):
            _, _, form, df = self._integer_tables()
            du, nu = self._clear(u.coords)
            dv, nv = self._clear(v.coords)
            vd = dict(nv)
            s = 0
            for i, ci in nu:
                row = form[i]
                if len(row) < len(vd):
                    for j, g in row.items():
                        cj = vd.get(j)
                        if cj:
                            s += ci * g * cj
                else:
                    for j, cj in vd.items():
                        g = row.get(j)
                        if g:
                            s += ci * g * cj
            return Fraction(s, du * dv * df)
        s = _scalar_zero(self.d)
        vc = v.coords
        rows = self._form_rows
        for i, ci in enumerate(u.coords):
            if ci:
                for j, g in rows[i].items():
                    cj = vc[j]
                    if cj:
                        s += ci * g * cj
        return s

    def gram(self, elements: Sequence[Element]) -> list:
        return [[self.inner(a, b) for b in elements] for a in elements]

    # -- invariants -----------------------------------------------------------

    def check_invariants(self, positive: bool = True) -> None:
        """Symmetry of product and form, invariance of the form, positivity.

        Raises :class:`InvariantViolation` on the first failure.
        """
        n = self.dim
        G = self.form
        for i in range(n):
            for j in range(i + 1, n):
                if G[i][j] != G[j][i]:
                    raise InvariantViolation(
                        f"form not symmetric at ({self.labels[i]}, {self.labels[j]})"
                    )
        # F[i][j] = {k: (e_i e_j | e_k)}; invariance says it is symmetric in i <-> k
        F = {}
        rows = self._form_rows
        for i in range(n):
            for j in range(i, n):
                acc = {}
                for m, c in self._table[i][j].items():
                    for k, g in rows[m].items():
                        acc[k] = acc.get(k, 0) + c * g
                F[(i, j)] = {k: v for k, v in acc.items() if v}
        for (i, j), vals in F.items():
            for k, v in vals.items():
                for a, b, c in ((k, j, i), (i, k, j)):
                    w = F[(a, b) if a <= b else (b, a)].get(c, 0)
                    if w != v:
                        raise InvariantViolation(
                            "form not invariant: "
                            f"({self.labels[i]}*{self.labels[j]} | {self.labels[k]}) = {v}"
                            f" but permuted triple gives {w}"
                        )
        if positive and not leading_minors_positive(G):
            raise InvariantViolation("form is not positive definite")

    def is_positive_definite(self) -> bool:
        return leading_minors_positive(self.form)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        n = self.dim
        z = "0/1"
        product = []
        for i in range(n):
            plane = []
            for j in range(n):
                vec = self._table[i][j]
                plane.append([format_scalar(vec[k]) if k in vec else z for k in range(n)])
            product.append(plane)
        return {
            "dim": n,
            "field_d": self.d,
            "basis": list(self.labels),
            "product": product,
            "form": [[format_scalar(c) for c in row] for row in self.form],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict, positive: bool = True) -> "GriessAlgebra":
        try:
            n = data["dim"]
            d = data.get("field_d", 1)
            labels = data["basis"]
            prod = data["product"]
            form = data["form"]
        except (KeyError, TypeError) as exc:
            raise SchemaViolation(f"missing field: {exc}") from None
        if not isinstance(n, int) or not isinstance(d, int) or d < 1:
            raise SchemaViolation("dim and field_d must be positive integers")
        if not (isinstance(labels, list) and len(labels) == n and all(isinstance(s, str) for s in labels)):
            raise SchemaViolation("basis must list dim string labels")
        if not (isinstance(prod, list) and len(prod) == n and all(
            isinstance(p, list) and len(p) == n and all(isinstance(r, list) and len(r) == n for r in p)
            for p in prod
        )):
            raise SchemaViolation("product must be a dim x dim x dim array")
        if not (isinstance(form, list) and len(form) == n and all(isinstance(r, list) and len(r) == n for r in form)):
            raise SchemaViolation("form must be a dim x dim array")
        try:
            products = {}
            for i in range(n):
                for j in range(n):
                    vec = {}
                    for k, s in enumerate(prod[i][j]):
                        c = parse_scalar(s, d)
                        if c:
                            vec[k] = c
                    products[(i, j)] = vec
            G = [[parse_scalar(s, d) for s in row] for row in form]
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise SchemaViolation(str(exc)) from None
        # symmetric product is checked while filling the table
        alg = cls(labels, {}, G, d=d, validate=False)
        table = alg._table
        for (i, j), vec in products.items():
            table[i][j] = vec
        for i in range(n):
            for j in range(i + 1, n):
                if table[i][j] != table[j][i]:
                    raise InvariantViolation(
                        f"product {labels[i]}*{labels[j]} is not symmetric"
                    )
        alg.check_invariants(positive=positive)
        return alg

    @classmethod
    def from_json(cls, text: str, positive: bool = True) -> "GriessAlgebra":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"invalid JSON: {exc}") from None
        return cls.from_dict(data, positive=positive)

    def same_structure(self, other: "GriessAlgebra") -> bool:
        return (
            self.labels == other.labels
            and self.d == other.d
            and self._table == other._table
            and self.form == other.form
        )

    def __repr__(self):
        return f"GriessAlgebra(dim={self.dim}, d={self.d})"


def lift_field(A: GriessAlgebra, d: int) -> GriessAlgebra:
    """The same rational table read over Q(sqrt d)."""
    if A.d == d:
        return A
    if A.d != 1:
        raise ValueError(f"algebra already lives over Q(sqrt {A.d})")
    products = {(i, j): {k: to_scalar(c, d) for k, c in A.structure(i, j).items()}
                for i in range(A.dim) for j in range(i, A.dim) if A.structure(i, j)}
    form = [[to_scalar(c, d) for c in row] for row in A.form]
    return GriessAlgebra(A.labels, products, form, d=d)


def leading_minors_positive(G) -> bool:
    """All leading principal minors of ``G`` are positive.

    Elimination without pivoting: the k-th Bareiss pivot is the k-th leading
    minor (up to a positive row scaling).
    """
    n = len(G)
    if n == 0:
        return True
    if all(not isinstance(x, QuadScalar) for row in G for x in row):
        M, _ = linalg._integerize(G)
    else:
        M = [list(r) for r in G]
    prev = 1
    for k in range(n):
        piv = M[k][k]
        if not piv > 0:
            return False
        for i in range(k + 1, n):
            f = M[i][k]
            row = M[i]
            for j in range(k + 1, n):
                val = piv * row[j] - f * M[k][j]
                row[j] = val // prev if isinstance(val, int) else val / prev
        prev = piv
    return True


# ---------------------------------------------------------------------------
# Virasoro vectors and adjoint data


@dataclass(frozen=True)
class VirasoroVector:
    element: Element
    central_charge: object

    @classmethod
    def of(cls, A: GriessAlgebra, e: Element) -> "VirasoroVector":
        if A.mul(e, e) != 2 * e:
            raise NotVirasoro("e*e != 2e")
        return cls(e, 2 * A.inner(e, e))


def adjoint(A: GriessAlgebra, e: Element) -> list:
    """Matrix of ``v -> e*v``; column ``j`` is ``e * e_j``."""
    n = A.dim
    z = _scalar_zero(A.d)
    M = [[z] * n for _ in range(n)]
    for j in range(n):
        col = A.mul(e, A.basis(j)).coords
        for k in range(n):
            M[k][j] = col[k]
    return M


def is_virasoro(A: GriessAlgebra, e: Element) -> bool:
    return not e.is_zero() and A.mul(e, e) == 2 * e


def is_ising(A: GriessAlgebra, e: Element) -> bool:
    return is_virasoro(A, e) and 2 * A.inner(e, e) == HALF


def _require_ising(A, *es):
    for e in es:
        if not is_ising(A, e):
            raise NotIsing(f"{e!r} is not an Ising vector")


def ising_eigensplit(A: GriessAlgebra, e: Element) -> EigenSplit:
    try:
        return linalg.eigensplit(adjoint(A, e), ISING_SPECTRUM)
    except ResidualNonzero as exc:
        raise BadSpectrum(f"ad(e) is not semisimple with spectrum {{2,0,1/2,1/16}}: {exc}") from None


def _poly_apply(A, e, v, roots):
    """prod_{r in roots} (ad(e) - r) applied to v."""
    w = v
    for r in roots:
        w = A.mul(e, w) - r * w
    return w


def eigencomponent(A: GriessAlgebra, e: Element, v: Element, h) -> Element:
    """Component of ``v`` in the ``h``-eigenspace of ``ad(e)`` for an Ising ``e``.

    Uses only ``v, e*v, e*(e*v), ...``; the cyclic subspace of ``v`` is first
    checked to be annihilated by the Ising minimal polynomial.
    """
    if not _poly_apply(A, e, v, ISING_SPECTRUM).is_zero():
        raise BadSpectrum("ad(e) restricted to <v> has spectrum outside {2,0,1/2,1/16}")
    others = [r for r in ISING_SPECTRUM if r != h]
    denom = Fraction(1)
    for r in others:
        denom *= h - r
    return _poly_apply(A, e, v, others) / denom


def tau_apply(A: GriessAlgebra, e: Element, v: Element) -> Element:
    """``tau_e v`` without building the full matrix."""
    return v - 2 * eigencomponent(A, e, v, SIXTEENTH)


def sigma_on_fixed(A: GriessAlgebra, e: Element, w: Element) -> Element:
    """``sigma_e w`` for ``w`` fixed by ``tau_e``: minus one on the 1/2-component."""
    if not eigencomponent(A, e, w, SIXTEENTH).is_zero():
        raise NotTauFixed("w has a 1/16-component")
    return w - 2 * eigencomponent(A, e, w, HALF)


def ising_product_residual(A: GriessAlgebra, e: Element, v: Element) -> Element:
    """``e*v - (8(e|v)e + 5/32 v + 3/32 tau v - 1/8 sigma(v + tau v))``; zero for every ``v``."""
    tv = tau_apply(A, e, v)
    rhs = (8 * A.inner(e, v) * e + Fraction(5, 32) * v + Fraction(3, 32) * tv
           - Fraction(1, 8) * sigma_on_fixed(A, e, v + tv))
    return A.mul(e, v) - rhs


# ---------------------------------------------------------------------------
# Miyamoto involutions


@dataclass(frozen=True)
class MiyamotoMap:
    matrix: list
    flavor: str
    axis: Element

    def __call__(self, v: Element) -> Element:
        A = v.alg
        return Element(A, linalg.matvec(self.matrix, v.coords))

    @property
    def dim(self):
        return len(self.matrix)


def compose(*maps) -> list:
    """Matrix of ``g1 g2 ... gk`` (rightmost acts first)."""
    mats = [m.matrix if isinstance(m, MiyamotoMap) else m for m in maps]
    out = mats[0]
    for m in mats[1:]:
        out = linalg.matmul(out, m)
    return out


def matrix_order(M, limit: int = 1000) -> int:
    n = len(M)
    P = M
    for k in range(1, limit + 1):
        if linalg.is_identity(P):
            return k
        P = linalg.matmul(P, M)
    raise GriessError(f"matrix order exceeds {limit}")


def apply_matrix(A: GriessAlgebra, M, v: Element) -> Element:
    return Element(A, linalg.matvec(M, v.coords))


def check_automorphism(A: GriessAlgebra, M) -> Optional[str]:
    """Return ``None`` if ``M`` is a form-preserving algebra automorphism, else a reason."""
    n = A.dim
    signed = _as_signed_permutation(M)
    if signed is not None:
        return _check_relabelling(A, *signed)
    cols = [Element(A, [M[k][j] for k in range(n)]) for j in range(n)]
    for i in range(n):
        for j in range(i, n):
            if A.inner(cols[i], cols[j]) != A.form[i][j]:
                return f"form not preserved on ({A.labels[i]}, {A.labels[j]})"
    z = _scalar_zero(A.d)
    for i in range(n):
        for j in range(i, n):
            img = [z] * n
            for m, c in A.structure(i, j).items():
                col = cols[m].coords
                for k in range(n):
                    if col[k]:
                        img[k] += c * col[k]
            if A.mul(cols[i], cols[j]).coords != tuple(img):
                return f"product not preserved on ({A.labels[i]}, {A.labels[j]})"
    return None


def _as_signed_permutation(M):
    """``(p, s)`` with ``M e_j = s[j] e_{p[j]}`` and ``s[j] = +-1``, else ``None``."""
    n = len(M)
    p = [None] * n
    sg = [None] * n
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if x:
                if (x != 1 and x != -1) or p[j] is not None:
                    return None
                p[j], sg[j] = i, x
    return (p, sg) if None not in p else None


def _check_relabelling(A, p, sg):
    for i in range(A.dim):
        for j in range(i, A.dim):
            sij = sg[i] * sg[j]
            if A.form[p[i]][p[j]] != sij * A.form[i][j]:
                return f"form not preserved on ({A.labels[i]}, {A.labels[j]})"
            moved = {p[k]: sij * sg[k] * c for k, c in A.structure(i, j).items()}
            if A.structure(p[i], p[j]) != moved:
                return f"product not preserved on ({A.labels[i]}, {A.labels[j]})"
    return None


def _involution_from_projection(A, e, split, h, flavor):
    n = A.dim
    # P_h = prod_{r != h} (ad - r)/(h - r), valid since ad(e) is semisimple
    M = adjoint(A, e)
    P = linalg.identity(n)
    for r in ISING_SPECTRUM:
        if r == h:
            continue
        shifted = [[M[i][j] - (r if i == j else 0) for j in range(n)] for i in range(n)]
        P = linalg.matmul(P, shifted)
        P = [[x / (h - r) if x else x for x in row] for row in P]
    G = [[(1 if i == j else 0) - 2 * P[i][j] for j in range(n)] for i in range(n)]
    G = [[to_scalar(x, A.d) if not isinstance(x, QuadScalar) else x for x in row] for row in G]
    if not linalg.is_identity(linalg.matmul(G, G)):
        raise NotAutomorphism(f"{flavor} map is not an involution")
    reason = check_automorphism(A, G)
    if reason:
        raise NotAutomorphism(f"{flavor}_e is not an automorphism: {reason}")
    return MiyamotoMap(G, flavor, e)


def miyamoto_tau(A: GriessAlgebra, e: Element) -> MiyamotoMap:
    """-1 on the 1/16-eigenspace of ``ad(e)``, +1 elsewhere; validated."""
    _require_ising(A, e)
    split = ising_eigensplit(A, e)
    return _involution_from_projection(A, e, split, SIXTEENTH, "tau")


def is_sigma_type(A: GriessAlgebra, e: Element) -> bool:
    _require_ising(A, e)
    return not ising_eigensplit(A, e).space(SIXTEENTH)


def miyamoto_sigma(A: GriessAlgebra, e: Element) -> MiyamotoMap:
    """-1 on the 1/2-eigenspace of ``ad(e)``; requires ``e`` of sigma-type."""
    _require_ising(A, e)
    split = ising_eigensplit(A, e)
    if split.space(SIXTEENTH):
        raise NotSigmaType(f"1/16-eigenspace has dimension {len(split.space(SIXTEENTH))}")
    return _involution_from_projection(A, e, split, HALF, "sigma")


def sigma_image(A: GriessAlgebra, e: Element, v: Element) -> Element:
    """``v + 32 (e|v) e - 4 e*v`` for ``v`` fixed by ``tau_e``."""
    _require_ising(A, e)
    if tau_apply(A, e, v) != v:
        raise NotTauFixed("v is not fixed by tau_e")
    return v + 32 * A.inner(e, v) * e - 4 * A.mul(e, v)


def circle(A: GriessAlgebra, a: Element, b: Element) -> Element:
    """Third Ising vector ``a + b - 4 a*b`` of a 2A pair."""
    _require_ising(A, a, b)
    if A.inner(a, b) != Fraction(1, 32):
        raise NotTwoAPair(f"(a|b) = {A.inner(a, b)}, expected 1/32")
    return a + b - 4 * A.mul(a, b)


def u_vector(A: GriessAlgebra, a: Element, b: Element) -> Element:
    """The c=4/5 Virasoro vector ``(64/135)(2a + 2b + c - 16 a*b)`` of a 3A pair."""
    _require_ising(A, a, b)
    if A.inner(a, b) != Fraction(13, 1024):
        raise NotThreeAPair(f"(a|b) = {A.inner(a, b)}, expected 13/1024")
    c = tau_apply(A, a, b)
    return Fraction(64, 135) * (2 * a + 2 * b + c - 16 * A.mul(a, b))


# ---------------------------------------------------------------------------
# Spans and subalgebras


class SpanTracker:
    """Incremental reduced echelon form that remembers how each row was built."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: List[list] = []  # reduced rows, pivot entry 1
        self.pivots: List[int] = []
        self.combos: List[dict] = []  # row = sum combos[k] * vectors[k]
        self.count = 0

    def reduce(self, v: Sequence):
        """Return ``(residual, combo)`` with ``v = residual + sum combo[k]*vectors[k]``."""
        r = list(v)
        combo: dict = {}
        for row, p, cmb in zip(self.rows, self.pivots, self.combos):
            f = r[p]
            if f:
                for j in range(p, self.dim):
                    if row[j]:
                        r[j] = r[j] - f * row[j]
                for k, c in cmb.items():
                    combo[k] = combo.get(k, 0) + f * c
        return r, combo

    def contains(self, v) -> bool:
        return not any(self.reduce(v)[0])

    def add(self, v) -> bool:
        """Add ``v`` as vector number ``self.count`` if independent."""
        r, combo = self.reduce(v)
        p = next((j for j, x in enumerate(r) if x), None)
        if p is None:
            return False
        inv = 1 / r[p] if not isinstance(r[p], int) else Fraction(1, r[p])
        r = [x * inv if x else x for x in r]
        cmb = {k: -c * inv for k, c in combo.items() if c}
        cmb[self.count] = inv
        # keep the echelon fully reduced above the new pivot
        for idx, row in enumerate(self.rows):
            f = row[p]
            if f:
                self.rows[idx] = [a - f * b if b else a for a, b in zip(row, r)]
                old = self.combos[idx]
                for k, c in cmb.items():
                    old[k] = old.get(k, 0) - f * c
        self.rows.append(r)
        self.pivots.append(p)
        self.combos.append(cmb)
        self.count += 1
        return True

    def coordinates(self, v) -> dict:
        """Coefficients of ``v`` on the tracked vectors; raises if ``v`` is outside the span."""
        r, combo = self.reduce(v)
        if any(r):
            raise GriessError("vector is not in the span")
        return {k: c for k, c in combo.items() if c}


@dataclass
class Subalgebra:
    algebra: GriessAlgebra
    embedding: List[Element]
    ambient: GriessAlgebra
    tracker: SpanTracker = field(repr=False)

    @property
    def dim(self):
        return self.algebra.dim

    def to_ambient(self, x: Element) -> Element:
        out = self.ambient.zero()
        for k, c in x.support().items():
            out = out + c * self.embedding[k]
        return out

    def to_sub(self, v: Element) -> Element:
        coeffs = self.tracker.coordinates(v.coords)
        z = _scalar_zero(self.ambient.d)
        c = [z] * self.dim
        for k, x in coeffs.items():
            c[k] = x
        return Element(self.algebra, c)

    def contains(self, v: Element) -> bool:
        return self.tracker.contains(v.coords)

    def change_of_coordinates(self) -> list:
        """Ambient-by-sub matrix whose columns are the embedded basis vectors."""
        return [[e.coords[i] for e in self.embedding] for i in range(self.ambient.dim)]


def close_subalgebra(
    A: GriessAlgebra,
    generators: Sequence[Element],
    labels: Optional[Sequence[str]] = None,
    validate: bool = False,
) -> Subalgebra:
    """Span closure of ``generators`` under the product.

    The induced basis is the independent generators in order followed by
    products in discovery order; pivots are chosen by first nonzero coordinate.
    """
    tracker = SpanTracker(A.dim)
    vecs: List[Element] = []
    names: List[str] = []
    for k, g in enumerate(generators):
        if tracker.add(g.coords):
            vecs.append(g)
            names.append(labels[k] if labels else f"g{k}")
    products = {}
    i = 0
    while i < len(vecs):
        for j in range(i + 1):
            p = A.mul(vecs[i], vecs[j])
            if tracker.add(p.coords):
                vecs.append(p)
                names.append(f"({names[j]}*{names[i]})")
            products[(j, i)] = p
        i += 1
    sub_products = {key: tracker.coordinates(p.coords) for key, p in products.items()}
    form = A.gram(vecs)
    sub = GriessAlgebra(names, sub_products, form, d=A.d, validate=validate)
    return Subalgebra(sub, vecs, A, tracker)


def span_dimension(A: GriessAlgebra, elements: Iterable[Element]) -> int:
    return linalg.rank([e.coords for e in elements])


def conformal_vector(A: GriessAlgebra, basis_set: Sequence[Element]) -> VirasoroVector:
    """Virasoro vector ``eta`` in the span of ``basis_set`` with ``(eta|t) = (t|t)``.

    A maximal independent prefix-ordered subset fixes the Gram system; the
    condition is then checked on every vector, together with ``eta*eta = 2 eta``
    and ``eta*t = 2t``.
    """
    tracker = SpanTracker(A.dim)
    indep = [t for t in basis_set if tracker.add(t.coords)]
    G = A.gram(indep)
    rhs = [A.inner(t, t) for t in indep]
    try:
        coeffs = linalg.solve_linear(G, rhs)
    except linalg.LinAlgError as exc:
        raise SingularGram(str(exc)) from None
    eta = A.zero()
    for c, t in zip(coeffs, indep):
        eta = eta + c * t
    for t in basis_set:
        if A.inner(eta, t) != A.inner(t, t):
            raise NotConformal("(eta|t) != (t|t) on a dependent spanning vector")
    if A.mul(eta, eta) != 2 * eta:
        raise NotConformal("eta*eta != 2 eta: span is not product-closed")
    for t in basis_set:
        if A.mul(eta, t) != 2 * t:
            raise NotConformal("eta does not act as 2 on the span")
    return VirasoroVector(eta, 2 * A.inner(eta, eta))


def classify_pair(A: GriessAlgebra, a: Element, b: Element):
    """Dihedral type of ``<a, b>`` from ``2^10 (a|b)`` and the closure dimension."""
    from .dihedral import DIHEDRAL_TYPES

    _require_ising(A, a, b)
    if a == b:
        return DIHEDRAL_TYPES["1A"]
    ip = 1024 * A.inner(a, b)
    dim = close_subalgebra(A, [a, b]).dim
    for t in DIHEDRAL_TYPES.values():
        if t.name != "1A" and t.inner_product == ip and t.griess_dim == dim:
            return t
    raise UnknownType(f"(2^10 (a|b), dim) = ({ip}, {dim}) is not a dihedral type")
