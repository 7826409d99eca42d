"""Assembling structure constants from known local subalgebras.

A :class:`TableBuilder` collects products and inner products on labelled
basis pairs. Each local rule (2A triple, 3A triple with its ``u``, 6A hexagon)
writes the entries it determines; an entry written twice must agree, and a
pair left unwritten is reported as unresolved.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import GriessAlgebra, GriessError

F = Fraction
Vec = Dict[str, Fraction]


class UnresolvedPair(GriessError):
    pass


class ConflictingEntry(GriessError):
    pass


def lin(*terms) -> Vec:
    """``lin((c1, 'a'), (c2, 'b'), ...)`` as a sparse label vector."""
    out: Vec = {}
    for c, lab in terms:
        if isinstance(lab, dict):
            for k, v in lab.items():
                out[k] = out.get(k, 0) + c * v
        else:
            out[lab] = out.get(lab, 0) + c
    return {k: F(v) for k, v in out.items() if v}


class TableBuilder:
    def __init__(self, labels: Sequence[str]):
        self.labels = list(labels)
        self._set = set(self.labels)
        self.aliases: Dict[str, Vec] = {}
        self.products: Dict[Tuple[str, str], Vec] = {}
        self.forms: Dict[Tuple[str, str], Fraction] = {}
        self.log: List[Tuple[str, str, str, str]] = []  # (kind, x, y, source)

    # -- helpers ----------------------------------------------------------------

    def alias(self, name: str, vec: Vec) -> None:
        """Declare a non-basis symbol equal to a combination of basis labels."""
        self.aliases[name] = self.expand(vec)

    def expand(self, vec: Vec) -> Vec:
        out: Vec = {}
        for k, c in vec.items():
            if k in self._set:
                out[k] = out.get(k, 0) + c
            elif k in self.aliases:
                for j, d in self.aliases[k].items():
                    out[j] = out.get(j, 0) + c * d
            else:
                raise KeyError(f"unknown label {k!r}")
        return {k: F(v) for k, v in out.items() if v}

    @staticmethod
    def _key(x, y):
        return (x, y) if x <= y else (y, x)

    def _basis_pair(self, x, y) -> bool:
        return x in self._set and y in self._set

    def product(self, x: str, y: str, vec: Vec, source: str) -> None:
        if not self._basis_pair(x, y):
            return
        vec = self.expand(vec)
        key = self._key(x, y)
        old = self.products.get(key)
        if old is not None:
            if old != vec:
                raise ConflictingEntry(f"{x}*{y}: {old} from earlier rule, {vec} from {source}")
            return
        self.products[key] = vec
        self.log.append(("product", key[0], key[1], source))

    def form(self, x: str, y: str, value, source: str) -> None:
        if not self._basis_pair(x, y):
            return
        key = self._key(x, y)
        value = F(value)
        old = self.forms.get(key)
        if old is not None:
            if old != value:
                raise ConflictingEntry(f"({x}|{y}): {old} earlier, {value} from {source}")
            return
        self.forms[key] = value
        self.log.append(("form", key[0], key[1], source))

    # -- local rules --------------------------------------------------------------

    def ising(self, e: str, source="ising") -> None:
        self.product(e, e, {e: F(2)}, source)
        self.form(e, e, F(1, 4), source)

    def virasoro(self, v: str, c, source="virasoro") -> None:
        self.product(v, v, {v: F(2)}, source)
        self.form(v, v, F(c) / 2, source)

    def orthogonal(self, x: str, y: str, source="orthogonal") -> None:
        self.product(x, y, {}, source)
        self.form(x, y, 0, source)

    def two_b(self, a: str, b: str, source="2B") -> None:
        self.ising(a, source)
        self.ising(b, source)
        self.orthogonal(a, b, source)

    def two_a(self, a: str, b: str, c: str, source="2A") -> None:
        """Three Ising vectors, each the circle product of the other two."""
        for e in (a, b, c):
            self.ising(e, source)
        for p, q, r in ((a, b, c), (a, c, b), (b, c, a)):
            self.product(p, q, lin((F(1, 4), p), (F(1, 4), q), (F(-1, 4), r)), source)
            self.form(p, q, F(1, 32), source)

    def three_a(self, u: str, a: str, b: str, c: str, source="3A") -> None:
        """3A triple ``{a, b, c}`` with its c=4/5 vector ``u``."""
        for e in (a, b, c):
            self.ising(e, source)
        self.virasoro(u, F(4, 5), source)
        tri = (a, b, c)
        for i in range(3):
            p = tri[i]
            q, r = tri[(i + 1) % 3], tri[(i + 2) % 3]
            self.product(p, q, lin((F(-135, 1024), u), (F(1, 8), p), (F(1, 8), q), (F(1, 16), r)), source)
            self.form(p, q, F(13, 1024), source)
            self.product(p, u, lin((F(5, 16), u), (F(4, 9), p), (F(-2, 9), q), (F(-2, 9), r)), source)
            self.form(p, u, F(1, 16), source)

    def six_a(self, u: str, x: str, e: Sequence[str], source="6A") -> None:
        """Hexagon ``e[0..5]`` with central ``x``: ``e[i], e[i+3], x`` are 2A triples,
        ``e[i], e[i+2], e[i+4]`` are 3A triples sharing ``u``."""
        self.three_a(u, e[0], e[2], e[4], source)
        self.three_a(u, e[1], e[3], e[5], source)
        for i in range(3):
            self.two_a(e[i], e[i + 3], x, source)
        self.orthogonal(u, x, source)
        for i in range(6):
            p, q = e[i], e[(i + 1) % 6]
            rest = [e[(i + k) % 6] for k in range(2, 6)]
            vec = lin((F(45, 1024), u), (F(1, 32), x), (F(1, 32), p), (F(1, 32), q),
                      *[(F(-1, 32), r) for r in rest])
            self.product(p, q, vec, source)
            self.form(p, q, F(5, 1024), source)

    def transport(self, perm: Dict[str, str], source: str) -> None:
        """Copy every entry known so far along a relabelling of the basis.

        Only sound when ``perm`` is an automorphism; callers check that on the
        finished algebra.
        """
        p = lambda k: perm.get(k, k)
        for (x, y), vec in list(self.products.items()):
            self.product(p(x), p(y), {p(k): c for k, c in vec.items()}, source)
        for (x, y), v in list(self.forms.items()):
            self.form(p(x), p(y), v, source)

    # -- output -------------------------------------------------------------------

    def missing(self) -> List[Tuple[str, str]]:
        out = []
        for i, x in enumerate(self.labels):
            for y in self.labels[i:]:
                if self._key(x, y) not in self.products or self._key(x, y) not in self.forms:
                    out.append((x, y))
        return out

    def build(self, validate: bool = True) -> GriessAlgebra:
        miss = self.missing()
        if miss:
            shown = ", ".join(f"{x}*{y}" for x, y in miss[:8])
            raise UnresolvedPair(f"{len(miss)} basis pairs unresolved: {shown}")
        idx = {lab: i for i, lab in enumerate(self.labels)}
        products = {
            (idx[x], idx[y]): {idx[k]: c for k, c in vec.items()}
            for (x, y), vec in self.products.items()
        }
        n = len(self.labels)
        G = [[F(0)] * n for _ in range(n)]
        for (x, y), v in self.forms.items():
            G[idx[x]][idx[y]] = v
            G[idx[y]][idx[x]] = v
        return GriessAlgebra(self.labels, products, G, validate=validate)


def element_of(A: GriessAlgebra, vec: Vec, aliases: Optional[Dict[str, Vec]] = None):
    """Element of ``A`` from a label vector, expanding aliases."""
    flat: Vec = {}
    for k, c in vec.items():
        if aliases and k in aliases:
            for j, d in aliases[k].items():
                flat[j] = flat.get(j, 0) + c * d
        else:
            flat[k] = flat.get(k, 0) + c
    return A.element(flat)
