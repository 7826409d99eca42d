"""Groups generated by Miyamoto involutions, seen through their action on Ising axes.

Permutations are tuples ``p`` with ``p[i]`` the image of ``i``; products act
left to right, ``(p * q)[i] = q[p[i]]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .algebra import (
    Element,
    GriessAlgebra,
    GriessError,
    MiyamotoMap,
    is_ising,
    is_sigma_type,
    matrix_order,
    miyamoto_sigma,
    miyamoto_tau,
)

Perm = Tuple[int, ...]
DEFAULT_BUDGET = 10000


class ClosureBudgetExceeded(GriessError):
    pass


class NotClosed(GriessError):
    pass


# ---------------------------------------------------------------------------
# axis sets


@dataclass
class AxisSet:
    ambient: GriessAlgebra
    axes: List[Element]
    flavors: List[str]
    maps: List[MiyamotoMap] = field(repr=False)
    names: List[str] = field(default_factory=list)

    def __len__(self):
        return len(self.axes)

    def index(self, e: Element) -> int:
        return self._lookup()[e.coords]

    def _lookup(self):
        return {e.coords: i for i, e in enumerate(self.axes)}

    def subset(self, keep: Sequence[int]) -> "AxisSet":
        keep = list(keep)
        return AxisSet(self.ambient, [self.axes[i] for i in keep], [self.flavors[i] for i in keep],
                       [self.maps[i] for i in keep], [self.names[i] for i in keep])


def _map_for(A, e, flavor_rule):
    if flavor_rule == "tau":
        return miyamoto_tau(A, e)
    if flavor_rule == "sigma":
        return miyamoto_sigma(A, e)
    if flavor_rule == "auto":
        return miyamoto_sigma(A, e) if is_sigma_type(A, e) else miyamoto_tau(A, e)
    raise ValueError(f"flavor rule must be tau, sigma or auto, got {flavor_rule!r}")


def _name_of(A, e):
    s = e.support()
    if len(s) == 1:
        (i, c), = s.items()
        if c == 1:
            return A.labels[i]
    return repr(e)


def close_axes(
    A: GriessAlgebra,
    seeds: Sequence[Element],
    flavor_rule: str = "auto",
    circle: bool = True,
    acting: Optional[Sequence[Element]] = None,
    budget: int = DEFAULT_BUDGET,
) -> AxisSet:
    """Smallest axis set containing ``seeds`` closed under the Miyamoto maps of its axes.

    With ``circle`` it is also closed under ``a o b`` for 2A pairs. If
    ``acting`` is given, only the maps of those axes (closed among themselves
    first) are applied to the rest.
    """
    for e in seeds:
        if not is_ising(A, e):
            raise GriessError(f"seed {e!r} is not an Ising vector")
    axes: List[Element] = []
    index: Dict[tuple, int] = {}
    maps: List[Optional[MiyamotoMap]] = []

    def add(e):
        if e.coords in index:
            return
        if len(axes) >= budget:
            raise ClosureBudgetExceeded(f"more than {budget} axes")
        index[e.coords] = len(axes)
        axes.append(e)
        maps.append(None)

    def get_map(i):
        if maps[i] is None:
            maps[i] = _map_for(A, axes[i], flavor_rule)
        return maps[i]

    if acting is not None:
        act = close_axes(A, acting, flavor_rule, circle=False, budget=budget)
        actors = act.maps
        for e in act.axes:
            add(e)
        for e in seeds:
            add(e)
    else:
        actors = None
        for e in seeds:
            add(e)

    done = 0
    while done < len(axes):
        i = done
        done += 1
        current = actors if actors is not None else [get_map(j) for j in range(len(axes))]
        # images of the new axis under every map, and of every axis under its map
        for m in current:
            add(m(axes[i]))
        if actors is None:
            m = get_map(i)
            for j in range(len(axes)):
                add(m(axes[j]))
        if circle:
            for j in range(len(axes)):
                if j != i and A.inner(axes[i], axes[j]) == Fraction(1, 32):
                    add(axes[i] + axes[j] - 4 * A.mul(axes[i], axes[j]))
        if actors is None and done == len(axes):
            # a late map may move earlier axes
            for k in range(len(axes)):
                for j in range(len(axes)):
                    add(get_map(k)(axes[j]))
    if actors is not None:
        # axes that only receive the action still get their own involution
        for i in range(len(act), len(axes)):
            maps[i] = _map_for(A, axes[i], "auto")
        for i, m in enumerate(actors):
            maps[i] = m
    all_maps = [get_map(i) for i in range(len(axes))]
    return AxisSet(A, axes, [m.flavor for m in all_maps], all_maps, [_name_of(A, e) for e in axes])


def permutation_of(S: AxisSet, M) -> Perm:
    look = S._lookup()
    out = []
    for e in S.axes:
        img = Element(S.ambient, linalg.matvec(M, e.coords))
        j = look.get(img.coords)
        if j is None:
            raise NotClosed(f"image of {_name_of(S.ambient, e)} is not in the axis set")
        out.append(j)
    return tuple(out)


def axes_generate_ambient(S: AxisSet) -> bool:
    """Automorphisms fixing every axis are trivial when the axes generate the algebra."""
    from .algebra import close_subalgebra

    return close_subalgebra(S.ambient, S.axes).dim == S.ambient.dim


# ---------------------------------------------------------------------------
# permutation groups


def perm_mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def perm_inv(p: Perm) -> Perm:
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def perm_order(p: Perm) -> int:
    from math import lcm

    seen = [False] * len(p)
    out = 1
    for i in range(len(p)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                k += 1
            out = lcm(out, k)
    return out


class PermGroup:
    """Base and strong generating set by the deterministic Schreier-Sims algorithm."""

    def __init__(self, degree: int, generators: Sequence[Perm]):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.generators = [tuple(g) for g in generators if tuple(g) != self.identity]
        for g in self.generators:
            if len(g) != degree or sorted(g) != list(self.identity):
                raise ValueError("generator is not a permutation of the right degree")
        self.base: List[int] = []
        self.strong: List[List[Perm]] = []
        self.transversals: List[Dict[int, Perm]] = []
        self._schreier_sims()

    def _orbit(self, b, gens):
        T = {b: self.identity}
        queue = [b]
        for pt in queue:
            u = T[pt]
            for s in gens:
                q = s[pt]
                if q not in T:
                    T[q] = perm_mul(u, s)
                    queue.append(q)
        return T

    def _sift(self, g, start):
        for j in range(start, len(self.base)):
            pt = g[self.base[j]]
            T = self.transversals[j]
            if pt not in T:
                return g, j
            g = perm_mul(g, perm_inv(T[pt]))
        return g, len(self.base)

    def _moved(self, g):
        return next(i for i in range(self.degree) if g[i] != i)

    def _schreier_sims(self):
        B, S = self.base, self.strong
        for g in self.generators:
            if all(g[b] == b for b in B):
                B.append(self._moved(g))
        for i in range(len(B)):
            S.append([g for g in self.generators if all(g[b] == b for b in B[:i])])
        self.transversals = [self._orbit(B[i], S[i]) for i in range(len(B))]
        i = len(B) - 1
        while i >= 0:
            restart = False
            T = self.transversals[i]
            for pt in list(T):
                u = T[pt]
                for s in S[i]:
                    h = perm_mul(perm_mul(u, s), perm_inv(T[s[pt]]))
                    if h == self.identity:
                        continue
                    h2, j = self._sift(h, i + 1)
                    if j < len(B) or h2 != self.identity:
                        if j == len(B):
                            B.append(self._moved(h2))
                            S.append([])
                            self.transversals.append({})
                        for l in range(i + 1, j + 1):
                            S[l].append(h2)
                            self.transversals[l] = self._orbit(B[l], S[l])
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def order(self) -> int:
        out = 1
        for T in self.transversals:
            out *= len(T)
        return out

    def contains(self, g: Perm) -> bool:
        h, j = self._sift(tuple(g), 0)
        return j == len(self.base) and h == self.identity

    def orbit(self, point: int) -> List[int]:
        return sorted(self._orbit(point, self.generators))


def brute_force_order(degree: int, generators: Sequence[Perm], limit: int = 100000) -> int:
    """Order by closing the generator set under multiplication."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = perm_mul(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > limit:
                        raise GriessError(f"group larger than {limit}")
        frontier = nxt
    return len(seen)


@dataclass
class PermutationImage:
    group: PermGroup
    generators: List[Perm]
    generator_names: List[str]
    faithful: bool  # axes generate the ambient algebra, so the action determines the matrix


def permutation_image(S: AxisSet, generators=None, names=None) -> PermutationImage:
    """Action of the given matrices (default: every axis map) on the axis set."""
    if generators is None:
        mats = [m.matrix for m in S.maps]
        names = [f"{m.flavor}_{n}" for m, n in zip(S.maps, S.names)]
    else:
        mats = [g.matrix if isinstance(g, MiyamotoMap) else g for g in generators]
        names = list(names) if names else [f"g{i}" for i in range(len(mats))]
    perms = [permutation_of(S, M) for M in mats]
    return PermutationImage(PermGroup(len(S), perms), perms, names, axes_generate_ambient(S))


# ---------------------------------------------------------------------------
# pair diagnostics


def product_order_table(S: AxisSet) -> Dict[Tuple[int, int], int]:
    """Order of ``g_e g_f`` as a matrix on the ambient algebra, for every pair of axes."""
    out = {}
    for i, j in combinations(range(len(S)), 2):
        out[(i, j)] = matrix_order(linalg.matmul(S.maps[i].matrix, S.maps[j].matrix))
    return out


def order_histogram(table: Dict[Tuple[int, int], int]) -> Dict[int, int]:
    return dict(sorted(Counter(table.values()).items()))


@dataclass
class Verdict:
    holds: bool
    witness: Optional[Tuple[int, int, int]]  # (i, j, order) of a failing pair
    orders: Dict[Tuple[int, int], int]


def three_transposition_verdict(S: AxisSet) -> Verdict:
    table = product_order_table(S)
    for (i, j), k in table.items():
        if k > 3:
            return Verdict(False, (i, j, k), table)
    return Verdict(True, None, table)


def commutes(M, N) -> bool:
    return linalg.matmul(M, N) == linalg.matmul(N, M)


def filter_commuting(S: AxisSet, t) -> AxisSet:
    """Axes whose involution commutes with ``t`` (a matrix or map)."""
    T = t.matrix if isinstance(t, MiyamotoMap) else t
    keep = [i for i, m in enumerate(S.maps) if commutes(m.matrix, T)]
    return S.subset(keep)


def conjugation_failures(S: AxisSet) -> List[Tuple[int, int]]:
    """Pairs ``(f, e)`` where the map of ``g_f e`` differs from ``g_f g_e g_f``."""
    look = S._lookup()
    bad = []
    for f in range(len(S)):
        Mf = S.maps[f].matrix
        for e in range(len(S)):
            img = S.maps[f](S.axes[e])
            k = look.get(img.coords)
            if k is None:
                bad.append((f, e))
                continue
            conj = linalg.matmul(linalg.matmul(Mf, S.maps[e].matrix), Mf)
            if S.maps[k].flavor == S.maps[e].flavor and S.maps[k].matrix != conj:
                bad.append((f, e))
    return bad


def group_report(S: AxisSet, image: Optional[PermutationImage] = None) -> dict:
    image = image or permutation_image(S)
    verdict = three_transposition_verdict(S)
    return {
        "axes": S.names,
        "flavors": S.flavors,
        "order": image.group.order(),
        "faithful": image.faithful,
        "pair_order_histogram_on_this_algebra": {str(k): v for k, v in order_histogram(verdict.orders).items()},
        "three_transposition": verdict.holds,
        "witness": None if verdict.witness is None else [S.names[verdict.witness[0]], S.names[verdict.witness[1]], verdict.witness[2]],
    }
