"""Verification suites, reports and algebra import/export."""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Any, Callable, List, Optional, Sequence, Tuple

from . import linalg
from .algebra import (
    GriessAlgebra,
    InvariantViolation,
    SchemaViolation,
    classify_pair,
    close_subalgebra,
    compose,
    conformal_vector,
    is_ising,
    is_virasoro,
    ising_product_residual,
    lift_field,
    miyamoto_sigma,
    miyamoto_tau,
)
from .dihedral import frame_6A, hexagon_identities, make, three_a_sigma_identities
from .family import (
    DEFAULT_N_CAP,
    NINE,
    abxy_3A_identities,
    build_abxy_2A,
    build_abxy_3A,
    build_xn,
    frame_relations_check,
    matsuo_axes,
    matsuo_part,
    nine_point_gram,
    omega_charge,
    omega_n,
)
from .groups import (
    DEFAULT_BUDGET,
    close_axes,
    conjugation_failures,
    permutation_image,
    product_order_table,
    three_transposition_verdict,
)
from .lattice import (
    ALLOWED_SCALED,
    OracleMismatch,
    build_lattice_griess,
    e8_ising_enumeration,
    e8_pair_values,
    w_product_failures,
    root_system,
    standard_e8_ising,
)
from .scalar import format_scalar, is_squarefree
from .virasoro import central_charge

F = Fraction
SUITES = ("catalog", "family", "groups", "lattice", "all")
FORMATS = ("json", "csv", "text")


# ---------------------------------------------------------------------------
# configuration


@dataclass
class WorkbenchConfig:
    d: int = 1
    n_cap: int = DEFAULT_N_CAP
    closure_budget: int = DEFAULT_BUDGET
    jobs: int = 1
    format: str = "json"

    def __post_init__(self):
        for name in ("d", "n_cap", "closure_budget", "jobs"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if not is_squarefree(self.d):
            raise ValueError(f"d must be squarefree, got {self.d}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")

    @classmethod
    def from_file(cls, path) -> "WorkbenchConfig":
        text = Path(path).read_text()
        data = json.loads(text) if text.strip() else {}
        if not isinstance(data, dict):
            raise ValueError("config file must hold a JSON object")
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)


# ---------------------------------------------------------------------------
# reports


def fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, Fraction)):
        return format_scalar(F(x)).removesuffix("/1")
    return str(x)


@dataclass
class Check:
    id: str
    criterion: int
    anchor: str
    expected: str
    computed: str
    passed: bool


@dataclass
class VerificationReport:
    suite: str
    checks: List[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.all_pass else 1

    def by_criterion(self, k: int) -> List[Check]:
        return [c for c in self.checks if c.criterion == k]

    def checks_json(self) -> str:
        """The byte-deterministic part: fixed order, no timings."""
        rows = [{"id": c.id, "criterion": c.criterion, "anchor": c.anchor,
                 "expected": c.expected, "computed": c.computed, "pass": c.passed}
                for c in self.checks]
        return json.dumps(rows, indent=2, sort_keys=True)

    def to_json(self) -> str:
        body = {
            "suite": self.suite,
            "checks": json.loads(self.checks_json()),
            "summary": {"total": len(self.checks), "passed": sum(c.passed for c in self.checks)},
            "wall_time_s": round(self.wall_time, 3),
        }
        return json.dumps(body, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, quoting=csv.QUOTE_ALL, lineterminator="\n")
        w.writerow(["id", "criterion", "anchor", "expected", "computed", "pass"])
        for c in self.checks:
            w.writerow([c.id, c.criterion, c.anchor, c.expected, c.computed, fmt(c.passed)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            flag = "PASS" if c.passed else "FAIL"
            lines.append(f"{flag} [{c.criterion}] {c.id}: expected {c.expected}, computed {c.computed}")
        lines.append(f"{sum(c.passed for c in self.checks)}/{len(self.checks)} passed in {self.wall_time:.2f}s")
        return "\n".join(lines) + "\n"

    def render(self, format: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[format]()


# ---------------------------------------------------------------------------
# cached builders (one copy per worker process)


@lru_cache(maxsize=None)
def _catalog(name):
    return make(name)


@lru_cache(maxsize=None)
def _xn(n):
    return build_xn(n)


@lru_cache(maxsize=None)
def _abxy2A():
    return build_abxy_2A()


@lru_cache(maxsize=None)
def _abxy3A():
    return build_abxy_3A()


@lru_cache(maxsize=None)
def _lattice(name):
    return build_lattice_griess(root_system(name))


@lru_cache(maxsize=None)
def _e8_enumeration():
    return e8_ising_enumeration(_lattice("E8"))


def _residual_text(residuals: dict) -> str:
    bad = [k for k, r in residuals.items() if not r.is_zero()]
    return "0" if not bad else "nonzero: " + ", ".join(bad)


# ---------------------------------------------------------------------------
# check functions (module level so worker processes can run them)


def _generators(C):
    A = C.algebra
    if C.type.name == "1A":
        return A["a"], A["a"]
    if C.type.name == "6A":
        return A["e0"], A["e1"]
    return A["a"], A["b"]


def c_catalog(name, what):
    C = _catalog(name)
    A = C.algebra
    a, b = _generators(C)
    if what == "inner":
        return 1024 * A.inner(a, b)
    if what == "dim":
        return close_subalgebra(A, [a, b]).dim
    if what == "ising":
        return len(close_axes(A, [a, b], "auto", circle=True).axes)
    raise ValueError(what)


def c_catalog_charge(name):
    A = _catalog(name).algebra
    return conformal_vector(A, [A.basis(i) for i in range(A.dim)]).central_charge


def c_6A_frame():
    C = _catalog("6A")
    A = C.algebra
    u, v, f = frame_6A(C)
    orth = all(A.inner(p, q) == 0 and A.mul(p, q).is_zero() for p, q in combinations((u, v, f), 2))
    charges = [2 * A.inner(t, t) for t in (u, v, f)]
    return fmt(orth) + " " + " ".join(fmt(c) for c in charges)


def c_abxy2A_charge():
    T = _abxy2A()
    return conformal_vector(T.algebra, T.basis_list()).central_charge


def c_abxy3A_charge():
    T = _abxy3A()
    return conformal_vector(T.algebra, T.spanning_set()).central_charge


def c_xn_charge(n):
    X = _xn(n)
    A = X.algebra
    solved = conformal_vector(A, [A.basis(i) for i in range(A.dim)])
    closed = omega_n(X, n).element
    return solved.central_charge if solved.element == closed else "solver and closed form differ"


def c_f_charge():
    T = _abxy2A()
    f = T.f()
    if not is_virasoro(T.algebra, f):
        return "not virasoro"
    return 2 * T.algebra.inner(f, f)


def c_xi_charge():
    T = _abxy3A()
    xi = T.xi()
    if not is_virasoro(T.algebra, xi):
        return "not virasoro"
    return 2 * T.algebra.inner(xi, xi)


def c_fk_charge(k):
    X = _xn(8)
    f = X.f(k)
    if not is_virasoro(X.algebra, f):
        return "not virasoro"
    return 2 * X.algebra.inner(f, f)


def c_det_2A():
    T = _abxy2A()
    return linalg.determinant(T.algebra.gram(T.basis_list()))


def c_det_3A():
    T = _abxy3A()
    return linalg.determinant(T.algebra.gram(T.basis_list()))


def c_ternary_residual():
    T = _abxy3A()
    A = T.algebra
    lhs = T["u1"] + T["u2"] + T["u3"] + T["u4"]
    nine = A.zero()
    for k in NINE:
        nine = nine + A[k]
    return _residual_text({"relation": lhs - F(32, 45) * nine})


def c_ternary_gram_kernel():
    """Null vector of the Gram matrix of the nine points and ``u^1..u^4``."""
    G = nine_point_gram()
    ker = linalg.nullspace(G)
    want = [F(-32, 45)] * 9 + [F(1)] * 4
    if len(ker) != 1:
        return f"kernel dimension {len(ker)}"
    v = ker[0]
    scale = v[-1]
    return "0" if [x / scale for x in v] == want else "kernel differs"


def c_group_2A_sigma():
    A = _catalog("2A").algebra
    S = close_axes(A, [A["a"], A["b"]], "sigma")
    return permutation_image(S).group.order()


def c_group_6A():
    A = _catalog("6A").algebra
    S = close_axes(A, [A["e0"], A["e1"]], "auto")
    ta, tb, sx = miyamoto_tau(A, A["e0"]), miyamoto_tau(A, A["e1"]), miyamoto_sigma(A, A["x"])
    img = permutation_image(S, [compose(ta, sx), tb.matrix])
    return img.group.order() if img.faithful else "action not faithful"


def c_group_matsuo(n):
    X = _xn(n)
    A = X.algebra
    gens = [A[k] for k in matsuo_axes(X)]
    S = close_axes(A, [A["a"], A["b"]], "sigma", circle=False, acting=gens)
    img = permutation_image(S, [S.maps[S.index(g)] for g in gens])
    return img.group.order() if img.faithful else "action not faithful"


PAIR_TYPES = {32: "2A", 0: "2B", 13: "3A", 5: "6A"}


def _pair_orders(pair_type):
    seen = set()
    for name in ("2A", "2B", "3A", "6A"):
        A = _catalog(name).algebra
        C = _catalog(name)
        S = close_axes(A, C.ising_vectors(), "tau")
        table = product_order_table(S)
        for (i, j), k in table.items():
            ip = 1024 * A.inner(S.axes[i], S.axes[j])
            if PAIR_TYPES.get(ip) == pair_type:
                seen.add(k)
    return sorted(seen)


def c_pair_orders(pair_type):
    """Orders of ``tau_e tau_f`` over all catalog pairs of the given type, as a set."""
    return "{" + ",".join(map(str, _pair_orders(pair_type))) + "}"


def c_pair_orders_at_most(pair_type, bound):
    orders = _pair_orders(pair_type)
    return bool(orders) and max(orders) <= bound


def c_three_transposition(n):
    X = _xn(n)
    sub = matsuo_part(X)
    B = sub.algebra
    S = close_axes(B, [sub.to_sub(X[k]) for k in matsuo_axes(X)], "sigma")
    return three_transposition_verdict(S).holds


def c_lattice_oracle(name):
    try:
        LG = _lattice(name)
    except OracleMismatch as exc:
        return str(exc)
    return len(w_product_failures(LG, stop_after=10 ** 9))


def c_te8_ising():
    LG = _lattice("E8")
    return is_ising(LG.algebra, standard_e8_ising(LG))


def c_e8_count():
    return len({v.vector.coords for v in _e8_enumeration()})


def c_e8_values():
    hist = e8_pair_values(_lattice("E8"), _e8_enumeration())
    return set(hist) <= ALLOWED_SCALED


def c_ising_product_identity():
    res = {}
    for name in ("2A", "3A", "6A"):
        C = _catalog(name)
        A = C.algebra
        for k, e in zip(C.axes, C.ising_vectors()):
            for i in range(A.dim):
                res[f"{name}:{k}*{A.labels[i]}"] = ising_product_residual(A, e, A.basis(i))
    return _residual_text(res)


def c_three_a_sigma():
    return _residual_text(three_a_sigma_identities(_catalog("3A")).residuals)


def c_hexagon(shift):
    return _residual_text(hexagon_identities(_catalog("6A"), shift).residuals)


def c_abxy3A_identities():
    return _residual_text(abxy_3A_identities(_abxy3A()).residuals)


def c_frame_relations(n):
    return _residual_text(frame_relations_check(_xn(n)).residuals)


def c_miyamoto_maps():
    """Every tau (and sigma where defined) on catalog axes is an involutive isometric automorphism.

    Construction validates all three properties, so success is the check.
    """
    count = 0
    for name in ("2A", "2B", "3A", "6A"):
        C = _catalog(name)
        A = C.algebra
        for e in C.ising_vectors():
            miyamoto_tau(A, e)
            count += 1
            try:
                miyamoto_sigma(A, e)
                count += 1
            except Exception:
                pass
    return count


def c_solver_outputs():
    ok = True
    for name in ("3A", "6A"):
        A = _catalog(name).algebra
        vv = conformal_vector(A, [A.basis(i) for i in range(A.dim)])
        eta = vv.element
        ok &= A.mul(eta, eta) == 2 * eta
        ok &= all(A.mul(eta, A.basis(i)) == 2 * A.basis(i) for i in range(A.dim))
    return ok


def c_roundtrip():
    ok = True
    for name in ("1A", "2A", "2B", "3A", "6A"):
        A = _catalog(name).algebra
        ok &= GriessAlgebra.from_json(A.to_json()).same_structure(A)
    A = _xn(3).algebra
    ok &= GriessAlgebra.from_json(A.to_json()).same_structure(A)
    return ok


def c_conjugation():
    bad = 0
    for name in ("2A", "2B", "3A", "6A"):
        C = _catalog(name)
        S = close_axes(C.algebra, C.ising_vectors(), "tau")
        bad += len(conjugation_failures(S))
    return bad


# (id, criterion, anchor, expected, function, args)
CheckDef = Tuple[str, int, str, Any, Callable, tuple]

CATALOG_ROWS = {"1A": (256, 1, 1), "2A": (32, 3, 3), "2B": (0, 2, 2), "3A": (13, 4, 3), "6A": (5, 8, 7)}


def _catalog_checks() -> List[CheckDef]:
    out: List[CheckDef] = []
    for name, (ip, dim, n_ising) in CATALOG_ROWS.items():
        out.append((f"catalog.{name}.inner_product", 1, "dihedral type table", ip, c_catalog, (name, "inner")))
        out.append((f"catalog.{name}.dim", 1, "dihedral type table", dim, c_catalog, (name, "dim")))
        out.append((f"catalog.{name}.ising_count", 1, "dihedral type table", n_ising, c_catalog, (name, "ising")))
    out += [
        ("charge.U3A", 2, "3A conformal vector", F(58, 35), c_catalog_charge, ("3A",)),
        ("charge.U6A", 2, "6A conformal vector", F(51, 20), c_catalog_charge, ("6A",)),
        ("frame.6A", 2, "6A Virasoro frame", "true 4/5 6/7 25/28", c_6A_frame, ()),
        ("pairs.2A", 7, "tau products of 2A pairs have order <= 2", True, c_pair_orders_at_most, ("2A", 2)),
        ("pairs.2B", 7, "tau products of 2B pairs have order <= 2", True, c_pair_orders_at_most, ("2B", 2)),
        ("pairs.3A", 7, "tau products of 3A pairs", "{3}", c_pair_orders, ("3A",)),
        ("pairs.6A", 7, "tau products of 6A pairs", "{3}", c_pair_orders, ("6A",)),
        ("identity.ising_product", 9, "e*v through tau and sigma", "0", c_ising_product_identity, ()),
        ("identity.3A_sigma", 9, "sigma_a on the 3A algebra", "0", c_three_a_sigma, ()),
        ("identity.6A_hexagon", 9, "6A double products and sigma images", "0", c_hexagon, (0,)),
        ("identity.6A_hexagon_shifted", 9, "6A double products and sigma images", "0", c_hexagon, (3,)),
        # tau for all 15 catalog axes; sigma for the 6 of sigma-type (2A: 3, 2B: 2, 6A: x)
        ("property.miyamoto_maps", 10, "Miyamoto involutions", 21, c_miyamoto_maps, ()),
        ("property.conformal_solver", 10, "conformal vector solver", True, c_solver_outputs, ()),
        ("property.serialization", 10, "JSON round trip", True, c_roundtrip, ()),
        ("property.conjugation", 10, "tau_{ge} = g tau_e g^-1", 0, c_conjugation, ()),
    ]
    return out


def _family_checks(n_cap: int) -> List[CheckDef]:
    out: List[CheckDef] = [
        ("charge.abxy_2A", 2, "<a,b,x,y> with <x,y> of type 2A", F(52, 15), c_abxy2A_charge, ()),
        ("charge.abxy_3A", 2, "<a,b,x,y> with <x,y> of type 3A", F(228, 55), c_abxy3A_charge, ()),
    ]
    top = min(8, n_cap)
    for n in range(0, top + 1):
        out.append((f"charge.X{n}", 2, "conformal vector of X^[n]", omega_charge(n), c_xn_charge, (n,)))
    out.append(("charge.f", 3, "commutant vector f, 2A case", F(11, 12), c_f_charge, ()))
    out.append(("charge.xi", 3, "commutant vector xi, 3A case", F(52, 55), c_xi_charge, ()))
    if n_cap >= 8:
        for k in range(1, 9):
            out.append((f"charge.f{k}", 3, "frame vectors of X^[8]", central_charge(k + 4), c_fk_charge, (k,)))
    out += [
        ("det.abxy_2A", 4, "Gram determinant, 2A case",
         F(3 ** 25 * 11 ** 5, 2 ** 81 * 5), c_det_2A, ()),
        ("det.abxy_3A", 4, "Gram determinant, 3A case without u4",
         F(3 ** 52 * 11 * 13 ** 6, 2 ** 138 * 5 ** 3), c_det_3A, ()),
        ("ternary.residual", 5, "u1+u2+u3+u4 = 32/45 sum of nine axes", "0", c_ternary_residual, ()),
        ("ternary.gram_kernel", 5, "u1+u2+u3+u4 = 32/45 sum of nine axes", "0", c_ternary_gram_kernel, ()),
        ("identity.abxy_3A", 9, "(e|u3), tau_e u3, sigma_e(u + tau u), e*u3, e*u4", "0", c_abxy3A_identities, ()),
    ]
    for n in range(1, top + 1):
        out.append((f"identity.frame_relations.X{n}", 9, "products with the Virasoro frame", "0",
                    c_frame_relations, (n,)))
    return out


def _group_checks(n_cap: int) -> List[CheckDef]:
    out: List[CheckDef] = [
        ("group.2A_sigma", 6, "sigma group of U_2A", 6, c_group_2A_sigma, ()),
        ("group.6A", 6, "<tau_a sigma_x, tau_b> on U_6A", 12, c_group_6A, ()),
    ]
    for n in range(1, min(6, n_cap) + 1):
        out.append((f"group.matsuo.X{n}", 6, "sigma group of the Matsuo axes", math.factorial(n + 1),
                    c_group_matsuo, (n,)))
    for n in range(1, min(6, n_cap) + 1):
        out.append((f"three_transposition.X{n}", 7, "3-transposition property", True,
                    c_three_transposition, (n,)))
    return out


def _lattice_checks() -> List[CheckDef]:
    out: List[CheckDef] = []
    for name in [f"A{n}" for n in range(1, 9)] + ["D4", "E8"]:
        out.append((f"lattice.oracle.{name}", 8, "w(alpha) inner products and products", 0,
                    c_lattice_oracle, (name,)))
    out += [
        ("lattice.t_E8_ising", 8, "standard Ising vector of E8", True, c_te8_ising, ()),
        ("lattice.E8_ising_count", 8, "Ising vectors of V_{sqrt2 E8}^+", 496, c_e8_count, ()),
        ("lattice.E8_pair_values", 8, "pairwise inner products", True, c_e8_values, ()),
    ]
    return out


def suite_checks(name: str, config: Optional[WorkbenchConfig] = None) -> List[CheckDef]:
    config = config or WorkbenchConfig()
    if name not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}")
    parts = {
        "catalog": lambda: _catalog_checks(),
        "family": lambda: _family_checks(config.n_cap),
        "groups": lambda: _group_checks(config.n_cap),
        "lattice": _lattice_checks,
    }
    if name == "all":
        return [s for key in ("catalog", "family", "groups", "lattice") for s in parts[key]()]
    return parts[name]()


def _run_check(item: CheckDef) -> Check:
    cid, crit, anchor, expected, fn, args = item
    try:
        value = fn(*args)
        computed = fmt(value)
    except Exception as exc:  # a failing check is a report entry
        computed = f"error: {type(exc).__name__}: {exc}"
    want = fmt(expected)
    return Check(cid, crit, anchor, want, computed, want == computed)


def run_suite(name: str, config: Optional[WorkbenchConfig] = None) -> VerificationReport:
    config = config or WorkbenchConfig()
    defs = suite_checks(name, config)
    t0 = time.perf_counter()
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            # contiguous chunks keep checks that share a cached builder in one worker
            chunk = -(-len(defs) // config.jobs)
            checks = list(pool.map(_run_check, defs, chunksize=chunk))
    else:
        checks = [_run_check(s) for s in defs]
    return VerificationReport(name, checks, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# import / export


def build_from_name(name: str, config: Optional[WorkbenchConfig] = None) -> GriessAlgebra:
    """``"6A"``, ``"xn:3"``, ``"abxy:2A"``, ``"abxy:3A"`` or ``"lattice:A3"``."""
    config = config or WorkbenchConfig()
    kind, _, arg = name.partition(":")
    if not arg:
        return make(kind).algebra
    if kind == "xn":
        return build_xn(int(arg), cap=config.n_cap).algebra
    if kind == "abxy":
        from .family import dispatch_abxy

        return dispatch_abxy(arg).algebra
    if kind == "lattice":
        return build_lattice_griess(root_system(arg)).algebra
    raise ValueError(f"unknown builder name {name!r}")


def export_algebra(A_or_name, path=None, config: Optional[WorkbenchConfig] = None) -> str:
    config = config or WorkbenchConfig()
    A = build_from_name(A_or_name, config) if isinstance(A_or_name, str) else A_or_name
    if config.d != 1:
        A = lift_field(A, config.d)
    text = json.dumps(A.to_dict(), sort_keys=True) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def import_algebra(path_or_text) -> GriessAlgebra:
    """Load and re-validate; raises ``SchemaViolation`` or ``InvariantViolation``."""
    if isinstance(path_or_text, Path) or (isinstance(path_or_text, str) and not path_or_text.lstrip()[:1] in ("{", "[")):
        text = Path(path_or_text).read_text()
    else:
        text = path_or_text
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"not JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SchemaViolation("top level must be an object")
    return GriessAlgebra.from_dict(data)


__all__ = [
    "Check", "InvariantViolation", "SchemaViolation", "VerificationReport", "WorkbenchConfig",
    "build_from_name", "export_algebra", "import_algebra", "run_suite", "suite_checks",
]
