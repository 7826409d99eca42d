"""Griess algebras of root lattices scaled by sqrt 2.

Splits the conformal vector as s + t along the w^- closure, builds the chain
of unitary Virasoro vectors for A_n, and enumerates the 496 Ising vectors of
the E8 model.
"""

import time

from griesskit import build_lattice_griess, root_system
from griesskit.lattice import e8_ising_enumeration, e8_pair_values, eta_frame, s_t_decomposition

for name in ("A1", "A3", "A5", "D4", "E6"):
    LG = build_lattice_griess(root_system(name))
    st = s_t_decomposition(LG)
    print(f"{name}: dim {LG.algebra.dim}, c(s) = {st.c_s}, c(t) = {st.c_t}")

LG = build_lattice_griess(root_system("A5"))
A = LG.algebra
print("A5 frame charges:", [str(2 * A.inner(e, e)) for e in eta_frame(LG)])

t0 = time.perf_counter()
LG = build_lattice_griess(root_system("E8"))
vecs = e8_ising_enumeration(LG)
print(f"E8: {len(vecs)} Ising vectors, 2^10 (e|f) histogram {e8_pair_values(LG, vecs)}"
      f" ({time.perf_counter() - t0:.1f}s)")
