"""Walk through the five dihedral algebras that have full structure constants.

For each type: the inner product of the generating pair, the dimension of the
algebra they generate, how many Ising vectors it holds, and the central charge
of its conformal vector.
"""

from griesskit import conformal_vector, make_dihedral
from griesskit.algebra import close_subalgebra, classify_pair
from griesskit.dihedral import frame_6A
from griesskit.groups import close_axes

for name in ("1A", "2A", "2B", "3A", "6A"):
    C = make_dihedral(name)
    A = C.algebra
    axes = C.ising_vectors()
    a, b = (A["e0"], A["e1"]) if name == "6A" else (axes[0], axes[-1] if name == "1A" else axes[1])
    dim = close_subalgebra(A, [a, b]).dim
    n_ising = len(close_axes(A, [a, b]).axes)
    c = conformal_vector(A, [A.basis(i) for i in range(A.dim)]).central_charge
    print(f"{name}: 2^10(a|b) = {1024 * A.inner(a, b)}, dim {dim}, {n_ising} Ising vectors, c = {c}")

# the 6A algebra splits into three commuting Virasoro vectors
C = make_dihedral("6A")
A = C.algebra
u, v, f = frame_6A(C)
print("6A frame charges:", [str(2 * A.inner(t, t)) for t in (u, v, f)])

# every pair of axes in 6A is 2A, 3A or 6A
pairs = {}
for i in range(6):
    t = classify_pair(A, A["e0"], A[f"e{i}"]).name
    pairs.setdefault(t, []).append(f"e{i}")
print("pairs with e0:", pairs)
