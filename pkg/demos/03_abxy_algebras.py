"""Algebras generated by a 3A pair a, b and a pair x, y 2A-paired with them.

For <x, y> of type 2A the algebra has dimension 13; for type 3A it has
dimension 18, and four Virasoro vectors u^1..u^4 satisfy a linear relation
with the nine circle products g o h.
"""

from griesskit import build_abxy_2A, build_abxy_3A, conformal_vector, linalg
from griesskit.family import NINE, ForbiddenType, dispatch_abxy, nine_point_gram
from fractions import Fraction as F

T = build_abxy_2A()
A = T.algebra
print("2A case: c =", conformal_vector(A, T.basis_list()).central_charge,
      " det Gram =", linalg.determinant(A.gram(T.basis_list())))
f = T.f()
print("  commutant vector f has c =", 2 * A.inner(f, f))

T = build_abxy_3A()
A = T.algebra
print("3A case: dim", A.dim, " c =", conformal_vector(A, T.spanning_set()).central_charge)
xi = T.xi()
print("  commutant vector xi has c =", 2 * A.inner(xi, xi))
nine = sum((A[k] for k in NINE), A.zero())
residual = T["u1"] + T["u2"] + T["u3"] + T["u4"] - F(32, 45) * nine
print("  u1+u2+u3+u4 - 32/45 * (nine circles) is zero:", residual.is_zero())
print("  Gram kernel of nine points and u^k:", " ".join(map(str, linalg.nullspace(nine_point_gram())[0])))

for t in ("4A", "5A", "6A"):
    try:
        dispatch_abxy(t)
    except ForbiddenType as exc:
        print(" ", exc)
