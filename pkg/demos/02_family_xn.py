"""The family X^[n]: a 3A pair a, b together with n further axes x^1..x^n.

Shows that the conformal vector found by the Gram solver agrees with the
closed form, that its charge follows (n+2)(5n+29)/(5(n+7)), and that the
differences f^k of nested conformal vectors have the unitary charges c_{k+4}.
"""

from griesskit import build_xn, conformal_vector
from griesskit.family import omega_charge, omega_n
from griesskit.virasoro import central_charge

for n in range(5):
    X = build_xn(n)
    A = X.algebra
    vv = conformal_vector(A, [A.basis(i) for i in range(A.dim)])
    agree = vv.element == omega_n(X, n).element
    print(f"X^[{n}]: dim {A.dim:3d}, c = {vv.central_charge} (formula {omega_charge(n)}), closed form agrees: {agree}")

X = build_xn(5)
A = X.algebra
for k in range(1, 6):
    f = X.f(k)
    print(f"f^{k}: c = {2 * A.inner(f, f)}  (c_{k + 4} = {central_charge(k + 4)})")
