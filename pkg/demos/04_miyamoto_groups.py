"""Miyamoto involutions and the groups they generate.

The sigma maps of the Matsuo axes in X^[n] generate the symmetric group on
n + 1 letters, and the axes form a class of 3-transpositions.
"""

from math import factorial

from griesskit import build_xn, close_axes, make_dihedral, miyamoto_sigma, miyamoto_tau, permutation_image
from griesskit.algebra import compose
from griesskit.family import matsuo_axes, matsuo_part
from griesskit.groups import group_report

A = make_dihedral("6A").algebra
S = close_axes(A, [A["e0"], A["e1"]])
print("6A axes:", S.names, S.flavors)
ta, tb, sx = miyamoto_tau(A, A["e0"]), miyamoto_tau(A, A["e1"]), miyamoto_sigma(A, A["x"])
print("order of <tau_a sigma_x, tau_b>:", permutation_image(S, [compose(ta, sx), tb.matrix]).group.order())

for n in range(1, 5):
    X = build_xn(n)
    B = X.algebra
    gens = [B[k] for k in matsuo_axes(X)]
    S = close_axes(B, [B["a"], B["b"]], "sigma", circle=False, acting=gens)
    img = permutation_image(S, [S.maps[S.index(g)] for g in gens])
    sub = matsuo_part(X)
    T = close_axes(sub.algebra, [sub.to_sub(X[k]) for k in matsuo_axes(X)], "sigma")
    rep = group_report(T)
    print(f"n={n}: sigma group order {img.group.order()} ((n+1)! = {factorial(n + 1)}), "
          f"3-transpositions: {rep['three_transposition']}, pair orders {rep['pair_order_histogram_on_this_algebra']}")
