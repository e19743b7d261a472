"""Symmetric functions and central characters of Harish-Chandra bimodules.

Stable multiplicities of irreducibles in mixed tensor products are sums of
Littlewood-Richardson coefficients; they stabilize as the partitions grow,
and the central characters that can carry a bimodule are characterized by
moment sequences built from P_k(x) = (x+1)^k - x^k.
"""

from interpcat import (
    ShiftData,
    char_difference_forward,
    gl_mixed_multiplicity,
    lr_coefficient,
    osp_multiplicity,
    pk,
    search_decomposition,
    skew_schur_pairing,
    stable_hc_multiplicity,
    triple_decode,
    triple_encode,
    weight_moment_difference,
)
from interpcat.symfun import shift_instance

# --- Littlewood-Richardson calculus -----------------------------------------

print("c^(3)_(2),(1)      =", lr_coefficient((3,), (2,), (1,)))
print("c^(3,2,1)_(2,1),(2,1) =", lr_coefficient((3, 2, 1), (2, 1), (2, 1)), " (first multiplicity 2)")
print("(s_(2,1)/(1), s_(2,1)/(1)) =", skew_schur_pairing((2, 1), (1,), (2, 1), (1,)))

# Stable tensor multiplicities: V (x) V* for GL contains the adjoint and the
# trivial; V (x) V for O/Sp contains the symmetric square, the exterior
# square, and the trace form.
print("\n[V (x) V* : adjoint] =", gl_mixed_multiplicity((1,), (1,), (1,), (1,)))
for nu in [(), (1,), (2,), (1, 1)]:
    print(f"[V (x) V : V_{nu}] over O =", osp_multiplicity((1,), (1,), nu))

# --- the triple encoding and stabilization -----------------------------------

tp = triple_encode((5, 4, 2, 1), 1, 1)
print("\n(5,4,2,1) cut at k = l = 1:", tp.alpha, tp.beta, tp.gamma)
print("decodes back to:", triple_decode(tp))

# Fix shift data; the multiplicity of a fixed irreducible in
# Hom(V_mu(n), V_lambda(n)) is constant once the arms spread out.
shift = ShiftData(a=(0,), b=(0,), gamma=(1,), delta=(1,))
nu, nubar = (1,), (1,)
stable = stable_hc_multiplicity(shift, (nu, nubar), "gl")
print("\nstable multiplicity:", stable)
for n in (8, 11, 14):
    lam, mu = shift_instance(shift, n)
    print(f"  direct value at n = {n}: lambda = {lam}, mu = {mu} ->",
          gl_mixed_multiplicity(lam, mu, nu, nubar))

# --- central character moments ------------------------------------------------

# Moving a weight coordinate up by one shifts every moment by P_k of it.
print("\nP_k(3) for k = 1..4:", [str(pk(3, k)) for k in range(1, 5)])
w = weight_moment_difference((3, 1, 0), moved_up={1}, moved_down=set(), K=4)
print("moments of (3,1,0) -> (4,1,0):", [str(w.values[k]) for k in range(1, 5)])

# A central-character difference is admissible iff its moments decompose as
# sum of P_k(b_i) + Pbar_k(c_j); the bounded search inverts the forward map.
moments = char_difference_forward(b=(2, -1), c=(4,), flavor="gl", K=8)
print("\nforward moments of b = (2,-1), c = (4):",
      {k: str(v) for k, v in sorted(moments.values.items())})
print("search recovers:", search_decomposition(moments, r=2, s=1, bound=5))

# A pair with b_i = c_j - 1 contributes nothing to any moment, so such data
# is only recoverable up to inserting or moving cancelling pairs.
cancelling = char_difference_forward(b=(2, -1), c=(3,), flavor="gl", K=8)
print("with the cancelling pair 2 | 3 the moments collapse to those of (-1):",
      cancelling.values == char_difference_forward((-1,), (), "gl", 8).values)
