"""Indecomposable objects: idempotents, promotion, and generic dimensions.

Objects of the Karoubian envelope are pairs (signature, idempotent).  The
simples are indexed by partitions (bipartitions for GL); their generic
dimensions are polynomials in t that interpolate the classical dimension
formulas.
"""

from interpcat import (
    KaroubiObject,
    decompose,
    diagram_morphism,
    dim_simple,
    identity,
    is_idempotent,
    multiplicity,
    partition_diagram,
    promote,
    RF_T,
    sig_gl,
    sig_s,
    special_p,
    trace,
    young_symmetrizer,
)

t = RF_T

# --- idempotents ---------------------------------------------------------

pi = partition_diagram(1, 1, [(1,), (-1,)])
f = diagram_morphism(pi) / t
print("pi / t is idempotent:", is_idempotent(f))
print("1 - pi/t cuts out the standard representation; trace:",
      trace(identity(sig_s(1)) - f))

# Young symmetrizers embed the classical primitive idempotents of the group
# algebra into the partition algebra.
y = young_symmetrizer((2, 1))
print("\ny_(2,1) idempotent:", is_idempotent(y), " trace:", trace(y))

# The compression idempotent p identifies the next-smaller partition algebra.
p = special_p(3)
print("special p(3):", p)

# --- promotion -------------------------------------------------------------

# Idempotents move up one object size while keeping the image isomorphic;
# iterating from End([0]) realizes the unit object inside every [n].
e = identity(sig_s(0))
for _ in range(3):
    e = promote(e)
    print("promoted to", e.source, " trace:", trace(e))

print("GL promotion of id_[0,0]:", promote(identity(sig_gl(0, 0))))

# --- decomposition and dimensions ------------------------------------------

sym_square = KaroubiObject(sig_s(2), young_symmetrizer((2,)))
print("\nS^2 V decomposes as:", decompose(sym_square))
print("multiplicity of L((1)):", multiplicity(sym_square, (1,)))

# The accounting identity: multiplicities weighted by generic dimensions
# recover the trace of the idempotent exactly.
total = sum(
    (m * dim_simple(lam) for lam, m in decompose(sym_square).items()),
    start=dim_simple(()) - dim_simple(()),
)
print("sum of mult * dim =", total, "=", trace(sym_square.idem), "= trace")

for lam in [(1,), (2,), (1, 1), (2, 1)]:
    print(f"dim L{lam} =", dim_simple(lam))
print("dim L((1),(1)) over GL =", dim_simple(((1,), (1,)), "GL"))
print("dim L((2)) over O      =", dim_simple((2,), "O"))

# Evaluating at an integer inside the classical window gives hook-length
# dimensions: t(t-3)/2 at t = 6 is the dimension 9 of the (4,2) irrep.
print("\ndim L((2)) at t = 6:", dim_simple((2,)).eval(6))
