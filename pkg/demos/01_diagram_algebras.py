"""Diagram algebras over Q(t): the composition law, traces, and duality.

Hom spaces between tensor powers of the generating object are spanned by
combinatorial diagrams; stacking two diagrams produces the composed diagram
times t raised to the number of components swallowed by the middle row.
"""

from interpcat import (
    compose,
    compose_diagrams,
    coev,
    diagram_morphism,
    dimension,
    e_to_delta,
    delta_to_e,
    enumerate_basis,
    ev,
    identity,
    partition_diagram,
    sig_gl,
    sig_o,
    sig_s,
    sp_dimension,
    swap,
    tensor,
    trace,
    walled_diagram,
)

# --- the composition law -----------------------------------------------------

# A partition diagram from [3] to [6]: blocks over the endpoints 1..3 on the
# source row and 1'..6' (written -1..-6) on the target row.
P = partition_diagram(3, 6, [(1, 3, -2), (2, -4, -5), (-1,), (-3, -6)])
Q = partition_diagram(6, 2, [(1, 3), (2, -2), (4, -1), (5,), (6,)])

composite, power = compose_diagrams(Q, P)  # P acts first
print("P  =", P)
print("Q  =", Q)
print("QP =", composite, "  with scalar t^%d" % power)

# The same composition at the morphism level carries the t factor explicitly.
print("e_Q o e_P =", compose(diagram_morphism(Q), diagram_morphism(P)))

# The single-strand "averaging" diagram squares to t times itself.
pi = partition_diagram(1, 1, [(1,), (-1,)])
print("\npi^2 =", compose(diagram_morphism(pi), diagram_morphism(pi)))

# --- bases and dimensions ----------------------------------------------------

print("\n|Hom([2], [2])| over S flavor :", len(enumerate_basis("S", 2, 2)), "(= Bell(4))")
print("|End([2])| over O flavor      :", len(enumerate_basis("O", 2, 2)), "(= 3!!)")
print("|End([1,1])| over GL flavor   :", len(enumerate_basis("GL", (1, 1), (1, 1))))

for sig in (sig_s(3), sig_gl(2, 1), sig_o(2)):
    print(f"dim {sig} =", dimension(sig))
print("dim [1] read in Rep(Sp_t)     =", sp_dimension(1), " (t -> -t alias)")

# --- rigidity ----------------------------------------------------------------

# The zig-zag (id (x) ev) o (coev (x) id) straightens to the identity.
sig = sig_s(2)
zig = compose(tensor(identity(sig), ev(sig)), tensor(coev(sig), identity(sig)))
print("\nzig-zag on S[2] is the identity:", zig == identity(sig))

# Closing a loop produces the scalar t.
s10 = sig_gl(1, 0)
loop = compose(ev(s10), compose(swap(s10, s10.dual()), coev(s10)))
print("GL loop ev o swap o coev =", loop)

# Traces count closure components.
print("trace(pi) =", trace(diagram_morphism(pi)))
cup_cap = walled_diagram((1, 1), (1, 1), [(1, 2), (-1, -2)])
print("trace(cup-cap on [1,1]) =", trace(diagram_morphism(cup_cap)))

# --- two bases of the same Hom space ----------------------------------------

# e_P is the relaxed equality pattern, delta_P the strict one; they are
# related by the zeta / Moebius matrix of the refinement order.
f = diagram_morphism(pi)
print("\ne_pi in the delta basis :", e_to_delta(f))
print("delta_pi in the e basis :", delta_to_e(f))
print("roundtrip is exact      :", delta_to_e(e_to_delta(f)) == f)
