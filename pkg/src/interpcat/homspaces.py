"""Hom spaces: sparse Q(t)-linear combinations of diagrams.

A Morphism is a finitely supported map {diagram -> RatFunc} together with
source and target signatures.  Composition extends the diagram laws
bilinearly, multiplying each term by t raised to the middle-component (S) or
loop (GL, O) count.  The S flavor carries two bases: the relaxed-pattern
basis e_P the composition law lives in, and the strict-orbit basis delta_P
related to it by the refinement-order zeta/Moebius matrix.

Sp_t is exposed as an alias at the trace level: sp_trace / sp_dimension
return the O-flavor value with t replaced by -t, through the equivalence
Rep(O_t) ~ Rep(Sp_{-t}); the sign-twisted braiding itself is not modeled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from interpcat.diagrams import (
    BrauerDiagram,
    Diagram,
    PartitionDiagram,
    _set_partitions_of,
    brauer_diagram,
    closure_components,
    compose_diagrams,
    enumerate_basis,
    identity_brauer,
    identity_partition,
    identity_walled,
    partition_diagram,
    tensor_diagram,
    walled_diagram,
)
from interpcat.ratfunc import RF_ONE, RatFunc, t_power

FLAVORS = ("S", "GL", "O")


@dataclass(frozen=True)
class ObjectSignature:
    """[m] for S and O flavors; [r, s] for GL."""

    flavor: str
    data: tuple[int, ...]

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        expected = 2 if self.flavor == "GL" else 1
        if len(self.data) != expected or any(x < 0 for x in self.data):
            raise ValueError(f"bad signature data {self.data} for flavor {self.flavor}")

    @property
    def size(self) -> int:
        return sum(self.data)

    def tensor(self, other: "ObjectSignature") -> "ObjectSignature":
        if other.flavor != self.flavor:
            raise ValueError("cannot tensor signatures of different flavors")
        return ObjectSignature(
            self.flavor, tuple(a + b for a, b in zip(self.data, other.data))
        )

    def dual(self) -> "ObjectSignature":
        if self.flavor == "GL":
            r, s = self.data
            return ObjectSignature("GL", (s, r))
        return self

    def __str__(self) -> str:
        return f"{self.flavor}{list(self.data)}"


def sig_s(m: int) -> ObjectSignature:
    return ObjectSignature("S", (m,))


def sig_gl(r: int, s: int) -> ObjectSignature:
    return ObjectSignature("GL", (r, s))


def sig_o(m: int) -> ObjectSignature:
    return ObjectSignature("O", (m,))


def diagram_source(d: Diagram) -> ObjectSignature:
    if isinstance(d, PartitionDiagram):
        return sig_s(d.top)
    if isinstance(d, BrauerDiagram):
        return sig_o(d.top)
    return sig_gl(*d.source)


def diagram_target(d: Diagram) -> ObjectSignature:
    if isinstance(d, PartitionDiagram):
        return sig_s(d.bottom)
    if isinstance(d, BrauerDiagram):
        return sig_o(d.bottom)
    return sig_gl(*d.target)


def hom_basis(source: ObjectSignature, target: ObjectSignature) -> list[Diagram]:
    """Diagram basis of Hom(source, target); [] when the space is zero."""
    if source.flavor != target.flavor:
        raise ValueError("Hom between different flavors")
    if source.flavor == "GL":
        return enumerate_basis("GL", source.data, target.data)
    return enumerate_basis(source.flavor, source.data[0], target.data[0])


class Morphism:
    """Finitely supported RatFunc-linear combination of diagrams."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: ObjectSignature, target: ObjectSignature, terms=None):
        self.source = source
        self.target = target
        clean: dict[Diagram, RatFunc] = {}
        for d, c in (terms or {}).items():
            c = c if isinstance(c, RatFunc) else RatFunc(c)
            if c.is_zero():
                continue
            if diagram_source(d) != source or diagram_target(d) != target:
                raise ValueError(f"diagram {d} does not fit {source} -> {target}")
            clean[d] = c
        self.terms = clean

    # -- vector space structure ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Morphism)
            and self.source == other.source
            and self.target == other.target
            and self.terms == other.terms
        )

    def __add__(self, other: "Morphism") -> "Morphism":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("cannot add morphisms with different signatures")
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, RatFunc(0)) + c
        return Morphism(self.source, self.target, terms)

    def __neg__(self) -> "Morphism":
        return Morphism(self.source, self.target, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def scale(self, c) -> "Morphism":
        c = c if isinstance(c, RatFunc) else RatFunc(c)
        return Morphism(self.source, self.target, {d: c * v for d, v in self.terms.items()})

    def __mul__(self, c) -> "Morphism":
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Morphism":
        return self.scale(RF_ONE / (c if isinstance(c, RatFunc) else RatFunc(c)))

    def map_coeffs(self, fn) -> "Morphism":
        return Morphism(self.source, self.target, {d: fn(c) for d, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return f"0: {self.source} -> {self.target}"
        parts = [f"{c} * {d}" for d, c in sorted(self.terms.items(), key=lambda kv: str(kv[0]))]
        return " + ".join(parts)

    __repr__ = __str__


def zero_morphism(source: ObjectSignature, target: ObjectSignature) -> Morphism:
    return Morphism(source, target, {})


def diagram_morphism(d: Diagram, coeff=1) -> Morphism:
    return Morphism(diagram_source(d), diagram_target(d), {d: RatFunc(coeff)})


def identity(sig: ObjectSignature) -> Morphism:
    if sig.flavor == "S":
        d: Diagram = identity_partition(sig.data[0])
    elif sig.flavor == "O":
        d = identity_brauer(sig.data[0])
    else:
        d = identity_walled(*sig.data)
    return diagram_morphism(d)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """f after g (the second argument acts first)."""
    if g.target != f.source:
        raise ValueError(f"cannot compose: g targets {g.target}, f expects {f.source}")
    out: dict[Diagram, RatFunc] = {}
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            d, power = compose_diagrams(df, dg)
            c = cf * cg * t_power(power)
            prev = out.get(d)
            out[d] = c if prev is None else prev + c
    return Morphism(g.source, f.target, out)


def tensor(f: Morphism, g: Morphism) -> Morphism:
    if f.source.flavor != g.source.flavor:
        raise ValueError("cannot tensor morphisms of different flavors")
    out: dict[Diagram, RatFunc] = {}
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            d = tensor_diagram(df, dg)
            c = cf * cg
            prev = out.get(d)
            out[d] = c if prev is None else prev + c
    return Morphism(f.source.tensor(g.source), f.target.tensor(g.target), out)


def trace(f: Morphism) -> RatFunc:
    """Graphical trace: sum of coeff * t^(closure components) over terms."""
    if f.source != f.target:
        raise ValueError("trace needs an endomorphism")
    total = RatFunc(0)
    for d, c in f.terms.items():
        total = total + c * t_power(closure_components(d))
    return total


def dimension(sig: ObjectSignature) -> RatFunc:
    """Categorical dimension: t^m for [m], t^(r+s) for [r, s]."""
    return trace(identity(sig))


def sp_trace(f: Morphism) -> RatFunc:
    """Trace of an O-flavor endomorphism read in Rep(Sp_t): t -> -t."""
    if f.source.flavor != "O":
        raise ValueError("sp_trace applies to O-flavor morphisms")
    return trace(f).at_minus_t()


def sp_dimension(m: int) -> RatFunc:
    return dimension(sig_o(m)).at_minus_t()


# ---------------------------------------------------------------------------
# basis change between e_P and delta_P (S flavor)


def _groupings_with_moebius(p: PartitionDiagram):
    """Yield (coarsening, moebius) pairs over all merges of p's blocks.

    moebius is the Moebius function of the interval [p, coarsening] in the
    refinement order: product over merged groups g of (-1)^(|g|-1) (|g|-1)!.
    """
    for grouping in _set_partitions_of(list(range(len(p.blocks)))):
        merged = []
        mu = 1
        for group in grouping:
            cells: list[int] = []
            for i in group:
                cells.extend(p.blocks[i])
            merged.append(tuple(cells))
            k = len(group)
            mu *= (-1) ** (k - 1) * math.factorial(k - 1)
        yield partition_diagram(p.top, p.bottom, merged), mu


def e_to_delta(f: Morphism) -> Morphism:
    """Rewrite e-basis coefficients in the delta basis: e_P = sum_{P' >= P} delta_P'."""
    if f.source.flavor != "S":
        raise ValueError("basis change only applies to the S flavor")
    out: dict[Diagram, RatFunc] = {}
    for d, c in f.terms.items():
        for coarser, _ in _groupings_with_moebius(d):
            prev = out.get(coarser)
            out[coarser] = c if prev is None else prev + c
    return Morphism(f.source, f.target, out)


def delta_to_e(f: Morphism) -> Morphism:
    """Moebius inversion of e_to_delta: delta_P = sum_{P' >= P} mu(P, P') e_P'."""
    if f.source.flavor != "S":
        raise ValueError("basis change only applies to the S flavor")
    out: dict[Diagram, RatFunc] = {}
    for d, c in f.terms.items():
        for coarser, mu in _groupings_with_moebius(d):
            contrib = c * mu
            prev = out.get(coarser)
            out[coarser] = contrib if prev is None else prev + contrib
    return Morphism(f.source, f.target, out)


# ---------------------------------------------------------------------------
# rigidity: evaluation, coevaluation, braiding


def ev(sig: ObjectSignature) -> Morphism:
    """Evaluation X* (x) X -> 1: parallel arcs for S and O, nested for GL."""
    if sig.flavor in ("S", "O"):
        m = sig.data[0]
        blocks = [(i, m + i) for i in range(1, m + 1)]
        if sig.flavor == "S":
            d: Diagram = partition_diagram(2 * m, 0, blocks)
        else:
            d = brauer_diagram(2 * m, 0, blocks)
        return diagram_morphism(d)
    r, s = sig.data
    # source is [s, r] (x) [r, s] = [s + r, r + s]; whites start at s + r
    r1 = s + r
    pairs = []
    for k in range(1, r + 1):  # X's black k with X*'s white r + 1 - k
        pairs.append((s + k, r1 + (r + 1 - k)))
    for j in range(1, s + 1):  # X*'s black s + 1 - j with X's white j
        pairs.append((s + 1 - j, r1 + r + j))
    return diagram_morphism(walled_diagram((r1, r + s), (0, 0), pairs))


def coev(sig: ObjectSignature) -> Morphism:
    """Coevaluation 1 -> X (x) X*."""
    if sig.flavor in ("S", "O"):
        m = sig.data[0]
        blocks = [(-i, -(m + i)) for i in range(1, m + 1)]
        if sig.flavor == "S":
            d: Diagram = partition_diagram(0, 2 * m, blocks)
        else:
            d = brauer_diagram(0, 2 * m, blocks)
        return diagram_morphism(d)
    r, s = sig.data
    # target is [r, s] (x) [s, r] = [r + s, s + r]; whites start at r + s
    r2 = r + s
    pairs = []
    for k in range(1, r + 1):  # X black k with X* white r + 1 - k
        pairs.append((-k, -(r2 + s + (r + 1 - k))))
    for j in range(1, s + 1):  # X* black s + 1 - j with X white j
        pairs.append((-(r + (s + 1 - j)), -(r2 + j)))
    return diagram_morphism(walled_diagram((0, 0), (r2, s + r), pairs))


def swap(sig_a: ObjectSignature, sig_b: ObjectSignature) -> Morphism:
    """The braiding diagram c_{A,B}: A (x) B -> B (x) A."""
    if sig_a.flavor != sig_b.flavor:
        raise ValueError("cannot swap signatures of different flavors")
    if sig_a.flavor in ("S", "O"):
        a, b = sig_a.data[0], sig_b.data[0]
        blocks = [(i, -(b + i)) for i in range(1, a + 1)] + [
            (a + j, -j) for j in range(1, b + 1)
        ]
        if sig_a.flavor == "S":
            d: Diagram = partition_diagram(a + b, b + a, blocks)
        else:
            d = brauer_diagram(a + b, b + a, blocks)
        return diagram_morphism(d)
    ra, sa = sig_a.data
    rb, sb = sig_b.data
    pairs = []
    for i in range(1, ra + 1):  # A black i -> past B's blacks
        pairs.append((i, -(rb + i)))
    for i in range(1, rb + 1):  # B black i -> front
        pairs.append((ra + i, -i))
    for j in range(1, sa + 1):  # A white j -> past B's whites
        pairs.append((ra + rb + j, -(rb + ra + sb + j)))
    for j in range(1, sb + 1):  # B white j -> front of whites
        pairs.append((ra + rb + sa + j, -(rb + ra + j)))
    return diagram_morphism(
        walled_diagram((ra + rb, sa + sb), (rb + ra, sb + sa), pairs)
    )


# ---------------------------------------------------------------------------
# JSON wire format


def signature_to_json(sig: ObjectSignature) -> dict:
    if sig.flavor == "GL":
        return {"flavor": "GL", "r": sig.data[0], "s": sig.data[1]}
    return {"flavor": sig.flavor, "m": sig.data[0]}


def signature_from_json(obj: dict) -> ObjectSignature:
    if "flavor" not in obj:
        raise ValueError("signature JSON missing field 'flavor'")
    flavor = obj["flavor"]
    if flavor == "GL":
        for field in ("r", "s"):
            if field not in obj:
                raise ValueError(f"signature JSON missing field '{field}'")
        return sig_gl(obj["r"], obj["s"])
    if flavor in ("S", "O"):
        if "m" not in obj:
            raise ValueError("signature JSON missing field 'm'")
        return ObjectSignature(flavor, (obj["m"],))
    raise ValueError(f"unknown flavor {flavor!r}")


def morphism_to_json(f: Morphism, basis: str = "e") -> dict:
    from interpcat.diagrams import diagram_to_json
    from interpcat.ratfunc import format_ratfunc

    terms = [
        {"diagram": diagram_to_json(d), "coeff": format_ratfunc(c)}
        for d, c in sorted(f.terms.items(), key=lambda kv: str(kv[0]))
    ]
    out = {
        "source": signature_to_json(f.source),
        "target": signature_to_json(f.target),
        "terms": terms,
    }
    if f.source.flavor == "S":
        out["basis"] = basis
    return out


def morphism_from_json(obj: dict) -> Morphism:
    from interpcat.diagrams import diagram_from_json
    from interpcat.ratfunc import parse_ratfunc

    for field in ("source", "target", "terms"):
        if field not in obj:
            raise ValueError(f"morphism JSON missing field '{field}'")
    source = signature_from_json(obj["source"])
    target = signature_from_json(obj["target"])
    terms: dict[Diagram, RatFunc] = {}
    for i, term in enumerate(obj["terms"]):
        for field in ("diagram", "coeff"):
            if field not in term:
                raise ValueError(f"morphism JSON missing field 'terms[{i}].{field}'")
        d = diagram_from_json(term["diagram"])
        c = parse_ratfunc(term["coeff"])
        terms[d] = terms.get(d, RatFunc(0)) + c
    return Morphism(source, target, terms)
