"""Diagram kernels for the three flavors of interpolation category.

Endpoint encoding, shared by every flavor: a diagram from [l] to [m] has
source endpoints +1..+l (the unprimed row in the usual pictures) and target
endpoints -1..-m (the primed row).  All diagrams are immutable and canonical,
so they can serve as dict keys for sparse morphisms.

Flavors:

  PartitionDiagram  -- set partition of the l+m endpoints (S flavor)
  BrauerDiagram     -- perfect matching of the l+m endpoints (O flavor)
  WalledDiagram     -- perfect matching with black/white colors (GL flavor);
                       cross-row edges join equal colors, same-row edges join
                       opposite colors

Composition convention: compose_*(p, q) is "p after q" -- q maps [k] -> [l],
p maps [l] -> [m], and the second return value is the exponent of t produced
by middle-only components (S) or closed loops (GL, O).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def _endpoint_key(x: int) -> tuple[int, int]:
    # sources sort before targets; each row ascending
    return (0, x) if x > 0 else (1, -x)


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    bs = [tuple(sorted(b, key=_endpoint_key)) for b in blocks]
    bs.sort(key=lambda b: _endpoint_key(b[0]))
    return tuple(bs)


def _check_cover(blocks: Sequence[Sequence[int]], top: int, bottom: int, kind: str):
    expected = set(range(1, top + 1)) | {-j for j in range(1, bottom + 1)}
    seen: set[int] = set()
    for b in blocks:
        if not b:
            raise ValueError(f"{kind} has an empty block")
        for x in b:
            if x in seen:
                raise ValueError(f"{kind}: endpoint {x} appears in two blocks")
            seen.add(x)
    if seen != expected:
        missing = expected - seen
        extra = seen - expected
        raise ValueError(f"{kind}: endpoints mismatch (missing {missing}, extra {extra})")


def _pretty(block: Iterable[int]) -> str:
    return "{" + ", ".join(str(x) if x > 0 else f"{-x}'" for x in block) + "}"


@dataclass(frozen=True)
class PartitionDiagram:
    """Set partition of the endpoints of a map [top] -> [bottom]."""

    top: int
    bottom: int
    blocks: tuple[tuple[int, ...], ...]

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def __str__(self) -> str:
        return f"P[{self.top}->{self.bottom}: {', '.join(map(_pretty, self.blocks))}]"


def partition_diagram(top: int, bottom: int, blocks: Iterable[Iterable[int]]) -> PartitionDiagram:
    """Canonicalize and validate a partition diagram."""
    bs = _canonical_blocks(blocks)
    _check_cover(bs, top, bottom, "partition diagram")
    return PartitionDiagram(top, bottom, bs)


def identity_partition(m: int) -> PartitionDiagram:
    return PartitionDiagram(m, m, _canonical_blocks([(i, -i) for i in range(1, m + 1)]))


@dataclass(frozen=True)
class BrauerDiagram:
    """Perfect matching of the endpoints of a map [top] -> [bottom]."""

    top: int
    bottom: int
    pairs: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        return f"B[{self.top}->{self.bottom}: {', '.join(map(_pretty, self.pairs))}]"


def brauer_diagram(top: int, bottom: int, pairs: Iterable[Iterable[int]]) -> BrauerDiagram:
    if (top + bottom) % 2:
        raise ValueError("Brauer diagram needs an even number of endpoints")
    ps = _canonical_blocks(pairs)
    for p in ps:
        if len(p) != 2:
            raise ValueError("Brauer diagram blocks must be pairs")
    _check_cover(ps, top, bottom, "Brauer diagram")
    return BrauerDiagram(top, bottom, ps)


def identity_brauer(m: int) -> BrauerDiagram:
    return BrauerDiagram(m, m, _canonical_blocks([(i, -i) for i in range(1, m + 1)]))


@dataclass(frozen=True)
class WalledDiagram:
    """Black/white matching diagram between mixed tensor signatures.

    source = (r1, s1) means r1 black endpoints (V factors) followed by s1
    white endpoints (dual factors) on the source row; likewise target.
    """

    source: tuple[int, int]
    target: tuple[int, int]
    pairs: tuple[tuple[int, int], ...]

    def color(self, x: int) -> int:
        """1 = black (V), 0 = white (V*), for endpoint +i or -j."""
        if x > 0:
            return 1 if x <= self.source[0] else 0
        return 1 if -x <= self.target[0] else 0

    def __str__(self) -> str:
        return f"W[{self.source}->{self.target}: {', '.join(map(_pretty, self.pairs))}]"


def walled_diagram(
    source: tuple[int, int] | Sequence[int],
    target: tuple[int, int] | Sequence[int],
    pairs: Iterable[Iterable[int]],
) -> WalledDiagram:
    r1, s1 = source
    r2, s2 = target
    if r1 + s2 != r2 + s1:
        raise ValueError("walled diagram signature violates r1 + s2 = r2 + s1")
    ps = _canonical_blocks(pairs)
    for p in ps:
        if len(p) != 2:
            raise ValueError("walled diagram blocks must be pairs")
    _check_cover(ps, r1 + s1, r2 + s2, "walled diagram")
    d = WalledDiagram((r1, s1), (r2, s2), ps)
    for a, b in ps:
        same_row = (a > 0) == (b > 0)
        if same_row and d.color(a) == d.color(b):
            raise ValueError(f"same-row edge {(a, b)} must join opposite colors")
        if not same_row and d.color(a) != d.color(b):
            raise ValueError(f"cross-row edge {(a, b)} must join equal colors")
    return d


def identity_walled(r: int, s: int) -> WalledDiagram:
    return WalledDiagram(
        (r, s), (r, s), _canonical_blocks([(i, -i) for i in range(1, r + s + 1)])
    )


Diagram = PartitionDiagram | BrauerDiagram | WalledDiagram


def flavor_of(d: Diagram) -> str:
    if isinstance(d, PartitionDiagram):
        return "S"
    if isinstance(d, BrauerDiagram):
        return "O"
    if isinstance(d, WalledDiagram):
        return "GL"
    raise TypeError(f"not a diagram: {d!r}")


# ---------------------------------------------------------------------------
# composition


class _UnionFind:
    """Union-find with path compression over a fixed range of ints."""

    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def compose_partition(
    p: PartitionDiagram, q: PartitionDiagram
) -> tuple[PartitionDiagram, int]:
    """p after q: q maps [k] -> [l], p maps [l] -> [m].

    Returns (p * q, N): the least restrictive pattern on the outer endpoints
    consistent with both diagrams, and the number N of merged components made
    of middle endpoints only (the t-exponent of the composition law).
    """
    if q.bottom != p.top:
        raise ValueError(
            f"cannot compose: q has target [{q.bottom}], p has source [{p.top}]"
        )
    k, l, m = q.top, q.bottom, p.bottom
    # node ids: 0..k-1 outer source, k..k+l-1 middle, k+l..k+l+m-1 outer target
    uf = _UnionFind(k + l + m)

    def q_node(x: int) -> int:
        return x - 1 if x > 0 else k + (-x) - 1

    def p_node(x: int) -> int:
        return k + x - 1 if x > 0 else k + l + (-x) - 1

    for block in q.blocks:
        first = q_node(block[0])
        for x in block[1:]:
            uf.union(first, q_node(x))
    for block in p.blocks:
        first = p_node(block[0])
        for x in block[1:]:
            uf.union(first, p_node(x))

    outer_groups: dict[int, list[int]] = {}
    for i in range(1, k + 1):
        outer_groups.setdefault(uf.find(i - 1), []).append(i)
    for j in range(1, m + 1):
        outer_groups.setdefault(uf.find(k + l + j - 1), []).append(-j)
    middle_only = 0
    for i in range(l):
        if uf.find(k + i) not in outer_groups:
            middle_only += 1
            outer_groups[uf.find(k + i)] = []  # count each middle component once
    blocks = [b for b in outer_groups.values() if b]
    return partition_diagram(k, m, blocks), middle_only


def _trace_paths(
    p_pairs: Sequence[tuple[int, int]],
    q_pairs: Sequence[tuple[int, int]],
    k: int,
    l: int,
    m: int,
) -> tuple[list[tuple[int, int]], int]:
    """Concatenate matchings q: [k] -> [l] and p: [l] -> [m] along the middle.

    Middle point j is q's target j glued to p's source j.  Returns the induced
    matching on the outer endpoints (q-sources +i, p-targets -j) and the count
    of closed cycles contained in the middle row.
    """
    q_adj: dict[int, int] = {}
    for a, b in q_pairs:
        q_adj[a], q_adj[b] = b, a
    p_adj: dict[int, int] = {}
    for a, b in p_pairs:
        p_adj[a], p_adj[b] = b, a

    visited_mid: set[int] = set()

    def walk(layer: str, x: int) -> tuple[str, int]:
        """Follow edges from an outer endpoint to the far outer endpoint."""
        while True:
            y = q_adj[x] if layer == "q" else p_adj[x]
            if layer == "q":
                if y > 0:
                    return ("q", y)  # another q-source
                visited_mid.add(-y)
                layer, x = "p", -y  # hop across the glue to p-source j
            else:
                if y < 0:
                    return ("p", y)  # a p-target
                visited_mid.add(y)
                layer, x = "q", -y  # hop back to q-target j

    pairs: list[tuple[int, int]] = []
    done: set[tuple[str, int]] = set()
    starts = [("q", i) for i in range(1, k + 1)] + [("p", -j) for j in range(1, m + 1)]
    for layer, x in starts:
        if (layer, x) in done:
            continue
        end = walk(layer, x)
        done.add((layer, x))
        done.add(end)
        pairs.append((x, end[1]))

    loops = 0
    remaining = set(range(1, l + 1)) - visited_mid
    while remaining:
        j0 = min(remaining)
        loops += 1
        cycle = {j0}
        layer, x = "p", j0  # slot: about to take the p-edge at middle j0
        while True:
            y = p_adj[x] if layer == "p" else q_adj[x]
            # inside a middle cycle, a p-edge joins two p-sources (+,+) and a
            # q-edge joins two q-targets (-,-); escaping to an outer endpoint
            # would mean this component was a path and already visited
            assert (y > 0) if layer == "p" else (y < 0), "middle cycle escaped"
            j = y if layer == "p" else -y
            cycle.add(j)
            layer, x = ("q", -j) if layer == "p" else ("p", j)
            if (layer, x) == ("p", j0):
                break
        remaining -= cycle
    return pairs, loops


def compose_brauer(p: BrauerDiagram, q: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """p after q for perfect matchings; returns (diagram, removed loops)."""
    if q.bottom != p.top:
        raise ValueError(
            f"cannot compose: q has target [{q.bottom}], p has source [{p.top}]"
        )
    pairs, loops = _trace_paths(p.pairs, q.pairs, q.top, q.bottom, p.bottom)
    return brauer_diagram(q.top, p.bottom, pairs), loops


def compose_walled(p: WalledDiagram, q: WalledDiagram) -> tuple[WalledDiagram, int]:
    """p after q for walled diagrams; wall constraints are preserved."""
    if q.target != p.source:
        raise ValueError(
            f"cannot compose: q has target {q.target}, p has source {p.source}"
        )
    pairs, loops = _trace_paths(
        p.pairs, q.pairs, sum(q.source), sum(q.target), sum(p.target)
    )
    return walled_diagram(q.source, p.target, pairs), loops


def compose_diagrams(p: Diagram, q: Diagram) -> tuple[Diagram, int]:
    """Flavor dispatch for p after q."""
    if isinstance(p, PartitionDiagram) and isinstance(q, PartitionDiagram):
        return compose_partition(p, q)
    if isinstance(p, BrauerDiagram) and isinstance(q, BrauerDiagram):
        return compose_brauer(p, q)
    if isinstance(p, WalledDiagram) and isinstance(q, WalledDiagram):
        return compose_walled(p, q)
    raise TypeError(f"cannot compose diagrams of different flavors: {p!r}, {q!r}")


# ---------------------------------------------------------------------------
# tensor, flip, refinement, closure


def _shift(x: int, top_shift: int, bottom_shift: int) -> int:
    return x + top_shift if x > 0 else x - bottom_shift


def tensor_diagram(p: Diagram, q: Diagram) -> Diagram:
    """Disjoint union, with q's endpoints re-indexed after p's.

    For walled diagrams the combined rows stay color-sorted (blacks then
    whites), so q's endpoints are interleaved past p's block of each color.
    """
    if isinstance(p, PartitionDiagram) and isinstance(q, PartitionDiagram):
        blocks = list(p.blocks) + [
            tuple(_shift(x, p.top, p.bottom) for x in b) for b in q.blocks
        ]
        return partition_diagram(p.top + q.top, p.bottom + q.bottom, blocks)
    if isinstance(p, BrauerDiagram) and isinstance(q, BrauerDiagram):
        pairs = list(p.pairs) + [
            tuple(_shift(x, p.top, p.bottom) for x in pr) for pr in q.pairs
        ]
        return brauer_diagram(p.top + q.top, p.bottom + q.bottom, pairs)
    if isinstance(p, WalledDiagram) and isinstance(q, WalledDiagram):
        return _tensor_walled(p, q)
    raise TypeError(f"cannot tensor diagrams of different flavors: {p!r}, {q!r}")


def _tensor_walled(p: WalledDiagram, q: WalledDiagram) -> WalledDiagram:
    (pr1, ps1), (pr2, ps2) = p.source, p.target
    (qr1, qs1), (qr2, qs2) = q.source, q.target

    def p_map(x: int) -> int:
        if x > 0:  # p source black i -> i, p source white j -> (pr1+qr1)+j
            return x if x <= pr1 else x + qr1
        j = -x
        return -(j if j <= pr2 else j + qr2)

    def q_map(x: int) -> int:
        if x > 0:  # q source black i -> pr1+i, q source white j -> (pr1+qr1)+ps1+j
            return pr1 + x if x <= qr1 else pr1 + qr1 + ps1 + (x - qr1)
        j = -x
        return -(pr2 + j if j <= qr2 else pr2 + qr2 + ps2 + (j - qr2))

    pairs = [tuple(p_map(x) for x in pr) for pr in p.pairs] + [
        tuple(q_map(x) for x in pr) for pr in q.pairs
    ]
    return walled_diagram(
        (pr1 + qr1, ps1 + qs1), (pr2 + qr2, ps2 + qs2), pairs
    )


def flip(d: Diagram) -> Diagram:
    """Swap the source and target rows (the dual-morphism diagram)."""
    if isinstance(d, PartitionDiagram):
        return partition_diagram(d.bottom, d.top, [tuple(-x for x in b) for b in d.blocks])
    if isinstance(d, BrauerDiagram):
        return brauer_diagram(d.bottom, d.top, [tuple(-x for x in p) for p in d.pairs])
    if isinstance(d, WalledDiagram):
        return walled_diagram(d.target, d.source, [tuple(-x for x in p) for p in d.pairs])
    raise TypeError(f"not a diagram: {d!r}")


def refines(p: PartitionDiagram, p2: PartitionDiagram) -> bool:
    """True iff every block of p is contained in a block of p2."""
    if (p.top, p.bottom) != (p2.top, p2.bottom):
        raise ValueError("refinement needs identical endpoint sets")
    owner: dict[int, int] = {}
    for idx, b in enumerate(p2.blocks):
        for x in b:
            owner[x] = idx
    return all(len({owner[x] for x in b}) == 1 for b in p.blocks)


def coarsenings(p: PartitionDiagram) -> list[PartitionDiagram]:
    """All diagrams refined by p, i.e. every way of merging p's blocks."""
    out = []
    for grouping in _set_partitions_of(list(range(len(p.blocks)))):
        merged = [
            tuple(itertools.chain.from_iterable(p.blocks[i] for i in group))
            for group in grouping
        ]
        out.append(partition_diagram(p.top, p.bottom, merged))
    return out


def closure_components(d: Diagram) -> int:
    """Components after closing the diagram with arcs i -- i' for every i.

    This is the exponent l(D) in the graphical trace: Tr(e_D) = t^l(D).
    Requires equal source and target signatures.
    """
    if isinstance(d, PartitionDiagram):
        if d.top != d.bottom:
            raise ValueError("closure needs source and target of equal size")
        n = len(d.blocks)
        uf = _UnionFind(n)
        owner: dict[int, int] = {}
        for idx, b in enumerate(d.blocks):
            for x in b:
                owner[x] = idx
        for i in range(1, d.top + 1):
            uf.union(owner[i], owner[-i])
        return len({uf.find(i) for i in range(n)})
    if isinstance(d, BrauerDiagram):
        if d.top != d.bottom:
            raise ValueError("closure needs source and target of equal size")
        size = d.top
        pairs = d.pairs
    elif isinstance(d, WalledDiagram):
        if d.source != d.target:
            raise ValueError("closure needs source and target of equal signature")
        size = sum(d.source)
        pairs = d.pairs
    else:
        raise TypeError(f"not a diagram: {d!r}")
    uf = _UnionFind(2 * size)  # nodes: +i -> i-1, -i -> size+i-1

    def node(x: int) -> int:
        return x - 1 if x > 0 else size + (-x) - 1

    for a, b in pairs:
        uf.union(node(a), node(b))
    for i in range(1, size + 1):
        uf.union(node(i), node(-i))
    return len({uf.find(i) for i in range(2 * size)})


# ---------------------------------------------------------------------------
# basis enumeration


def _set_partitions_of(items: list) -> Iterator[list[list]]:
    """All set partitions, in deterministic restricted-growth order."""
    if not items:
        yield []
        return

    def rec(i: int, blocks: list[list]):
        if i == len(items):
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(items[i])
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([items[i]])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [[items[0]]])


def _matchings_of(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    """All perfect matchings; smallest unmatched point is paired first."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for idx, partner in enumerate(rest):
        sub = rest[:idx] + rest[idx + 1 :]
        for tail in _matchings_of(sub):
            yield [(first, partner)] + tail


def enumerate_partition_basis(l: int, m: int) -> list[PartitionDiagram]:
    """All Bell(l+m) partition diagrams from [l] to [m], deterministic order."""
    pts = list(range(1, l + 1)) + [-j for j in range(1, m + 1)]
    return [partition_diagram(l, m, blocks) for blocks in _set_partitions_of(pts)]


def enumerate_brauer_basis(l: int, m: int) -> list[BrauerDiagram]:
    """All (l+m-1)!! matchings from [l] to [m]; empty when l+m is odd."""
    if (l + m) % 2:
        return []
    pts = list(range(1, l + 1)) + [-j for j in range(1, m + 1)]
    return [brauer_diagram(l, m, pairs) for pairs in _matchings_of(pts)]


def enumerate_walled_basis(
    source: tuple[int, int], target: tuple[int, int]
) -> list[WalledDiagram]:
    """All (r1+s2)! walled diagrams; empty when signatures are incompatible.

    Valid edges always join the set A = {source blacks, target whites} with
    B = {target blacks, source whites}, so diagrams are bijections A -> B.
    """
    r1, s1 = source
    r2, s2 = target
    if r1 + s2 != r2 + s1:
        return []
    side_a = [+i for i in range(1, r1 + 1)] + [-(r2 + j) for j in range(1, s2 + 1)]
    side_b = [-j for j in range(1, r2 + 1)] + [+(r1 + i) for i in range(1, s1 + 1)]
    out = []
    for perm in itertools.permutations(side_b):
        pairs = list(zip(side_a, perm))
        out.append(walled_diagram(source, target, pairs))
    return out


def enumerate_basis(flavor: str, source, target) -> list[Diagram]:
    """Complete diagram basis of Hom(source, target) for the given flavor."""
    if flavor == "S":
        return enumerate_partition_basis(source, target)
    if flavor == "O":
        return enumerate_brauer_basis(source, target)
    if flavor == "GL":
        return enumerate_walled_basis(tuple(source), tuple(target))
    raise ValueError(f"unknown flavor {flavor!r}")


# ---------------------------------------------------------------------------
# JSON wire format


def diagram_to_json(d: Diagram) -> dict:
    """{"flavor": ..., "top": l, "bottom": m, "blocks": [[...]]} with signed ints."""
    if isinstance(d, PartitionDiagram):
        return {
            "flavor": "S",
            "top": d.top,
            "bottom": d.bottom,
            "blocks": [list(b) for b in d.blocks],
        }
    if isinstance(d, BrauerDiagram):
        return {
            "flavor": "O",
            "top": d.top,
            "bottom": d.bottom,
            "blocks": [list(p) for p in d.pairs],
        }
    if isinstance(d, WalledDiagram):
        r1, s1 = d.source
        r2, s2 = d.target
        return {
            "flavor": "GL",
            "top": r1 + s1,
            "bottom": r2 + s2,
            "top_colors": "1" * r1 + "0" * s1,
            "bottom_colors": "1" * r2 + "0" * s2,
            "blocks": [list(p) for p in d.pairs],
        }
    raise TypeError(f"not a diagram: {d!r}")


def _colors_to_signature(colors: str, field: str) -> tuple[int, int]:
    r = colors.count("1")
    if colors != "1" * r + "0" * (len(colors) - r):
        raise ValueError(f"{field}: colors must be sorted, blacks ('1') before whites ('0')")
    return r, len(colors) - r


def diagram_from_json(obj: dict) -> Diagram:
    for field in ("flavor", "top", "bottom", "blocks"):
        if field not in obj:
            raise ValueError(f"diagram JSON missing field '{field}'")
    flavor = obj["flavor"]
    blocks = [tuple(b) for b in obj["blocks"]]
    if flavor == "S":
        return partition_diagram(obj["top"], obj["bottom"], blocks)
    if flavor == "O":
        return brauer_diagram(obj["top"], obj["bottom"], blocks)
    if flavor == "GL":
        for field in ("top_colors", "bottom_colors"):
            if field not in obj:
                raise ValueError(f"diagram JSON missing field '{field}'")
        source = _colors_to_signature(obj["top_colors"], "top_colors")
        target = _colors_to_signature(obj["bottom_colors"], "bottom_colors")
        if sum(source) != obj["top"] or sum(target) != obj["bottom"]:
            raise ValueError("color strings disagree with 'top'/'bottom' counts")
        return walled_diagram(source, target, blocks)
    raise ValueError(f"unknown flavor {flavor!r}")
