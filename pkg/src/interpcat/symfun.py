"""Symmetric functions and central-character calculus.

Littlewood-Richardson coefficients by direct lattice-word tableau
enumeration (memoized); skew Schur Hall pairings; the stable multiplicity
formulas for mixed GL tensors and for orthogonal/symplectic tensor products
(stable-range semantics: no n parameter, values are the large-n constants);
the [alpha, beta, gamma] triple encoding of partitions with its stabilized
Harish-Chandra multiplicity sum; and the moment calculus of central
characters built from P_k(x) = (x+1)^k - x^k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from interpcat.partitions import (
    Partition,
    check_partition,
    conjugate,
    contains,
    durfee,
    partitions_of,
    sub_partitions,
)

# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients

_LR_CACHE: dict[tuple[Partition, Partition, Partition], int] = {}


def lr_coefficient(lam, mu, nu) -> int:
    """c^lam_{mu,nu}: LR skew tableaux of shape lam/mu and content nu.

    Zero whenever |mu| + |nu| != |lam| or mu does not fit inside lam.
    """
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if sum(mu) + sum(nu) != sum(lam) or not contains(lam, mu):
        return 0
    key = (lam, mu, nu)
    if key not in _LR_CACHE:
        _LR_CACHE[key] = _count_lr_tableaux(lam, mu, nu)
    return _LR_CACHE[key]


def _count_lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Backtracking fill in reading order (right-to-left within each row)."""
    rows = len(lam)
    mu_pad = mu + (0,) * (rows - len(mu))
    nrows = len(nu)
    cells = []  # reading order
    for i in range(rows):
        for j in range(lam[i] - 1, mu_pad[i] - 1, -1):
            cells.append((i, j))
    if not cells:
        return 1
    filling: dict[tuple[int, int], int] = {}
    remaining = list(nu)
    counts = [0] * nrows  # letters placed so far, by value
    total = 0

    def legal(i: int, j: int, v: int) -> bool:
        if remaining[v] == 0:
            return False
        if v > 0 and counts[v - 1] <= counts[v]:
            return False  # lattice word property
        right = filling.get((i, j + 1))
        if right is not None and v > right:
            return False  # rows weakly increase left to right
        above = filling.get((i - 1, j))
        if above is not None and v <= above:
            return False  # columns strictly increase
        return True

    def rec(pos: int):
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, j = cells[pos]
        for v in range(nrows):
            if legal(i, j, v):
                filling[(i, j)] = v
                remaining[v] -= 1
                counts[v] += 1
                rec(pos + 1)
                counts[v] -= 1
                remaining[v] += 1
                del filling[(i, j)]

    rec(0)
    return total


def skew_schur_pairing(lam, nu, mu, nubar) -> int:
    """Hall pairing (s_{lam/nu}, s_{mu/nubar}) = sum_eta c^lam_{nu,eta} c^mu_{nubar,eta}."""
    lam, nu = check_partition(lam), check_partition(nu)
    mu, nubar = check_partition(mu), check_partition(nubar)
    weight = sum(lam) - sum(nu)
    if weight < 0 or weight != sum(mu) - sum(nubar):
        return 0
    total = 0
    for eta in partitions_of(weight):
        left = lr_coefficient(lam, nu, eta)
        if left:
            total += left * lr_coefficient(mu, nubar, eta)
    return total


def gl_mixed_multiplicity(lam, mu, nu, nubar) -> int:
    """Multiplicity of the mixed irreducible (nu, nubar) in V_lam (x) V_mu^*.

    Stable-range semantics: this is the large-n value; no n argument exists.
    """
    return skew_schur_pairing(lam, nu, mu, nubar)


def osp_multiplicity(lam, mu, nu) -> int:
    """Newell-Littlewood number: sum c^lam_{z,s} c^mu_{z,t} c^nu_{s,t}.

    Stable-range multiplicity of V_nu in V_lam (x) V_mu for the orthogonal
    and symplectic series.
    """
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    doubled = sum(lam) + sum(mu) - sum(nu)
    if doubled < 0 or doubled % 2:
        return 0
    zsize = doubled // 2
    ssize = sum(lam) - zsize
    tsize = sum(mu) - zsize
    if ssize < 0 or tsize < 0:
        return 0
    total = 0
    for zeta in partitions_of(zsize):
        if not (contains(lam, zeta) and contains(mu, zeta)):
            continue
        for sigma in partitions_of(ssize):
            left = lr_coefficient(lam, zeta, sigma)
            if not left:
                continue
            for tau in partitions_of(tsize):
                mid = lr_coefficient(mu, zeta, tau)
                if not mid:
                    continue
                total += left * mid * lr_coefficient(nu, sigma, tau)
    return total


# ---------------------------------------------------------------------------
# triple representation [alpha, beta, gamma]


@dataclass(frozen=True)
class TriplePartition:
    """A partition cut below row k and right of column l.

    alpha holds the first k rows past the cut column, beta the first l
    columns past the cut row (as a partition of column lengths), gamma the
    remainder below-right of both cuts.
    """

    alpha: Partition
    beta: Partition
    gamma: Partition
    k: int
    l: int


def triple_encode(lam, k: int, l: int) -> TriplePartition:
    """Cut lam into [alpha, beta, gamma] at row k and column l."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    if k < 0 or l < 0:
        raise ValueError("cuts must be nonnegative")
    d = durfee(lam)
    if k > d:
        raise ValueError(f"row cut k = {k} exceeds the diagonal length d = {d}")
    if l > d:
        raise ValueError(f"column cut l = {l} exceeds the diagonal length d = {d}")
    if k > 0 and (len(lam) < k or lam[k - 1] < l + 1):
        raise ValueError(f"row cut k = {k} leaves alpha with fewer than k rows")
    if l > 0 and (len(conj) < l or conj[l - 1] < k + 1):
        raise ValueError(f"column cut l = {l} leaves beta with fewer than l columns")
    alpha = tuple(lam[i] - l for i in range(k))
    beta = tuple(conj[j] - k for j in range(l))
    gamma_len = (conj[l] if l < len(conj) else 0) - k
    gamma = tuple(lam[k + i] - l for i in range(max(0, gamma_len)))
    tp = TriplePartition(alpha, beta, gamma, k, l)
    _validate_triple(tp)
    return tp


def _rows_from_triple(alpha, beta, gamma, k: int, l: int) -> Partition:
    """Rows of the decoded partition; alpha/beta entries may include zeros."""
    rows = [alpha[i] + l for i in range(k)]
    depth = max(len(gamma), max(beta) if beta else 0)
    for i in range(1, depth + 1):
        g = gamma[i - 1] if i <= len(gamma) else 0
        rows.append(g + sum(1 for b in beta if b >= i))
    while rows and rows[-1] == 0:
        rows.pop()
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"triple does not decode to a partition: rows {rows}")
    return tuple(rows)


def _validate_triple(tp: TriplePartition):
    alpha, beta, gamma = tp.alpha, tp.beta, tp.gamma
    if len(alpha) != tp.k:
        raise ValueError("constraint 1 violated: k must equal the length of alpha")
    if len(beta) != tp.l:
        raise ValueError("constraint 1 violated: l must equal the length of beta")
    check_partition(alpha)
    check_partition(beta)
    check_partition(gamma)
    # the two inequalities are vacuous on a side whose cut is 0: everything
    # below (resp. right of) a zero cut belongs to gamma
    if gamma and tp.k and gamma[0] > alpha[-1]:
        raise ValueError("constraint 5 violated: gamma_1 must not exceed alpha_k")
    gamma_conj = conjugate(gamma)
    if gamma_conj and tp.l and gamma_conj[0] > beta[-1]:
        raise ValueError("constraint 5 violated: gamma'_1 must not exceed beta_l")
    lam = _rows_from_triple(alpha, beta, gamma, tp.k, tp.l)
    conj = conjugate(lam)
    expected = (conj[tp.l] if tp.l < len(conj) else 0) - tp.k
    if expected != len(gamma):
        raise ValueError(
            "constraint 2 violated: gamma must have length lam'_{l+1} - k"
            f" = {expected}, got {len(gamma)}"
        )
    if tp.l > durfee(lam) or tp.k > durfee(lam):
        raise ValueError("constraint 1 violated: cuts must not exceed the diagonal")


def triple_decode(tp: TriplePartition) -> Partition:
    """Inverse of triple_encode; validates all five constraints."""
    _validate_triple(tp)
    return _rows_from_triple(tp.alpha, tp.beta, tp.gamma, tp.k, tp.l)


# ---------------------------------------------------------------------------
# stabilized Harish-Chandra multiplicity


@dataclass(frozen=True)
class ShiftData:
    """Fixed data of the stabilized multiplicity: integer shifts and tails."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    gamma: Partition
    delta: Partition

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "gamma", check_partition(self.gamma))
        object.__setattr__(self, "delta", check_partition(self.delta))

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def l(self) -> int:
        return len(self.b)


def _vectors_with_sum(lowers: tuple[int, ...], total: int):
    """Integer vectors v >= lowers componentwise with sum(v) = total."""
    if total < sum(lowers):
        return
    if not lowers:
        if total == 0:
            yield ()
        return
    head = lowers[0]
    rest = lowers[1:]
    for v in range(head, total - sum(rest) + 1):
        for tail in _vectors_with_sum(rest, total - v):
            yield (v,) + tail


def _tilde_partition(c, d, tail: Partition) -> Partition:
    """lambda~(c, d, tail) = [alpha~, beta~, tail] with suffix-sum arms."""
    k, l = len(c), len(d)
    g1 = tail[0] if tail else 0
    g1c = conjugate(tail)[0] if tail else 0
    alpha = tuple(g1 + sum(c[i:]) for i in range(k))
    beta = tuple(g1c + sum(d[i:]) for i in range(l))
    return _rows_from_triple(alpha, beta, tail, k, l)


def _tilde_inner(c, d, eps: Partition, tail: Partition) -> Partition:
    """eta~(c, d, eps) = [alpha~ - c, beta~ - d, eps] built against tail."""
    k, l = len(c), len(d)
    g1 = tail[0] if tail else 0
    g1c = conjugate(tail)[0] if tail else 0
    alpha = tuple(g1 + sum(c[i + 1 :]) for i in range(k))
    beta = tuple(g1c + sum(d[i + 1 :]) for i in range(l))
    return _rows_from_triple(alpha, beta, eps, k, l)


def _stable_term(c, d, tail, eps, content) -> int:
    """LR coefficient of the reconstructed skew shape against `content`."""
    lam = _tilde_partition(c, d, tail)
    eta = _tilde_inner(c, d, eps, tail)
    return lr_coefficient(lam, eta, content)


def stable_hc_multiplicity(shift: ShiftData, nu, flavor: str = "gl") -> int:
    """The eventually-constant multiplicity attached to the shift data.

    flavor "gl": nu is a pair (nu, nubar) of partitions; flavor "osp": nu is
    a single partition.  The value equals the direct formula evaluated on
    any instantiation with row gaps above the stated threshold.
    """
    lows_c = tuple(max(0, -x) for x in shift.a)
    lows_d = tuple(max(0, -x) for x in shift.b)
    common = [
        eps
        for eps in sub_partitions(shift.gamma)
        if contains(shift.delta, eps)
    ]
    if flavor == "gl":
        nu, nubar = (check_partition(nu[0]), check_partition(nu[1]))
        total = 0
        for eps in common:
            weight = sum(nu) - sum(shift.gamma) + sum(eps)
            other = (
                sum(nubar)
                - sum(shift.a)
                - sum(shift.b)
                - sum(shift.delta)
                + sum(eps)
            )
            if weight < 0 or weight != other:
                continue
            for split in range(weight + 1):
                for c in _vectors_with_sum(lows_c, split):
                    for d in _vectors_with_sum(lows_d, weight - split):
                        left = _stable_term(c, d, shift.gamma, eps, nu)
                        if not left:
                            continue
                        c_shift = tuple(x + y for x, y in zip(c, shift.a))
                        d_shift = tuple(x + y for x, y in zip(d, shift.b))
                        total += left * _stable_term(
                            c_shift, d_shift, shift.delta, eps, nubar
                        )
        return total
    if flavor == "osp":
        nu = check_partition(nu)
        total = 0
        for eps in common:
            # 2(|c|+|d|) + |a|+|b| + |gamma|+|delta| - 2|eps| = |nu|
            doubled = (
                sum(nu)
                - sum(shift.a)
                - sum(shift.b)
                - sum(shift.gamma)
                - sum(shift.delta)
                + 2 * sum(eps)
            )
            if doubled < 0 or doubled % 2:
                continue
            weight = doubled // 2
            for split in range(weight + 1):
                for c in _vectors_with_sum(lows_c, split):
                    for d in _vectors_with_sum(lows_d, weight - split):
                        omega_size = weight + sum(shift.gamma) - sum(eps)
                        xi_size = sum(nu) - omega_size
                        if xi_size < 0:
                            continue
                        c_shift = tuple(x + y for x, y in zip(c, shift.a))
                        d_shift = tuple(x + y for x, y in zip(d, shift.b))
                        for omega in partitions_of(omega_size):
                            left = _stable_term(c, d, shift.gamma, eps, omega)
                            if not left:
                                continue
                            for xi in partitions_of(xi_size):
                                mid = _stable_term(
                                    c_shift, d_shift, shift.delta, eps, xi
                                )
                                if not mid:
                                    continue
                                total += left * mid * lr_coefficient(nu, omega, xi)
        return total
    raise ValueError(f"unknown flavor {flavor!r} (expected 'gl' or 'osp')")


def shift_instance(shift: ShiftData, n: int) -> tuple[Partition, Partition]:
    """An explicit (lam, mu) pair realizing the shift data with row gaps ~ n.

    For n above |nu| + |nubar| the direct multiplicity formulas on this pair
    equal stable_hc_multiplicity: the testable form of stabilization.
    """
    base = max(
        [1]
        + [abs(x) for x in shift.a]
        + [abs(x) for x in shift.b]
        + list(shift.gamma[:1])
        + list(shift.delta[:1])
    )
    k, l = shift.k, shift.l
    alpha = tuple(base + (k - i) * n for i in range(k))
    beta = tuple(base + (l - i) * n for i in range(l))
    lam = _rows_from_triple(alpha, beta, shift.gamma, k, l)
    alpha_mu = tuple(x + y for x, y in zip(alpha, shift.a))
    beta_mu = tuple(x + y for x, y in zip(beta, shift.b))
    mu = _rows_from_triple(alpha_mu, beta_mu, shift.delta, k, l)
    return lam, mu


# ---------------------------------------------------------------------------
# central character moments


def pk(x, k: int) -> Fraction:
    """P_k(x) = (x+1)^k - x^k."""
    x = Fraction(x)
    return (x + 1) ** k - x**k


def pbark(x, k: int) -> Fraction:
    """P-bar_k(x) = (x-1)^k - x^k."""
    x = Fraction(x)
    return (x - 1) ** k - x**k


@dataclass
class MomentSequence:
    """Moments of a central-character difference; osp forces odd moments to 0."""

    flavor: str
    values: dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.flavor not in ("gl", "osp"):
            raise ValueError("moment flavor must be 'gl' or 'osp'")
        clean = {}
        for k, v in self.values.items():
            k = int(k)
            v = Fraction(v)
            if self.flavor == "osp" and k % 2 and v != 0:
                raise ValueError(f"osp moment sequences vanish in odd degree (k={k})")
            clean[k] = v
        self.values = clean


def char_difference_forward(b, c, flavor: str = "gl", K: int = 6) -> MomentSequence:
    """Moments m_k of the central-character difference attached to (b, c).

    gl: m_k = sum P_k(b_i) + sum P-bar_k(c_j) for 1 <= k <= K.
    osp: only b is allowed; odd moments are 0 and even ones sum P_k(b_i).
    """
    b = tuple(Fraction(x) for x in b)
    c = tuple(Fraction(x) for x in c)
    if flavor == "osp" and c:
        raise ValueError("osp central characters take no c parameters")
    values: dict[int, Fraction] = {}
    for k in range(1, K + 1):
        if flavor == "osp":
            values[k] = (
                Fraction(0) if k % 2 else sum((pk(x, k) for x in b), Fraction(0))
            )
        else:
            values[k] = sum((pk(x, k) for x in b), Fraction(0)) + sum(
                (pbark(x, k) for x in c), Fraction(0)
            )
    return MomentSequence(flavor, values)


def weight_moment_difference(mu, moved_up, moved_down, K: int = 6) -> MomentSequence:
    """Moment difference when some coordinates of mu move up/down by one.

    moved_up and moved_down are disjoint 1-based index sets.  The result is
    cross-checked against the direct power-sum difference of the shifted
    weight, which it must match identically.
    """
    mu = tuple(Fraction(x) for x in mu)
    up = set(int(i) for i in moved_up)
    down = set(int(i) for i in moved_down)
    if up & down:
        raise ValueError(f"moved_up and moved_down overlap: {sorted(up & down)}")
    for i in up | down:
        if not 1 <= i <= len(mu):
            raise ValueError(f"index {i} outside the weight of length {len(mu)}")
    lam = list(mu)
    for i in up:
        lam[i - 1] += 1
    for i in down:
        lam[i - 1] -= 1
    values: dict[int, Fraction] = {}
    for k in range(1, K + 1):
        total = sum((pk(mu[i - 1], k) for i in up), Fraction(0))
        total += sum((pbark(mu[i - 1], k) for i in down), Fraction(0))
        direct = sum(x**k for x in lam) - sum(x**k for x in mu)
        if total != direct:
            raise AssertionError(
                f"moment bookkeeping broke at k={k}: {total} != {direct}"
            )
        values[k] = total
    return MomentSequence("gl", values)


def search_decomposition(
    m: MomentSequence, r: int, s: int, bound: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Bounded integer search for (b, c) with the given forward moments.

    Entries run over [-bound, bound]; vectors are returned sorted (the
    moments cannot see the order).  None means no integer solution in the
    box, which is a valid answer.
    """
    if m.flavor == "osp" and s:
        raise ValueError("osp searches take s = 0")
    needed = r + s + 2
    if len(m.values) < needed:
        raise ValueError(f"need at least r + s + 2 = {needed} moments, got {len(m.values)}")
    candidates = range(-bound, bound + 1)
    ks = sorted(m.values)
    for b in itertools.combinations_with_replacement(candidates, r):
        for c in itertools.combinations_with_replacement(candidates, s):
            ok = True
            for k in ks:
                if m.flavor == "osp" and k % 2:
                    continue
                total = sum(pk(x, k) for x in b) + sum(pbark(x, k) for x in c)
                if total != m.values[k]:
                    ok = False
                    break
            if ok:
                return tuple(b), tuple(c)
    return None
