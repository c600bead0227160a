"""Minimum-distance tools: capped exhaustive search, decoupled objective and constructions."""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product as iproduct
from math import comb

import numpy as np

from .f2core import BitMatrix, bits_of
from .pauli import PauliOperator, commutes, group_contains
from .tensor3 import Tensor3, apply_axis, plane_tensor
from .xyz_build import (
    XYZCode,
    build,
    in_T,
    logical_representatives,
    slice_pair_operator,
    syndrome,
    translated_representatives,
    LOGICAL_FAMILIES,
)

DEFAULT_BUDGET = 60_000_000
LETTERS = "XYZ"


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass
class DistanceReport:
    exact_d: int | None
    cap: int
    best_logical_found: PauliOperator | None
    lower_bound: int
    upper_bound: int | None
    dstar: Fraction | None = None
    sandwich_ok: bool | None = None
    ops_enumerated: int = 0
    notes: list[str] = field(default_factory=list)


def is_logical(code: XYZCode, op: PauliOperator) -> bool:
    """Zero syndrome and outside the stabilizer group."""
    if code.syndrome_bits(op):
        return False
    return group_contains(code.generators, op, respect_phase=False).verdict == "not_in_group"


def describe_operator(code: XYZCode, op: PauliOperator) -> str:
    return ", ".join(f"{op.letter(q)} on {code.describe_qubit(q)}" for q in bits_of(op.support))


# --- capped exhaustive search -------------------------------------------------


def _site_hashes(code: XYZCode, seed: int) -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    """64-bit linear hash of each single-qubit syndrome, indexed 3*q + letter."""
    rng = np.random.default_rng(seed)
    gh = rng.integers(0, 2**63, size=code.num_generators, dtype=np.int64).astype(np.uint64)
    site = code.site_syndromes()
    out = np.zeros(3 * code.N, dtype=np.uint64)
    for q, triple in enumerate(site):
        for letter, s in enumerate(triple):
            idx = bits_of(s)
            if idx:
                out[3 * q + letter] = np.bitwise_xor.reduce(gh[idx])
    return out, site


def _enumerate(N: int, w: int, hashes: np.ndarray):
    """All weight-w operators as (sites, letters, hash) arrays in lexicographic order."""
    if w == 0:
        return np.zeros((1, 0), np.int64), np.zeros((1, 0), np.int64), np.zeros(1, np.uint64)
    if w == 1:
        q = np.repeat(np.arange(N), 3)[:, None]
        l = np.tile(np.arange(3), N)[:, None]
        return q, l, hashes[3 * q[:, 0] + l[:, 0]]
    if w == 2:
        a, b = np.triu_indices(N, k=1)
        supp = np.stack([a, b], axis=1)
    else:
        supp = np.array(list(combinations(range(N), w)), dtype=np.int64).reshape(-1, w)
    lets = np.array(list(iproduct(range(3), repeat=w)), dtype=np.int64)
    ns, nl = len(supp), len(lets)
    sites = np.repeat(supp, nl, axis=0)
    letters = np.tile(lets, (ns, 1))
    h = np.zeros(len(sites), dtype=np.uint64)
    for c in range(w):
        h ^= hashes[3 * sites[:, c] + letters[:, c]]
    return sites, letters, h


def _operator_from(N: int, sites, letters) -> PauliOperator:
    return PauliOperator.from_sites(N, {int(q): LETTERS[int(l)] for q, l in zip(sites, letters)})


def _match(left, right_sorted, chunk):
    lq, ll, lh = left
    rq, rl, rh = right_sorted
    lo_i, hi_i = chunk
    sub_h = lh[lo_i:hi_i]
    lo = np.searchsorted(rh, sub_h, side="left")
    hi = np.searchsorted(rh, sub_h, side="right")
    counts = hi - lo
    if not counts.any():
        return []
    li = np.repeat(np.arange(lo_i, hi_i), counts)
    starts = np.repeat(lo, counts)
    offs = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
    ri = starts + offs
    if lq.shape[1]:
        keep = lq[li, -1] < rq[ri, 0]
        li, ri = li[keep], ri[keep]
    return list(zip(li.tolist(), ri.tolist()))


def search_cost(N: int, w: int) -> int:
    a = w // 2
    b = w - a
    return comb(N, a) * 3**a + comb(N, b) * 3**b


def distance_capped(
    code: XYZCode,
    cap: int,
    budget: int | None = DEFAULT_BUDGET,
    workers: int = 1,
    seed: int = 0,
) -> DistanceReport:
    """Exhaustive search for the lightest logical operator of weight <= cap.

    Each weight-w operator is split into its first w//2 sites and the rest;
    the halves are matched on a linear hash of their syndromes, and every hash
    match is re-verified exactly.  Among logicals of the minimal weight the
    first one is returned, comparing letter strings (X < Y < Z) and then sites.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    N = code.N
    hashes, _ = _site_hashes(code, seed)
    tables: dict[int, tuple] = {}
    spent = 0
    notes: list[str] = []
    k = N - code.symplectic_rank
    if k == 0:
        notes.append("code has dimension 0: no logical operators exist")
    for w in range(1, cap + 1):
        cost = search_cost(N, w)
        if budget is not None and spent + cost > budget:
            partial = DistanceReport(None, cap, None, w, None, ops_enumerated=spent,
                                     notes=notes + [f"budget exhausted before weight {w}"])
            raise BudgetExceeded(f"search at weight {w} needs about {cost} operations", partial)
        a, b = w // 2, w - w // 2
        for t in (a, b):
            if t not in tables:
                q, l, h = _enumerate(N, t, hashes)
                order = np.argsort(h, kind="stable")
                tables[t] = ((q, l, h), (q[order], l[order], h[order]))
        spent += cost
        left = tables[a][0]
        right = tables[b][1]
        nleft = len(left[2])
        nchunks = max(1, workers)
        bounds = np.linspace(0, nleft, nchunks + 1).astype(int)
        chunks = [(int(bounds[i]), int(bounds[i + 1])) for i in range(nchunks) if bounds[i] < bounds[i + 1]]
        if workers > 1 and len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as ex:
                parts = list(ex.map(lambda c: _match(left, right, c), chunks))
        else:
            parts = [_match(left, right, c) for c in chunks]
        best = None
        for part in parts:
            for li, ri in part:
                sites = list(left[0][li]) + list(right[0][ri])
                letters = list(left[1][li]) + list(right[1][ri])
                key = (tuple(int(x) for x in letters), tuple(int(s) for s in sites))
                if best is not None and key >= best[0]:
                    continue
                op = _operator_from(N, sites, letters)
                if code.syndrome_bits(op):
                    continue  # hash collision
                if group_contains(code.generators, op, respect_phase=False).verdict == "not_in_group":
                    best = (key, op)
        if best is not None:
            return DistanceReport(w, cap, best[1], w, w, ops_enumerated=spent, notes=notes)
    upper = None if k == 0 else N
    return DistanceReport(None, cap, None, cap + 1, upper, ops_enumerated=spent,
                          notes=notes + [f"no logical of weight <= {cap}"])


# --- canonical representatives -------------------------------------------------


def disjoint_representative_bound(code: XYZCode) -> int:
    """Certified lower bound 2 min n_i from disjoint slice-pair representatives."""
    ok, why = in_T(code.h1, code.h2, code.h3)
    if not ok:
        raise ValueError(f"triple is outside the dimension-one family: {why}")
    for fam in "XYZ":
        reps = translated_representatives(code, fam, check=False)
        seen = 0
        for r in reps:
            if code.syndrome_bits(r):
                raise RuntimeError(f"{fam} representative has nonzero syndrome")
            if seen & r.support:
                raise RuntimeError(f"{fam} representatives overlap")
            seen |= r.support
    return 2 * min(code.n)


def equal_pair_logical(h: BitMatrix, h3: BitMatrix) -> tuple[XYZCode, PauliOperator]:
    """Z on the diagonal cells (i, i, 0) of blocks A and B of Q(h, h, h3)."""
    if h.nrows != h.ncols:
        raise ValueError("h must be square")
    code = build(h, h, h3)
    n = h.ncols
    op = PauliOperator.identity(code.N)
    for block in ("A", "B"):
        t = Tensor3.from_cells(code.block_shapes[block], [(i, i, 0) for i in range(n)])
        op = op * code.block_operator(block, "Z", t)
    return code, op


# --- decoupled objective ---------------------------------------------------------


@dataclass
class DStarResult:
    value: Fraction
    exact: bool
    per_permutation: dict[tuple[int, int, int], tuple[Fraction, Tensor3]]
    w: int
    strategy: str
    seed: int

    @property
    def witness(self) -> tuple[tuple[int, int, int], Tensor3]:
        perm = min(self.per_permutation, key=lambda p: (self.per_permutation[p][0], p))
        return perm, self.per_permutation[perm][1]

    def sandwich(self, d: int) -> tuple[Fraction, Fraction, bool]:
        lo = self.value / self.w
        hi = Fraction(3, 2) * self.w * self.value
        return lo, hi, lo <= d <= hi


def _max_row_weight(hs) -> int:
    return max(max(r.bit_count() for r in h.rows) for h in hs)


def _objective_maps(hs, perm):
    """Images of unit tensors under the three linear maps of one permutation, plus R."""
    shape = (hs[0].ncols, hs[1].ncols, hs[2].ncols)
    sq = [h @ h for h in hs]
    i, j, k = perm

    def lin(a, b):
        def f(t):
            return apply_axis(sq[a], t, a) + apply_axis(sq[b], t, b)
        return f

    maps = (lin(i, k), lin(j, k), lin(i, j))
    R = plane_tensor(shape, k, 0)
    return shape, maps, R


def _doubled_objective(maps, R, t: Tensor3) -> int:
    v1 = (maps[0](t) + R).weight()
    v2 = (maps[1](t) + R).weight()
    v3 = maps[2](t).weight()
    return 2 * v1 + 2 * v2 + v3


def _exhaustive_perm(maps, R, shape):
    size = shape[0] * shape[1] * shape[2]
    imgs = [[] for _ in range(3)]
    for b in range(size):
        unit = Tensor3(shape, 1 << b)
        for m in range(3):
            imgs[m].append(maps[m](unit).bits)
    lo_bits = size // 2
    hi_bits = size - lo_bits

    def table(images):
        t = np.zeros(1, dtype=np.uint32)
        for v in images:
            t = np.concatenate([t, t ^ np.uint32(v)])
        return t

    lows = [table(imgs[m][:lo_bits]) for m in range(3)]
    highs = [table(imgs[m][lo_bits:]) for m in range(3)]
    r = np.uint32(R.bits)
    best_val, best_idx = None, None
    for hidx in range(1 << hi_bits):
        v1 = np.bitwise_count(lows[0] ^ highs[0][hidx] ^ r).astype(np.int64)
        v2 = np.bitwise_count(lows[1] ^ highs[1][hidx] ^ r).astype(np.int64)
        v3 = np.bitwise_count(lows[2] ^ highs[2][hidx]).astype(np.int64)
        tot = 2 * v1 + 2 * v2 + v3
        a = int(np.argmin(tot))
        val = int(tot[a])
        if best_val is None or val < best_val:
            best_val, best_idx = val, (hidx << lo_bits) | a
    return best_val, Tensor3(shape, best_idx)


def _greedy_perm(maps, R, shape, rng: random.Random, restarts: int):
    size = shape[0] * shape[1] * shape[2]
    best = (_doubled_objective(maps, R, Tensor3(shape)), Tensor3(shape))
    for _ in range(restarts):
        cur = Tensor3(shape, rng.getrandbits(size))
        val = _doubled_objective(maps, R, cur)
        while True:
            step = None
            for b in range(size):
                cand = Tensor3(shape, cur.bits ^ (1 << b))
                v = _doubled_objective(maps, R, cand)
                if v < val and (step is None or v < step[0]):
                    step = (v, cand)
            if step is None:
                break
            val, cur = step
        if val < best[0] or (val == best[0] and cur.bits < best[1].bits):
            best = (val, cur)
    return best


def dstar(
    h1: BitMatrix,
    h2: BitMatrix,
    h3: BitMatrix,
    strategy: str = "exhaustive",
    budget: int | None = DEFAULT_BUDGET,
    seed: int = 0,
    restarts: int = 32,
) -> DStarResult:
    """Minimum over M and index orders of |(Hi^2+Hk^2)M+R| + |(Hj^2+Hk^2)M+R| + |(Hi^2+Hj^2)M|/2.

    R is the plane through index 0 orthogonal to the axis of Hk.  The
    exhaustive strategy is exact; the greedy strategy gives an upper bound.
    """
    hs = (h1, h2, h3)
    for i, h in enumerate(hs, 1):
        if not h.is_symmetric():
            raise ValueError(f"H{i} must be symmetric")
    size = h1.ncols * h2.ncols * h3.ncols
    if strategy == "exhaustive":
        if size > 24:
            raise ValueError("exhaustive search needs n1*n2*n3 <= 24")
        if budget is not None and 6 * (1 << size) > budget:
            raise BudgetExceeded(f"exhaustive search needs {6 * (1 << size)} evaluations")
    elif strategy != "greedy":
        raise ValueError(f"unknown strategy {strategy!r}")
    rng = random.Random(seed)
    per: dict[tuple[int, int, int], tuple[Fraction, Tensor3]] = {}
    for perm in permutations(range(3)):
        shape, maps, R = _objective_maps(hs, perm)
        if strategy == "exhaustive":
            val, M = _exhaustive_perm(maps, R, shape)
        else:
            val, M = _greedy_perm(maps, R, shape, rng, restarts)
        per[tuple(p + 1 for p in perm)] = (Fraction(val, 2), M)
    value = min(v for v, _ in per.values())
    return DStarResult(value, strategy == "exhaustive", per, _max_row_weight(hs), strategy, seed)


# --- tightness construction ----------------------------------------------------


@dataclass
class TightnessResult:
    operator: PauliOperator
    weight: int
    bound: Fraction
    block_weights: dict[str, int]


def tightness_logical(code: XYZCode, M: Tensor3) -> TightnessResult:
    """Z logical from (S, T, U, V) = (xyM, x^2 M, yzM, xzM) times the A/B plane pair."""
    hs = (code.h1, code.h2, code.h3)
    for i, h in enumerate(hs, 1):
        if not h.is_symmetric():
            raise ValueError(f"H{i} must be symmetric")
    shape = code.block_shapes["A"]
    if M.shape != shape:
        raise ValueError(f"M must have shape {shape}")

    def ax(t, i, times=1):
        for _ in range(times):
            t = apply_axis(hs[i], t, i)
        return t

    S = ax(ax(M, 0), 1)
    T = ax(M, 0, 2)
    U = ax(ax(M, 1), 2)
    V = ax(ax(M, 0), 2)
    stab = code.stabilizer_element(S, T, U, V)
    op = stab * slice_pair_operator(code, "Z", ("A", "B"), 0)
    w = _max_row_weight(hs)
    R = plane_tensor(shape, 2, 0)
    xx, yy, zz = ax(M, 0, 2), ax(M, 1, 2), ax(M, 2, 2)
    bound = Fraction(w, 2) * (3 * (xx + yy).weight() + 3 * (xx + zz + R).weight() + (yy + zz + R).weight())
    block_weights = {}
    for b in ("A", "B", "C", "D"):
        xb, zb = code.block_parts(op, b)
        block_weights[b] = (xb | zb).weight()
    return TightnessResult(op, op.weight(), bound, block_weights)


# --- permutation invariance ------------------------------------------------------


def permutation_matrix(perm) -> BitMatrix:
    """Matrix sending basis vector i to basis vector perm[i]."""
    n = len(perm)
    rows = [0] * n
    for i, p in enumerate(perm):
        rows[p] |= 1 << i
    return BitMatrix(n, n, rows)


def permute_triple(hs, perms):
    """(pi_i H_i tau_i) for perms = [(pi_1, tau_1), (pi_2, tau_2), (pi_3, tau_3)]."""
    out = []
    for h, (pi, tau) in zip(hs, perms):
        out.append(permutation_matrix(pi) @ h @ permutation_matrix(tau))
    return tuple(out)


def remap_operator(code: XYZCode, new_code: XYZCode, perms, op: PauliOperator) -> PauliOperator:
    """Carry an operator of Q(H) to Q(pi H tau) by permuting each block's axes.

    A uses (tau1^T, tau2^T, tau3^T), B (pi1, pi2, tau3^T), C (pi1, tau2^T, pi3)
    and D (tau1^T, pi2, pi3).
    """
    P = [permutation_matrix(pi) for pi, _ in perms]
    Tt = [permutation_matrix(tau).T for _, tau in perms]
    axes = {
        "A": (Tt[0], Tt[1], Tt[2]),
        "B": (P[0], P[1], Tt[2]),
        "C": (P[0], Tt[1], P[2]),
        "D": (Tt[0], P[1], P[2]),
    }
    x = z = 0
    for b, mats in axes.items():
        xb, zb = code.block_parts(op, b)
        for a, m in enumerate(mats):
            xb = apply_axis(m, xb, a)
            zb = apply_axis(m, zb, a)
        off = new_code.block_offsets[b]
        x |= xb.bits << off
        z |= zb.bits << off
    return PauliOperator(new_code.N, x, z, (x & z).bit_count())


def random_permutations(ns, ms, rng: random.Random):
    out = []
    for n, m in zip(ns, ms):
        pi = list(range(m))
        tau = list(range(n))
        rng.shuffle(pi)
        rng.shuffle(tau)
        out.append((pi, tau))
    return out


@dataclass
class PermutationCheck:
    equal: bool
    d_original: int | None
    d_permuted: int | None
    remapped_weight_ok: bool


def permutation_invariance_check(h1, h2, h3, perms, cap: int, budget: int | None = DEFAULT_BUDGET) -> PermutationCheck:
    code = build(h1, h2, h3)
    new_hs = permute_triple((h1, h2, h3), perms)
    new_code = build(*new_hs)
    r1 = distance_capped(code, cap, budget)
    r2 = distance_capped(new_code, cap, budget)
    remap_ok = True
    if r1.best_logical_found is not None:
        mapped = remap_operator(code, new_code, perms, r1.best_logical_found)
        remap_ok = mapped.weight() == r1.best_logical_found.weight() and is_logical(new_code, mapped)
    return PermutationCheck(r1.exact_d == r2.exact_d, r1.exact_d, r2.exact_d, remap_ok)


# --- non-expanding errors --------------------------------------------------------


@dataclass
class NonExpandingError:
    P: BitMatrix
    Q: BitMatrix
    S: BitMatrix
    T: BitMatrix
    T_closed_form: BitMatrix


def nonexpanding_error(h1: BitMatrix, h2: BitMatrix, X: BitMatrix, k: int) -> NonExpandingError:
    """Error (P on an A slice, Q on a B slice) whose S syndrome vanishes identically."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if X.shape != (h1.nrows, h2.nrows):
        raise ValueError(f"X must be {h1.nrows}x{h2.nrows}")
    g1 = h1 @ h1.T
    g2 = h2 @ h2.T
    g1p = [BitMatrix.identity(g1.nrows)]
    g2p = [BitMatrix.identity(g2.nrows)]
    for _ in range(k):
        g1p.append(g1p[-1] @ g1)
        g2p.append(g2p[-1] @ g2)
    acc = BitMatrix.zeros(*X.shape)
    for l in range(k):
        acc = acc + g1p[l] @ X @ g2p[k - l - 1]
    P = h1.T @ acc @ h2
    Q = g1 @ acc
    S = h1 @ P + Q @ h2
    T = P @ h2.T + h1.T @ Q
    closed = h1.T @ (X @ g2p[k] + g1p[k] @ X)
    return NonExpandingError(P, Q, S, T, closed)


def embed_matrix_slice(shape, m: BitMatrix) -> Tensor3:
    """Place a 2-tensor on the k = 0 slice of a 3-tensor."""
    cells = [(i, j, 0) for i in range(m.nrows) for j in bits_of(m.rows[i])]
    return Tensor3.from_cells(shape, cells)


def nonexpanding_error_in_code(code: XYZCode, err: NonExpandingError):
    """Z^P on the A slice and Z^Q on the B slice, with its full syndrome."""
    op = code.block_operator("A", "Z", embed_matrix_slice(code.block_shapes["A"], err.P))
    op = op * code.block_operator("B", "Z", embed_matrix_slice(code.block_shapes["B"], err.Q))
    return op, syndrome(code, op)


__all__ = [
    "BudgetExceeded",
    "DStarResult",
    "DistanceReport",
    "NonExpandingError",
    "PermutationCheck",
    "TightnessResult",
    "describe_operator",
    "disjoint_representative_bound",
    "distance_capped",
    "dstar",
    "embed_matrix_slice",
    "equal_pair_logical",
    "is_logical",
    "nonexpanding_error",
    "nonexpanding_error_in_code",
    "permutation_invariance_check",
    "permutation_matrix",
    "permute_triple",
    "random_permutations",
    "remap_operator",
    "search_cost",
    "tightness_logical",
]
