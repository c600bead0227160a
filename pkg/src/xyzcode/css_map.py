"""Conversion of a stabilizer code on n qubits into a CSS code on 4n qubits.

Qubit q becomes qubits 4q .. 4q+3 in the order (anchor, X slot, Y slot, Z
slot).  A single-qubit Pauli with letter j maps to the anchor plus slot j,
using X operators for the X-type checks and Z operators for the Z-type checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .distance import DEFAULT_BUDGET, BudgetExceeded
from .f2core import BitMatrix, SpanBasis, bits_of, rank
from .pauli import PauliGroup, PauliOperator, first_anticommuting_pair
from .xyz_build import XYZCode, check_abelian


@dataclass(frozen=True)
class CssCode:
    hx: BitMatrix
    hz: BitMatrix
    n: int

    def __post_init__(self) -> None:
        if self.hx.ncols != self.n or self.hz.ncols != self.n:
            raise ValueError("check matrices must have n columns")

    def css_condition(self) -> bool:
        return all((a & b).bit_count() % 2 == 0 for a in self.hx.rows for b in self.hz.rows)


def _slot_bits(p: PauliOperator) -> int:
    """Support of phi_i(p) on the 4n qubits (same for every i)."""
    out = 0
    for q in bits_of(p.support):
        letter = "XYZ".index(p.letter(q)) + 1
        out |= (1 << (4 * q)) | (1 << (4 * q + letter))
    return out


def _generators_of(code) -> tuple[list[PauliOperator], int]:
    if isinstance(code, XYZCode):
        return list(code.generators.generators), code.N
    if isinstance(code, PauliGroup):
        return list(code.generators), code.n
    gens = list(code)
    if not gens:
        raise ValueError("empty generator list")
    return gens, gens[0].n


def css_convert(code: XYZCode | PauliGroup | Sequence[PauliOperator]) -> CssCode:
    """Four-body XXXX/ZZZZ checks per qubit plus the X and Z images of every generator."""
    gens, n = _generators_of(code)
    commuting = check_abelian(code) if isinstance(code, XYZCode) else first_anticommuting_pair(gens) is None
    if not commuting:
        raise ValueError("generators do not commute")
    four = [0b1111 << (4 * q) for q in range(n)]
    images = [_slot_bits(g) for g in gens]
    hx = BitMatrix(len(four) + len(images), 4 * n, four + images)
    hz = BitMatrix(len(four) + len(images), 4 * n, four + images)
    css = CssCode(hx, hz, 4 * n)
    if not css.css_condition():
        raise RuntimeError("converted checks violate the CSS condition")
    return css


def css_dimension(c: CssCode) -> int:
    if not c.css_condition():
        raise ValueError("hx hz^T != 0")
    return c.n - rank(c.hx) - rank(c.hz)


@dataclass
class CssDistanceReport:
    d: int | None
    d_x: int | None
    d_z: int | None
    cap: int
    witness_x: list[int] | None
    witness_z: list[int] | None
    even_per_group: bool | None
    lower_bound: int
    ops_enumerated: int = 0
    notes: list[str] = field(default_factory=list)


def _column_hashes(checks: BitMatrix, n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    rh = rng.integers(0, 2**63, size=max(1, checks.nrows), dtype=np.int64).astype(np.uint64)
    out = np.zeros(n, dtype=np.uint64)
    for r, row in enumerate(checks.rows):
        for c in bits_of(row):
            out[c] ^= rh[r]
    return out


def _combos(n: int, t: int, hashes: np.ndarray):
    if t == 0:
        return np.zeros((1, 0), np.int64), np.zeros(1, np.uint64)
    sites = np.array(list(combinations(range(n), t)), dtype=np.int64).reshape(-1, t)
    h = np.zeros(len(sites), dtype=np.uint64)
    for c in range(t):
        h ^= hashes[sites[:, c]]
    return sites, h


def _min_codeword_outside(checks: BitMatrix, stabs: BitMatrix, n: int, cap: int, budget, seed: int, spent: int):
    """Lightest vector in ker(checks) outside rowspace(stabs), up to weight cap."""
    hashes = _column_hashes(checks, n, seed)
    basis = SpanBasis()
    for r in stabs.rows:
        basis.add(r)
    tables: dict[int, tuple] = {}
    for w in range(1, cap + 1):
        a, b = w // 2, w - w // 2
        cost = comb(n, a) + comb(n, b)
        if budget is not None and spent + cost > budget:
            raise BudgetExceeded(f"CSS search at weight {w} needs about {cost} operations", w)
        spent += cost
        for t in (a, b):
            if t not in tables:
                s, h = _combos(n, t, hashes)
                order = np.argsort(h, kind="stable")
                tables[t] = ((s, h), (s[order], h[order]))
        (ls, lh), _ = tables[a]
        _, (rs, rh) = tables[b]
        lo = np.searchsorted(rh, lh, side="left")
        hi = np.searchsorted(rh, lh, side="right")
        counts = hi - lo
        best = None
        if counts.any():
            li = np.repeat(np.arange(len(lh)), counts)
            offs = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
            ri = np.repeat(lo, counts) + offs
            if a:
                keep = ls[li, -1] < rs[ri, 0]
                li, ri = li[keep], ri[keep]
            for i, j in zip(li.tolist(), ri.tolist()):
                sites = tuple(int(v) for v in ls[i]) + tuple(int(v) for v in rs[j])
                if best is not None and sites >= best:
                    continue
                v = 0
                for s in sites:
                    v |= 1 << s
                if any((row & v).bit_count() & 1 for row in checks.rows):
                    continue
                if not basis.contains(v):
                    best = sites
        if best is not None:
            return w, list(best), spent
    return None, None, spent


def css_distance_capped(c: CssCode, cap: int, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> CssDistanceReport:
    """min(d_X, d_Z) by exhaustive search up to weight cap on each side."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    try:
        # X-type logicals commute with the Z checks
        dx, wx, spent = _min_codeword_outside(c.hz, c.hx, c.n, cap, budget, seed, 0)
        dz, wz, spent = _min_codeword_outside(c.hx, c.hz, c.n, cap, budget, seed + 1, spent)
    except BudgetExceeded as exc:
        exc.partial = CssDistanceReport(None, None, None, cap, None, None, None, exc.partial or 1)
        raise
    found = [d for d in (dx, dz) if d is not None]
    d = min(found) if found else None
    even = None
    if c.n % 4 == 0 and found:
        even = True
        for w in (wx, wz):
            if w is None:
                continue
            for g in range(c.n // 4):
                if sum(1 for s in w if s // 4 == g) % 2:
                    even = False
    return CssDistanceReport(d, dx, dz, cap, wx, wz, even, d if d is not None else cap + 1, spent)


def format_alist(m: BitMatrix) -> str:
    """Sparse listing: header, column/row weights, then 1-based supports of columns and rows."""
    cols = [[r for r in range(m.nrows) if (m.rows[r] >> c) & 1] for c in range(m.ncols)]
    rows = [bits_of(r) for r in m.rows]
    lines = [
        f"{m.ncols} {m.nrows}",
        f"{max((len(c) for c in cols), default=0)} {max((len(r) for r in rows), default=0)}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in rows),
    ]
    lines += [" ".join(str(r + 1) for r in c) for c in cols]
    lines += [" ".join(str(c + 1) for c in r) for r in rows]
    return "\n".join(lines) + "\n"


__all__ = [
    "CssCode",
    "CssDistanceReport",
    "css_convert",
    "css_dimension",
    "css_distance_capped",
    "format_alist",
]
