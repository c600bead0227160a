"""XYZ product code of three parity-check matrices.

Qubits live in four blocks and checks in four check tensors:

    A: n1 x n2 x n3    B: m1 x m2 x n3    C: m1 x n2 x m3    D: n1 x m2 x m3
    S: m1 x n2 x n3    T: n1 x m2 x n3    U: n1 x n2 x m3    V: m1 x m2 x m3

A unit check tensor produces one generator.  Its action on each block is a
single Pauli letter on the image of the unit under one matrix along one axis
(see GENERATOR_ACTIONS).  Qubits are numbered block A first, then B, C, D,
each row-major; generators are numbered S cells first, then T, U, V.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .f2core import BitMatrix, F2Polynomial, bits_of, char_poly, kernel_basis, poly_gcd, rank
from .pauli import PauliGroup, PauliOperator, first_anticommuting_pair
from .tensor3 import Tensor3, axis_images, cell_of, flat_index, plane_tensor

BLOCKS = ("A", "B", "C", "D")
CHECKS = ("S", "T", "U", "V")

# check -> list of (block, letter, matrix name, axis); "h1t" is the transpose of h1
GENERATOR_ACTIONS: dict[str, tuple[tuple[str, str, str, int], ...]] = {
    "S": (("A", "X", "h1t", 0), ("B", "Y", "h2", 1), ("C", "Z", "h3", 2)),
    "T": (("A", "Y", "h2t", 1), ("B", "X", "h1", 0), ("D", "Z", "h3", 2)),
    "U": (("A", "Z", "h3t", 2), ("C", "X", "h1", 0), ("D", "Y", "h2", 1)),
    "V": (("B", "Z", "h3t", 2), ("C", "Y", "h2t", 1), ("D", "X", "h1t", 0)),
}


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


def circulant(exponents, n: int) -> BitMatrix:
    """Sum of Omega^e, where Omega maps basis vector j to j+1 mod n."""
    if n < 1:
        raise ValueError("circulant size must be positive")
    rows = [0] * n
    for e in exponents:
        e %= n
        for j in range(n):
            rows[(j + e) % n] ^= 1 << j
    return BitMatrix(n, n, rows)


def parse_matrix_text(text: str) -> BitMatrix:
    """Parse "m n" followed by m rows of 0/1, or a single "circ n: e1,e2,..." line."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty matrix description", 1)
    lineno, head = lines[0]
    m = re.fullmatch(r"circ\s+(\d+)\s*:\s*(-?\d+(?:\s*,\s*-?\d+)*)?", head)
    if m:
        if len(lines) > 1:
            raise ParseError("unexpected content after circulant line", lines[1][0])
        n = int(m.group(1))
        if n < 1:
            raise ParseError("circulant size must be positive", lineno)
        exps = [int(e) for e in m.group(2).split(",")] if m.group(2) else []
        return circulant(exps, n)
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"expected 'm n' header, got {head!r}", lineno)
    nr, nc = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != nr:
        where = body[nr][0] if len(body) > nr else (body[-1][0] if body else lineno)
        raise ParseError(f"expected {nr} matrix rows, found {len(body)}", where)
    rows = []
    for ln, row in body:
        row = row.replace(" ", "")
        if len(row) != nc or set(row) - {"0", "1"}:
            raise ParseError(f"expected {nc} characters from {{0,1}}, got {row!r}", ln)
        rows.append(sum(1 << j for j, ch in enumerate(row) if ch == "1"))
    return BitMatrix(nr, nc, rows)


def format_matrix_text(h: BitMatrix) -> str:
    out = [f"{h.nrows} {h.ncols}"]
    for r in h.rows:
        out.append("".join(str((r >> j) & 1) for j in range(h.ncols)))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class Syndrome:
    S: Tensor3
    T: Tensor3
    U: Tensor3
    V: Tensor3

    def weight(self) -> int:
        return self.S.weight() + self.T.weight() + self.U.weight() + self.V.weight()

    def is_zero(self) -> bool:
        return not (self.S.bits or self.T.bits or self.U.bits or self.V.bits)

    def __iter__(self):
        return iter((self.S, self.T, self.U, self.V))


class XYZCode:
    """Stabilizer code built from (h1, h2, h3); immutable after construction."""

    def __init__(self, h1: BitMatrix, h2: BitMatrix, h3: BitMatrix):
        for h in (h1, h2, h3):
            if h.nrows == 0 or h.ncols == 0:
                raise ValueError("parity-check matrices must be nonempty")
        self.h1, self.h2, self.h3 = h1, h2, h3
        n1, n2, n3 = h1.ncols, h2.ncols, h3.ncols
        m1, m2, m3 = h1.nrows, h2.nrows, h3.nrows
        self.n = (n1, n2, n3)
        self.m = (m1, m2, m3)
        self.block_shapes = {
            "A": (n1, n2, n3),
            "B": (m1, m2, n3),
            "C": (m1, n2, m3),
            "D": (n1, m2, m3),
        }
        self.check_shapes = {
            "S": (m1, n2, n3),
            "T": (n1, m2, n3),
            "U": (n1, n2, m3),
            "V": (m1, m2, m3),
        }
        self.block_offsets: dict[str, int] = {}
        off = 0
        for b in BLOCKS:
            self.block_offsets[b] = off
            off += _size(self.block_shapes[b])
        self.N = off
        self.check_offsets: dict[str, int] = {}
        off = 0
        for c in CHECKS:
            self.check_offsets[c] = off
            off += _size(self.check_shapes[c])
        self.num_generators = off
        self._mats = {
            "h1": h1, "h2": h2, "h3": h3,
            "h1t": h1.T, "h2t": h2.T, "h3t": h3.T,
        }
        self._build_generators()

    def _build_generators(self) -> None:
        gens = []
        xmask = [0] * self.N  # generators with an X component on each qubit
        zmask = [0] * self.N
        images = {k: axis_images(v) for k, v in self._mats.items()}
        g = 0
        for check in CHECKS:
            shape = self.check_shapes[check]
            for idx in range(_size(shape)):
                cell = cell_of(shape, idx)
                x = z = 0
                for block, letter, mat, axis in GENERATOR_ACTIONS[check]:
                    bshape = self.block_shapes[block]
                    base = self.block_offsets[block]
                    c = list(cell)
                    supp = 0
                    for r in images[mat][cell[axis]]:
                        c[axis] = r
                        supp ^= 1 << (base + flat_index(bshape, *c))
                    if letter in "XY":
                        x |= supp
                    if letter in "ZY":
                        z |= supp
                ny = (x & z).bit_count()
                gens.append(PauliOperator(self.N, x, z, ny))
                gbit = 1 << g
                for q in bits_of(x):
                    xmask[q] |= gbit
                for q in bits_of(z):
                    zmask[q] |= gbit
                g += 1
        self.generators = PauliGroup(gens, self.N)
        self._xmask = xmask
        self._zmask = zmask

    # --- indexing ---------------------------------------------------------

    def qubit_index(self, block: str, i: int, j: int, k: int) -> int:
        shape = self.block_shapes[block]
        if not (0 <= i < shape[0] and 0 <= j < shape[1] and 0 <= k < shape[2]):
            raise ValueError(f"cell {(i, j, k)} outside block {block} of shape {shape}")
        return self.block_offsets[block] + flat_index(shape, i, j, k)

    def qubit_cell(self, q: int) -> tuple[str, tuple[int, int, int]]:
        if not 0 <= q < self.N:
            raise ValueError(f"qubit {q} out of range")
        for b in reversed(BLOCKS):
            if q >= self.block_offsets[b]:
                return b, cell_of(self.block_shapes[b], q - self.block_offsets[b])
        raise AssertionError("unreachable")

    def generator_index(self, check: str, i: int, j: int, k: int) -> int:
        return self.check_offsets[check] + flat_index(self.check_shapes[check], i, j, k)

    def describe_qubit(self, q: int) -> str:
        b, c = self.qubit_cell(q)
        return f"{b}[{c[0]},{c[1]},{c[2]}]"

    # --- operators --------------------------------------------------------

    def block_operator(self, block: str, letter: str, t: Tensor3) -> PauliOperator:
        """letter (X, Y or Z) on the cells of t inside one block."""
        if t.shape != self.block_shapes[block]:
            raise ValueError(f"tensor shape {t.shape} does not match block {block} {self.block_shapes[block]}")
        supp = t.bits << self.block_offsets[block]
        x = supp if letter in "XY" else 0
        z = supp if letter in "ZY" else 0
        if letter not in "XYZ":
            raise ValueError(f"unknown letter {letter!r}")
        return PauliOperator(self.N, x, z, (x & z).bit_count())

    def block_parts(self, p: PauliOperator, block: str) -> tuple[Tensor3, Tensor3]:
        """(x, z) support tensors of p restricted to one block."""
        shape = self.block_shapes[block]
        size = _size(shape)
        off = self.block_offsets[block]
        mask = (1 << size) - 1
        return Tensor3(shape, (p.x >> off) & mask), Tensor3(shape, (p.z >> off) & mask)

    def stabilizer_element(self, S: Tensor3, T: Tensor3, U: Tensor3, V: Tensor3) -> PauliOperator:
        """Product of the generators selected by the check tensors (exact phase)."""
        word = 0
        for name, t in zip(CHECKS, (S, T, U, V)):
            if t.shape != self.check_shapes[name]:
                raise ValueError(f"check tensor {name} has shape {t.shape}, expected {self.check_shapes[name]}")
            word |= t.bits << self.check_offsets[name]
        return self.generators.word_product(word)

    def syndrome_bits(self, e: PauliOperator) -> int:
        if e.n != self.N:
            raise ValueError(f"operator acts on {e.n} qubits, code has {self.N}")
        s = 0
        xm, zm = self._xmask, self._zmask
        for q in bits_of(e.x):
            s ^= zm[q]
        for q in bits_of(e.z):
            s ^= xm[q]
        return s

    def split_syndrome(self, bits: int) -> Syndrome:
        parts = []
        for c in CHECKS:
            shape = self.check_shapes[c]
            parts.append(Tensor3(shape, (bits >> self.check_offsets[c]) & ((1 << _size(shape)) - 1)))
        return Syndrome(*parts)

    def site_syndromes(self) -> list[tuple[int, int, int]]:
        """Per qubit, the syndrome bitsets of X, Y and Z on that qubit."""
        return [(z, x ^ z, x) for x, z in zip(self._xmask, self._zmask)]

    @cached_property
    def symplectic_rank(self) -> int:
        return self.generators.symplectic_rank()

    def is_valid(self) -> bool:
        return check_abelian(self)


def _size(shape) -> int:
    return shape[0] * shape[1] * shape[2]


def build(h1: BitMatrix, h2: BitMatrix, h3: BitMatrix) -> XYZCode:
    return XYZCode(h1, h2, h3)


def syndrome(code: XYZCode, e: PauliOperator) -> Syndrome:
    return code.split_syndrome(code.syndrome_bits(e))


def check_abelian(code: XYZCode) -> bool:
    """All generators pairwise commute; each generator's syndrome collects its products with all others."""
    return all(code.syndrome_bits(g) == 0 for g in code.generators.generators)


def check_abelian_pairwise(generators) -> bool:
    return first_anticommuting_pair(list(generators)) is None


# --- membership in the dimension-one family ---------------------------------


def _all_ones_kernel_condition(h: BitMatrix) -> bool:
    n = h.ncols
    ident = BitMatrix.identity(n)
    stacked = (h + ident).vstack(h.T + ident)
    ker = kernel_basis(stacked)
    return len(ker) == 1 and ker[0].bits == (1 << n) - 1


def in_T(h1: BitMatrix, h2: BitMatrix, h3: BitMatrix) -> tuple[bool, str]:
    """Membership test for the dimension-one family; returns (verdict, diagnostic)."""
    hs = (h1, h2, h3)
    for i, h in enumerate(hs, 1):
        if h.nrows != h.ncols:
            return False, f"H{i} is not square ({h.nrows}x{h.ncols})"
        if rank(h) != h.nrows:
            return False, f"H{i} is singular"
    for i, h in enumerate(hs, 1):
        if h.ncols % 2 == 0:
            return False, f"H{i} has even size {h.ncols}"
    for i, h in enumerate(hs, 1):
        if not _all_ones_kernel_condition(h):
            return False, f"H{i}: common fixed vectors of H and H^T are not exactly the all-ones vector"
    grams = [h @ h.T for h in hs]
    polys = [char_poly(g) for g in grams]
    g = poly_gcd(poly_gcd(polys[0], polys[1]), polys[2])
    x_plus_1 = F2Polynomial(0b11)
    rest = g
    while not rest.is_zero() and rest.degree > 0 and x_plus_1.divides(rest):
        rest = rest // x_plus_1
    if rest.coeffs != 1:
        return False, f"characteristic polynomials share factors other than x+1 (gcd {g})"
    if g.degree < 1:
        return False, "eigenvalue 1 is not common to all three Gram matrices"
    for i, gm in enumerate(grams, 1):
        kd = gm.ncols - rank(gm + BitMatrix.identity(gm.ncols))
        if kd != 1:
            return False, f"H{i} H{i}^T has eigenvalue 1 with geometric multiplicity {kd}"
    return True, "ok"


# --- logical operators for the dimension-one family -------------------------

# family -> (letter, fixed axis, first pair of blocks, second pair of blocks)
LOGICAL_FAMILIES = {
    "X": ("X", 0, ("A", "D"), ("B", "C")),
    "Y": ("Y", 1, ("A", "C"), ("B", "D")),
    "Z": ("Z", 2, ("A", "B"), ("C", "D")),
}


def slice_pair_operator(code: XYZCode, family: str, blocks: tuple[str, str], index: int) -> PauliOperator:
    """One letter on the plane (fixed axis == index) of two blocks."""
    letter, axis, _, _ = LOGICAL_FAMILIES[family]
    op = PauliOperator.identity(code.N)
    for b in blocks:
        op = op * code.block_operator(b, letter, plane_tensor(code.block_shapes[b], axis, index))
    return op


def _require_T(code: XYZCode) -> None:
    ok, why = in_T(code.h1, code.h2, code.h3)
    if not ok:
        raise ValueError(f"triple is outside the dimension-one family: {why}")


def logical_representatives(code: XYZCode, check: bool = True) -> tuple[PauliOperator, PauliOperator, PauliOperator]:
    """The X-, Y- and Z-type slice pairs through index 0."""
    if check:
        _require_T(code)
    return tuple(slice_pair_operator(code, f, LOGICAL_FAMILIES[f][2], 0) for f in "XYZ")


def translated_representatives(code: XYZCode, family: str, check: bool = True) -> list[PauliOperator]:
    """All 2 n_i slice-pair representatives of one logical (both block pairs, every index)."""
    if check:
        _require_T(code)
    _, axis, pair1, pair2 = LOGICAL_FAMILIES[family]
    n = code.n[axis]
    return [slice_pair_operator(code, family, pair, i) for pair in (pair1, pair2) for i in range(n)]


# --- relation system -------------------------------------------------------


def relation_system_matrix(code: XYZCode) -> BitMatrix:
    """Linear system on (S, T, U, V) whose kernel is the set of generator relations.

    Rows are eight block equations: on A, H1^T S = H2^T T = H3^T U; on B,
    H1 T = H2 S = H3^T V; on C, H1 U = H2^T V = H3 S; on D, H1^T V = H2 U = H3 T.
    """
    # (block, [(check, matrix, axis) for the three terms in order])
    eqs = []
    for block in BLOCKS:
        terms = []
        for check in CHECKS:
            for b, _letter, mat, axis in GENERATOR_ACTIONS[check]:
                if b == block:
                    terms.append((check, mat, axis))
        # order the terms by letter so the rows read X-term = Y-term = Z-term
        terms.sort(key=lambda t: _letter_of(t[0], block))
        eqs.append((block, terms))
    row_off = 0
    eq_offsets = []
    for block, _ in eqs:
        size = _size(code.block_shapes[block])
        eq_offsets.append((row_off, row_off + size))
        row_off += 2 * size
    nrows = row_off
    images = {k: axis_images(v) for k, v in code._mats.items()}
    columns = []
    for check in CHECKS:
        shape = code.check_shapes[check]
        for idx in range(_size(shape)):
            cell = cell_of(shape, idx)
            col = 0
            for (block, terms), (o1, o2) in zip(eqs, eq_offsets):
                bshape = code.block_shapes[block]
                for pos, (c, mat, axis) in enumerate(terms):
                    if c != check:
                        continue
                    supp = 0
                    cc = list(cell)
                    for r in images[mat][cell[axis]]:
                        cc[axis] = r
                        supp ^= 1 << flat_index(bshape, *cc)
                    # term 0 enters eq1, term 1 enters eq1 and eq2, term 2 enters eq2
                    if pos in (0, 1):
                        col ^= supp << o1
                    if pos in (1, 2):
                        col ^= supp << o2
            columns.append(col)
    return BitMatrix.from_columns(nrows, columns)


def _letter_of(check: str, block: str) -> int:
    for b, letter, _m, _a in GENERATOR_ACTIONS[check]:
        if b == block:
            return "XYZ".index(letter)
    raise KeyError((check, block))


def relation_count(code: XYZCode) -> int:
    m = relation_system_matrix(code)
    return m.ncols - rank(m)


__all__ = [
    "BLOCKS",
    "CHECKS",
    "GENERATOR_ACTIONS",
    "LOGICAL_FAMILIES",
    "ParseError",
    "Syndrome",
    "XYZCode",
    "build",
    "check_abelian",
    "check_abelian_pairwise",
    "circulant",
    "format_matrix_text",
    "in_T",
    "logical_representatives",
    "parse_matrix_text",
    "relation_count",
    "relation_system_matrix",
    "slice_pair_operator",
    "syndrome",
    "translated_representatives",
]
