"""Translation-invariant codes in the ring F2[x,y,z]/(x^n1+1, y^n2+1, z^n3+1).

A ring element is stored as a binary numpy array of shape (n1, n2, n3); a 1 at
(a, b, c) is the monomial x^a y^b z^c.  This is the same layout as a Tensor3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .f2core import BitMatrix, rank
from .pauli import PauliOperator
from .tensor3 import Tensor3, plane_tensor
from .xyz_build import ParseError, XYZCode, build, circulant, syndrome

Moduli = tuple[int, int, int]


class RingPoly3:
    """Element of the quotient ring with exponents reduced modulo the moduli."""

    __slots__ = ("moduli", "coeffs")

    def __init__(self, moduli: Moduli, coeffs=None):
        moduli = tuple(int(m) for m in moduli)
        if len(moduli) != 3 or any(m < 1 for m in moduli):
            raise ValueError(f"bad moduli {moduli}")
        self.moduli = moduli
        if coeffs is None:
            coeffs = np.zeros(moduli, dtype=np.uint8)
        else:
            coeffs = np.asarray(coeffs, dtype=np.uint8) & 1
            if coeffs.shape != moduli:
                raise ValueError(f"coefficient array shape {coeffs.shape} != moduli {moduli}")
        self.coeffs = coeffs

    @classmethod
    def from_terms(cls, moduli: Moduli, terms) -> "RingPoly3":
        """Sum of monomials x^a y^b z^c; repeated terms cancel."""
        p = cls(moduli)
        for a, b, c in terms:
            p.coeffs[a % moduli[0], b % moduli[1], c % moduli[2]] ^= 1
        return p

    @classmethod
    def monomial(cls, moduli: Moduli, a: int = 0, b: int = 0, c: int = 0) -> "RingPoly3":
        return cls.from_terms(moduli, [(a, b, c)])

    @classmethod
    def one(cls, moduli: Moduli) -> "RingPoly3":
        return cls.monomial(moduli)

    @classmethod
    def univariate(cls, moduli: Moduli, axis: int, exponents) -> "RingPoly3":
        terms = []
        for e in exponents:
            t = [0, 0, 0]
            t[axis] = e
            terms.append(tuple(t))
        return cls.from_terms(moduli, terms)

    @classmethod
    def from_tensor(cls, t: Tensor3) -> "RingPoly3":
        return cls(t.shape, t.to_array())

    def to_tensor(self) -> Tensor3:
        return Tensor3.from_array(self.coeffs)

    def terms(self) -> list[tuple[int, int, int]]:
        return [tuple(int(v) for v in idx) for idx in np.argwhere(self.coeffs)]

    def weight(self) -> int:
        return int(self.coeffs.sum())

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def _check(self, other: "RingPoly3") -> None:
        if self.moduli != other.moduli:
            raise ValueError(f"moduli mismatch {self.moduli} vs {other.moduli}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingPoly3)
            and self.moduli == other.moduli
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.moduli, self.coeffs.tobytes()))

    def __add__(self, other: "RingPoly3") -> "RingPoly3":
        self._check(other)
        return RingPoly3(self.moduli, self.coeffs ^ other.coeffs)

    def __mul__(self, other: "RingPoly3") -> "RingPoly3":
        return ring_mul(self, other)

    def shift(self, a: int = 0, b: int = 0, c: int = 0) -> "RingPoly3":
        """Multiply by the monomial x^a y^b z^c."""
        return RingPoly3(self.moduli, np.roll(self.coeffs, (a, b, c), axis=(0, 1, 2)))

    def square(self) -> "RingPoly3":
        """Frobenius map P(x, y, z) -> P(x^2, y^2, z^2)."""
        return self.substitute((2, 2, 2))

    def substitute(self, factors: tuple[int, int, int]) -> "RingPoly3":
        """Exponent remap (a, b, c) -> (fa*a, fb*b, fc*c) modulo the moduli."""
        return RingPoly3.from_terms(
            self.moduli,
            [(a * factors[0], b * factors[1], c * factors[2]) for a, b, c in self.terms()],
        )

    def __pow__(self, k: int) -> "RingPoly3":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = RingPoly3.one(self.moduli)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base.square()
        return result

    def __repr__(self) -> str:
        return f"RingPoly3({self.moduli}, {self.terms()})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for a, b, c in self.terms():
            mono = "".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("x", a), ("y", b), ("z", c)) if e
            )
            parts.append(mono or "1")
        return "+".join(parts)


def ring_mul(a: RingPoly3, b: RingPoly3) -> RingPoly3:
    """Product in the quotient ring (cyclic convolution over GF(2))."""
    a._check(b)
    if a.weight() > b.weight():
        a, b = b, a
    out = np.zeros(a.moduli, dtype=np.uint8)
    for t in a.terms():
        out ^= np.roll(b.coeffs, t, axis=(0, 1, 2))
    return RingPoly3(a.moduli, out)


def circulant_of(exponents, n: int) -> BitMatrix:
    """Sum of Omega^e over the exponents, with Omega|j> = |j+1 mod n>."""
    return circulant([e % n for e in exponents], n)


def polynomial_of(m: BitMatrix) -> list[int]:
    """Exponents of a circulant matrix (read from its first column)."""
    if m.nrows != m.ncols:
        raise ValueError("circulant matrices are square")
    n = m.ncols
    exps = [r for r in range(n) if (m.rows[r] >> 0) & 1]
    if circulant_of(exps, n) != m:
        raise ValueError("matrix is not circulant")
    return exps


def _reduce_exps(exps, n: int) -> list[int]:
    """Exponents mod n with GF(2) cancellation, sorted."""
    out: set[int] = set()
    for e in exps:
        out ^= {e % n}
    return sorted(out)


@dataclass(frozen=True)
class CyclicSpec:
    moduli: Moduli
    p1: tuple[int, ...]
    p2: tuple[int, ...]
    p3: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.moduli) != 3 or any(n < 1 for n in self.moduli):
            raise ValueError(f"bad moduli {self.moduli}")
        for name, n in zip(("p1", "p2", "p3"), self.moduli):
            object.__setattr__(self, name, tuple(_reduce_exps(getattr(self, name), n)))

    @property
    def polys(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        return (self.p1, self.p2, self.p3)

    def q(self, i: int) -> list[int]:
        """Exponents of Q_i = (1 + P_i)^2."""
        n = self.moduli[i]
        one_plus = _reduce_exps(list(self.polys[i]) + [0], n)
        return _reduce_exps([2 * e for e in one_plus], n)

    @property
    def q1(self) -> list[int]:
        return self.q(0)

    @property
    def q2(self) -> list[int]:
        return self.q(1)

    @property
    def q3(self) -> list[int]:
        return self.q(2)

    def matrices(self) -> tuple[BitMatrix, BitMatrix, BitMatrix]:
        return tuple(circulant_of(p, n) for p, n in zip(self.polys, self.moduli))

    def code(self) -> XYZCode:
        return build(*self.matrices())

    def ring_q(self, i: int, moduli: Moduli | None = None) -> RingPoly3:
        return RingPoly3.univariate(moduli or self.moduli, i, self.q(i))


def parse_cyclic_spec(text: str) -> CyclicSpec:
    """Parse lines "n1 n2 n3", "P1: e,e,...", "P2: ...", "P3: ..."; '#' starts a comment."""
    moduli = None
    polys: dict[str, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"(P[123])\s*:\s*(.*)", line)
        if m:
            key, body = m.groups()
            if key in polys:
                raise ParseError(f"duplicate {key}", lineno)
            try:
                polys[key] = [int(tok) for tok in body.replace(",", " ").split()]
            except ValueError:
                raise ParseError(f"bad exponent list {body!r}", lineno) from None
            continue
        if moduli is not None:
            raise ParseError(f"unexpected line {line!r}", lineno)
        try:
            vals = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"bad moduli line {line!r}", lineno) from None
        if len(vals) != 3 or any(v < 1 for v in vals):
            raise ParseError("moduli line needs three positive integers", lineno)
        moduli = tuple(vals)
    if moduli is None:
        raise ParseError("missing moduli line")
    for key in ("P1", "P2", "P3"):
        if key not in polys:
            raise ParseError(f"missing {key}")
    return CyclicSpec(moduli, tuple(polys["P1"]), tuple(polys["P2"]), tuple(polys["P3"]))


def format_cyclic_spec(spec: CyclicSpec) -> str:
    lines = [" ".join(str(n) for n in spec.moduli)]
    for i, p in enumerate(spec.polys, 1):
        lines.append(f"P{i}: " + ",".join(str(e) for e in p))
    return "\n".join(lines) + "\n"


def chamon_spec(n1: int, n2: int, n3: int) -> CyclicSpec:
    return CyclicSpec((n1, n2, n3), (0, 1), (0, 1), (0, 1))


def xyz3d_spec(n1: int, n2: int, n3: int) -> CyclicSpec:
    return CyclicSpec((n1, n2, n3), (0, 1, -1), (0, 1, -1), (0, 1, -1))


# --- fractal operators ------------------------------------------------------------


@dataclass
class FractalResult:
    operator: RingPoly3
    image: RingPoly3
    image_weight: int
    bound: int
    closed_form_ok: bool

    @property
    def bound_ok(self) -> bool:
        return self.image_weight <= self.bound


def _pair_moduli(spec: CyclicSpec, axes: tuple[int, int]) -> Moduli:
    mod = [1, 1, 1]
    for a in axes:
        mod[a] = spec.moduli[a]
    return tuple(mod)


def _pair_sum(spec: CyclicSpec, axes: tuple[int, int]) -> tuple[RingPoly3, RingPoly3, Moduli]:
    i, j = axes
    if i == j or not {i, j} <= {0, 1, 2}:
        raise ValueError(f"axes must be two distinct values in 0..2, got {axes}")
    mod = _pair_moduli(spec, axes)
    return spec.ring_q(i, mod), spec.ring_q(j, mod), mod


def fractal_operator(spec: CyclicSpec, axes: tuple[int, int] = (0, 1), p: int = 1) -> FractalResult:
    """(Q_i + Q_j)^(2^p - 1) in the two-variable ring, and its image under multiplication by Q_i + Q_j.

    The image equals Q_i(x^(2^p)) + Q_j(y^(2^p)), so its weight is at most |Q_i| + |Q_j|.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    qi, qj, mod = _pair_sum(spec, axes)
    base = qi + qj
    op = RingPoly3.one(mod)
    term = base
    for _ in range(p):
        op = op * term
        term = term.square()
    image = op * base
    f = 1 << p
    closed = qi.substitute((f, f, f)) + qj.substitute((f, f, f))
    return FractalResult(op, image, image.weight(), qi.weight() + qj.weight(), image == closed)


def phi_matrix(spec: CyclicSpec, axes: tuple[int, int] = (0, 1)) -> BitMatrix:
    """Matrix of multiplication by Q_i + Q_j on the two-variable ring (monomial basis)."""
    qi, qj, mod = _pair_sum(spec, axes)
    base = qi + qj
    size = mod[0] * mod[1] * mod[2]
    cols = []
    for idx in range(size):
        a, b, c = np.unravel_index(idx, mod)
        img = base.shift(int(a), int(b), int(c)).coeffs.reshape(-1)
        v = 0
        for t in np.flatnonzero(img):
            v |= 1 << int(t)
        cols.append(v)
    return BitMatrix.from_columns(size, cols)


def phi_kernel_dimension(spec: CyclicSpec, axes: tuple[int, int] = (0, 1)) -> int:
    m = phi_matrix(spec, axes)
    return m.ncols - rank(m)


def _require_frobenius_fixed(n: int) -> None:
    if n % 2 == 0:
        raise ValueError(f"n3 = {n} must be odd")
    if pow(2, n - 1, n) != 1 % n:
        raise ValueError(f"2^(n3-1) is not 1 mod n3 for n3 = {n}")


@dataclass
class RowCollapser:
    operator: RingPoly3
    image: RingPoly3
    closed_form: RingPoly3

    @property
    def single_row(self) -> bool:
        """Image only has monomials free of z."""
        return not self.image.coeffs[:, :, 1:].any()


def p13_row_collapser(spec: CyclicSpec) -> RowCollapser:
    """P13 = (Q1 + Q3)^(2^(n3-1) - 1) + 1, whose image under Q1 + Q3 is Q1^(2^(n3-1)) + Q1.

    The power is a product of n3 - 1 Frobenius images of Q1 + Q3.
    """
    n3 = spec.moduli[2]
    _require_frobenius_fixed(n3)
    q1, q3, mod = _pair_sum(spec, (0, 2))
    base = q1 + q3
    op = RingPoly3.one(mod)
    term = base
    for _ in range(n3 - 1):
        op = op * term
        term = term.square()
    op = op + RingPoly3.one(mod)
    image = op * base
    q1_pow = q1
    for _ in range(n3 - 1):
        q1_pow = q1_pow.square()
    return RowCollapser(op, image, q1_pow + q1)


# --- the 3D code with P_i = 1 + x + 1/x ---------------------------------------------


def _require_3dxyz(moduli: Moduli, coprime: bool) -> None:
    for n in moduli:
        if n % 2 == 0 or n % 3 == 0:
            raise ValueError(f"size {n} must be odd and not a multiple of 3")
    if coprime:
        n1, n2, n3 = moduli
        if gcd(n1, n2) != 1 or gcd(n1, n3) != 1 or gcd(n2, n3) != 1:
            raise ValueError(f"sizes {moduli} must be pairwise coprime")


def change_of_variables(p: RingPoly3) -> RingPoly3:
    """x -> x^((n1+1)/2), y -> y^((n2+1)/2), z -> z^((n3+1)/2); a permutation of monomials."""
    for n in p.moduli:
        if n % 2 == 0:
            raise ValueError("change of variables needs odd moduli")
    return p.substitute(tuple((n + 1) // 2 for n in p.moduli))


def horizontal_plane(moduli: Moduli) -> RingPoly3:
    """R = sum of x^i y^j: the plane z^0."""
    return RingPoly3.from_tensor(plane_tensor(moduli, 2, 0))


def dmin3d_objective(spec: CyclicSpec, p: RingPoly3) -> int:
    """|(1+xy)(1+x/y)P| + |(1+xz)(1+x/z)P + R| with P in the remapped variables."""
    if spec.polys != xyz3d_spec(*spec.moduli).polys:
        raise ValueError("objective is defined for P_i = 1 + x + 1/x")
    _require_3dxyz(spec.moduli, coprime=True)
    if p.moduli != spec.moduli:
        raise ValueError("polynomial moduli do not match the cyclic code")
    mod = spec.moduli
    f12 = RingPoly3.from_terms(mod, [(0, 0, 0), (1, 1, 0)]) * RingPoly3.from_terms(mod, [(0, 0, 0), (1, -1, 0)])
    f13 = RingPoly3.from_terms(mod, [(0, 0, 0), (1, 0, 1)]) * RingPoly3.from_terms(mod, [(0, 0, 0), (1, 0, -1)])
    return (f12 * p).weight() + (f13 * p + horizontal_plane(mod)).weight()


def q_objective(spec: CyclicSpec, p: RingPoly3) -> int:
    """|(Q1+Q2)P| + |(Q1+Q3)P + R| in the original variables."""
    q1, q2, q3 = (spec.ring_q(i) for i in range(3))
    return ((q1 + q2) * p).weight() + ((q1 + q3) * p + horizontal_plane(spec.moduli)).weight()


def diagonal_sum(moduli: Moduli) -> RingPoly3:
    """Sum over j < n2 of (xy)^j."""
    return RingPoly3.from_terms(moduli, [(j, j, 0) for j in range(moduli[1])])


def slice_product_candidate(spec: CyclicSpec, p13: RingPoly3) -> tuple[RingPoly3, int]:
    """P = (sum_j (xy)^j) P13(x, z) and the bound 2|(1 + x^n2) P13|."""
    mod = spec.moduli
    if p13.moduli != mod:
        raise ValueError("P13 must live in the full ring")
    if p13.coeffs[:, 1:, :].any():
        raise ValueError("P13 must not depend on y")
    p = diagonal_sum(mod) * p13
    bound = 2 * (RingPoly3.from_terms(mod, [(0, 0, 0), (mod[1], 0, 0)]) * p13).weight()
    return p, bound


def dim_claim_3dxyz(n1: int, n2: int, n3: int) -> int:
    """4(gcd(n1, n2, n3) - 1) + 1 for odd sizes that are not multiples of 3."""
    _require_3dxyz((n1, n2, n3), coprime=False)
    return 4 * (gcd(gcd(n1, n2), n3) - 1) + 1


def xyz3d_matrix(n: int) -> BitMatrix:
    """1 + Omega + Omega^T of size n."""
    return circulant_of([0, 1, -1], n)


def root_solution_count(k: int, l: int, m: int, signed: bool = True) -> int:
    """Count (a, b, c) with a/k = +-b/l = +-c/m mod 1, i.e. x^a = y^(+-b) = z^(+-c) for primitive roots.

    With signed=False only x^a = y^b = z^c is counted.
    """
    count = 0
    L = k * l * m
    for a in range(k):
        ta = a * l * m % L
        for b in range(l):
            tb = b * k * m
            if not (ta == tb % L or (signed and ta == (-tb) % L)):
                continue
            for c in range(m):
                tc = c * k * l
                if ta == tc % L or (signed and ta == (-tc) % L):
                    count += 1
    return count


# --- Chamon square-root construction ------------------------------------------------


@dataclass
class ChamonSqrtResult:
    moduli: Moduli
    order: tuple[int, int, int]
    m1: int
    w1: int
    q1: int
    p_prime: RingPoly3
    p_double: RingPoly3
    objective: int
    bound: int
    r: int = 0
    s: int = 0
    operator: PauliOperator | None = None
    literal_weight: int | None = None
    zero_syndrome: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def bound_ok(self) -> bool:
        return self.objective <= self.bound


def chamon_objective(p: RingPoly3) -> int:
    """|(1 + x/y)P| + |(1 + x/z)P + R|."""
    mod = p.moduli
    a = RingPoly3.from_terms(mod, [(0, 0, 0), (1, -1, 0)]) * p
    b = RingPoly3.from_terms(mod, [(0, 0, 0), (1, 0, -1)]) * p + horizontal_plane(mod)
    return a.weight() + b.weight()


def _geometric(mod: Moduli, step: tuple[int, int, int], count: int) -> RingPoly3:
    return RingPoly3.from_terms(mod, [(step[0] * i, step[1] * i, step[2] * i) for i in range(count)])


def _chamon_single(n1: int, n2: int, n3: int, s_limit: int | None):
    mod = (n1, n2, n3)
    m1 = (n3 * pow(n2, -1, n1)) % n1 if n1 > 1 else 0
    w1 = 2 * m1 if 2 * m1 <= n1 else 2 * (n1 - m1)
    q1 = n1 // w1 if w1 else 0
    core = _geometric(mod, (1, -1, 0), n2) * _geometric(mod, (1, 0, -1), n3)
    p = _geometric(mod, (n2, 0, 0), m1) * core
    p_prime = _geometric(mod, (2 * m1 * n2, 0, 0), q1) * p
    bound = 2 * q1 * n3 + n2 * (n1 - q1 * w1)
    best = (chamon_objective(p_prime), 0, 0, RingPoly3(mod))
    L = n1 - q1 * w1
    if s_limit is None:
        s_limit = 2 * isqrt(n1) + 2
    for s in range(1, s_limit + 1):
        r = (s * m1) % n1
        if r == 0 or r > L:
            continue
        p2 = (
            RingPoly3.monomial(mod, 2 * m1 * q1 * n2)
            * _geometric(mod, (n2, 0, 0), r)
            * _geometric(mod, (n3, 0, 0), s)
            * core
        )
        val = chamon_objective(p_prime + p2)
        if val < best[0]:
            best = (val, r, s, p2)
    val, r, s, p2 = best
    return m1, w1, q1, p_prime, p2, val, bound, r, s


def chamon_realize(code: XYZCode, p: RingPoly3) -> PauliOperator:
    """Stabilizer element with S = T = U = V = P times Z on the plane z^0 of all four blocks."""
    m = p.to_tensor()
    op = code.stabilizer_element(m, m, m, m)
    for b in ("A", "B", "C", "D"):
        op = op * code.block_operator(b, "Z", plane_tensor(code.block_shapes[b], 2, 0))
    return op


def chamon_sqrt_logical(n1: int, n2: int, n3: int, realize: bool = True, s_limit: int | None = None) -> ChamonSqrtResult:
    """Low-weight Chamon logical from the arithmetic-progression covering construction.

    Both orders of (n2, n3) are tried and the smaller objective is kept; when
    n2 and n3 are exchanged the construction lives on the code with sizes
    (n1, n3, n2).  The reported objective is |(1+x/y)P| + |(1+x/z)P + R|
    for P = P' + P''.
    """
    if min(n1, n2, n3) < 2:
        raise ValueError("sizes must be at least 2")
    if gcd(n1, n2) != 1 or gcd(n1, n3) != 1 or gcd(n2, n3) != 1:
        raise ValueError(f"sizes {(n1, n2, n3)} must be pairwise coprime")
    best = None
    for order in ((n1, n2, n3), (n1, n3, n2)):
        res = _chamon_single(*order, s_limit)
        key = (res[5], order != (n1, n2, n3))
        if best is None or key < best[0]:
            best = (key, order, res)
    _, order, (m1, w1, q1, pp, p2, val, bound, r, s) = best
    out = ChamonSqrtResult((n1, n2, n3), order, m1, w1, q1, pp, p2, val, bound, r, s)
    if order != (n1, n2, n3):
        out.notes.append("construction uses the code with n2 and n3 exchanged")
    if realize:
        code = chamon_spec(*order).code()
        op = chamon_realize(code, pp + p2)
        out.operator = op
        out.literal_weight = op.weight()
        out.zero_syndrome = code.syndrome_bits(op) == 0
    return out


# --- energy barrier ------------------------------------------------------------------


@dataclass
class BarrierPath:
    moduli: Moduli
    steps: list[tuple[PauliOperator, int]]
    endpoint_is_plane: bool
    endpoint_zero_syndrome: bool

    @property
    def max_syndrome_weight(self) -> int:
        return max(w for _, w in self.steps)


def energy_barrier_path(n1: int, n2: int, pattern: tuple[int, ...] = (0, 1), n3: int = 3) -> BarrierPath:
    """Flip Z on A and B at (k mod n1, k mod n2, 0) for k = 0 .. n1*n2 - 1.

    All three polynomials are given by ``pattern``.  Entry k of the result is
    the error after k steps with its syndrome weight.
    """
    if gcd(n1, n2) != 1:
        raise ValueError(f"n1 = {n1} and n2 = {n2} must be coprime")
    code = CyclicSpec((n1, n2, n3), tuple(pattern), tuple(pattern), tuple(pattern)).code()
    op = PauliOperator.identity(code.N)
    steps = [(op, 0)]
    for k in range(n1 * n2):
        cell = (k % n1, k % n2, 0)
        for b in ("A", "B"):
            op = op * code.block_operator(b, "Z", Tensor3.from_cells(code.block_shapes[b], [cell]))
        steps.append((op, syndrome(code, op).weight()))
    plane = PauliOperator.identity(code.N)
    for b in ("A", "B"):
        plane = plane * code.block_operator(b, "Z", plane_tensor(code.block_shapes[b], 2, 0))
    end = steps[-1][0]
    same = end.x == plane.x and end.z == plane.z
    return BarrierPath((n1, n2, n3), steps, same, code.syndrome_bits(end) == 0)


__all__ = [
    "BarrierPath",
    "ChamonSqrtResult",
    "CyclicSpec",
    "FractalResult",
    "RingPoly3",
    "RowCollapser",
    "chamon_objective",
    "chamon_realize",
    "chamon_spec",
    "chamon_sqrt_logical",
    "change_of_variables",
    "circulant_of",
    "diagonal_sum",
    "dim_claim_3dxyz",
    "dmin3d_objective",
    "energy_barrier_path",
    "format_cyclic_spec",
    "fractal_operator",
    "horizontal_plane",
    "p13_row_collapser",
    "parse_cyclic_spec",
    "phi_kernel_dimension",
    "phi_matrix",
    "polynomial_of",
    "q_objective",
    "ring_mul",
    "root_solution_count",
    "slice_product_candidate",
    "xyz3d_matrix",
    "xyz3d_spec",
]
