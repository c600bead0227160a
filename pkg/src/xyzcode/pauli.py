"""Phased Pauli operators in symplectic form and stabilizer-group queries.

An operator is stored as i^phase * X^x Z^z (X part to the left), with
Y = iXZ.  A tensor product of letters I, X, Y, Z therefore carries phase
equal to its number of Y sites, mod 4.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .f2core import BitVector, SpanBasis, bits_of
from .tensor3 import Tensor3

# a * b = i^e * c for single-qubit letters (rows a, columns b)
SINGLE_QUBIT_PRODUCTS: dict[tuple[str, str], tuple[int, str]] = {
    ("I", "I"): (0, "I"), ("I", "X"): (0, "X"), ("I", "Y"): (0, "Y"), ("I", "Z"): (0, "Z"),
    ("X", "I"): (0, "X"), ("X", "X"): (0, "I"), ("X", "Y"): (1, "Z"), ("X", "Z"): (3, "Y"),
    ("Y", "I"): (0, "Y"), ("Y", "X"): (3, "Z"), ("Y", "Y"): (0, "I"), ("Y", "Z"): (1, "X"),
    ("Z", "I"): (0, "Z"), ("Z", "X"): (1, "Y"), ("Z", "Y"): (3, "X"), ("Z", "Z"): (0, "I"),
}

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


class PhaseConsistencyError(RuntimeError):
    """Raised when phase bookkeeping contradicts itself."""


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self) -> None:
        if self.x >> self.n or self.z >> self.n or self.x < 0 or self.z < 0:
            raise ValueError("support outside the qubit range")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, n: int, phase: int = 0) -> "PauliOperator":
        return cls(n, 0, 0, phase)

    @classmethod
    def from_string(cls, letters: str, phase: int = 0) -> "PauliOperator":
        """Hermitian tensor product from letters, qubit 0 first, times i^phase."""
        sites = {q: ch for q, ch in enumerate(letters)}
        return cls.from_sites(len(letters), sites, phase)

    @classmethod
    def from_sites(cls, n: int, sites: Mapping[int, str], phase: int = 0) -> "PauliOperator":
        x = z = 0
        ny = 0
        for q, ch in sites.items():
            if ch not in _LETTER_BITS:
                raise ValueError(f"unknown Pauli letter {ch!r}")
            if not 0 <= q < n:
                raise ValueError(f"qubit {q} out of range")
            bx, bz = _LETTER_BITS[ch]
            x |= bx << q
            z |= bz << q
            ny += bx & bz
        return cls(n, x, z, phase + ny)

    @classmethod
    def from_symplectic(cls, n: int, row: int) -> "PauliOperator":
        """Hermitian + representative of a symplectic row (x | z << n)."""
        x = row & ((1 << n) - 1)
        z = row >> n
        return cls(n, x, z, (x & z).bit_count())

    @property
    def x_part(self) -> BitVector:
        return BitVector(self.n, self.x)

    @property
    def z_part(self) -> BitVector:
        return BitVector(self.n, self.z)

    @property
    def support(self) -> int:
        return self.x | self.z

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def symplectic(self) -> int:
        return self.x | (self.z << self.n)

    def letter(self, q: int) -> str:
        bx, bz = (self.x >> q) & 1, (self.z >> q) & 1
        return "IXZY"[bx | (bz << 1)]

    def letters(self) -> str:
        return "".join(self.letter(q) for q in range(self.n))

    def sites(self) -> dict[int, str]:
        return {q: self.letter(q) for q in bits_of(self.support)}

    def is_hermitian(self) -> bool:
        return (self.phase - (self.x & self.z).bit_count()) % 2 == 0

    def sign(self) -> int:
        """+1 or -1 relative to the plain tensor product of letters."""
        d = (self.phase - (self.x & self.z).bit_count()) % 4
        if d == 0:
            return 1
        if d == 2:
            return -1
        raise ValueError("operator is not Hermitian")

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __neg__(self) -> "PauliOperator":
        return PauliOperator(self.n, self.x, self.z, self.phase + 2)

    def __str__(self) -> str:
        pre = {0: "+", 1: "+i", 2: "-", 3: "-i"}[(self.phase - (self.x & self.z).bit_count()) % 4]
        return pre + self.letters()


def _check_same(p: PauliOperator, q: PauliOperator) -> None:
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch {p.n} != {q.n}")


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Exact product p*q; moving Z^z1 past X^x2 costs (-1)^(z1.x2)."""
    _check_same(p, q)
    phase = p.phase + q.phase + 2 * (p.z & q.x).bit_count()
    return PauliOperator(p.n, p.x ^ q.x, p.z ^ q.z, phase)


def product(ops: Sequence[PauliOperator], n: int | None = None) -> PauliOperator:
    if n is None:
        if not ops:
            raise ValueError("empty product needs n")
        n = ops[0].n
    x = z = phase = 0
    for q in ops:
        if q.n != n:
            raise ValueError("qubit count mismatch")
        phase += q.phase + 2 * (z & q.x).bit_count()
        x ^= q.x
        z ^= q.z
    return PauliOperator(n, x, z, phase)


def symplectic_product(p: PauliOperator, q: PauliOperator) -> int:
    """0 if p and q commute, 1 if they anticommute."""
    _check_same(p, q)
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    return symplectic_product(p, q) == 0


@dataclass(frozen=True)
class Membership:
    verdict: str  # "in_group", "in_group_up_to_phase" or "not_in_group"
    phase_offset: int = 0  # p = i^offset * (product of the solving word)
    word: tuple[int, ...] = ()

    @property
    def sign(self) -> int | None:
        return {0: 1, 2: -1}.get(self.phase_offset)


class PauliGroup:
    """Group generated by a list of Pauli operators, with a cached row-space basis."""

    def __init__(self, generators: Sequence[PauliOperator], n: int | None = None, check_commuting: bool = False):
        gens = list(generators)
        if n is None:
            if not gens:
                raise ValueError("empty group needs n")
            n = gens[0].n
        for g in gens:
            if g.n != n:
                raise ValueError("generators act on different qubit counts")
        self.n = n
        self.generators = tuple(gens)
        self._basis: SpanBasis | None = None
        self._relations: list[int] | None = None
        if check_commuting and not self.is_abelian():
            raise ValueError("generators do not pairwise commute")

    def __len__(self) -> int:
        return len(self.generators)

    def is_abelian(self) -> bool:
        return first_anticommuting_pair(self.generators) is None

    def _build(self) -> None:
        basis = SpanBasis()
        rels = []
        for g in self.generators:
            combo = basis.add(g.symplectic())
            if combo is not None:
                rels.append(combo)
        self._basis = basis
        self._relations = rels

    @property
    def basis(self) -> SpanBasis:
        if self._basis is None:
            self._build()
        return self._basis

    @property
    def relations(self) -> list[int]:
        """Basis of generator subsets (bitmasks) whose symplectic rows sum to zero."""
        if self._relations is None:
            self._build()
        return self._relations

    def symplectic_rank(self) -> int:
        return self.basis.rank

    def word_product(self, word: int | Iterable[int]) -> PauliOperator:
        idx = bits_of(word) if isinstance(word, int) else sorted(word)
        return product([self.generators[i] for i in idx], self.n)


def first_anticommuting_pair(ops: Sequence[PauliOperator]) -> tuple[int, int] | None:
    xs = [o.x for o in ops]
    zs = [o.z for o in ops]
    for i in range(len(ops)):
        xi, zi = xs[i], zs[i]
        for j in range(i + 1, len(ops)):
            if ((xi & zs[j]).bit_count() + (zi & xs[j]).bit_count()) & 1:
                return (i, j)
    return None


def group_contains(g: PauliGroup, p: PauliOperator, respect_phase: bool = True) -> Membership:
    if p.n != g.n:
        raise ValueError(f"qubit count mismatch {p.n} != {g.n}")
    word = g.basis.express(p.symplectic())
    if word is None:
        return Membership("not_in_group")
    idx = tuple(bits_of(word))
    if not respect_phase:
        return Membership("in_group", 0, idx)
    prod = g.word_product(word)
    offset = (p.phase - prod.phase) % 4
    if offset == 0:
        return Membership("in_group", 0, idx)
    return Membership("in_group_up_to_phase", offset, idx)


def relation_phase(g: PauliGroup, word: int) -> int:
    prod = g.word_product(word)
    if prod.x or prod.z:
        raise PhaseConsistencyError("relation word does not multiply to identity support")
    return prod.phase


def minus_one_in_group(g: PauliGroup, random_checks: int = 200, seed: int = 0) -> bool:
    """Whether -1 lies in the group, for commuting Hermitian generators.

    Each relation of the kernel basis is multiplied out exactly.  Because the
    sign is a homomorphism only under those assumptions, random combinations
    of relations are also multiplied out and compared against the basis
    prediction; any mismatch raises PhaseConsistencyError.
    """
    rels = g.relations
    phases = []
    for r in rels:
        ph = relation_phase(g, r)
        if ph % 2:
            raise PhaseConsistencyError("relation product has phase +-i; generators are not Hermitian")
        phases.append(ph)
    if rels:
        rng = random.Random(seed)
        for _ in range(random_checks):
            pick = rng.getrandbits(len(rels))
            if not pick:
                continue
            word = 0
            predicted = 0
            for i in bits_of(pick):
                word ^= rels[i]
                predicted += phases[i]
            if relation_phase(g, word) != predicted % 4:
                raise PhaseConsistencyError("relation phases are not consistent across combinations")
    return any(ph == 2 for ph in phases)


def fix_signs(g: PauliGroup) -> tuple[list[PauliOperator], list[int]]:
    """Independent generating subset (as + Hermitian representatives) and a sign table.

    ``signs[i]`` is s with s * generators[i] in the group generated by the
    returned subset.
    """
    pair = first_anticommuting_pair(g.generators)
    if pair is not None:
        raise ValueError(f"generators {pair[0]} and {pair[1]} anticommute")
    basis = SpanBasis()
    independent: list[PauliOperator] = []
    for gen in g.generators:
        if not gen.is_hermitian():
            raise ValueError("generator is not Hermitian")
        if basis.add(gen.symplectic()) is None:
            independent.append(PauliOperator(g.n, gen.x, gen.z, (gen.x & gen.z).bit_count()))
    signs = []
    for gen in g.generators:
        word = basis.express(gen.symplectic())
        prod = product([independent[i] for i in bits_of(word)], g.n)
        d = (gen.phase - prod.phase) % 4
        if d % 2:
            raise PhaseConsistencyError("sign table entry is not +-1")
        signs.append(1 if d == 0 else -1)
    return independent, signs


def pauli_weight_identity(ax: Tensor3, ay: Tensor3, az: Tensor3) -> int:
    """Weight of sigma1^ax sigma2^ay sigma3^az on one block: half the sum of pairwise differences."""
    if not (ax.shape == ay.shape == az.shape):
        raise ValueError("component tensors must share a shape")
    total = (ax.bits ^ ay.bits).bit_count() + (ax.bits ^ az.bits).bit_count() + (ay.bits ^ az.bits).bit_count()
    return total // 2


__all__ = [
    "Membership",
    "PauliGroup",
    "PauliOperator",
    "PhaseConsistencyError",
    "SINGLE_QUBIT_PRODUCTS",
    "commutes",
    "first_anticommuting_pair",
    "fix_signs",
    "group_contains",
    "minus_one_in_group",
    "multiply",
    "pauli_weight_identity",
    "product",
    "symplectic_product",
]
