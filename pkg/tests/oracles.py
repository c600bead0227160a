"""Independent reference implementations used to cross-check the package.

Everything here works on dense numpy arrays or plain Python loops and shares
no code with the package beyond its data types.
"""

from __future__ import annotations

from itertools import product

import numpy as np


def dense_rank(a) -> int:
    """GF(2) rank by Gaussian elimination on a uint8 array."""
    m = np.array(a, dtype=np.uint8) % 2
    if m.size == 0:
        return 0
    r = 0
    rows, cols = m.shape
    for c in range(cols):
        piv = np.nonzero(m[r:, c])[0]
        if len(piv) == 0:
            continue
        p = r + piv[0]
        m[[r, p]] = m[[p, r]]
        others = np.nonzero(m[:, c])[0]
        for o in others:
            if o != r:
                m[o] ^= m[r]
        r += 1
        if r == rows:
            break
    return r


def dense_matmul(a, b):
    return (np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)) % 2


PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_matrix(letters: str, phase: int = 0) -> np.ndarray:
    out = np.array([[1]], dtype=complex)
    for ch in letters:
        out = np.kron(out, PAULI[ch])
    return (1j ** phase) * out


def symplectic_commute(a: str, b: str) -> bool:
    """Commutation by counting positions with distinct non-identity letters."""
    n = sum(1 for x, y in zip(a, b) if x != "I" and y != "I" and x != y)
    return n % 2 == 0


def poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def char_poly_laplace(m) -> int:
    """det(xI + M) over GF(2) by cofactor expansion; polynomials as ints."""
    m = [[int(v) % 2 for v in row] for row in m]
    n = len(m)
    entries = [[(0b10 if i == j else 0) ^ m[i][j] for j in range(n)] for i in range(n)]

    def det(rows, cols):
        if not rows:
            return 1
        r = rows[0]
        total = 0
        for idx, c in enumerate(cols):
            e = entries[r][c]
            if e:
                total ^= poly_mul(e, det(rows[1:], cols[:idx] + cols[idx + 1:]))
        return total

    return det(list(range(n)), list(range(n)))


def sylvester_bruteforce(a, b, c) -> int:
    """Dimension of {X : (a on axis 0)X = (b on axis 1)X = (c on axis 2)X} by dense linear algebra."""
    a, b, c = (np.array(m, dtype=np.int64) % 2 for m in (a, b, c))
    n1, n2, n3 = len(a), len(b), len(c)
    size = n1 * n2 * n3
    cols = []
    for idx in range(size):
        t = np.zeros(size, dtype=np.int64)
        t[idx] = 1
        t = t.reshape(n1, n2, n3)
        ta = np.einsum("ri,ijk->rjk", a, t) % 2
        tb = np.einsum("rj,ijk->irk", b, t) % 2
        tc = np.einsum("rk,ijk->ijr", c, t) % 2
        cols.append(np.concatenate([(ta ^ tb).reshape(-1), (tb ^ tc).reshape(-1)]))
    mat = np.array(cols).T
    return size - dense_rank(mat)


def convolve3(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Cyclic convolution over GF(2) by a direct quadruple loop."""
    n1, n2, n3 = a.shape
    out = np.zeros_like(a)
    for i, j, k in zip(*np.nonzero(a)):
        for p, q, r in zip(*np.nonzero(b)):
            out[(i + p) % n1, (j + q) % n2, (k + r) % n3] ^= 1
    return out


def all_paulis(n: int):
    for letters in product("IXYZ", repeat=n):
        yield "".join(letters)


def _symplectic_row(letters: str) -> list[int]:
    xs = [1 if ch in "XY" else 0 for ch in letters]
    zs = [1 if ch in "ZY" else 0 for ch in letters]
    return xs + zs


def min_logical_weight(generators: list[str], cap: int):
    """Lightest Pauli string commuting with every generator and outside their span.

    Works purely on letter strings: commutation by counting clashing letters,
    span membership by comparing dense GF(2) ranks.
    """
    from itertools import combinations

    n = len(generators[0])
    base = [_symplectic_row(g) for g in generators]
    r0 = dense_rank(base)
    for w in range(1, cap + 1):
        for sites in combinations(range(n), w):
            for letters in product("XYZ", repeat=w):
                s = ["I"] * n
                for q, ch in zip(sites, letters):
                    s[q] = ch
                s = "".join(s)
                if not all(symplectic_commute(s, g) for g in generators):
                    continue
                if dense_rank(base + [_symplectic_row(s)]) > r0:
                    return w, s
    return None, None
