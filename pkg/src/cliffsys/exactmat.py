"""Exact matrix kernel: signed permutation matrices and dense rational matrices.

Every generator handled by the package has exactly one nonzero entry, equal
to +-1, in each row and column.  Such matrices are closed under products,
so compositions stay O(n) and exact up to order 256.  Dense rational
matrices are kept around only as a workspace for linear solving.

All values are immutable after construction and every operation is a pure
function, so everything here can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

SYMMETRIC_INVOLUTION = "symmetric-involution"
SKEW_COMPLEX_STRUCTURE = "skew-complex-structure"
NEITHER = "neither"


@dataclass(frozen=True)
class SignedPermMatrix:
    """Matrix with one entry +-1 per row and column.

    Column a carries the single nonzero, so the matrix maps
    e_a -> signs[a] * e_perm[a] (0-based internally; all external
    formats are 1-based).
    """

    n: int
    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("order must be positive")
        if len(self.perm) != self.n or len(self.signs) != self.n:
            raise ValueError("perm/signs length must equal order")
        if sorted(self.perm) != list(range(self.n)):
            raise ValueError("targets do not form a permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "SignedPermMatrix":
        return SignedPermMatrix(n, tuple(range(n)), (1,) * n)

    @staticmethod
    def from_dense(rows: Sequence[Sequence[int]]) -> "SignedPermMatrix":
        n = len(rows)
        perm = [-1] * n
        signs = [0] * n
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("matrix is not square")
            for j, v in enumerate(row):
                if v == 0:
                    continue
                if v not in (1, -1) or perm[j] != -1:
                    raise ValueError("not a signed permutation matrix")
                perm[j] = i
                signs[j] = v
        return SignedPermMatrix(n, tuple(perm), tuple(signs))

    # -- basic queries ------------------------------------------------------

    def apply(self, col: int) -> tuple[int, int]:
        """Image of basis vector `col` as (target row, sign)."""
        return self.perm[col], self.signs[col]

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """Nonzero entries as (row, col, value), sorted, 0-based."""
        items = [(self.perm[a], a, self.signs[a]) for a in range(self.n)]
        return iter(sorted(items))

    def dense(self) -> list[list[int]]:
        rows = [[0] * self.n for _ in range(self.n)]
        for a in range(self.n):
            rows[self.perm[a]][a] = self.signs[a]
        return rows

    def trace(self) -> int:
        return sum(self.signs[a] for a in range(self.n) if self.perm[a] == a)

    def apply_vector(self, vec: Sequence) -> list:
        """Image of an exact coordinate vector."""
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        out = [0] * self.n
        for a in range(self.n):
            out[self.perm[a]] = self.signs[a] * vec[a]
        return out

    # -- algebra ------------------------------------------------------------

    def mul(self, other: "SignedPermMatrix") -> "SignedPermMatrix":
        """Exact product self @ other (signed permutations are closed)."""
        if self.n != other.n:
            raise ValueError(f"order mismatch: {self.n} != {other.n}")
        sp, ss, op, os_ = self.perm, self.signs, other.perm, other.signs
        perm = tuple(sp[op[a]] for a in range(self.n))
        signs = tuple(os_[a] * ss[op[a]] for a in range(self.n))
        return SignedPermMatrix(self.n, perm, signs)

    __matmul__ = mul

    def transpose(self) -> "SignedPermMatrix":
        n = self.n
        perm = [0] * n
        signs = [0] * n
        for a in range(n):
            perm[self.perm[a]] = a
            signs[self.perm[a]] = self.signs[a]
        return SignedPermMatrix(n, tuple(perm), tuple(signs))

    def __neg__(self) -> "SignedPermMatrix":
        return SignedPermMatrix(self.n, self.perm, tuple(-s for s in self.signs))

    def is_symmetric(self) -> bool:
        return all(
            self.perm[self.perm[a]] == a
            and self.signs[self.perm[a]] == self.signs[a]
            for a in range(self.n)
        )

    def is_skew(self) -> bool:
        # no diagonal entry survives skewness, so perm must be fixed-point free
        return all(
            self.perm[a] != a
            and self.perm[self.perm[a]] == a
            and self.signs[self.perm[a]] == -self.signs[a]
            for a in range(self.n)
        )

    def is_involution(self) -> bool:
        return self.mul(self) == SignedPermMatrix.identity(self.n)

    def is_complex_structure(self) -> bool:
        return self.mul(self) == -SignedPermMatrix.identity(self.n)

    def classify(self) -> str:
        if self.is_symmetric() and self.is_involution():
            return SYMMETRIC_INVOLUTION
        if self.is_skew() and self.is_complex_structure():
            return SKEW_COMPLEX_STRUCTURE
        return NEITHER

    def anticommutes(self, other: "SignedPermMatrix") -> bool:
        if self.n != other.n:
            raise ValueError("order mismatch")
        return self.mul(other) == -(other.mul(self))

    def commutes(self, other: "SignedPermMatrix") -> bool:
        if self.n != other.n:
            raise ValueError("order mismatch")
        return self.mul(other) == other.mul(self)

    # -- block constructions --------------------------------------------------

    def kron_identity(self, t: int) -> "SignedPermMatrix":
        """Kronecker product self (x) Id_t: every entry becomes a +-Id_t block."""
        if t <= 0:
            raise ValueError("block size must be positive")
        n = self.n
        perm = [0] * (n * t)
        signs = [0] * (n * t)
        for a in range(n):
            b, s = self.perm[a], self.signs[a]
            for r in range(t):
                perm[a * t + r] = b * t + r
                signs[a * t + r] = s
        return SignedPermMatrix(n * t, tuple(perm), tuple(signs))

    def to_rational(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(self.dense())


def block2(
    tl: SignedPermMatrix | None,
    tr: SignedPermMatrix | None,
    bl: SignedPermMatrix | None,
    br: SignedPermMatrix | None,
) -> SignedPermMatrix:
    """Assemble [[tl, tr], [bl, br]] from order-n blocks (None means zero).

    The result must again be a signed permutation, so exactly one of the
    two blocks in each column strip may be present.
    """
    blocks = [b for b in (tl, tr, bl, br) if b is not None]
    if not blocks:
        raise ValueError("all four blocks are zero")
    n = blocks[0].n
    if any(b.n != n for b in blocks):
        raise ValueError("blocks must share one order")
    if (tl is None) == (bl is None) or (tr is None) == (br is None):
        raise ValueError("assembled matrix violates the signed-perm invariant")
    perm = [0] * (2 * n)
    signs = [0] * (2 * n)
    for a in range(n):
        if tl is not None:
            perm[a], signs[a] = tl.perm[a], tl.signs[a]
        else:
            perm[a], signs[a] = bl.perm[a] + n, bl.signs[a]
        if tr is not None:
            perm[n + a], signs[n + a] = tr.perm[a], tr.signs[a]
        else:
            perm[n + a], signs[n + a] = br.perm[a] + n, br.signs[a]
    return SignedPermMatrix(2 * n, tuple(perm), tuple(signs))


def block_diag(blocks: Sequence[SignedPermMatrix]) -> SignedPermMatrix:
    if not blocks:
        raise ValueError("need at least one block")
    perm: list[int] = []
    signs: list[int] = []
    offset = 0
    for b in blocks:
        perm.extend(p + offset for p in b.perm)
        signs.extend(b.signs)
        offset += b.n
    return SignedPermMatrix(offset, tuple(perm), tuple(signs))


def swap(half: int) -> SignedPermMatrix:
    """[[0, Id], [Id, 0]] of order 2*half."""
    ident = SignedPermMatrix.identity(half)
    return block2(None, ident, ident, None)


def diag_split(half: int) -> SignedPermMatrix:
    """diag(Id, -Id) of order 2*half."""
    ident = SignedPermMatrix.identity(half)
    return block2(ident, None, None, -ident)


def antidiag(a: SignedPermMatrix) -> SignedPermMatrix:
    """[[0, -A], [A, 0]]: a skew complex structure when A is one, a
    symmetric involution when A is a symmetric involution."""
    return block2(None, -a, a, None)


# -- JSON wire format ---------------------------------------------------------


def matrix_to_json(m: "SignedPermMatrix | RationalMatrix") -> dict:
    """{"n": N, "entries": [[row, col, value], ...]} with 1-based indices."""
    entries: list[list] = []
    if isinstance(m, SignedPermMatrix):
        for r, c, v in m.entries():
            entries.append([r + 1, c + 1, v])
    else:
        for r in range(m.nrows):
            for c in range(m.ncols):
                v = m.rows[r][c]
                if v:
                    entries.append([r + 1, c + 1, _scalar_to_json(v)])
    entries.sort(key=lambda e: (e[0], e[1]))
    return {"n": m.n if isinstance(m, SignedPermMatrix) else m.nrows, "entries": entries}


def matrix_from_json(data: dict) -> SignedPermMatrix:
    n = data["n"]
    perm = [-1] * n
    signs = [0] * n
    for row, col, value in data["entries"]:
        if value not in (1, -1):
            raise ValueError("signed-perm JSON entries must be +-1")
        if perm[col - 1] != -1:
            raise ValueError("duplicate column in JSON entries")
        perm[col - 1] = row - 1
        signs[col - 1] = value
    return SignedPermMatrix(n, tuple(perm), tuple(signs))


def _scalar_to_json(v: Fraction | int):
    v = Fraction(v)
    if v.denominator == 1:
        return int(v)
    return f"{v.numerator}/{v.denominator}"


# -- dense rational matrices --------------------------------------------------


class RationalMatrix:
    """Dense matrix of exact rationals; no floating point anywhere."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: list[list[Fraction]]):
        self.nrows = len(rows)
        if self.nrows == 0:
            raise ValueError("dimensions must be positive")
        self.ncols = len(rows[0])
        if self.ncols == 0 or any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged or empty rows")
        self.rows = rows

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "RationalMatrix":
        return RationalMatrix([[Fraction(v) for v in row] for row in rows])

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix(
            [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(nrows: int, ncols: int) -> "RationalMatrix":
        return RationalMatrix([[Fraction(0)] * ncols for _ in range(nrows)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-v for v in row] for row in self.rows])

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._need_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._need_shape(other)
        return RationalMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def _need_shape(self, other: "RationalMatrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix([[c * v for v in row] for row in self.rows])

    def mul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    __matmul__ = mul

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([list(col) for col in zip(*self.rows)])

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace needs a square matrix")
        return sum(self.rows[i][i] for i in range(self.nrows))

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def apply_vector(self, vec: Sequence[Fraction]) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(row, vec)) for row in self.rows]

    def rank(self) -> int:
        return integer_rank(self._integer_rows())

    def _integer_rows(self) -> list[list[int]]:
        out = []
        for row in self.rows:
            lcm = 1
            for v in row:
                d = Fraction(v).denominator
                lcm = lcm * d // _gcd(lcm, d)
            out.append([int(v * lcm) for v in row])
        return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integer rows.

    Pivot choice: largest |entry| in the pivot column, lowest row index on
    ties, which keeps the elimination deterministic.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    col = 0
    while rank < nrows and col < ncols:
        best = -1
        best_abs = 0
        for i in range(rank, nrows):
            v = abs(m[i][col])
            if v > best_abs:
                best, best_abs = i, v
        if best_abs == 0:
            col += 1
            continue
        if best != rank:
            m[rank], m[best] = m[best], m[rank]
        piv = m[rank][col]
        for i in range(rank + 1, nrows):
            row_i, row_p = m[i], m[rank]
            f = row_i[col]
            for j in range(col, ncols):
                row_i[j] = (row_i[j] * piv - f * row_p[j]) // prev
        prev = piv
        rank += 1
        col += 1
    return rank
