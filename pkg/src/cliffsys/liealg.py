"""Exact Lie-algebra machinery: span dimensions, bracket closure, and the
stabilizer dimensions of Clifford systems.

Skew matrices are vectorized over the strict upper triangle; all rank and
nullity computations run over Q with integer rows (cross-multiplication
elimination with content reduction, deterministic pivoting).
"""

from __future__ import annotations

from typing import Sequence

from .exactmat import SignedPermMatrix


def _upper_index(n: int):
    idx = {}
    t = 0
    for a in range(n):
        for b in range(a + 1, n):
            idx[(a, b)] = t
            t += 1
    return idx, t


def _vectorize_skew(mat: SignedPermMatrix | Sequence[Sequence[int]], n: int, idx) -> dict[int, int]:
    """Strict-upper-triangle vector of a skew matrix, as a sparse dict."""
    vec: dict[int, int] = {}
    if isinstance(mat, SignedPermMatrix):
        for col in range(n):
            t, s = mat.apply(col)
            if t < col:
                vec[idx[(t, col)]] = vec.get(idx[(t, col)], 0) + s
    else:
        for a in range(n):
            for b in range(a + 1, n):
                v = mat[a][b]
                if v:
                    vec[idx[(a, b)]] = v
    return {k: v for k, v in vec.items() if v}


class _SparseEchelon:
    """Incremental exact echelon form over Q with integer sparse rows."""

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        """Residual of `row` after elimination against the stored pivots."""
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            a, b = piv[lead], row[lead]
            new: dict[int, int] = {}
            for k, v in row.items():
                new[k] = v * a
            for k, v in piv.items():
                new[k] = new.get(k, 0) - b * v
            row = {k: v for k, v in new.items() if v}
            if row:
                g = 0
                for v in row.values():
                    g = _gcd(g, abs(v))
                if g > 1:
                    row = {k: v // g for k, v in row.items()}
        return row

    def insert(self, row: dict[int, int]) -> bool:
        """Reduce and store `row`; True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        if row[lead] < 0:
            row = {k: -v for k, v in row.items()}
        self.pivots[lead] = row
        return True


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class MatrixSpan:
    """Echelonized rational span of a family of skew matrices."""

    def __init__(self, generators: Sequence[SignedPermMatrix]):
        if not generators:
            raise ValueError("need at least one matrix")
        self.n = generators[0].n
        if any(g.n != self.n for g in generators):
            raise ValueError("matrices must share one order")
        self.generators = list(generators)
        self._idx, self._dim = _upper_index(self.n)
        self._ech = _SparseEchelon()
        for g in generators:
            self._ech.insert(_vectorize_skew(g, self.n, self._idx))

    @property
    def rank(self) -> int:
        return self._ech.rank

    def contains(self, mat) -> bool:
        vec = _vectorize_skew(mat, self.n, self._idx)
        return not self._ech.reduce(vec)

    def bracket_closed(self) -> bool:
        """True iff [A, B] stays in the span for every generator pair."""
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if not self.contains(_bracket_dense(gens[i], gens[j])):
                    return False
        return True


def _bracket_dense(a: SignedPermMatrix, b: SignedPermMatrix) -> list[list[int]]:
    ab = a.mul(b)
    ba = b.mul(a)
    n = a.n
    rows = [[0] * n for _ in range(n)]
    for col in range(n):
        t, s = ab.apply(col)
        rows[t][col] += s
        t, s = ba.apply(col)
        rows[t][col] -= s
    return rows


def span_dim(matrices: Sequence[SignedPermMatrix]) -> int:
    """Exact rank over Q of the vectorized skew family."""
    return MatrixSpan(matrices).rank


def bracket_closed(matrices: Sequence[SignedPermMatrix]) -> bool:
    return MatrixSpan(matrices).bracket_closed()


def triple_span_decomposition() -> tuple[int, int, bool, int]:
    """Spans of the double and triple compositions of the nine R^16
    involutions: returns (dim of pair span, dim of triple span, exact
    trace-orthogonality, rank of the union)."""
    from .clifford import build

    gens = build(8).generators
    pairs = [
        gens[a].mul(gens[b])
        for a in range(9)
        for b in range(a + 1, 9)
    ]
    triples = [
        gens[a].mul(gens[b]).mul(gens[c])
        for a in range(9)
        for b in range(a + 1, 9)
        for c in range(b + 1, 9)
    ]
    span2 = MatrixSpan(pairs)
    span3 = MatrixSpan(triples)
    orthogonal = all(
        p.transpose().mul(t).trace() == 0 for p in pairs for t in triples
    )
    total = MatrixSpan(pairs + triples).rank
    return span2.rank, span3.rank, orthogonal, total


def commutant_dim(matrices: Sequence[SignedPermMatrix]) -> int:
    """dim {X in so(N): X P = P X for every P in `matrices`}."""
    if not matrices:
        raise ValueError("need at least one matrix")
    n = matrices[0].n
    idx, nvars = _upper_index(n)
    ech = _SparseEchelon()
    for p in matrices:
        inv = p.transpose()
        for i in range(n):
            for j in range(n):
                row: dict[int, int] = {}
                # (XP)_ij = signs[j] X_{i, perm[j]}
                _add_skew_entry(row, idx, i, p.perm[j], p.signs[j])
                # (PX)_ij = signs[inv(i)] X_{inv(i), j}
                _add_skew_entry(row, idx, inv.perm[i], j, -inv.signs[i])
                if row:
                    ech.insert(row)
    return nvars - ech.rank


def _add_skew_entry(row: dict[int, int], idx, a: int, b: int, coeff: int):
    """Add coeff * X_{a b} to a constraint row, X skew in the upper variables."""
    if a == b:
        return
    if a < b:
        key = idx[(a, b)]
        row[key] = row.get(key, 0) + coeff
    else:
        key = idx[(b, a)]
        row[key] = row.get(key, 0) - coeff


def normalizer_dim(matrices: Sequence[SignedPermMatrix]) -> int:
    """dim {X in so(N): [X, P_a] in span(P_0..P_m) for every a}.

    Solved as one linear system in the upper-triangle variables of X plus
    one coefficient per (a, b) pair; the generators are linearly
    independent, so the projection to X is injective.
    """
    if not matrices:
        raise ValueError("need at least one matrix")
    n = matrices[0].n
    idx, nx = _upper_index(n)
    count = len(matrices)
    nvars = nx + count * count
    ech = _SparseEchelon()
    for a_idx, p in enumerate(matrices):
        inv = p.transpose()
        for i in range(n):
            for j in range(n):
                row: dict[int, int] = {}
                _add_skew_entry(row, idx, i, p.perm[j], p.signs[j])
                _add_skew_entry(row, idx, inv.perm[i], j, -inv.signs[i])
                for b_idx, q in enumerate(matrices):
                    if q.perm[j] == i:
                        key = nx + a_idx * count + b_idx
                        row[key] = row.get(key, 0) - q.signs[j]
                if row:
                    ech.insert(row)
    return nvars - ech.rank
