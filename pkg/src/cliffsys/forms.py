"""Exact exterior algebra: k-forms, wedge, Hodge star, Kaehler forms,
characteristic coefficients tau_k of matrices of 2-forms, and the canonical
invariant forms of the quaternionic and octonionic structure groups.

Coordinates follow the convention 1..8 for the first octonion factor and
1'..8' (indices 9..16) for the second; primes repeat for every further
block of eight.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from . import kernel
from .exactmat import RationalMatrix, SignedPermMatrix, SKEW_COMPLEX_STRUCTURE


def _norm_coeff(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return c.numerator
        return c
    return c


def _mask_from_indices(indices: Iterable[int], n: int) -> int:
    mask = 0
    prev = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} outside 1..{n}")
        if i <= prev:
            raise ValueError("indices must be strictly increasing")
        prev = i
        mask |= 1 << (i - 1)
    return mask


def _indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


class KForm:
    """Exterior k-form on R^n with exact rational coefficients.

    Terms are keyed by strictly increasing index tuples (stored as
    bitmasks); zero coefficients are never kept.  Values are immutable by
    convention: no method mutates an existing form.
    """

    __slots__ = ("n", "k", "_terms", "_ints")

    def __init__(self, n: int, k: int, terms: Mapping[int, object] | None = None):
        if n <= 0 or k < 0:
            raise ValueError("need n >= 1 and k >= 0")
        self.n = n
        self.k = k
        clean: dict[int, object] = {}
        ints = True
        for mask, c in (terms or {}).items():
            c = _norm_coeff(c)
            if not c:
                continue
            if mask.bit_count() != k or mask >= (1 << n):
                raise ValueError("term does not match degree/ambient")
            if not isinstance(c, int):
                ints = False
            clean[mask] = c
        self._terms = clean
        self._ints = ints

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(n: int, k: int) -> "KForm":
        return KForm(n, k)

    @staticmethod
    def monomial(n: int, indices: Sequence[int], coeff=1) -> "KForm":
        return KForm(n, len(indices), {_mask_from_indices(indices, n): coeff})

    @staticmethod
    def from_terms(n: int, k: int, pairs: Iterable[tuple[Sequence[int], object]]) -> "KForm":
        acc: dict[int, object] = {}
        for indices, c in pairs:
            if len(indices) != k:
                raise ValueError("term of wrong degree")
            mask = _mask_from_indices(indices, n)
            acc[mask] = acc.get(mask, 0) + c
        return KForm(n, k, acc)

    # -- queries ---------------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, ...], object]]:
        """Terms as (indices, coeff), sorted lexicographically by indices."""
        items = sorted(
            (_indices_from_mask(mask), c) for mask, c in self._terms.items()
        )
        return iter(items)

    def mask_items(self) -> list[tuple[int, object]]:
        return list(self._terms.items())

    def coefficient(self, indices: Sequence[int]):
        return self._terms.get(_mask_from_indices(indices, self.n), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def num_terms(self) -> int:
        return len(self._terms)

    def content(self) -> int:
        """gcd of the coefficients; requires them integral, 0 for the zero form."""
        g = 0
        for c in self._terms.values():
            if not isinstance(c, int):
                raise ValueError("content needs integer coefficients")
            g = _gcd(g, abs(c))
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, KForm):
            return NotImplemented
        return (
            self.n == other.n
            and self.k == other.k
            and _as_fraction_dict(self._terms) == _as_fraction_dict(other._terms)
        )

    def __repr__(self) -> str:
        return f"KForm(n={self.n}, k={self.k}, terms={self.num_terms()})"

    # -- linear structure --------------------------------------------------------

    def __add__(self, other: "KForm") -> "KForm":
        self._need_match(other)
        acc = dict(self._terms)
        for mask, c in other._terms.items():
            acc[mask] = acc.get(mask, 0) + c
        return KForm(self.n, self.k, acc)

    def __sub__(self, other: "KForm") -> "KForm":
        self._need_match(other)
        acc = dict(self._terms)
        for mask, c in other._terms.items():
            acc[mask] = acc.get(mask, 0) - c
        return KForm(self.n, self.k, acc)

    def __neg__(self) -> "KForm":
        return KForm(self.n, self.k, {m: -c for m, c in self._terms.items()})

    def scale(self, c) -> "KForm":
        c = _norm_coeff(Fraction(c)) if not isinstance(c, int) else c
        if not c:
            return KForm.zero(self.n, self.k)
        return KForm(self.n, self.k, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def _need_match(self, other: "KForm"):
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        if self.k != other.k:
            raise ValueError("degree mismatch")

    # -- graded structure -----------------------------------------------------------

    def wedge(self, other: "KForm") -> "KForm":
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        k = self.k + other.k
        if k > self.n:
            return KForm.zero(self.n, k)
        pairs = kernel.wedge_terms(
            self.mask_items(), other.mask_items(), self._ints and other._ints
        )
        return KForm(self.n, k, dict(pairs))

    def wedge_square(self) -> "KForm":
        """self ^ self, using the even-degree shortcut (zero for odd degree)."""
        k = 2 * self.k
        if self.k % 2 == 1 or k > self.n:
            return KForm.zero(self.n, k)
        pairs = kernel.square_terms(self.mask_items(), self._ints)
        return KForm(self.n, k, dict(pairs))

    def restrict(self, indices: Sequence[int]) -> "KForm":
        """Pull back along the inclusion of the span of e_i, i in `indices`
        (strictly increasing); surviving indices are renumbered by position."""
        idx = list(indices)
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError("indices must be strictly increasing")
        allowed = _mask_from_indices(idx, self.n)
        pos = {i: p + 1 for p, i in enumerate(idx)}
        acc: dict[int, object] = {}
        for mask, c in self._terms.items():
            if mask & ~allowed:
                continue
            new = 0
            for i in _indices_from_mask(mask):
                new |= 1 << (pos[i] - 1)
            acc[new] = acc.get(new, 0) + c
        return KForm(len(idx), self.k, acc)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _as_fraction_dict(terms: Mapping[int, object]) -> dict[int, Fraction]:
    return {m: Fraction(c) for m, c in terms.items()}


def wedge(a: KForm, b: KForm) -> KForm:
    return a.wedge(b)


def hodge_star(a: KForm) -> KForm:
    """Hodge star for the standard metric and orientation e^1 ^ ... ^ e^n."""
    full = (1 << a.n) - 1
    acc: dict[int, object] = {}
    for mask, c in a._terms.items():
        comp = full ^ mask
        acc[comp] = c * kernel.merge_sign(mask, comp)
    return KForm(a.n, a.n - a.k, acc)


def kaehler_form(j: SignedPermMatrix) -> KForm:
    """Kaehler 2-form of a metric-compatible complex structure.

    Sign convention: omega(e_a, e_b) is the (a, b) matrix entry of J, i.e.
    omega(X, Y) = <X, JY>; it is fixed by the convention-resolution test
    against the C_4 composition R_i.
    """
    if j.classify() != SKEW_COMPLEX_STRUCTURE:
        raise ValueError("kaehler_form needs a skew complex structure")
    acc: dict[int, object] = {}
    for b in range(j.n):
        t, s = j.apply(b)
        if t < b:
            acc[(1 << t) | (1 << b)] = s
    return KForm(j.n, 2, acc)


class FormMatrix:
    """Skew-symmetric square matrix of 2-forms with one ambient dimension."""

    __slots__ = ("size", "n", "_upper")

    def __init__(self, size: int, n: int, upper: Mapping[tuple[int, int], KForm]):
        if size <= 0:
            raise ValueError("size must be positive")
        self.size = size
        self.n = n
        self._upper: dict[tuple[int, int], KForm] = {}
        for (i, jj), form in upper.items():
            if not 0 <= i < jj < size:
                raise ValueError("upper entries need 0 <= i < j < size")
            if form.n != n or form.k != 2:
                raise ValueError("entries must be 2-forms on the common ambient")
            if not form.is_zero():
                self._upper[(i, jj)] = form

    def entry(self, i: int, j: int) -> KForm:
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise ValueError("index out of range")
        if i == j:
            return KForm.zero(self.n, 2)
        if i < j:
            return self._upper.get((i, j), KForm.zero(self.n, 2))
        return -self._upper.get((j, i), KForm.zero(self.n, 2))

    def upper_items(self) -> Iterator[tuple[tuple[int, int], KForm]]:
        return iter(sorted(self._upper.items()))


def kaehler_matrix(generators: Sequence[SignedPermMatrix]) -> FormMatrix:
    """Matrix of Kaehler forms of the pairwise compositions P_i P_j."""
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].n
    upper = {}
    for i, j in combinations(range(len(generators)), 2):
        upper[(i, j)] = kaehler_form(generators[i].mul(generators[j]))
    return FormMatrix(len(generators), n, upper)


@lru_cache(maxsize=None)
def psi_matrix(family: str) -> FormMatrix:
    """Kaehler-form matrices of the spin families on R^16.

    family "A": compositions S_a S_b for 1 <= a < b <= 7 (size 7);
    family "B": 0 <= a < b <= 7 (size 8); family "C": 0 <= a < b <= 8
    (size 9).
    """
    from .clifford import build

    ranges = {"A": (1, 8), "B": (0, 8), "C": (0, 9)}
    if family not in ranges:
        raise ValueError("family must be A, B or C")
    lo, hi = ranges[family]
    gens = build(8).generators[lo:hi]
    return kaehler_matrix(gens)


def _pfaffian_terms(psi: FormMatrix, rows: tuple[int, ...]) -> KForm:
    """Pfaffian of the principal minor on `rows` (even length)."""
    if len(rows) == 0:
        raise ValueError("empty minor")
    if len(rows) == 2:
        return psi.entry(rows[0], rows[1])
    first = rows[0]
    rest = rows[1:]
    total = KForm.zero(psi.n, len(rows))
    for pos, j in enumerate(rest):
        sub = tuple(r for r in rest if r != j)
        part = psi.entry(first, j).wedge(_pfaffian_terms(psi, sub))
        total = total + part if pos % 2 == 0 else total - part
    return total


def _minor_det(psi: FormMatrix, rows: tuple[int, ...]) -> KForm:
    return _pfaffian_terms(psi, rows).wedge_square()


def tau(psi: FormMatrix, k: int, jobs: int = 1) -> KForm:
    """Sum of the k x k principal minors of a skew matrix of 2-forms.

    Entries commute (even degree), so each minor is an honest determinant;
    for skew matrices it equals the square of the minor's Pfaffian, which
    is the evaluation path used here.  Partial sums over minor subsets may
    be evaluated in parallel; exact arithmetic makes the merge
    order-independent.
    """
    if k % 2 == 1:
        raise ValueError("tau is zero/undefined for odd k; need even k")
    if k > psi.size:
        raise ValueError("k exceeds matrix size")
    subsets = list(combinations(range(psi.size), k))
    if jobs > 1 and len(subsets) >= 2 * jobs:
        return _tau_parallel(psi, k, subsets, jobs)
    return KForm(psi.n, 2 * k, dict(_tau_terms(psi, subsets)))


def _psi_all_ints(psi: FormMatrix) -> bool:
    return psi.n <= 64 and all(form._ints for _, form in psi.upper_items())


def _tau_terms(psi: FormMatrix, subsets) -> list[tuple[int, object]]:
    ints = _psi_all_ints(psi)
    try:
        acc = kernel.new_accumulator(ints)
        for rows in subsets:
            acc.add_square(_pfaffian_terms(psi, rows).mask_items())
        return acc.items()
    except OverflowError:
        acc = kernel.new_accumulator(False)
        for rows in subsets:
            acc.add_square(_pfaffian_terms(psi, rows).mask_items())
        return acc.items()


def _tau_worker(args):
    size, n, upper_raw, chunk = args
    upper = {key: KForm(n, 2, dict(pairs)) for key, pairs in upper_raw}
    return _tau_terms(FormMatrix(size, n, upper), chunk)


def _tau_parallel(psi: FormMatrix, k: int, subsets, jobs: int) -> KForm:
    from concurrent.futures import ProcessPoolExecutor

    upper_raw = [(key, form.mask_items()) for key, form in psi.upper_items()]
    chunks = [subsets[i::jobs] for i in range(jobs)]
    args = [(psi.size, psi.n, upper_raw, chunk) for chunk in chunks if chunk]
    acc: dict[int, object] = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_tau_worker, args):
            for mask, c in part:
                acc[mask] = acc.get(mask, 0) + c
    return KForm(psi.n, 2 * k, acc)


def lie_action(x, a: KForm) -> KForm:
    """Natural action of a skew matrix on a k-form:
    (rho(X)a)(v_1, ..., v_k) = -sum_i a(v_1, ..., X v_i, ..., v_k)."""
    if isinstance(x, SignedPermMatrix):
        if x.n != a.n:
            raise ValueError("shape mismatch")
        inv = x.transpose()  # letter i is sent to inv.perm[i] with sign inv.signs[i]
        pairs = kernel.signed_perm_action(
            a.mask_items(), inv.perm, inv.signs, a._ints
        )
        return KForm(a.n, a.k, dict(pairs))
    if isinstance(x, RationalMatrix):
        if x.nrows != x.ncols or x.nrows != a.n:
            raise ValueError("shape mismatch")
        acc = {}
        for mask, c in a._terms.items():
            m = mask
            while m:
                low = m & -m
                m ^= low
                i = low.bit_length() - 1
                for j in range(a.n):
                    v = x.rows[i][j]
                    if v:
                        _sub_letter(acc, mask, c, i, j, -v)
        return KForm(a.n, a.k, acc)
    raise TypeError("x must be a SignedPermMatrix or RationalMatrix")


def _sub_letter(acc: dict, mask: int, coeff, i: int, j: int, factor):
    """Accumulate coeff * factor * (monomial with letter i replaced by j)."""
    if j == i:
        acc[mask] = acc.get(mask, 0) + coeff * factor
        return
    without = mask ^ (1 << i)
    if without & (1 << j):
        return
    lo, hi = (i, j) if i < j else (j, i)
    between = ((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1)
    if (without & between).bit_count() & 1:
        factor = -factor
    new = without | (1 << j)
    acc[new] = acc.get(new, 0) + coeff * factor


@lru_cache(maxsize=None)
def canonical_form(name: str) -> KForm:
    """Canonical invariant forms, normalized as printed.

    OmegaL: left quaternionic 4-form on R^8 (sum of the three Kaehler-form
    squares of the diagonal left multiplications; its coefficients share a
    factor 2).  Spin7Delta: tau_2(psi^A)/6.  Spin8: tau_2(psi^B)/4.
    Spin9: tau_4(psi^C)/360.  Spin8 and Spin9 have integer coefficients
    with gcd 1; Spin7Delta has rational mixed coefficients, and its
    restriction to either R^8 summand is integral with unit coefficients.
    """
    from .algebras import left_mult
    from .exactmat import block_diag

    if name == "OmegaL":
        total = KForm.zero(8, 4)
        for u in ("i", "j", "k"):
            lu = left_mult(u, 4)
            omega = kaehler_form(block_diag([lu, lu]))
            total = total + omega.wedge_square()
        return total
    scalings = {"Spin7Delta": ("A", 2, 6), "Spin8": ("B", 2, 4), "Spin9": ("C", 4, 360)}
    if name not in scalings:
        raise ValueError(f"unknown canonical form {name!r}")
    family, k, divisor = scalings[name]
    form = tau(psi_matrix(family), k).scale(Fraction(1, divisor))
    if name != "Spin7Delta":
        # Spin7Delta keeps rational mixed coefficients; its summand
        # restrictions are the integral unit-coefficient 4-forms.
        if not form._ints:
            raise ArithmeticError(f"{name}: expected integral coefficients")
        if form.content() != 1:
            raise ArithmeticError(f"{name}: expected coefficient gcd 1")
    return form


# -- wire format -------------------------------------------------------------


def form_to_json(a: KForm) -> dict:
    """{"N": n, "k": k, "terms": [{"idx": [...], "c": "p/q"}, ...]},
    sorted lexicographically by index tuple."""
    terms = [
        {"idx": list(idx), "c": str(Fraction(c))} for idx, c in a.terms()
    ]
    return {"N": a.n, "k": a.k, "terms": terms}


def form_from_json(data: dict) -> KForm:
    pairs = [(tuple(t["idx"]), Fraction(t["c"])) for t in data["terms"]]
    return KForm.from_terms(data["N"], data["k"], pairs)


# -- short 's' notation ----------------------------------------------------------


def _index_token(i: int) -> str:
    block, pos = divmod(i - 1, 8)
    return str(pos + 1) + "'" * block


def monomial_token(indices: Sequence[int]) -> str:
    """Compact token for a monomial: s1234, s121'2', ..."""
    return "s" + "".join(_index_token(i) for i in indices)


def parse_monomial_token(token: str) -> tuple[int, ...]:
    body = token[1:] if token.startswith("s") else token
    out = []
    pos = 0
    while pos < len(body):
        ch = body[pos]
        if not ch.isdigit():
            raise ValueError(f"bad monomial token {token!r}")
        digit = int(ch)
        pos += 1
        primes = 0
        while pos < len(body) and body[pos] == "'":
            primes += 1
            pos += 1
        out.append(8 * primes + digit)
    return tuple(out)


def form_to_text(a: KForm) -> str:
    """Human-auditable rendering in the short notation, lexicographic order."""
    if a.is_zero():
        return "0"
    parts = []
    for indices, c in a.terms():
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coeff = "" if mag == 1 else f"{mag}*"
        parts.append(f"{sign} {coeff}{monomial_token(indices)}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text
