"""Construction, verification and classification of the Clifford systems
C_1 ... C_16, plus the conversion to and from representations by
anticommuting skew complex structures.

Each system is an (m+1)-tuple of pairwise anticommuting symmetric
involutions on R^N; the canonical chain doubles C_m to C_{m+1} and, when
the ambient dimension allows, augments with further multiplication
operators (quaternionic on R^8, octonionic on R^16, block-extended on
R^128 and R^256).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebras import block_extension, left_mult, right_mult
from .exactmat import (
    SignedPermMatrix,
    antidiag,
    block2,
    diag_split,
    swap,
)

PLUS = "plus"
MINUS = "minus"
NOT_APPLICABLE = "n/a"

ESSENTIAL = "Essential"
NON_ESSENTIAL = "NonEssential"
UNDETERMINED = "Undetermined"

_DELTA_TABLE = {
    1: 1, 2: 2, 3: 4, 4: 4, 5: 8, 6: 8, 7: 8, 8: 8,
    9: 16, 10: 32, 11: 64, 12: 64, 13: 128, 14: 128, 15: 128, 16: 128,
}


def delta(m: int) -> int:
    """Dimension of the irreducible module; period-8 rule delta(m+8) = 16 delta(m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m <= 16:
        return _DELTA_TABLE[m]
    return 16 * delta(m - 8)


@dataclass(frozen=True)
class CliffordSystem:
    """m, ambient order, generators (P_0, ..., P_m), and the class tag.

    The tag is "plus" for the canonical construction, "minus" for the
    other equivalence class (m = 0 mod 4 only), "n/a" otherwise; the
    signed invariant itself is `class_trace`.
    """

    m: int
    n: int
    generators: tuple[SignedPermMatrix, ...]
    class_tag: str

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if len(self.generators) != self.m + 1:
            raise ValueError("need m+1 generators")
        if any(g.n != self.n for g in self.generators):
            raise ValueError("generators must share the ambient order")
        if self.class_tag not in (PLUS, MINUS, NOT_APPLICABLE):
            raise ValueError("bad class tag")

    def composition(self, alpha: int, beta: int) -> SignedPermMatrix:
        return self.generators[alpha].mul(self.generators[beta])

    def compositions(self) -> list[SignedPermMatrix]:
        """All P_a P_b with a < b."""
        gens = self.generators
        return [
            gens[a].mul(gens[b])
            for a in range(len(gens))
            for b in range(a + 1, len(gens))
        ]


@dataclass(frozen=True)
class CliffordRepresentation:
    """Anticommuting skew complex structures E_1, ..., E_{m-1} on R^delta."""

    delta: int
    matrices: tuple[SignedPermMatrix, ...]

    def __post_init__(self):
        if any(e.n != self.delta for e in self.matrices):
            raise ValueError("matrices must act on R^delta")

    @property
    def count(self) -> int:
        return len(self.matrices)

    def validate(self) -> None:
        ms = self.matrices
        for i, e in enumerate(ms):
            if not (e.is_skew() and e.is_complex_structure()):
                raise ValueError(f"E_{i + 1} is not a skew complex structure")
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                if not ms[i].anticommutes(ms[j]):
                    raise ValueError(f"E_{i + 1}, E_{j + 1} do not anticommute")


@dataclass(frozen=True)
class VerifyReport:
    symmetric: bool
    involutions: bool
    anticommuting: bool
    irreducible_dimension: bool
    first_failure: str | None = None

    def all_ok(self) -> bool:
        return (
            self.symmetric
            and self.involutions
            and self.anticommuting
            and self.irreducible_dimension
        )

    def to_json(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "involutions": self.involutions,
            "anticommuting": self.anticommuting,
            "irreducibleDimension": self.irreducible_dimension,
            "firstFailure": self.first_failure,
        }


def _double_generators(
    gens: tuple[SignedPermMatrix, ...]
) -> tuple[SignedPermMatrix, ...]:
    n = gens[0].n
    p0 = gens[0]
    mids = tuple(antidiag(p0.mul(p)) for p in gens[1:])
    return (swap(n),) + mids + (diag_split(n),)


def _augment(
    gens: tuple[SignedPermMatrix, ...], extras: tuple[SignedPermMatrix, ...]
) -> tuple[SignedPermMatrix, ...]:
    return gens[:-1] + tuple(antidiag(j) for j in extras) + gens[-1:]


@lru_cache(maxsize=None)
def _canonical_generators(m: int) -> tuple[SignedPermMatrix, ...]:
    if m == 1:
        return (swap(1), diag_split(1))
    if m in (2, 3, 5, 9, 10, 11, 13):
        return _double_generators(_canonical_generators(m - 1))
    if m == 4:
        return _augment(_canonical_generators(3), (right_mult("k", 4),))
    if m in (6, 7, 8):
        extras = tuple(right_mult(u, 8) for u in ("f", "g", "h")[: m - 5])
        return _augment(_canonical_generators(5), extras)
    if m == 12:
        return _augment(_canonical_generators(11), (block_extension("h", 64),))
    if m in (14, 15, 16):
        return _augment(_canonical_generators(13), _order128_extras()[: m - 13])
    raise ValueError("explicit construction covers m = 1..16 only")


def _order128_extras() -> tuple[SignedPermMatrix, ...]:
    """The three order-128 augmentation blocks.

    They are forced up to sign and order: a block anticommuting with all
    twelve compositions of the doubled system must vanish on the diagonal
    and carry an imaginary unit of the (quaternionic) commutant of those
    compositions in each off-diagonal slot.
    """
    from .exactmat import block_diag

    def cross(x: SignedPermMatrix) -> SignedPermMatrix:  # sigma_1 (x) X
        return block2(None, x, x, None)

    def split(x: SignedPermMatrix) -> SignedPermMatrix:  # sigma_3 (x) X
        return block2(x, None, None, -x)

    first = right_mult("h", 8).kron_identity(16)
    second = cross(antidiag(split(swap(8))))
    inner = antidiag(swap(8))
    third = cross(block_diag([inner, inner]))
    return (first, second, third)


def build(m: int, cls: str = PLUS) -> CliffordSystem:
    """Canonical Clifford system C_m on R^{2 delta(m)}, m = 1..16.

    cls selects the equivalence class when m = 0 mod 4: "plus" is the
    canonical construction, "minus" negates generator P_1, which flips the
    sign of the trace invariant.
    """
    if not 1 <= m <= 16:
        raise ValueError("m must be in 1..16")
    gens = _canonical_generators(m)
    if cls == PLUS:
        tag = PLUS if m % 4 == 0 else NOT_APPLICABLE
        return CliffordSystem(m, gens[0].n, gens, tag)
    if cls != MINUS:
        raise ValueError("cls must be 'plus' or 'minus'")
    if m % 4 != 0:
        raise ValueError("two classes exist only for m = 0 mod 4")
    flipped = (gens[0], -gens[1]) + gens[2:]
    return CliffordSystem(m, gens[0].n, flipped, MINUS)


def double(system: CliffordSystem) -> CliffordSystem:
    """C_{m+1} on R^{2N}: swap, antidiag(P_0 P_a) for a = 1..m, diag(Id, -Id)."""
    gens = _double_generators(system.generators)
    tag = PLUS if (system.m + 1) % 4 == 0 else NOT_APPLICABLE
    return CliffordSystem(system.m + 1, 2 * system.n, gens, tag)


def tilde(m: int) -> CliffordSystem:
    """Representative of the second equivalence class for m in {4, 8},
    built from left instead of right multiplications."""
    if m == 4:
        extras = tuple(antidiag(left_mult(u, 4)) for u in ("i", "j", "k"))
        gens = (swap(4),) + extras + (diag_split(4),)
        return CliffordSystem(4, 8, gens, MINUS)
    if m == 8:
        extras = tuple(
            antidiag(left_mult(u, 8)) for u in ("i", "j", "k", "e", "f", "g", "h")
        )
        gens = (swap(8),) + extras + (diag_split(8),)
        return CliffordSystem(8, 16, gens, MINUS)
    raise ValueError("tilde systems exist for m in {4, 8}")


def verify(system: CliffordSystem) -> VerifyReport:
    """Check symmetry, involutivity, pairwise anticommutation and N = 2 delta(m)."""
    gens = system.generators
    symmetric = True
    involutions = True
    anticommuting = True
    failure = None
    for i, g in enumerate(gens):
        if not g.is_symmetric():
            symmetric = False
            failure = failure or f"generator {i} is not symmetric"
        if not g.is_involution():
            involutions = False
            failure = failure or f"generator {i} is not an involution"
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not gens[i].anticommutes(gens[j]):
                anticommuting = False
                failure = failure or f"generators {i}, {j} do not anticommute"
                break
        if not anticommuting:
            break
    irreducible = system.n == 2 * delta(system.m)
    if not irreducible:
        failure = failure or f"N = {system.n} != 2 delta({system.m})"
    return VerifyReport(symmetric, involutions, anticommuting, irreducible, failure)


def class_trace(system: CliffordSystem) -> int:
    """tr(P_0 P_1 ... P_m); equals +-2 delta(m) when m = 0 mod 4, else 0."""
    prod = system.generators[0]
    for g in system.generators[1:]:
        prod = prod.mul(g)
    return prod.trace()


def to_representation(system: CliffordSystem) -> CliffordRepresentation:
    """Restrict the compositions P_a P_m to the +1-eigenspace of P_0.

    Requires P_0 in swap form, which all canonical builds guarantee; other
    systems are rejected rather than silently conjugated.  In the
    eigenbasis (e_a, e_a) the restrictions give m-1 anticommuting skew
    complex structures on R^delta, and the canonical builds round-trip
    exactly through from_representation.
    """
    half = system.n // 2
    if system.generators[0] != swap(half):
        raise ValueError("P_0 must be the standard swap; normalize first")
    p_last = system.generators[-1]
    matrices = []
    for p in system.generators[1:-1]:
        matrices.append(_restrict_to_diagonal(p.mul(p_last), half))
    rep = CliffordRepresentation(half, tuple(matrices))
    rep.validate()
    return rep


def _restrict_to_diagonal(mat: SignedPermMatrix, half: int) -> SignedPermMatrix:
    if not mat.commutes(swap(half)):
        raise ValueError("matrix does not preserve the eigenspace")
    perm = [0] * half
    signs = [0] * half
    for a in range(half):
        t, s = mat.apply(a)
        perm[a] = t - half if t >= half else t
        signs[a] = s
    return SignedPermMatrix(half, tuple(perm), tuple(signs))


def from_representation(rep: CliffordRepresentation) -> CliffordSystem:
    """Clifford system on R^{2 delta}: P_0(u,v) = (v,u),
    P_a(u,v) = (-E_a v, E_a u), P_m(u,v) = (u,-v)."""
    rep.validate()
    half = rep.delta
    gens = (
        (swap(half),)
        + tuple(antidiag(e) for e in rep.matrices)
        + (diag_split(half),)
    )
    m = rep.count + 1
    return CliffordSystem(m, 2 * half, gens, PLUS if m % 4 == 0 else NOT_APPLICABLE)


def classify_essential(m: int) -> str:
    """Essentiality of irreducible rank-(m+1) even Clifford structures on
    R^{2 delta(m)}: periodic in m mod 8."""
    if m < 1:
        raise ValueError("m must be >= 1")
    r = m % 8
    if r in (3, 5, 6, 7):
        return ESSENTIAL
    if r in (0, 4):
        return NON_ESSENTIAL
    return UNDETERMINED


def commutant_dim(matrices) -> int:
    """dim {X in so(N): X P = P X for every P}."""
    from .liealg import commutant_dim as _impl

    return _impl(matrices)


def normalizer_dim(system: CliffordSystem) -> int:
    """dim {X in so(N): [X, P_a] lies in span(P_0..P_m) for every a}."""
    from .liealg import normalizer_dim as _impl

    return _impl(system.generators)


def system_to_json(system: CliffordSystem) -> dict:
    from .exactmat import matrix_to_json

    return {
        "m": system.m,
        "n": system.n,
        "class": system.class_tag,
        "classTrace": class_trace(system),
        "generators": [matrix_to_json(g) for g in system.generators],
    }


def system_from_json(data: dict) -> CliffordSystem:
    from .exactmat import matrix_from_json

    gens = tuple(matrix_from_json(g) for g in data["generators"])
    tag = data.get("class", NOT_APPLICABLE)
    return CliffordSystem(data["m"], data["n"], gens, tag)
