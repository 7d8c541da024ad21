"""Classification of Clifford algebras as matrix algebras over R, C, H.

Over the reals the Morita type of C^{p,q} depends only on (p - q) mod 8; over
the complex numbers only on (p + q) mod 2.  The matrix size is then pinned
down by the dimension identity factors * k**2 * dim(D) = dim C^{p,q}.  The
table below is the classical eightfold one; it is validated against explicit
representations in cliffk.reps, not assumed there.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .blades import Signature
from .errors import InvalidSignatureError
from .scalars import ScalarField


class DivisionRing(enum.Enum):
    R = "R"
    C = "C"
    H = "H"

    @property
    def dim_real(self) -> int:
        return {"R": 1, "C": 2, "H": 4}[self.value]


# (p - q) mod 8 -> (number of simple factors, division ring)
_REAL_TYPE = {
    0: (1, DivisionRing.R),
    1: (1, DivisionRing.C),
    2: (1, DivisionRing.H),
    3: (2, DivisionRing.H),
    4: (1, DivisionRing.H),
    5: (1, DivisionRing.C),
    6: (1, DivisionRing.R),
    7: (2, DivisionRing.R),
}


@dataclass(frozen=True)
class AlgebraDescriptor:
    """A product of ``factors`` copies of k x k matrices over ``ring``."""

    factors: int
    matrix_size: int
    ring: DivisionRing
    scalar_field: ScalarField

    def __post_init__(self):
        if self.factors not in (1, 2):
            raise ValueError(f"factors must be 1 or 2, got {self.factors}")
        if self.matrix_size < 1:
            raise ValueError(f"matrix size must be positive, got {self.matrix_size}")
        if self.scalar_field is ScalarField.COMPLEX and self.ring is not DivisionRing.C:
            raise ValueError("complex-field algebras are matrix algebras over C")

    @property
    def dim_real(self) -> int:
        """Dimension over R (so twice the complex dimension for C-algebras)."""
        return self.factors * self.matrix_size**2 * self.ring.dim_real

    @property
    def dim_over_field(self) -> int:
        d = self.dim_real
        return d // 2 if self.scalar_field is ScalarField.COMPLEX else d

    def __str__(self):
        one = f"M_{self.matrix_size}({self.ring.value})"
        return " (+) ".join([one] * self.factors)


@lru_cache(maxsize=None)
def classify(sig: Signature, field: ScalarField = ScalarField.REAL) -> AlgebraDescriptor:
    """Matrix-algebra form of C^{p,q} over the given scalar field.

    >>> str(classify(Signature(2, 0)))
    'M_1(H)'
    >>> str(classify(Signature(0, 2)))
    'M_2(R)'
    >>> str(classify(Signature(3, 0), ScalarField.REAL))
    'M_1(H) (+) M_1(H)'
    """
    if not isinstance(sig, Signature):
        raise InvalidSignatureError(f"expected a Signature, got {sig!r}")
    n = sig.n
    if field is ScalarField.REAL:
        factors, ring = _REAL_TYPE[(sig.p - sig.q) % 8]
    else:
        factors, ring = (1, DivisionRing.C) if n % 2 == 0 else (2, DivisionRing.C)
    # factors * k**2 * dim(D) accounts for the full 2**n (real dimension over
    # R; complex dimension over C)
    total = 1 << n
    per_factor, rem = divmod(total, factors * (ring.dim_real if field is ScalarField.REAL else 1))
    assert rem == 0, (sig, field)
    k = isqrt(per_factor)
    assert k * k == per_factor, (sig, field)
    return AlgebraDescriptor(factors, k, ring, field)


def irrep_dims(sig: Signature, field: ScalarField = ScalarField.REAL) -> tuple[int, ...]:
    """Dimensions of the simple modules, over the given scalar field.

    One entry per simple factor: a k x k matrix algebra over D acts
    irreducibly on D**k, of dimension k * dim(D) over R and k over C.

    >>> irrep_dims(Signature(3, 0))
    (4, 4)
    >>> irrep_dims(Signature(5, 0))
    (8,)
    """
    desc = classify(sig, field)
    if field is ScalarField.REAL:
        entry = desc.matrix_size * desc.ring.dim_real
    else:
        entry = desc.matrix_size
    return (entry,) * desc.factors


def min_faithful_dim(sig: Signature, field: ScalarField = ScalarField.REAL) -> int:
    """Smallest dimension of a faithful module: one copy of each simple module."""
    return sum(irrep_dims(sig, field))


def periodicity_shapes(m: int, field: ScalarField = ScalarField.REAL
                       ) -> tuple[AlgebraDescriptor, AlgebraDescriptor]:
    """Both sides of the two-step periodicity C^{0,m+2} ~ C^{m,0} (x) M_2.

    Returns the descriptor of C^{0,m+2} and the descriptor obtained from
    classify(C^{m,0}) by doubling the matrix size; the two agree, which the
    tests check against this function rather than assuming.
    """
    if m < 0:
        raise InvalidSignatureError(f"negative tensor-shift parameter {m}")
    lhs = classify(Signature(0, m + 2), field)
    base = classify(Signature(m, 0), field)
    rhs = AlgebraDescriptor(base.factors, 2 * base.matrix_size, base.ring,
                            base.scalar_field)
    return lhs, rhs
