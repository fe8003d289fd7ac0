"""Normalized characters of the higher-rank singlet and triplet logarithmic
VOAs, as truncated q-series.

Each character is a prefactor (a finite product over positive-root heights
divided by a power of the Euler product) times an infinite sum over a cone
of dominant weights in one coset of the root lattice.  The cone sum is
truncated safely: the lowest exponent of the summand at weight mu is at
least (p/(2r) + (p-1)/2) times sum(i * a_i), so only weights below a
computable level can touch coefficients under the cutoff.  The bound is
re-checked per summand at run time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .lie_sl import (
    WeightVector,
    casimir_pairing,
    dominant_weights,
    scaled_coeff_sum,
    weyl_dim,
    zero_weight_dim,
)
from .qseries import QSeries, euler_product, invert_unit
from .schur_spec import principal_spec_weight

_ExponentLike = Fraction | int


@dataclass(frozen=True)
class CharacterSpec:
    """Parameters of one normalized character series."""

    rank: int
    p: int
    kind: str
    cutoff: Fraction
    coset: int = 0

    def __post_init__(self):
        if self.rank < 2:
            raise ValueError("rank must be at least 2")
        if self.p < 2:
            raise ValueError("the character family is defined for p >= 2")
        if self.kind not in ("singlet", "triplet"):
            raise ValueError(f"kind must be 'singlet' or 'triplet', got {self.kind!r}")
        if not 0 <= self.coset < self.rank:
            raise ValueError(f"coset index must be in 0..{self.rank - 1}")
        if self.kind == "singlet" and self.coset != 0:
            raise ValueError("the singlet character lives on coset 0")
        object.__setattr__(self, "cutoff", Fraction(self.cutoff))
        if self.cutoff <= 0:
            raise ValueError("cutoff must be positive")


def summand_exponent_bound(rank: int, p: int) -> Fraction:
    """Per-unit lower bound: each cone summand has lowest exponent at least
    this times sum(i * a_i) of its weight."""
    return Fraction(p, 2 * rank) + Fraction(p - 1, 2)


def enumeration_level(rank: int, p: int, cutoff: Fraction) -> int:
    """Largest scaled coordinate sum whose summand can reach below cutoff."""
    bound = summand_exponent_bound(rank, p)
    level = cutoff / bound  # include m only when bound * m < cutoff
    top = level.numerator // level.denominator
    if Fraction(top) == level:
        top -= 1
    return max(top, 0)


def _cone_sum(
    rank: int,
    p: int,
    coset: int,
    cutoff: Fraction,
    dim_of: Callable[[WeightVector], int],
    enumeration_bound: int | None = None,
) -> QSeries:
    bound = summand_exponent_bound(rank, p)
    level = (
        enumeration_level(rank, p, cutoff)
        if enumeration_bound is None
        else int(enumeration_bound)
    )
    total = QSeries.zero()
    for mu in dominant_weights(rank, level, coset):
        dim = dim_of(mu)
        if dim == 0:
            continue
        exponent = Fraction(p, 2) * casimir_pairing(mu)
        term = QSeries.monomial(dim, exponent) * principal_spec_weight(mu)
        floor = bound * scaled_coeff_sum(mu)
        if term.low < floor:
            raise AssertionError(
                f"summand at {mu} reaches exponent {term.low}, below the "
                f"safety bound {floor}; truncation would be unsound"
            )
        total = total + term
    return total.truncate(cutoff)


def _height_product(rank: int) -> QSeries:
    """Product of (1 - q^(j-i)) over 1 <= i < j <= rank; exact."""
    out = QSeries.one()
    for i in range(1, rank):
        for j in range(i + 1, rank + 1):
            out = out * QSeries({Fraction(0): 1, Fraction(j - i): -1})
    return out


def _cross_product(components: int, rank: int) -> QSeries:
    """Product of (1 - q^(j-i)) over i <= components < j <= rank; exact."""
    out = QSeries.one()
    for i in range(1, components + 1):
        for j in range(components + 1, rank + 1):
            out = out * QSeries({Fraction(0): 1, Fraction(j - i): -1})
    return out


def singlet_char(spec: CharacterSpec, *, enumeration_bound: int | None = None) -> QSeries:
    """Normalized singlet character: height product over the Euler-product
    power, times the zero-weight-dimension cone sum on coset 0."""
    if spec.kind != "singlet":
        raise ValueError("spec.kind must be 'singlet'")
    cut = spec.cutoff
    prefactor = _height_product(spec.rank) * invert_unit(
        euler_product(cut) ** (spec.rank - 1)
    )
    cone = _cone_sum(spec.rank, spec.p, 0, cut, zero_weight_dim, enumeration_bound)
    return (prefactor * cone).truncate(cut)


def triplet_char(spec: CharacterSpec, *, enumeration_bound: int | None = None) -> QSeries:
    """Normalized triplet character on the chosen coset: same prefactor,
    full-dimension cone sum."""
    if spec.kind != "triplet":
        raise ValueError("spec.kind must be 'triplet'")
    cut = spec.cutoff
    prefactor = _height_product(spec.rank) * invert_unit(
        euler_product(cut) ** (spec.rank - 1)
    )
    cone = _cone_sum(spec.rank, spec.p, spec.coset, cut, weyl_dim, enumeration_bound)
    return (prefactor * cone).truncate(cut)


def rhs_singlet_limit(
    rank: int, components: int, p: int, cutoff: _ExponentLike
) -> QSeries:
    """The colour-limit comparison series for 2 <= components <= rank:
    cross-product and height-product correction factors times the rank-
    ``components`` singlet character."""
    if not 2 <= components <= rank:
        raise ValueError(
            f"need 2 <= components <= rank, got components={components} rank={rank}"
        )
    cut = Fraction(cutoff)
    cross = invert_unit(_cross_product(components, rank), cut)
    correction = euler_product(cut) ** (components - 1) * invert_unit(
        _height_product(components), cut
    )
    char = singlet_char(CharacterSpec(components, p, "singlet", cut))
    return (cross * correction * char).truncate(cut)


def rhs_triplet_limit(rank: int, p: int, coset: int, cutoff: _ExponentLike) -> QSeries:
    """The colour-limit comparison series for components = rank + 1:
    Euler-product power over the height product, times the triplet character
    on the chosen coset."""
    cut = Fraction(cutoff)
    correction = euler_product(cut) ** (rank - 1) * invert_unit(
        _height_product(rank), cut
    )
    char = triplet_char(CharacterSpec(rank, p, "triplet", cut, coset))
    return (correction * char).truncate(cut)
