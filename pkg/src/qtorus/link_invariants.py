"""Coloured invariants of torus links whose components all carry the same
symmetric-power colour.

The invariant of the c-component torus link T(c, cp), with every component
coloured by the n-th symmetric power, is a finite Kostka-weighted sum of
framing monomials times principal specializations: an exact Laurent
polynomial of grain 2.  Two shifted forms move its lowest terms to the
origin for comparison with character series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterator

from .combinatorics import Partition, kappa, kostka, partitions_of
from .qseries import QSeries
from .schur_spec import principal_spec


@dataclass(frozen=True)
class TorusLinkSpec:
    """T(components, components * p) with every component coloured by the
    ``colour``-th symmetric power of the rank-``rank`` defining module."""

    rank: int
    components: int
    p: int
    colour: int

    def __post_init__(self):
        if self.rank < 2:
            raise ValueError("rank must be at least 2")
        if self.components < 1:
            raise ValueError("need at least one component")
        if self.p < 1:
            raise ValueError("p must be positive")
        if self.colour < 0:
            raise ValueError("colour must be nonnegative")


def jones_summands(spec: TorusLinkSpec) -> Iterator[tuple[Partition, int, QSeries]]:
    """Per-partition contributions (shape, Kostka weight, term series).

    The sum runs over partitions of colour * components with at most
    min(rank, components) rows; shapes with Kostka weight zero are skipped.
    """
    n, c, r, p = spec.colour, spec.components, spec.rank, spec.p
    content = (n,) * c
    for lam in partitions_of(n * c, min(r, c)):
        weight = kostka(lam, content)
        if weight == 0:
            continue
        framing = Fraction(p * kappa(lam), 2)
        term = QSeries.monomial(weight, framing) * principal_spec(lam, r)
        yield lam, weight, term


def jones_torus_link(spec: TorusLinkSpec) -> QSeries:
    """The specialized coloured invariant, as an exact Laurent polynomial."""
    total = QSeries.zero()
    for _, _, term in jones_summands(spec):
        total = total + term
    return QSeries(total.terms, grain=2)


def singlet_shift_exponent(spec: TorusLinkSpec) -> Fraction:
    n, c, r, p = spec.colour, spec.components, spec.rank, spec.p
    return Fraction(p, 2) * (-n * n * c + n * c * c) + Fraction(n * c * (r - c), 2)


def triplet_shift_exponent(spec: TorusLinkSpec) -> Fraction:
    n, r, p = spec.colour, spec.rank, spec.p
    return Fraction(p, 2) * (Fraction(-n * n * (r + 1) ** 2, r) + n * r * (r + 1))


def shifted_invariant_singlet(spec: TorusLinkSpec) -> QSeries:
    """Monomial-shifted invariant whose colour limit is a singlet character
    series; defined for 2 <= components <= rank."""
    if not 2 <= spec.components <= spec.rank:
        raise ValueError(
            f"need 2 <= components <= rank, got components={spec.components} "
            f"rank={spec.rank}"
        )
    shifted = QSeries.monomial(1, singlet_shift_exponent(spec)) * jones_torus_link(spec)
    return QSeries(shifted.terms, grain=2)


def shifted_invariant_triplet(spec: TorusLinkSpec) -> QSeries:
    """Monomial-shifted invariant whose colour limit (along one residue class
    of colours) is a triplet character series; needs components = rank + 1."""
    if spec.components != spec.rank + 1:
        raise ValueError(
            f"need components = rank + 1, got components={spec.components} "
            f"rank={spec.rank}"
        )
    shifted = QSeries.monomial(1, triplet_shift_exponent(spec)) * jones_torus_link(spec)
    return QSeries(shifted.terms, grain=lcm(2, 2 * spec.rank))
