"""Weight-lattice dictionary for the type-A simple Lie algebras.

Dominant integral weights are kept in fundamental-weight coordinates
(a_1, ..., a_{r-1}) with the rank carried alongside.  The bilinear form is
the standard one with (w_i, w_j) = min(i,j) - ij/r; partitions translate to
weights by row differences, weights back to partitions by suffix sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .combinatorics import Partition, as_partition, kostka


@dataclass(frozen=True)
class WeightVector:
    """A dominant integral weight of the rank-``rank`` algebra."""

    rank: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.rank < 2:
            raise ValueError("rank must be at least 2")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.rank - 1:
            raise ValueError(
                f"need {self.rank - 1} fundamental-weight coordinates, "
                f"got {len(coeffs)}"
            )
        if any(c < 0 for c in coeffs):
            raise ValueError("dominant integral weights need nonnegative coordinates")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def coset_index(self) -> int:
        """Index i of the coset (root lattice + i * first fundamental weight)."""
        return sum(i * a for i, a in enumerate(self.coeffs, 1)) % self.rank

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_text(self) -> str:
        bits = [
            f"{a}*w{i}" if a != 1 else f"w{i}"
            for i, a in enumerate(self.coeffs, 1)
            if a
        ]
        return " + ".join(bits) if bits else "0"

    def to_json_dict(self) -> dict:
        return {"rank": self.rank, "coeffs": list(self.coeffs)}


def bilinear_form(rank: int, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Bilinear extension of (w_i, w_j) = min(i,j) - ij/rank.

    Accepts raw coordinate sequences (length <= rank-1), so it also serves
    for roots and other integral-span vectors in tests.
    """
    total = Fraction(0)
    for i, ai in enumerate(a, 1):
        if not ai:
            continue
        for j, bj in enumerate(b, 1):
            if bj:
                total += ai * bj * Fraction(min(i, j) * rank - i * j, rank)
    return total


def pairing(mu: WeightVector, nu: WeightVector) -> Fraction:
    if mu.rank != nu.rank:
        raise ValueError(f"rank mismatch: {mu.rank} vs {nu.rank}")
    return bilinear_form(mu.rank, mu.coeffs, nu.coeffs)


def weyl_vector(rank: int) -> WeightVector:
    return WeightVector(rank, (1,) * (rank - 1))


def casimir_pairing(mu: WeightVector) -> Fraction:
    """(mu, mu + 2*delta) with delta the Weyl vector."""
    delta = weyl_vector(mu.rank)
    return pairing(mu, mu) + 2 * pairing(mu, delta)


def weight_of_partition(shape: Iterable[int], rank: int) -> WeightVector:
    """Row-difference coordinates of a partition with at most ``rank`` rows."""
    lam = as_partition(shape)
    if len(lam) > rank:
        raise ValueError(f"partition has {len(lam)} rows, rank is {rank}")
    padded = lam + (0,) * (rank - len(lam))
    return WeightVector(rank, tuple(padded[i] - padded[i + 1] for i in range(rank - 1)))


def partition_of_weight(mu: WeightVector, a_r: int = 0) -> Partition:
    """The partition with the given row differences and last row ``a_r``."""
    if a_r < 0:
        raise ValueError("last row must be nonnegative")
    # suffix sums: row i is a_i + ... + a_{r-1} + a_r
    rows = list(mu.coeffs) + [a_r]
    out = []
    total = 0
    for a in reversed(rows):
        total += a
        out.append(total)
    out.reverse()
    return as_partition(out)


def weyl_dim(mu: WeightVector) -> int:
    """Dimension of the irreducible module, by the Weyl product formula."""
    r = mu.rank
    lam = partition_of_weight(mu)
    padded = lam + (0,) * (r - len(lam))
    num = 1
    den = 1
    for i in range(r):
        for j in range(i + 1, r):
            num *= padded[i] - padded[j] + j - i
            den *= j - i
    dim, rem = divmod(num, den)
    if rem:
        raise AssertionError("Weyl dimension product failed to divide exactly")
    return dim


def zero_weight_dim(mu: WeightVector) -> int:
    """Dimension of the zero weight space.

    Vanishes off the root-lattice coset; on it, equals the Kostka number of
    the canonical partition with balanced rectangular content.
    """
    if mu.coset_index != 0:
        return 0
    lam = partition_of_weight(mu)
    k, rem = divmod(sum(lam), mu.rank)
    if rem:
        raise AssertionError("coset-zero weight with non-divisible partition weight")
    return kostka(lam, (k,) * mu.rank)


def epsilon_coords(mu: WeightVector, a_r: int = 0) -> tuple[Fraction, ...]:
    """Coordinates in the sum-zero hyperplane model, where the form is the
    standard dot product and the Weyl group permutes entries."""
    r = mu.rank
    lam = partition_of_weight(mu, a_r)
    padded = lam + (0,) * (r - len(lam))
    mean = Fraction(sum(padded), r)
    return tuple(Fraction(x) - mean for x in padded)


def scaled_coeff_sum(mu: WeightVector) -> int:
    """sum of i * a_i; the weight of the canonical partition."""
    return sum(i * a for i, a in enumerate(mu.coeffs, 1))


def dominant_weights(
    rank: int, max_scaled_sum: int, coset: int | None = None
) -> Iterator[WeightVector]:
    """Dominant weights with sum of i*a_i at most the bound.

    Yields in increasing order of the scaled sum, coordinates lexicographic
    within each level; optionally filtered to one coset of the root lattice.
    """
    if coset is not None and not 0 <= coset < rank:
        raise ValueError(f"coset index must be in 0..{rank - 1}")

    def vectors(level: int) -> Iterator[tuple[int, ...]]:
        def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
            if i == rank:
                if remaining == 0:
                    yield ()
                return
            for a in range(remaining // i, -1, -1):
                for rest in rec(i + 1, remaining - i * a):
                    yield (a,) + rest

        yield from rec(1, level)

    for level in range(max_scaled_sum + 1):
        if coset is not None and level % rank != coset:
            continue
        for coeffs in sorted(vectors(level)):
            yield WeightVector(rank, coeffs)
