"""Small-scale end-to-end checks, runnable from the CLI.

Each check exercises one cross-path of the library (dynamic program vs
enumeration, product formula vs alternant, invariant vs character) at sizes
that finish in well under a second.  The full-depth versions live in the
test suite; this battery is for quick health checks of an installation.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import permutations
from typing import Callable

from .combinatorics import (
    enumerate_ssyt,
    kappa,
    kappa_from_gaps,
    kostka,
    partitions_of,
)
from .lie_sl import (
    WeightVector,
    casimir_pairing,
    partition_of_weight,
    weight_of_partition,
    weyl_dim,
)
from .link_invariants import TorusLinkSpec, jones_torus_link
from .qseries import QSeries, euler_product, invert_unit
from .schur_spec import principal_spec, weyl_denominator
from .verifier import (
    check_prop_full_dim,
    check_prop_zero_weight,
    phi_bijection_check,
    verify_singlet_theorem,
    verify_triplet_theorem,
)


def _partition_count_table(limit: int) -> list[int]:
    # classic part-size DP; independent of the series machinery
    counts = [1] + [0] * limit
    for part in range(1, limit + 1):
        for n in range(part, limit + 1):
            counts[n] += counts[n - part]
    return counts


def _check_euler_inverse() -> bool:
    limit = 30
    series = invert_unit(euler_product(limit + 1))
    table = _partition_count_table(limit)
    return all(series.coefficient(n) == table[n] for n in range(limit + 1))


def _check_euler_signs() -> bool:
    limit = 25
    series = euler_product(limit + 1)

    def parity_count(n: int) -> int:
        # partitions of n into distinct parts, counted with parity sign
        def rec(remaining: int, largest: int) -> int:
            if remaining == 0:
                return 1
            total = 0
            for part in range(min(remaining, largest), 0, -1):
                total -= rec(remaining - part, part - 1)
            return total

        return rec(n, n)

    return all(series.coefficient(n) == parity_count(n) for n in range(limit + 1))


def _check_kostka_enumeration() -> bool:
    for weight in range(7):
        for lam in partitions_of(weight, 3):
            for content in partitions_of(weight, 3):
                for perm in set(permutations(content)):
                    if kostka(lam, perm) != len(enumerate_ssyt(lam, perm)):
                        return False
    return True


def _check_kappa_gap_form() -> bool:
    rng = random.Random(7)
    for _ in range(200):
        r = rng.randint(2, 6)
        gaps = tuple(rng.randint(0, 6) for _ in range(r))
        lam = partition_of_weight(WeightVector(r, gaps[:-1]), gaps[-1])
        if kappa(lam) != kappa_from_gaps(gaps):
            return False
    return True


def _check_casimir_kappa() -> bool:
    rng = random.Random(11)
    for _ in range(200):
        r = rng.randint(2, 5)
        mu = WeightVector(r, tuple(rng.randint(0, 5) for _ in range(r - 1)))
        a_r = rng.randint(0, 4)
        lam = partition_of_weight(mu, a_r)
        n = sum(lam)
        expected = kappa(lam) + r * n - Fraction(n * n, r)
        if casimir_pairing(mu) != expected:
            return False
    return True


def _check_principal_spec() -> bool:
    rng = random.Random(13)
    for _ in range(50):
        r = rng.randint(2, 4)
        lam = tuple(
            sorted((rng.randint(1, 6) for _ in range(rng.randint(0, r))), reverse=True)
        )
        series = principal_spec(lam, r)
        palindromic = all(
            series.coefficient(-e) == c for e, c in series.terms.items()
        )
        dim = sum(series.terms.values())
        if not palindromic or dim != weyl_dim(weight_of_partition(lam, r)):
            return False
    return True


def _check_weyl_denominator() -> bool:
    for r in range(2, 5):
        pairs = [(i, j) for i in range(1, r) for j in range(i + 1, r + 1)]
        product = QSeries.one()
        for i, j in pairs:
            product = product * QSeries({Fraction(0): 1, Fraction(j - i): -1})
        delta_sq = Fraction(r * (r - 1) * (r + 1), 12)
        sign = 1 if len(pairs) % 2 == 0 else -1
        closed = QSeries.monomial(sign, -delta_sq) * product
        if weyl_denominator(r) != closed:
            return False
    return True


def _check_symmetric_power_expansion() -> bool:
    for r in range(2, 4):
        for n in range(0, 4):
            for m in range(1, 4):
                lhs = principal_spec((n,), r) ** m
                rhs = QSeries.zero()
                for lam in partitions_of(n * m, r):
                    weight = kostka(lam, (n,) * m)
                    if weight:
                        rhs = rhs + weight * principal_spec(lam, r)
                if lhs != rhs:
                    return False
    return True


def _check_singlet_verify() -> bool:
    return (
        verify_singlet_theorem(2, 2, 2, 10, 8).passed
        and verify_singlet_theorem(3, 2, 2, 8, 6).passed
    )


def _check_triplet_verify() -> bool:
    return (
        verify_triplet_theorem(2, 2, 0, 10, 8).passed
        and verify_triplet_theorem(2, 2, 1, 11, 8).passed
    )


def _check_propositions() -> bool:
    for r in range(2, 4):
        for weight in range(0, 9):
            for lam in partitions_of(weight, r):
                if not check_prop_zero_weight(lam, r):
                    return False
        for colour in range(1, 9 // (r + 1) + 1):
            for lam in partitions_of(colour * (r + 1), r):
                verdict = check_prop_full_dim(lam, colour, r)
                if verdict == "fail":
                    return False
                if verdict == "pass" and not phi_bijection_check(lam, colour, r):
                    return False
    return True


def _check_json_round_trip() -> bool:
    series = jones_torus_link(TorusLinkSpec(2, 2, 2, 1))
    text = series.to_json()
    back = QSeries.from_json(text)
    return back == series and back.to_json() == text


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("euler-product-inverse", _check_euler_inverse),
    ("euler-product-signs", _check_euler_signs),
    ("kostka-vs-enumeration", _check_kostka_enumeration),
    ("kappa-gap-form", _check_kappa_gap_form),
    ("casimir-vs-kappa", _check_casimir_kappa),
    ("principal-spec-palindrome-dim", _check_principal_spec),
    ("weyl-denominator-closed-form", _check_weyl_denominator),
    ("symmetric-power-expansion", _check_symmetric_power_expansion),
    ("singlet-verify-small", _check_singlet_verify),
    ("triplet-verify-small", _check_triplet_verify),
    ("propositions-small", _check_propositions),
    ("series-json-round-trip", _check_json_round_trip),
]


def run_all(jobs: int = 1) -> list[tuple[str, bool]]:
    """Run every check; results come back in the fixed declaration order
    regardless of the degree of parallelism."""
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda item: item[1](), CHECKS))
    else:
        outcomes = [fn() for _, fn in CHECKS]
    return [(name, ok) for (name, _), ok in zip(CHECKS, outcomes)]
