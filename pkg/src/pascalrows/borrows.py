"""Borrow counting in base-b subtraction and row counts it induces.

For a prime base, the number of borrows when subtracting m from n equals
the exponent of the highest power of the base dividing C(n, m), so the
distribution of borrow counts over 0 <= m <= n is the ground truth for
counting nonzero binomial coefficients modulo a prime power.  For m > n
(within the padded width of n) borrows are counted up through the borrow
out of the top digit position, which is what the B distribution below
tracks.  Everything here works for any base >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .digits import DigitWord, digit_product, from_digits, to_digits
from .errors import ResourceLimitError
from .primes import require_prime

# Size guards for the definition-level enumerations.
ENUMERATION_LIMIT = 10**7
BIGINT_ROW_LIMIT = 3000


@dataclass(frozen=True)
class BorrowDistribution:
    """Counts of m by number of borrows in n - m, split at m <= n.

    a_counts[beta] is the number of 0 <= m <= n whose subtraction takes
    exactly beta borrows; b_counts[beta] covers n < m < base**len(word),
    counting borrows up through the one taken from the zero digit just
    above the top of the word.
    """

    word: DigitWord
    a_counts: tuple[int, ...]
    b_counts: tuple[int, ...]

    @property
    def base(self) -> int:
        return self.word.base


def count_borrows(n: int, m: int, base: int) -> int:
    """Borrows taken when subtracting m from n in the given base.

    A borrow is taken from position i+1 exactly when the low i+1 digits
    of m exceed, as a number, the low i+1 digits of n.  Positions are
    scanned across the width of n, which for m > n includes the final
    borrow out of the top; for m <= n this is Kummer's borrow count.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    borrows = 0
    power = base
    while power <= n or (m > n and power <= m):
        if m % power > n % power:
            borrows += 1
        power *= base
    if m > n:
        borrows += 1  # the borrow from the zero digit above the top of n
    return borrows


def _vector_borrow_counts(value: int, width: int, base: int, lo: int, hi: int) -> np.ndarray:
    """Borrow counts for every m in [lo, hi), vectorized over m."""
    m = np.arange(lo, hi, dtype=np.int64)
    counts = np.zeros(m.shape, dtype=np.int64)
    power = 1
    for _ in range(width):
        power *= base
        counts += m % power > value % power
    return counts


def borrow_distribution_enumerate(n: DigitWord) -> BorrowDistribution:
    """Definition-level enumeration of the A and B distributions.

    Guarded to desk scale: every m below base**len(n) is visited.
    """
    width = len(n)
    base = n.base
    total = base**width
    if total > ENUMERATION_LIMIT:
        raise ResourceLimitError(
            f"enumeration over {total} values exceeds the limit {ENUMERATION_LIMIT}"
        )
    value = from_digits(n)
    a_counts = np.zeros(width + 1, dtype=np.int64)
    b_counts = np.zeros(width + 1, dtype=np.int64)
    a_seen = np.bincount(_vector_borrow_counts(value, width, base, 0, value + 1))
    a_counts[: len(a_seen)] = a_seen
    if value + 1 < total:
        b_seen = np.bincount(_vector_borrow_counts(value, width, base, value + 1, total))
        b_counts[: len(b_seen)] = b_seen
    return BorrowDistribution(n, tuple(int(x) for x in a_counts), tuple(int(x) for x in b_counts))


def borrow_distribution_recurrence(n: DigitWord, beta_max: int | None = None) -> BorrowDistribution:
    """A and B distributions by the digit recurrence, O(len(n) * beta_max).

    Prepending a leading digit d to a word maps the distributions as
        A'(beta) = (d+1) A(beta) + d B(beta)
        B'(beta) = (base-d-1) A(beta-1) + (base-d) B(beta-1)
    starting from the empty word, where A = [1] and B vanishes.
    """
    if beta_max is None:
        beta_max = len(n)
    if beta_max < 0:
        raise ValueError(f"beta_max must be nonnegative, got {beta_max}")
    base = n.base
    a = [1] + [0] * beta_max
    b = [0] * (beta_max + 1)
    for d in reversed(n.digits):
        a_new = [(d + 1) * a[beta] + d * b[beta] for beta in range(beta_max + 1)]
        b_new = [0] + [
            (base - d - 1) * a[beta - 1] + (base - d) * b[beta - 1]
            for beta in range(1, beta_max + 1)
        ]
        a, b = a_new, b_new
    return BorrowDistribution(n, tuple(a), tuple(b))


def row_nonzero_count_kummer(n: int, p: int, alpha: int) -> int:
    """Brute-force count of m <= n taking fewer than alpha borrows.

    By Kummer's theorem this is the number of nonzero entries on row n of
    Pascal's triangle modulo p**alpha.  Every m is enumerated.
    """
    require_prime(p)
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    if alpha == 0:
        return 0
    if n + 1 > ENUMERATION_LIMIT:
        raise ResourceLimitError(f"n = {n} exceeds the enumeration limit")
    word = to_digits(n, p)
    counts = _vector_borrow_counts(n, len(word), p, 0, n + 1)
    return int(np.count_nonzero(counts < alpha))


def row_nonzero_count_recurrence(n: int, p: int, alpha: int) -> int:
    """Same count as row_nonzero_count_kummer via the digit recurrence."""
    require_prime(p)
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    word = to_digits(n, p)
    dist = borrow_distribution_recurrence(word)
    return sum(dist.a_counts[: min(alpha, len(dist.a_counts))])


@lru_cache(maxsize=4)
def _pascal_row(n: int) -> tuple[int, ...]:
    row = [1]
    for m in range(1, n + 1):
        row.append(row[-1] * (n - m + 1) // m)
    return tuple(row)


def row_nonzero_count_bigint(n: int, k: int) -> int:
    """Count entries of row n not divisible by k, by exact big integers.

    Independent second oracle: the row is built multiplicatively and each
    entry reduced modulo k.  Works for any modulus k >= 2.
    """
    if k < 2:
        raise ValueError(f"modulus must be >= 2, got {k}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > BIGINT_ROW_LIMIT:
        raise ResourceLimitError(f"n = {n} exceeds the bigint row limit {BIGINT_ROW_LIMIT}")
    return sum(1 for entry in _pascal_row(n) if entry % k != 0)


def fine_count(n: int, p: int) -> int:
    """Nonzero entries on row n modulo a prime: the product of (digit+1)."""
    return digit_product(to_digits(n, p))
