"""Base-b digit words and subword occurrence counts.

A nonnegative integer n is handled as the word of its base-b digits,
most significant digit first; 0 is the empty word.  The central statistic
is the number of contiguous occurrences of a word w inside the digits of
n, counted with overlaps allowed.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DigitWord:
    """A finite digit sequence over {0, ..., base-1}, most significant first."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        if self.base <= 10:
            return "".join(str(d) for d in self.digits)
        return ",".join(str(d) for d in self.digits)


def word(text: str, base: int) -> DigitWord:
    """Parse the rendering produced by str(): digit string for base <= 10,
    comma-separated integers otherwise.  Empty input gives the empty word."""
    if not text:
        return DigitWord(base, ())
    if base <= 10:
        return DigitWord(base, tuple(int(ch) for ch in text))
    return DigitWord(base, tuple(int(part) for part in text.split(",")))


def to_digits(n: int, base: int) -> DigitWord:
    """Digits of n in the given base; 0 maps to the empty word."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    digits = []
    while n > 0:
        n, d = divmod(n, base)
        digits.append(d)
    return DigitWord(base, tuple(reversed(digits)))


def from_digits(w: DigitWord) -> int:
    """Integer value of a digit word; the empty word is 0."""
    value = 0
    for d in w.digits:
        value = value * w.base + d
    return value


def subword_count(n: DigitWord, w: DigitWord) -> int:
    """Occurrences of w in n, overlapping occurrences included."""
    if n.base != w.base:
        raise ValueError(f"base mismatch: {n.base} vs {w.base}")
    if len(w) == 0:
        raise ValueError("subword must be nonempty")
    k = len(w.digits)
    target = w.digits
    return sum(1 for i in range(len(n.digits) - k + 1) if n.digits[i : i + k] == target)


def all_subword_counts(n: DigitWord, max_length: int) -> dict[DigitWord, int]:
    """Counts of every word of length 1..max_length occurring in n.

    Words that do not occur are absent (count 0).
    """
    if max_length < 1:
        raise ValueError(f"max_length must be >= 1, got {max_length}")
    counts: dict[DigitWord, int] = {}
    digits = n.digits
    for k in range(1, max_length + 1):
        for i in range(len(digits) - k + 1):
            piece = DigitWord(n.base, digits[i : i + k])
            counts[piece] = counts.get(piece, 0) + 1
    return counts


def suffix(n: DigitWord, i: int) -> DigitWord:
    """Drop the i most significant digits; suffix(n, 0) is n itself."""
    if not 0 <= i <= len(n.digits):
        raise ValueError(f"cannot drop {i} digits from a word of length {len(n.digits)}")
    return DigitWord(n.base, n.digits[i:])


def digit_product(n: DigitWord) -> int:
    """Product of (digit + 1) over the word; 1 for the empty word.

    For prime base this is the count of nonzero entries on row n of
    Pascal's triangle modulo the base, and for any base it is the number
    of 0 <= m <= n subtractable from n without borrows.
    """
    result = 1
    for d in n.digits:
        result *= d + 1
    return result
