"""Compositions and their palindromicity statistics.

A composition of n is a tuple of positive integers summing to n; the empty
tuple is the unique composition of 0.  Compositions are kept as plain tuples
throughout the package, validated at API boundaries by :func:`composition`.

For a composition (a_1, ..., a_l), position i and its mirror l+1-i form a
pair for 1 <= i <= l//2.  A pair *mismatches* modulo m when the two parts are
incongruent mod m (literally unequal when the modulus is INFINITY), and
*matches* otherwise.  Counting compositions by the number of mismatching
pairs gives the palindromic families; counting by matching pairs gives the
anti-palindromic families.

Sign classes refine the count by the middle part: a composition is PLUS when
its length is even, or odd with an even middle part; MINUS when the middle
part is odd.  The empty composition has even length 0 and is PLUS.

The reduced families count equivalence classes under independently swapping
the two parts of any pair; :func:`swap_canonical` picks the class
representative with the larger part first in every pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union


class _InfinityType:
    """Modulus meaning 'congruence is literal equality'."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __deepcopy__(self, memo):
        return self

    def __reduce__(self):
        return (_InfinityType, ())


INFINITY = _InfinityType()

Modulus = Union[int, _InfinityType]

Composition = tuple[int, ...]


class Family(Enum):
    PC = "pc"  # count by mismatching pairs (palindromic at k = 0)
    AC = "ac"  # count by matching pairs (anti-palindromic at k = 0)


class SignClass(Enum):
    PLUS = "plus"
    MINUS = "minus"


class Sign(Enum):
    PLUS = "plus"
    MINUS = "minus"
    TOTAL = "total"


def check_modulus(modulus: Modulus) -> Modulus:
    """Validate a modulus: a positive integer or INFINITY."""
    if isinstance(modulus, _InfinityType):
        return modulus
    if isinstance(modulus, bool) or not isinstance(modulus, int):
        raise TypeError(f"modulus must be a positive int or INFINITY, got {modulus!r}")
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    return modulus


def composition(parts: Iterable[int]) -> Composition:
    """Validate and normalize an iterable of parts into a composition tuple."""
    c = tuple(parts)
    for p in c:
        if isinstance(p, bool) or not isinstance(p, int) or p < 1:
            raise ValueError(f"composition parts must be integers >= 1, got {p!r}")
    return c


def parse_composition(text: str) -> Composition:
    """Parse the comma-separated text form, e.g. '2,4,1,1,2'; '' is empty."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse composition from {text!r}") from None
    return composition(parts)


def format_composition(c: Composition) -> str:
    """Inverse of :func:`parse_composition`."""
    return ",".join(str(p) for p in c)


def parse_modulus(text: str) -> Modulus:
    """Parse 'inf' (or 'infinity') or a positive integer."""
    text = text.strip().lower()
    if text in ("inf", "infinity"):
        return INFINITY
    try:
        m = int(text)
    except ValueError:
        raise ValueError(f"cannot parse modulus from {text!r}") from None
    return check_modulus(m)


def format_modulus(modulus: Modulus) -> str:
    return "inf" if isinstance(modulus, _InfinityType) else str(modulus)


def encode_binary(c: Composition) -> tuple[int, ...]:
    """Binary string of length n marking the partial sums of c with ones.

    Entry i (1-based) is 1 iff i is one of a_1, a_1+a_2, ...; nonempty
    compositions always end in 1.
    """
    bits = [0] * sum(c)
    total = 0
    for part in c:
        total += part
        bits[total - 1] = 1
    return tuple(bits)


def decode_binary(bits: Sequence[int] | str) -> Composition:
    """Inverse of :func:`encode_binary`; rejects nonempty input not ending in 1."""
    if isinstance(bits, str):
        if not set(bits) <= {"0", "1"}:
            raise ValueError(f"binary string may contain only 0 and 1: {bits!r}")
        bits = tuple(int(ch) for ch in bits)
    else:
        bits = tuple(bits)
        if not set(bits) <= {0, 1}:
            raise ValueError(f"binary sequence entries must be 0 or 1: {bits!r}")
    if not bits:
        return ()
    if bits[-1] != 1:
        raise ValueError("binary encoding of a nonempty composition must end in 1")
    parts = []
    prev = 0
    for i, bit in enumerate(bits, start=1):
        if bit:
            parts.append(i - prev)
            prev = i
    return tuple(parts)


def congruent(a: int, b: int, modulus: Modulus) -> bool:
    """a == b under INFINITY; a == b (mod m) otherwise."""
    if isinstance(modulus, _InfinityType):
        return a == b
    return (a - b) % modulus == 0


def mismatch_count(c: Composition, modulus: Modulus) -> int:
    """Number of pairs (i, l+1-i), i <= l//2, whose parts are incongruent."""
    l = len(c)
    return sum(1 for i in range(l // 2) if not congruent(c[i], c[l - 1 - i], modulus))


def match_count(c: Composition, modulus: Modulus) -> int:
    """Number of congruent pairs; complement of mismatch_count within l//2."""
    return len(c) // 2 - mismatch_count(c, modulus)


def sign_class(c: Composition) -> SignClass:
    """PLUS for even length or even middle part, MINUS for an odd middle part."""
    l = len(c)
    if l % 2 == 1 and c[l // 2] % 2 == 1:
        return SignClass.MINUS
    return SignClass.PLUS


def swap_canonical(c: Composition) -> Composition:
    """Representative of the pair-swap class with the larger part first in each pair.

    Idempotent, and preserves n, length, sign class, and the match/mismatch
    counts for every modulus (swapping a pair swaps two parts that are
    compared only with each other).
    """
    l = len(c)
    out = list(c)
    for i in range(l // 2):
        j = l - 1 - i
        if out[i] < out[j]:
            out[i], out[j] = out[j], out[i]
    return tuple(out)


@dataclass(frozen=True)
class CountSpec:
    """Selects one counting function: family, reduced flag, sign, modulus, k."""

    family: Family
    reduced: bool
    sign: Sign
    modulus: Modulus
    k: int

    def __post_init__(self) -> None:
        check_modulus(self.modulus)
        if self.k < 0:
            raise ValueError(f"statistic index k must be >= 0, got {self.k}")

    def statistic(self, c: Composition) -> int:
        """The counted statistic of c: mismatches for PC, matches for AC."""
        if self.family is Family.PC:
            return mismatch_count(c, self.modulus)
        return match_count(c, self.modulus)
