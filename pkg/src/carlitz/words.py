"""Ground-truth word oracle: predicates, exhaustive generation and
counting of Carlitz words over an arbitrary multiset of symbols.

A word is Carlitz (also called Smirnov) when no two adjacent letters are
equal.  A word is *ordered* when the first occurrences of the symbols
appear in increasing symbol order, so each equivalence class of words
under symbol relabeling has exactly one ordered representative.  Symbols
are the consecutive integers 0, 1, 2, ... and a word is a tuple of them.

Three independent counting engines live here:

* count_ordered_carlitz -- pruned backtracking (adjacent-equal pruning
  plus the smallest-unused-symbol rule for introducing new symbols);
* count_carlitz_total   -- memoized dynamic programming over the profile
  of remaining multiplicities, which collapses symbols by symmetry;
* count_carlitz_by_filter -- generate *all* multiset permutations and
  filter with the predicate; deliberately unclever, used as the second
  oracle in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Word = tuple[int, ...]

#: Largest total word length the enumeration-based operations accept by
#: default.  Big enough for every uniform multiset whose ordered words
#: can realistically be enumerated; override per call where needed.
DEFAULT_SYMBOL_LIMIT = 24

#: Default ceiling for the naive filter oracle, which touches every
#: multiset permutation and is meant for small cross-checks only.
DEFAULT_FILTER_LIMIT = 14


class SizeLimitError(RuntimeError):
    """An enumeration-based operation refused an input above its size bound."""


@dataclass(frozen=True)
class MultiplicityVector:
    """Per-symbol copy counts: mults[i] is the multiplicity of symbol i.

    All multiplicities are >= 1.  The empty vector describes the empty
    word (count 1).
    """

    mults: tuple[int, ...]

    def __init__(self, mults: Sequence[int] = ()):
        object.__setattr__(self, "mults", tuple(int(m) for m in mults))
        if any(m < 1 for m in self.mults):
            raise ValueError(f"multiplicities must be >= 1, got {self.mults}")

    @classmethod
    def uniform(cls, k: int, n: int) -> "MultiplicityVector":
        """k copies each of n symbols: the multiset 0^k, 1^k, ..., (n-1)^k."""
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return cls((k,) * n)

    @classmethod
    def prefixed(cls, c: int, k: int, n: int) -> "MultiplicityVector":
        """Symbol 0 with multiplicity c, then k copies each of n more symbols."""
        if c < 1 or k < 1:
            raise ValueError(f"multiplicities must be >= 1, got c={c}, k={k}")
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return cls((c,) + (k,) * n)

    @property
    def total(self) -> int:
        """Total word length."""
        return sum(self.mults)

    @property
    def symbols(self) -> int:
        """Number of distinct symbols."""
        return len(self.mults)

    def __iter__(self):
        return iter(self.mults)

    def __len__(self) -> int:
        return len(self.mults)


def is_carlitz(word: Sequence[int]) -> bool:
    """True iff no two adjacent letters are equal (vacuously for len <= 1)."""
    return all(word[i] != word[i + 1] for i in range(len(word) - 1))


def is_ordered(word: Sequence[int], mv: MultiplicityVector) -> bool:
    """True iff first occurrences appear in increasing symbol order.

    The word must use exactly the multiset described by mv; anything
    else raises ValueError.
    """
    counts = [0] * mv.symbols
    for s in word:
        if not 0 <= s < mv.symbols:
            raise ValueError(f"symbol {s} out of range for {mv.mults}")
        counts[s] += 1
    if tuple(counts) != mv.mults:
        raise ValueError(f"word uses counts {tuple(counts)}, expected {mv.mults}")
    next_new = 0
    for s in word:
        if s > next_new:
            return False
        if s == next_new:
            next_new += 1
    return True


def _check_limit(mv: MultiplicityVector, limit: int | None, what: str) -> None:
    if limit is not None and mv.total > limit:
        raise SizeLimitError(
            f"{what} refused: total length {mv.total} exceeds limit {limit}"
        )


def enumerate_ordered_carlitz(
    mv: MultiplicityVector, limit: int | None = DEFAULT_SYMBOL_LIMIT
) -> Iterator[Word]:
    """Yield every ordered Carlitz word over mv, in lexicographic order.

    Backtracking with two prunes: a letter equal to its predecessor is
    never placed, and a not-yet-used symbol may be placed only if it is
    the smallest unused one.  Trying symbols in increasing order at each
    position makes the emission order lexicographic.
    """
    _check_limit(mv, limit, "enumeration")
    rem = list(mv.mults)
    nsym = len(rem)
    word: list[int] = []

    def rec(last: int, next_new: int, left: int) -> Iterator[Word]:
        if left == 0:
            yield tuple(word)
            return
        top = min(next_new, nsym - 1)
        for sym in range(top + 1):
            if sym == last or rem[sym] == 0:
                continue
            rem[sym] -= 1
            word.append(sym)
            yield from rec(sym, next_new + (sym == next_new), left - 1)
            word.pop()
            rem[sym] += 1

    if mv.total == 0:
        yield ()
    else:
        yield from rec(-1, 0, mv.total)


def count_ordered_carlitz(
    mv: MultiplicityVector, limit: int | None = DEFAULT_SYMBOL_LIMIT
) -> int:
    """Number of ordered Carlitz words over mv.

    Same search as enumerate_ordered_carlitz but without materializing
    words.  Agrees with the generator's yield count by construction.
    """
    _check_limit(mv, limit, "ordered counting")
    rem = list(mv.mults)
    nsym = len(rem)
    if mv.total == 0:
        return 1

    def rec(last: int, next_new: int, left: int) -> int:
        if left == 0:
            return 1
        total = 0
        top = min(next_new, nsym - 1)
        for sym in range(top + 1):
            if sym == last or rem[sym] == 0:
                continue
            rem[sym] -= 1
            total += rec(sym, next_new + (sym == next_new), left - 1)
            rem[sym] += 1
        return total

    return rec(-1, 0, mv.total)


def count_carlitz_total(
    mv: MultiplicityVector, limit: int | None = DEFAULT_SYMBOL_LIMIT
) -> int:
    """Total number of Carlitz words over mv (no ordering constraint).

    Memoized DP.  The state is the sorted profile of remaining
    multiplicities of all symbols other than the last one placed, plus
    the remaining multiplicity of that last symbol: two positions whose
    states agree up to symbol relabeling have equal completion counts,
    which keeps the state space tiny for uniform multisets.
    """
    _check_limit(mv, limit, "total counting")
    memo: dict[tuple[tuple[int, ...], int], int] = {}

    def f(profile: tuple[int, ...], last_rem: int) -> int:
        if not profile:
            return 1 if last_rem == 0 else 0
        key = (profile, last_rem)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0
        prev = -1
        for i, c in enumerate(profile):
            if c == prev:
                continue
            prev = c
            g = profile.count(c)
            rest = list(profile[:i] + profile[i + 1 :])
            if last_rem:
                rest.append(last_rem)
                rest.sort()
            total += g * f(tuple(rest), c - 1)
        memo[key] = total
        return total

    return f(tuple(sorted(mv.mults)), 0)


def count_carlitz_by_filter(
    mv: MultiplicityVector, limit: int | None = DEFAULT_FILTER_LIMIT
) -> int:
    """Count Carlitz words by filtering all multiset permutations.

    Generates every distinct permutation of the multiset (no pruning of
    any kind) and applies is_carlitz to each complete word.  Slow on
    purpose: its only job is to be an independent oracle.
    """
    _check_limit(mv, limit, "naive filtering")
    rem = list(mv.mults)
    nsym = len(rem)
    word: list[int] = []
    count = 0

    def rec(left: int) -> None:
        nonlocal count
        if left == 0:
            if is_carlitz(word):
                count += 1
            return
        for sym in range(nsym):
            if rem[sym] == 0:
                continue
            rem[sym] -= 1
            word.append(sym)
            rec(left - 1)
            word.pop()
            rem[sym] += 1

    rec(mv.total)
    return count
