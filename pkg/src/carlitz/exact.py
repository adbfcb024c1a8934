"""Exact arithmetic building blocks: cached factorials, multinomials,
weak compositions, and dense rational polynomials with the factorial
substitution t^m -> m!.

Everything here is mathematically exact.  Integers are Python ints
(arbitrary precision), rationals are fractions.Fraction (always in
lowest terms with positive denominator), and every division that the
mathematics promises to be exact is checked: a nonzero remainder raises
InexactDivisionError instead of silently truncating.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder.

    Raised instead of rounding.  In this package such a failure means a
    counting identity has been violated (or a coefficient mistyped), so
    it must surface loudly.
    """


def exact_div(a: int, b: int) -> int:
    """Divide a by b, requiring zero remainder."""
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{a} is not divisible by {b} (remainder {r})")
    return q


# Factorial cache.  Grows monotonically; append-only under a lock, so a
# concurrent reader either sees a complete entry or misses and takes the
# lock itself.  Never shrinks.
_fact_cache: list[int] = [1]
_fact_lock = threading.Lock()


def factorial(n: int) -> int:
    """n! with a shared monotone cache; O(1) after first computation."""
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    if n < len(_fact_cache):
        return _fact_cache[n]
    with _fact_lock:
        while len(_fact_cache) <= n:
            _fact_cache.append(_fact_cache[-1] * len(_fact_cache))
    return _fact_cache[n]


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts[0]! * parts[1]! * ...) for parts summing to n."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts!r}")
    if sum(parts) != n:
        raise ValueError(f"parts {parts!r} sum to {sum(parts)}, expected {n}")
    denom = 1
    for p in parts:
        denom *= factorial(p)
    return exact_div(factorial(n), denom)


def compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of n into m ordered nonnegative parts.

    Emitted in colexicographic order (last coordinate slowest), e.g.
    compositions(2, 2) yields (2,0), (1,1), (0,2).  There are
    binomial(n+m-1, m-1) of them.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m == 1:
        yield (n,)
        return
    for last in range(n + 1):
        for rest in compositions(n - last, m - 1):
            yield rest + (last,)


class RationalPoly:
    """Dense univariate polynomial with Fraction coefficients.

    coefficients[i] is the coefficient of t**i; trailing zeros are
    stripped so the zero polynomial has an empty coefficient tuple.
    Instances are immutable and hashable.
    """

    __slots__ = ("coefficients",)

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Fraction | int] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RationalPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return RationalPoly(out)

    def __pow__(self, e: int) -> "RationalPoly":
        if e < 0:
            raise ValueError(f"exponent must be nonnegative, got {e}")
        result = RationalPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self) -> str:
        if not self.coefficients:
            return "RationalPoly(0)"
        parts = [f"({c})*t^{m}" for m, c in enumerate(self.coefficients) if c]
        return "RationalPoly(" + " + ".join(parts) + ")"


def phi(p: RationalPoly) -> Fraction:
    """Factorial substitution: replace every t**m by m! and sum.

    Linear in p.  Callers expecting an integer must check that the
    returned Fraction has denominator 1.
    """
    total = Fraction(0)
    for m, c in enumerate(p.coefficients):
        if c:
            total += c * factorial(m)
    return total
