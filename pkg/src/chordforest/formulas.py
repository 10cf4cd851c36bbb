"""Closed-form exact counts for tree and forest chord diagrams.

Everything here is plain arithmetic on Python's arbitrary-precision ints.
The counting formulas contain divisions that are exact because a counting
theorem says so; each one goes through :func:`_exact_div`, which raises
``ConsistencyError`` on a nonzero remainder instead of rounding.  A
``ConsistencyError`` therefore always signals a bug, never bad input;
bad input raises ``ValueError``.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import ConsistencyError

__all__ = [
    "PartitionType",
    "binomial",
    "catalan",
    "double_factorial_pairings",
    "falling_factorial",
    "forest_count",
    "kreweras_count",
    "lagrange_coeff",
    "rooted_forest_count",
    "tree_count",
    "type_sum_forest_count",
]


def _exact_div(numerator: int, divisor: int) -> int:
    quotient, remainder = divmod(numerator, divisor)
    if remainder:
        raise ConsistencyError(f"{numerator} is not divisible by {divisor}")
    return quotient


def binomial(a: int, b: int) -> int:
    """C(a, b) for a >= 0, with the convention C(a, b) = 0 outside 0 <= b <= a."""
    if a < 0:
        raise ValueError(f"binomial requires a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def falling_factorial(n: int, length: int) -> int:
    """Product n (n-1) ... (n-length+1); the empty product (length 0) is 1."""
    if n < 0 or length < 0:
        raise ValueError(
            f"falling_factorial requires n, length >= 0, got n={n}, length={length}"
        )
    product = 1
    for i in range(length):
        product *= n - i
    return product


def double_factorial_pairings(n: int) -> int:
    """(2n-1)!!, the number of perfect matchings of 2n labeled points."""
    if n < 1:
        raise ValueError(f"double_factorial_pairings requires n >= 1, got n={n}")
    product = 1
    for odd in range(1, 2 * n, 2):
        product *= odd
    return product


def catalan(n: int) -> int:
    """(2n)! / (n! (n+1)!): counts the non-crossing diagrams with n chords."""
    if n < 0:
        raise ValueError(f"catalan requires n >= 0, got n={n}")
    return _exact_div(binomial(2 * n, n), n + 1)


def tree_count(n: int) -> int:
    """Number of diagrams with n chords whose intersection graph is a tree.

    Equals C(3n-3, n-1) / (2n-1), the number of ternary plane trees with
    n-1 internal vertices.
    """
    if n < 1:
        raise ValueError(f"tree_count requires n >= 1, got n={n}")
    return _exact_div(binomial(3 * n - 3, n - 1), 2 * n - 1)


def forest_count(n: int, m: int) -> int:
    """Number of diagrams with n chords whose intersection graph is a forest of m trees.

        f(n, m) = C(2n, m-1) C(3n-2m-1, n-m-1) / (n-m)   for m < n,
        f(n, n) = catalan(n)                             (n non-crossing chords).
    """
    if m < 1 or m > n:
        raise ValueError(f"forest_count requires 1 <= m <= n, got n={n}, m={m}")
    if m == n:
        return catalan(n)
    return _exact_div(
        binomial(2 * n, m - 1) * binomial(3 * n - 2 * m - 1, n - m - 1), n - m
    )


def lagrange_coeff(a: int, b: int) -> int:
    """Coefficient [x^b] T(x)^a, where T is the tree-diagram generating series.

    Lagrange inversion applied to T/x = 1 + x (T/x)^3 gives

        [x^b] T^a = a C(3b-2a-1, b-a-1) / (b-a)   for a < b,
        [x^b] T^b = 1,

    and 0 for a > b since T has valuation 1.
    """
    if a < 0 or b < 0:
        raise ValueError(f"lagrange_coeff requires a, b >= 0, got a={a}, b={b}")
    if a > b:
        return 0
    if a == b:
        return 1
    return _exact_div(a * binomial(3 * b - 2 * a - 1, b - a - 1), b - a)


def rooted_forest_count(n: int, m: int) -> int:
    """Number of forest diagrams with n chords and m trees, one root chosen per tree.

    Rooting weights an i-chord tree by a factor i, which turns the tree
    series T into R = x T' = x (2x - T) / (x - 3 T^2).  Expanding the closed
    form binomially and extracting coefficients yields

        r(n, m) = C(2n, m-1) (S1 + S2) / m

    with the alternating sums

        S1 = sum_{k=0..m} sum_{j=0..n-m-1}
                 (-1)^k C(m,k) C(m+j-1,j) 2^(m-k) 3^j [x^(n-m+j+k)] T^(2j+k),
        S2 = sum_{k=0..m} (-1)^k C(m,k) C(n-1,n-m) 2^(m-k) 3^(n-m),

    where S1 is empty for m = n.
    """
    if m < 1 or m > n:
        raise ValueError(
            f"rooted_forest_count requires 1 <= m <= n, got n={n}, m={m}"
        )
    sum1 = 0
    sum2 = 0
    for k in range(m + 1):
        sign = -1 if k % 2 else 1
        common = sign * binomial(m, k) * 2 ** (m - k)
        for j in range(n - m):
            sum1 += (
                common
                * binomial(m + j - 1, j)
                * 3**j
                * lagrange_coeff(2 * j + k, n - m + j + k)
            )
        sum2 += common * binomial(n - 1, n - m) * 3 ** (n - m)
    value = _exact_div(binomial(2 * n, m - 1) * (sum1 + sum2), m)
    if value < 0:
        raise ConsistencyError(f"rooted_forest_count({n}, {m}) evaluated to {value} < 0")
    return value


@dataclass(frozen=True)
class PartitionType:
    """Multiset of block sizes, stored sparsely as (size, multiplicity) pairs.

    ``parts`` is strictly increasing in size and holds only positive
    multiplicities, so equal multisets compare and hash equal.
    """

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        previous = 0
        for size, multiplicity in self.parts:
            if size <= previous:
                raise ValueError(
                    f"part sizes must be positive and strictly increasing: {self.parts!r}"
                )
            if multiplicity < 1:
                raise ValueError(f"multiplicities must be positive: {self.parts!r}")
            previous = size

    @classmethod
    def from_block_sizes(cls, sizes: Iterable[int]) -> "PartitionType":
        counts: Counter[int] = Counter()
        for size in sizes:
            if size < 1:
                raise ValueError(f"block sizes must be positive, got {size}")
            counts[size] += 1
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_multiplicities(
        cls, multiplicities: Mapping[int, int] | Iterable[int]
    ) -> "PartitionType":
        """Build from a {size: multiplicity} mapping or a dense [s1, s2, ...] vector."""
        if isinstance(multiplicities, Mapping):
            items = multiplicities.items()
        else:
            items = enumerate(multiplicities, start=1)
        parts = []
        for size, multiplicity in items:
            if multiplicity < 0:
                raise ValueError(f"multiplicity of size {size} is negative")
            if multiplicity:
                parts.append((size, multiplicity))
        return cls(tuple(sorted(parts)))

    @property
    def ground_set_size(self) -> int:
        return sum(size * mult for size, mult in self.parts)

    @property
    def block_count(self) -> int:
        return sum(mult for _, mult in self.parts)

    def multiplicity(self, size: int) -> int:
        for s, mult in self.parts:
            if s == size:
                return mult
        return 0


def kreweras_count(block_type: PartitionType, ground_size: int | None = None) -> int:
    """Number of non-crossing partitions of [N] with the given block-size type.

    With k blocks in total the count is N (N-1) ... (N-k+2) / prod_j s_j!.
    """
    size = block_type.ground_set_size
    if ground_size is not None and ground_size != size:
        raise ValueError(
            f"type covers {size} elements, not the stated ground set of {ground_size}"
        )
    if size < 1:
        raise ValueError("the ground set must be non-empty")
    denominator = 1
    for _, mult in block_type.parts:
        denominator *= math.factorial(mult)
    return _exact_div(falling_factorial(size, block_type.block_count - 1), denominator)


def type_sum_forest_count(n: int, m: int) -> int:
    """Forest count recomputed as a sum over forest types.

    A forest whose type has s_i trees of i chords occupies a non-crossing
    partition of [2n] with s_i blocks of size 2i, and a block of size 2i can
    hold any of the tree_count(i) tree diagrams.  Summing the partition count
    times the tree choices over all types with sum s_i = m and sum i s_i = n
    recounts f(n, m); the closed form in :func:`forest_count` must agree.
    """
    if m < 1 or m > n:
        raise ValueError(
            f"type_sum_forest_count requires 1 <= m <= n, got n={n}, m={m}"
        )
    from .oracle import enumerate_types  # imported here: oracle depends on this module

    prefactor = falling_factorial(2 * n, m - 1)
    total = 0

    def add_type(forest_type: PartitionType) -> None:
        nonlocal total
        numerator = prefactor
        denominator = 1
        for size, mult in forest_type.parts:
            numerator *= tree_count(size) ** mult
            denominator *= math.factorial(mult)
        total += _exact_div(numerator, denominator)

    enumerate_types(n, m, add_type)
    return total
