"""Integer partitions in multiplicity representation.

A multiplicity vector ``(k_0, ..., k_n)`` describes a partition of

    r = sum_i (1+i) * k_i

in which the part of size ``i+1`` occurs ``k_i`` times; ``p = sum_i k_i``
is the total number of parts.  The coefficient formulas in this package
are sums indexed by exactly the vectors with ``r = n``, a set of size
``p(n)`` (the partition function) — vastly smaller than the O(n^n) box
``k_i in [0, n]`` those sums formally range over.

:func:`enumerate_constrained` generates that index set directly, never
visiting an infeasible point.  It walks positions left to right with a
simple viability rule: after fixing ``k_0 .. k_pos``, the unallocated
remainder must be writable with parts of size at least ``pos + 2``,
i.e. it must be zero or at least ``pos + 2``.  The walk tries smaller
multiplicities first, so vectors stream out in ascending lexicographic
order on ``(k_0, k_1, ...)`` — a total, deterministic ordering that the
rest of the package adopts as canonical (expansions, distributions and
histograms are all reported in this order).
"""

from __future__ import annotations

import threading
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "MultiplicityVector",
    "enumerate_constrained",
    "partition_count",
    "summatory_partition_count",
]


class MultiplicityVector(NamedTuple):
    """A tuple of part multiplicities with its derived statistics."""

    k: tuple[int, ...]
    p: int  #: total number of parts, sum k_i
    r: int  #: partitioned integer, sum (1+i) k_i

    @classmethod
    def from_multiplicities(cls, k: Sequence[int]) -> "MultiplicityVector":
        kk = tuple(k)
        return cls(kk, sum(kk), sum((i + 1) * m for i, m in enumerate(kk)))


def _constrained_tuples(n: int) -> Iterator[tuple[int, ...]]:
    # Iterative depth-first search (recursion would cost one generator
    # frame per position on every yield; at n=60 that dominates runtime).
    if n == 0:
        yield (0,)
        return

    k = [0] * (n + 1)

    def first_choice(pos, rem):
        # smallest viable multiplicity at pos given remainder rem
        if rem >= pos + 2:
            return 0
        return rem // (pos + 1) if rem % (pos + 1) == 0 else None

    def next_choice(pos, rem, c):
        # next viable multiplicity after c, or None
        cap = (rem - (pos + 2)) // (pos + 1)
        if c < cap:
            return c + 1
        if rem % (pos + 1) == 0 and c < rem // (pos + 1):
            return rem // (pos + 1)
        return None

    stack = [(0, n, first_choice(0, n))]
    while stack:
        pos, rem, c = stack[-1]
        if c is None:
            stack.pop()
            k[pos] = 0
            continue
        k[pos] = c
        stack[-1] = (pos, rem, next_choice(pos, rem, c))
        left = rem - c * (pos + 1)
        if left == 0:
            yield tuple(k)
        else:
            nc = first_choice(pos + 1, left)
            if nc is not None:
                stack.append((pos + 1, left, nc))


def enumerate_constrained(n: int) -> Iterator[MultiplicityVector]:
    """Yield every multiplicity vector of length ``n + 1`` with ``r = n``,
    exactly once, in ascending lexicographic order on ``k``.

    For ``n = 0`` this is the single all-zero vector; for ``n >= 1``
    every emitted vector has ``p >= 1``.  The stream is lazy: the count
    equals ``partition_count(n)``, which at n=60 is close to a million.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    for k in _constrained_tuples(n):
        yield MultiplicityVector(k, sum(k), n)


_pcount_lock = threading.Lock()
_pcount: list[int] = [1]  # p(0)


def partition_count(n: int) -> int:
    """Exact partition function p(n) via Euler's pentagonal recurrence

        p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _pcount_lock:
        cache = _pcount
        while len(cache) <= n:
            m = len(cache)
            total = 0
            j = 1
            while True:
                g1 = j * (3 * j - 1) // 2
                if g1 > m:
                    break
                sign = 1 if j % 2 else -1
                total += sign * cache[m - g1]
                g2 = j * (3 * j + 1) // 2
                if g2 <= m:
                    total += sign * cache[m - g2]
                j += 1
            cache.append(total)
        return cache[n]


def summatory_partition_count(n: int) -> int:
    """``sum_{m=1}^{n} p(m)`` — the number of nonzero terms in the
    oscillation partition sum of index n."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(partition_count(m) for m in range(1, n + 1))
