"""Two exact binomial identities, each checkable against an independent count.

Identity over even lower indices, for 0 <= t <= m/2 - 1:

    sum_{i=t+1}^{floor(m/2)} C(m, 2i) C(i-1, t)
        = 2^(m-2t-1) * sum_{k=0}^{floor(t/2)} C(m-3-t-2k, t-2k) + (-1)^(t+1)

Identity over odd lower indices, for 0 <= t <= (m-1)/2:

    sum_{k=t+1}^{floor((m+1)/2)} C(m, 2k-1) C(2k-1, 2t) = C(m, 2t) 2^(m-2t-1)

The second counts pairs (P, Q) with P subset of Q subset of [m], |P| = 2t and
|Q| odd; ``odd_sum_pair_count`` reproduces it by enumerating the sets Q.

All arithmetic is exact big-integer.  The right-hand side of the first
identity can hit a binomial with negative upper index at boundary parameters;
direct evaluation of the left-hand side forces the generalized convention
C(n, 0) = 1 for every integer n (e.g. m=2, t=0 needs C(-1, 0) = 1).
A negative upper index with positive lower index never occurs in range.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import ArgumentError, ResourceError

PAIR_COUNT_MAX_M = 20
_FULL_ENUM_MAX_M = 12


def binom(n: int, k: int) -> int:
    """C(n, k) with C(n, 0) = 1 for all n; 0 for k < 0 or 0 <= n < k or n < 0 < k."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0:
        return 0
    return comb(n, k) if k <= n else 0


def _check_even_sum_args(m: int, t: int) -> None:
    if m < 0 or t < 0 or 2 * t + 2 > m:
        raise ArgumentError(f"need 0 <= t <= m/2 - 1, got m={m}, t={t}")


def even_sum_lhs(m: int, t: int) -> int:
    _check_even_sum_args(m, t)
    return sum(comb(m, 2 * i) * comb(i - 1, t) for i in range(t + 1, m // 2 + 1))


def even_sum_rhs(m: int, t: int) -> int:
    _check_even_sum_args(m, t)
    tail = sum(binom(m - 3 - t - 2 * k, t - 2 * k) for k in range(t // 2 + 1))
    return 2 ** (m - 2 * t - 1) * tail + (-1) ** (t + 1)


def _check_odd_sum_args(m: int, t: int) -> None:
    if m < 1 or t < 0 or 2 * t + 1 > m:
        raise ArgumentError(f"need 0 <= t <= (m-1)/2, got m={m}, t={t}")


def odd_sum_lhs(m: int, t: int) -> int:
    _check_odd_sum_args(m, t)
    return sum(comb(m, 2 * k - 1) * comb(2 * k - 1, 2 * t)
               for k in range(t + 1, (m + 1) // 2 + 1))


def odd_sum_rhs(m: int, t: int) -> int:
    _check_odd_sum_args(m, t)
    return comb(m, 2 * t) * 2 ** (m - 2 * t - 1)


def odd_sum_pair_count(m: int, t: int) -> int:
    """Count pairs (P, Q), P subset of Q subset of [m], |P| = 2t, |Q| odd,
    by enumerating every Q."""
    _check_odd_sum_args(m, t)
    if m > PAIR_COUNT_MAX_M:
        raise ResourceError(f"pair enumeration capped at m <= {PAIR_COUNT_MAX_M}")
    total = 0
    for q in range(1 << m):
        size = q.bit_count()
        if size & 1:
            total += comb(size, 2 * t)
    return total


def odd_sum_pair_count_full(m: int, t: int) -> int:
    """Slower oracle that also enumerates the subsets P explicitly."""
    _check_odd_sum_args(m, t)
    if m > _FULL_ENUM_MAX_M:
        raise ResourceError(f"full pair enumeration capped at m <= {_FULL_ENUM_MAX_M}")
    total = 0
    for q in range(1 << m):
        if q.bit_count() & 1 == 0:
            continue
        bits = [i for i in range(m) if q >> i & 1]
        total += sum(1 for _ in combinations(bits, 2 * t))
    return total


def even_sum_rows(max_m: int) -> list[tuple[int, int, int, int, bool]]:
    """(m, t, lhs, rhs, equal) for every valid pair with m <= max_m."""
    out = []
    for m in range(2, max_m + 1):
        for t in range((m - 2) // 2 + 1):
            l, r = even_sum_lhs(m, t), even_sum_rhs(m, t)
            out.append((m, t, l, r, l == r))
    return out


def odd_sum_rows(max_m: int) -> list[tuple[int, int, int, int, int | None, bool]]:
    """(m, t, lhs, rhs, pair_count_or_None, all_equal) for m <= max_m."""
    out = []
    for m in range(1, max_m + 1):
        for t in range((m - 1) // 2 + 1):
            l, r = odd_sum_lhs(m, t), odd_sum_rhs(m, t)
            cnt = odd_sum_pair_count(m, t) if m <= PAIR_COUNT_MAX_M else None
            ok = l == r and (cnt is None or cnt == l)
            out.append((m, t, l, r, cnt, ok))
    return out
