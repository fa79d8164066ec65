"""Discrete derivative calculus for finite functions into abelian groups.

The derivative of f with respect to position i at parameter a is the table
x -> f(x with component i set to a) - f(x).  Derivatives with respect to
different positions commute, so higher derivatives are indexed by a set of
positions plus a parameter tuple (components outside the set are irrelevant).

Summing the derivatives of f at a base point over all position sets
reconstructs f exactly; a function is a sum of essentially-at-most-k-ary
functions precisely when all its derivatives on more than k positions vanish
at the base point.  That criterion drives the decomposability tests here.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import ArgumentError, DomainError, PreconditionError, ResourceError
from .groups import Element
from .tables import FnTable, iter_tuples, tuple_index

# Full materialization of all 2**n derivative term tables is capped here.
TAYLOR_MAX_ARITY = 16

Witness = tuple[frozenset[int], tuple[int, ...]]


def _check_positions(f: FnTable, vars: Iterable[int]) -> list[int]:
    out = sorted(set(vars))
    for i in out:
        if not 0 <= i < f.arity:
            raise ArgumentError(f"position {i} out of range for arity {f.arity}")
    return out


def _check_point(f: FnTable, x: Sequence[int], what: str) -> tuple[int, ...]:
    if len(x) != f.arity:
        raise DomainError(f"{what} has {len(x)} components, arity is {f.arity}")
    for c in x:
        if not 0 <= c < f.a_size:
            raise DomainError(f"{what} component {c} out of range for alphabet {f.a_size}")
    return tuple(x)


def partial_derivative(f: FnTable, i: int, a_val: int) -> FnTable:
    """Table of f(x with position i set to a_val) - f(x)."""
    if not 0 <= i < f.arity:
        raise ArgumentError(f"position {i} out of range for arity {f.arity}")
    if not 0 <= a_val < f.a_size:
        raise DomainError(f"parameter {a_val} out of range for alphabet {f.a_size}")
    a = f.a_size
    stride = a**i
    sub = f.group.code_sub_table
    vals = f.values
    out = []
    for k, v in enumerate(vals):
        d = (k // stride) % a
        out.append(sub[vals[k + (a_val - d) * stride]][v])
    return FnTable(a, f.arity, f.group, tuple(out))


def higher_derivative(f: FnTable, vars: Iterable[int], params: Sequence[int]) -> FnTable:
    """Iterated single derivatives, applied in ascending position order."""
    positions = _check_positions(f, vars)
    params = _check_point(f, params, "parameter tuple")
    out = f
    for i in positions:
        out = partial_derivative(out, i, params[i])
    return out


def higher_derivative_expansion(
    f: FnTable, vars: Iterable[int], params: Sequence[int]
) -> FnTable:
    """Same derivative via the alternating sum over subsets of the positions."""
    positions = _check_positions(f, vars)
    params = _check_point(f, params, "parameter tuple")
    a = f.a_size
    s = len(positions)
    strides = [a**i for i in positions]
    add = f.group.code_add_table
    sub = f.group.code_sub_table
    vals = f.values
    out = []
    for k in range(len(vals)):
        acc = 0
        for jmask in range(1 << s):
            idx = k
            for t in range(s):
                if jmask >> t & 1:
                    d = (k // strides[t]) % a
                    idx += (params[positions[t]] - d) * strides[t]
            term = vals[idx]
            if (s - jmask.bit_count()) & 1:
                acc = sub[acc][term]
            else:
                acc = add[acc][term]
        out.append(acc)
    return FnTable(a, f.arity, f.group, tuple(out))


def derivative_at_zero(
    f: FnTable,
    vars: Iterable[int],
    params: Sequence[int],
    base: Sequence[int] | None = None,
) -> Element:
    """Value of the derivative at the base point (all-zero tuple by default).

    Streams the alternating sum without building any table.
    """
    positions = _check_positions(f, vars)
    params = _check_point(f, params, "parameter tuple")
    base = (0,) * f.arity if base is None else _check_point(f, base, "base point")
    a = f.a_size
    s = len(positions)
    base_idx = tuple_index(a, base)
    deltas = [(params[i] - base[i]) * a**i for i in positions]
    # subset_sum[m] = sum of deltas over the bits of m
    subset_sum = [0] * (1 << s)
    for m in range(1, 1 << s):
        low = m & -m
        subset_sum[m] = subset_sum[m ^ low] + deltas[low.bit_length() - 1]
    add = f.group.code_add_table
    sub = f.group.code_sub_table
    vals = f.values
    acc = 0
    for m in range(1 << s):
        term = vals[base_idx + subset_sum[m]]
        if (s - m.bit_count()) & 1:
            acc = sub[acc][term]
        else:
            acc = add[acc][term]
    return f.group.decode(acc)


# ----------------------------------------------------------------------
# Taylor expansion and decomposability
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _masks_by_size(n: int) -> tuple[tuple[int, ...], ...]:
    by: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1 << n):
        by[mask.bit_count()].append(mask)
    return tuple(tuple(row) for row in by)


def _mask_positions(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def taylor_terms(
    f: FnTable, base: Sequence[int] | None = None
) -> list[tuple[frozenset[int], FnTable]]:
    """One term table per position set I: x -> derivative of f on I at base,
    evaluated with parameter x.  The 2**arity terms sum to f exactly.
    """
    n = f.arity
    if n > TAYLOR_MAX_ARITY:
        raise ResourceError(f"arity {n} exceeds the Taylor materialization bound {TAYLOR_MAX_ARITY}")
    base = (0,) * n if base is None else _check_point(f, base, "base point")
    a = f.a_size
    size = len(f.values)
    base_idx = tuple_index(a, base)
    add = f.group.code_add_table
    sub = f.group.code_sub_table
    vals = f.values
    terms = []
    for s in range(n + 1):
        for mask in _masks_by_size(n)[s]:
            positions = _mask_positions(mask)
            strides = [a**i for i in positions]
            # term value per assignment to the I positions, in little-endian
            # assignment-index order (matching the broadcast below)
            per_assign = []
            for assign in iter_tuples(a, s):
                deltas = [(assign[t] - base[positions[t]]) * strides[t] for t in range(s)]
                acc = 0
                for jmask in range(1 << s):
                    idx = base_idx
                    for t in range(s):
                        if jmask >> t & 1:
                            idx += deltas[t]
                    term = vals[idx]
                    if (s - jmask.bit_count()) & 1:
                        acc = sub[acc][term]
                    else:
                        acc = add[acc][term]
                per_assign.append(acc)
            # broadcast: each table index reads the entry for its I-digits
            out = []
            for k in range(size):
                aidx = 0
                for t in range(s - 1, -1, -1):
                    aidx = aidx * a + (k // strides[t]) % a
                out.append(per_assign[aidx])
            terms.append((frozenset(positions), FnTable(a, n, f.group, tuple(out))))
    return terms


def _witness_at_size(f: FnTable, s: int, base: Sequence[int] | None) -> Witness | None:
    zero = f.group.zero
    n = f.arity
    for mask in _masks_by_size(n)[s]:
        positions = _mask_positions(mask)
        for assign in product(range(f.a_size), repeat=s):
            params = [0] * n
            for t, i in enumerate(positions):
                params[i] = assign[t]
            if derivative_at_zero(f, positions, params, base) != zero:
                return (frozenset(positions), tuple(params))
    return None


def decomposability_witness(
    f: FnTable, k: int, base: Sequence[int] | None = None
) -> Witness | None:
    """First (positions, params) with a nonvanishing derivative on more than k
    positions, or None when f is k-decomposable.

    Search order: position-set size descending, then mask ascending, then
    parameter tuples in lexicographic order (irrelevant components stay 0).
    """
    n = f.arity
    if not 0 <= k <= n:
        raise ArgumentError(f"k must be between 0 and {n}, got {k}")
    for s in range(n, k, -1):
        witness = _witness_at_size(f, s, base)
        if witness is not None:
            return witness
    return None


def is_k_decomposable(f: FnTable, k: int, base: Sequence[int] | None = None) -> bool:
    """True when f is a sum of functions each with essential arity at most k."""
    return decomposability_witness(f, k, base) is None


def min_decomposition_arity(f: FnTable, base: Sequence[int] | None = None) -> int:
    """Largest position-set size with a nonvanishing derivative at the base (0 if none)."""
    for s in range(f.arity, 0, -1):
        if _witness_at_size(f, s, base) is not None:
            return s
    return 0


def decompose_via_taylor(
    f: FnTable, k: int, base: Sequence[int] | None = None
) -> list[FnTable]:
    """The Taylor terms on at most k positions; their sum equals f exactly.

    Raises PreconditionError carrying the violating witness when f is not
    k-decomposable.
    """
    witness = decomposability_witness(f, k, base)
    if witness is not None:
        positions, params = witness
        raise PreconditionError(
            f"not {k}-decomposable: derivative on positions "
            f"{sorted(positions)} with parameters {params} is nonzero",
            witness=witness,
        )
    return [term for I, term in taylor_terms(f, base) if len(I) <= k]
