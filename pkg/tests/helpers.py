"""Shared test oracles, kept deliberately independent of the library internals.

The essential-variable / gap / determination oracles work straight from the
definitions on explicit tuples, so they cross-check the library's optimized
index arithmetic.
"""

from __future__ import annotations

from itertools import product

from fndecomp import FnTable, Group


def all_tuples(a_size, n):
    """Tuples in the same order the library indexes tables (pos 0 fastest)."""
    return [t[::-1] for t in product(range(a_size), repeat=n)]


def naive_essential_variables(f: FnTable) -> set[int]:
    pts = all_tuples(f.a_size, f.arity)
    ess = set()
    for i in range(f.arity):
        for x in pts:
            vals = {f.eval(x[:i] + (v,) + x[i + 1:]) for v in range(f.a_size)}
            if len(vals) > 1:
                ess.add(i)
                break
    return ess


def naive_identification_values(f: FnTable, i, j):
    return [f.eval(x[:i] + (x[j],) + x[i + 1:]) for x in all_tuples(f.a_size, f.arity)]


def naive_arity_gap(f: FnTable) -> int:
    ess = naive_essential_variables(f)
    assert len(ess) >= 2
    pts = all_tuples(f.a_size, f.arity)
    drops = []
    for i in ess:
        for j in ess:
            if i == j:
                continue
            vals = naive_identification_values(f, i, j)
            lookup = dict(zip(pts, vals))
            minor_ess = 0
            for p in range(f.arity):
                if any(
                    len({lookup[x[:p] + (v,) + x[p + 1:]] for v in range(f.a_size)}) > 1
                    for x in pts
                ):
                    minor_ess += 1
            drops.append(len(ess) - minor_ess)
    return min(drops)


def naive_odd_support(x, a_size):
    return frozenset(a for a in range(a_size) if sum(1 for c in x if c == a) % 2)


def naive_is_determined(f: FnTable) -> bool:
    seen = {}
    for x in all_tuples(f.a_size, f.arity):
        key = naive_odd_support(x, f.a_size)
        v = f.eval(x)
        if seen.setdefault(key, v) != v:
            return False
    return True


def random_table(rng, a_size, n, group: Group) -> FnTable:
    order = group.order
    return FnTable(
        a_size, n, group,
        tuple(rng.randrange(order) for _ in range(a_size**n)),
    )


def random_full_arity_table(rng, a_size, n, group: Group) -> FnTable:
    from fndecomp import essential_variables

    while True:
        f = random_table(rng, a_size, n, group)
        if len(essential_variables(f)) == n:
            return f


def all_phi_assignments(a_size, n, group):
    """Every mapping phi_domain -> group elements, as dicts in a fixed order."""
    from fndecomp import phi_domain

    keys = phi_domain(a_size, n)
    elements = list(group.elements())
    for combo in product(elements, repeat=len(keys)):
        yield dict(zip(keys, combo))
