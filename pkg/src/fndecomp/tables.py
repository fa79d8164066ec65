"""Dense value tables for functions A^n -> B with mixed-radix indexing.

The alphabet is {0, ..., a_size-1} with 0 distinguished.  The index
convention is frozen so files and tests are bit-exact:

    index(x) = sum_i x[i] * a_size**i      (component 0 least significant)

Values are stored as group element codes (see groups.Group.encode); the
element-level view is available through eval / element_values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from operator import itemgetter
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    ArgumentError,
    DomainError,
    ParseError,
    PreconditionError,
    ShapeError,
)
from .groups import Element, Group


def iter_tuples(a_size: int, arity: int) -> Iterator[tuple[int, ...]]:
    """Domain tuples in table-index order (component 0 varies fastest)."""
    for combo in product(range(a_size), repeat=arity):
        yield combo[::-1]


def tuple_index(a_size: int, x: Sequence[int]) -> int:
    idx = 0
    for c in reversed(x):
        idx = idx * a_size + c
    return idx


@dataclass(frozen=True)
class FnTable:
    """Total function {0..a_size-1}^arity -> group, as a flat tuple of value codes."""

    a_size: int
    arity: int
    group: Group
    values: tuple[int, ...]

    def __post_init__(self):
        if self.a_size < 2:
            raise ArgumentError(f"alphabet size must be >= 2, got {self.a_size}")
        if self.arity < 0:
            raise ArgumentError(f"arity must be >= 0, got {self.arity}")
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        expected = self.a_size**self.arity
        if len(values) != expected:
            raise ShapeError(f"expected {expected} values, got {len(values)}")
        order = self.group.order
        if min(values) < 0 or max(values) >= order:
            raise DomainError("value code out of range for group")

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_elements(
        cls, a_size: int, arity: int, group: Group, elements: Iterable[Element]
    ) -> "FnTable":
        return cls(a_size, arity, group, tuple(group.encode(e) for e in elements))

    @classmethod
    def from_callable(
        cls,
        a_size: int,
        arity: int,
        group: Group,
        fn: Callable[[tuple[int, ...]], Element],
    ) -> "FnTable":
        return cls(
            a_size, arity, group,
            tuple(group.encode(fn(x)) for x in iter_tuples(a_size, arity)),
        )

    @classmethod
    def constant(cls, a_size: int, arity: int, group: Group, value: Element) -> "FnTable":
        return cls(a_size, arity, group, (group.encode(value),) * a_size**arity)

    # ------------------------------------------------------------------
    # access
    # ------------------------------------------------------------------

    def index_of(self, x: Sequence[int]) -> int:
        if len(x) != self.arity:
            raise DomainError(f"tuple has {len(x)} components, arity is {self.arity}")
        for c in x:
            if not 0 <= c < self.a_size:
                raise DomainError(f"component {c} out of range for alphabet {self.a_size}")
        return tuple_index(self.a_size, x)

    def eval(self, x: Sequence[int]) -> Element:
        return self.group.decode(self.values[self.index_of(x)])

    def domain(self) -> Iterator[tuple[int, ...]]:
        return iter_tuples(self.a_size, self.arity)

    def element_values(self) -> list[Element]:
        decode = self.group.decode
        return [decode(v) for v in self.values]


# ----------------------------------------------------------------------
# minors
# ----------------------------------------------------------------------


def simple_minor(f: FnTable, sigma: Sequence[int], arity: int) -> FnTable:
    """Table g of the given arity with g(y) = f(y[sigma[0]], ..., y[sigma[n-1]])."""
    if len(sigma) != f.arity:
        raise ArgumentError(f"sigma has {len(sigma)} entries, arity is {f.arity}")
    if arity < 0 or (f.arity > 0 and arity == 0):
        raise ArgumentError("target arity must be positive when sigma is nonempty")
    for s in sigma:
        if not 0 <= s < arity:
            raise DomainError(f"sigma target {s} out of range for arity {arity}")
    a = f.a_size
    vals = f.values
    out = [
        vals[tuple_index(a, tuple(y[s] for s in sigma))]
        for y in iter_tuples(a, arity)
    ]
    return FnTable(a, arity, f.group, tuple(out))


@lru_cache(maxsize=None)
def _identification_getter(a_size: int, arity: int, i: int, j: int):
    si = a_size**i
    sj = a_size**j
    remap = []
    for k in range(a_size**arity):
        di = (k // si) % a_size
        dj = (k // sj) % a_size
        remap.append(k + (dj - di) * si)
    return itemgetter(*remap)


def identification_minor(f: FnTable, i: int, j: int) -> FnTable:
    """Table of f with its i-th argument replaced by its j-th (i becomes inessential)."""
    n = f.arity
    if i == j:
        raise ArgumentError("cannot identify a variable with itself")
    if not (0 <= i < n and 0 <= j < n):
        raise ArgumentError(f"positions {i}, {j} out of range for arity {n}")
    getter = _identification_getter(f.a_size, n, i, j)
    return FnTable(f.a_size, n, f.group, getter(f.values))


# ----------------------------------------------------------------------
# essential variables, arity gap
# ----------------------------------------------------------------------


def essential_variables(f: FnTable) -> frozenset[int]:
    """Positions whose value can change the output (axis-aligned neighbor scan)."""
    a = f.a_size
    vals = f.values
    size = len(vals)
    ess = []
    stride = 1
    for i in range(f.arity):
        block = stride * a
        found = False
        for base in range(0, size, block):
            for off in range(base, base + stride):
                first = vals[off]
                for k in range(off + stride, base + block, stride):
                    if vals[k] != first:
                        found = True
                        break
                if found:
                    break
            if found:
                break
        if found:
            ess.append(i)
        stride = block
    return frozenset(ess)


def essential_arity(f: FnTable) -> int:
    return len(essential_variables(f))


def arity_gap(f: FnTable) -> int:
    """Minimum drop in essential arity over identifications of essential pairs.

    Identifying i with j and j with i give tables that differ only by the
    transposition of two coordinates, so unordered pairs suffice.
    """
    ess = sorted(essential_variables(f))
    m = len(ess)
    if m < 2:
        raise PreconditionError("arity gap undefined: fewer than two essential variables")
    best = m
    for p in range(len(ess)):
        for q in range(p + 1, len(ess)):
            g = identification_minor(f, ess[p], ess[q])
            drop = m - essential_arity(g)
            if drop < best:
                best = drop
                if best == 1:
                    return 1
    return best


def is_totally_symmetric(f: FnTable) -> bool:
    """Invariance under all adjacent argument transpositions."""
    a = f.a_size
    vals = f.values
    for t in range(f.arity - 1):
        st = a**t
        st1 = st * a
        for k in range(len(vals)):
            dt = (k // st) % a
            dt1 = (k // st1) % a
            if dt >= dt1:
                continue
            if vals[k] != vals[k + (dt1 - dt) * st + (dt - dt1) * st1]:
                return False
    return True


def reduce_to_essential(f: FnTable) -> FnTable:
    """Restrict f to its essential coordinates (arity = essential arity)."""
    ess = sorted(essential_variables(f))
    m = len(ess)
    if m == f.arity:
        return f
    if m == 0:
        return FnTable(f.a_size, 0, f.group, (f.values[0],))
    sigma = [0] * f.arity
    for t, pos in enumerate(ess):
        sigma[pos] = t
    return simple_minor(f, tuple(sigma), m)


# ----------------------------------------------------------------------
# text file format
# ----------------------------------------------------------------------


def dump_table(f: FnTable) -> str:
    lines = [f"domain={f.a_size}", f"arity={f.arity}", f"group={f.group.to_text()}"]
    texts = [f.group.format_element(e) for e in f.element_values()]
    chunk = f.a_size ** min(f.arity, 2) if f.arity else 1
    for start in range(0, len(texts), chunk):
        lines.append(" ".join(texts[start:start + chunk]))
    return "\n".join(lines) + "\n"


def load_table(text: str) -> FnTable:
    headers: list[tuple[int, str]] = []
    value_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if len(headers) < 3:
            headers.append((lineno, line))
        else:
            value_lines.append((lineno, line))
    if len(headers) < 3:
        raise ParseError("table file needs domain=, arity= and group= header lines")
    fields = {}
    for (lineno, line), key in zip(headers, ("domain", "arity", "group")):
        prefix = key + "="
        if not line.startswith(prefix):
            raise ParseError(f"expected '{key}=...', got {line!r}", line=lineno)
        fields[key] = (lineno, line[len(prefix):].strip())
    for key in ("domain", "arity"):
        lineno, val = fields[key]
        if not val.isdigit():
            raise ParseError(f"bad {key} value {val!r}", line=lineno)
        fields[key] = (lineno, int(val))
    lineno, spec = fields["group"]
    try:
        group = Group.from_text(spec)
    except ParseError as exc:
        raise ParseError(str(exc), line=lineno) from None
    a_size = fields["domain"][1]
    arity = fields["arity"][1]
    if a_size < 2:
        raise ParseError(f"domain size must be >= 2, got {a_size}", line=fields["domain"][0])
    expected = a_size**arity
    codes: list[int] = []
    for lineno, line in value_lines:
        for token in line.split():
            if len(codes) >= expected:
                raise ParseError(f"more than {expected} values", line=lineno)
            try:
                codes.append(group.encode(group.parse_element(token)))
            except ParseError as exc:
                raise ParseError(str(exc), line=lineno) from None
    if len(codes) != expected:
        raise ParseError(f"expected {expected} values, found {len(codes)}")
    return FnTable(a_size, arity, group, tuple(codes))


def load_table_file(path) -> FnTable:
    with open(path, "r", encoding="utf-8") as fh:
        return load_table(fh.read())


def save_table_file(f: FnTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_table(f))
