"""Partitions, compositions, subsets of [n] and skew shapes.

Subsets J of [n] = {1, ..., n} are encoded as integer bitmasks: bit ``j - 1``
is set iff ``j`` is in J.  Skew shapes use 0-based ``(row, col)`` cells with
rows indexed top-down, so "lower row" means a larger row index.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import DomainError, ParseError

MAX_N = 16

Cell = tuple[int, int]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.  Trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def is_hook(self) -> bool:
        """True iff the partition is ``(n - k, 1^k)``."""
        return len(self) > 0 and all(p == 1 for p in self[1:])

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class Composition(tuple):
    """An ordered tuple of positive integers."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def partial_sums(self) -> list[int]:
        out, s = [], 0
        for p in self:
            s += p
            out.append(s)
        return out

    def sorted_partition(self) -> Partition:
        return Partition(sorted(self, reverse=True))

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


@dataclass(frozen=True, eq=False)
class CyclicComposition:
    """A composition considered up to cyclic rotation of its parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p <= 0 for p in self.parts):
            raise DomainError(f"cyclic composition needs positive parts: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @cached_property
    def canonical(self) -> tuple[int, ...]:
        """Lexicographically smallest rotation."""
        p = self.parts
        return min(p[i:] + p[:i] for i in range(len(p)))

    def __eq__(self, other):
        if not isinstance(other, CyclicComposition):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


# --------------------------------------------------------------------------
# subsets of [n] as bitmasks


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for j in elements:
        if j < 1:
            raise DomainError(f"subset elements must be >= 1, got {j}")
        mask |= 1 << (j - 1)
    return mask


def elements_of(mask: int) -> list[int]:
    out, j = [], 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def rotate_mask(mask: int, k: int, n: int) -> int:
    """Add ``k`` (mod n) to every element, identifying 0 with n."""
    k %= n
    if k == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << k) | (mask >> (n - k))) & full


def negate_mask(mask: int, n: int) -> int:
    """Map every element j to n - j, identifying 0 with n."""
    out = 0
    for j in elements_of(mask):
        out |= 1 << ((n - j - 1) % n)
    return out


def rotation_orbit(mask: int, n: int) -> list[int]:
    orbit = [mask]
    cur = rotate_mask(mask, 1, n)
    while cur != mask:
        orbit.append(cur)
        cur = rotate_mask(cur, 1, n)
    return orbit


@dataclass(frozen=True)
class SubsetOfN:
    """A subset of [n], stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise DomainError(f"subset ambient size must be in [0, {MAX_N}], got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise DomainError(f"mask {self.mask:#b} has bits outside [{self.n}]")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> SubsetOfN:
        elements = list(elements)
        if any(j > n for j in elements):
            raise DomainError(f"elements {elements} not inside [{n}]")
        return cls(n, mask_of(elements))

    def __iter__(self) -> Iterator[int]:
        return iter(elements_of(self.mask))

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, j: int) -> bool:
        return 1 <= j <= self.n and bool(self.mask >> (j - 1) & 1)

    def rotate(self, k: int = 1) -> SubsetOfN:
        return SubsetOfN(self.n, rotate_mask(self.mask, k, self.n))

    def negate(self) -> SubsetOfN:
        return SubsetOfN(self.n, negate_mask(self.mask, self.n))

    def __repr__(self) -> str:
        return f"SubsetOfN({self.n}, {set(self) or '{}'})"


SubsetLike = Union[SubsetOfN, int, Iterable[int]]


def as_mask(J: SubsetLike, n: int) -> int:
    """Coerce a SubsetOfN, a bitmask, or an iterable of elements into a mask over [n]."""
    if isinstance(J, SubsetOfN):
        if J.n != n:
            raise DomainError(f"subset lives in [{J.n}], expected [{n}]")
        return J.mask
    if isinstance(J, int):
        mask = J
    else:
        mask = mask_of(J)
    if mask < 0 or mask >> n:
        raise DomainError(f"subset {elements_of(mask)} not inside [{n}]")
    return mask


def rotate_subset(J: SubsetOfN, k: int) -> SubsetOfN:
    return J.rotate(k)


def negate_subset(J: SubsetOfN) -> SubsetOfN:
    return J.negate()


def comp_of_subset(n: int, J: SubsetLike) -> Composition:
    """The composition of n whose partial sums are J together with n."""
    mask = as_mask(J, n)
    if mask >> (n - 1):
        raise DomainError(f"comp_of_subset needs J inside [{n - 1}]")
    parts, prev = [], 0
    for j in elements_of(mask):
        parts.append(j - prev)
        prev = j
    parts.append(n - prev)
    return Composition(parts)


def ccomp_of_subset(n: int, J: SubsetLike) -> CyclicComposition:
    """The cyclic gap sequence ``(j2 - j1, ..., j1 + n - jt)``; ``(n)`` for a singleton."""
    js = elements_of(as_mask(J, n))
    if not js:
        raise DomainError("the cyclic composition of the empty set is not defined")
    return CyclicComposition(_cyclic_parts(js, n))


def _cyclic_parts(js: Sequence[int], n: int) -> tuple[int, ...]:
    if len(js) == 1:
        return (n,)
    return tuple(js[i + 1] - js[i] for i in range(len(js) - 1)) + (js[0] + n - js[-1],)


# --------------------------------------------------------------------------
# skew shapes


@dataclass(frozen=True, eq=False)
class SkewShape:
    """The skew diagram outer/inner.

    Equality compares cell sets after translating to the minimal bounding box;
    outer and inner are kept exactly as given.
    """

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if len(self.inner) > len(self.outer) or any(
            m > l for m, l in zip(self.inner, self.outer)
        ):
            raise DomainError(f"{self.inner} is not contained in {self.outer}")
        if self.outer.n - self.inner.n < 1:
            raise DomainError("a skew shape needs at least one cell")

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> SkewShape:
        """Build a shape from a cell set whose rows are nonempty intervals."""
        cells = set(cells)
        if not cells:
            raise DomainError("empty cell set")
        r0 = min(r for r, _ in cells)
        c0 = min(c for _, c in cells)
        rows: dict[int, list[int]] = {}
        for r, c in cells:
            rows.setdefault(r - r0, []).append(c - c0)
        height = max(rows) + 1
        outer, inner = [], []
        for r in range(height):
            if r not in rows:
                raise DomainError("from_cells does not accept empty interior rows")
            cols = sorted(rows[r])
            if cols != list(range(cols[0], cols[-1] + 1)):
                raise DomainError(f"row {r} is not an interval")
            outer.append(cols[-1] + 1)
            inner.append(cols[0])
        return cls(Partition(outer), Partition(inner))

    @property
    def n(self) -> int:
        return self.outer.n - self.inner.n

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Cells in reading order: top row first, left to right."""
        out = []
        for r, l in enumerate(self.outer):
            m = self.inner[r] if r < len(self.inner) else 0
            out.extend((r, c) for c in range(m, l))
        return tuple(out)

    @cached_property
    def cell_index(self) -> dict[Cell, int]:
        return {cell: i for i, cell in enumerate(self.cells)}

    @cached_property
    def _translated(self) -> frozenset[Cell]:
        r0 = min(r for r, _ in self.cells)
        c0 = min(c for _, c in self.cells)
        return frozenset((r - r0, c - c0) for r, c in self.cells)

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self._translated == other._translated

    def __hash__(self):
        return hash(self._translated)

    def __repr__(self) -> str:
        return f"SkewShape({format_shape(self)!r})"

    def row_intervals(self) -> list[tuple[int, int, int]]:
        """``(row, first_col, end_col)`` for every nonempty row, top-down."""
        out = []
        for r, l in enumerate(self.outer):
            m = self.inner[r] if r < len(self.inner) else 0
            if l > m:
                out.append((r, m, l))
        return out

    def height(self) -> int:
        """Number of nonempty rows."""
        return len(self.row_intervals())

    @cached_property
    def components(self) -> tuple[frozenset[Cell], ...]:
        """Edge-connected components, ordered from northeast to southwest."""
        remaining = set(self.cells)
        comps = []
        for start in self.cells:
            if start not in remaining:
                continue
            stack, comp = [start], set()
            remaining.discard(start)
            while stack:
                r, c = stack.pop()
                comp.add((r, c))
                for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                    if nb in remaining:
                        remaining.discard(nb)
                        stack.append(nb)
            comps.append(frozenset(comp))
        return tuple(comps)

    def contains_2x2(self) -> bool:
        cells = set(self.cells)
        return any(
            (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells
            for r, c in cells
        )

    def is_connected_ribbon(self) -> bool:
        return len(self.components) == 1 and not self.contains_2x2()

    def is_generalized_ribbon(self) -> bool:
        return not self.contains_2x2()

    def is_straight(self) -> bool:
        """True iff, up to translation, the shape is a partition diagram."""
        return not self.normalized().inner

    def normalized(self) -> SkewShape:
        """Drop empty rows and columns and translate to the origin.

        Removing empty rows or columns keeps the relative row order and the
        cell poset, hence the tableaux and their descent sets.
        """
        rows = sorted({r for r, _ in self.cells})
        cols = sorted({c for _, c in self.cells})
        rmap = {r: i for i, r in enumerate(rows)}
        cmap = {c: i for i, c in enumerate(cols)}
        return SkewShape.from_cells((rmap[r], cmap[c]) for r, c in self.cells)

    def is_rectangle(self) -> bool:
        s = self.normalized()
        return not s.inner and len(set(s.outer)) == 1


class ShapeClass(NamedTuple):
    kind: str  # "connected_ribbon" | "generalized_ribbon" | "other"
    components: int
    height: int


def classify_shape(s: SkewShape) -> ShapeClass:
    m, h = len(s.components), s.height()
    if s.contains_2x2():
        return ShapeClass("other", m, h)
    if m == 1:
        return ShapeClass("connected_ribbon", 1, h)
    return ShapeClass("generalized_ribbon", m, h)


def straight_shape(parts: Iterable[int]) -> SkewShape:
    return SkewShape(Partition(parts))


def ribbon_shape(alpha: Iterable[int]) -> SkewShape:
    """The connected ribbon with row lengths alpha, listed bottom row first.

    Consecutive rows share exactly one column.
    """
    alpha = Composition(alpha)
    if not alpha:
        raise DomainError("ribbon of the empty composition")
    cells, start, t = [], 0, len(alpha)
    for i, a in enumerate(alpha):
        row = t - 1 - i
        cells.extend((row, c) for c in range(start, start + a))
        start += a - 1
    return SkewShape.from_cells(cells)


def direct_sum(blocks: Sequence[SkewShape]) -> SkewShape:
    """Place the blocks from southwest (first) to northeast (last).

    No two blocks share a row or a column.
    """
    if not blocks:
        raise DomainError("direct sum of no blocks")
    norm = [b.normalized() for b in blocks]
    heights = [b.height() for b in norm]
    widths = [max(c for _, c in b.cells) + 1 for b in norm]
    cells = []
    col_off = 0
    for k, b in enumerate(norm):
        row_off = sum(heights[k + 1 :])
        cells.extend((r + row_off, c + col_off) for r, c in b.cells)
        col_off += widths[k]
    return SkewShape.from_cells(cells)


def strip_shape(alpha: Iterable[int]) -> SkewShape:
    """The horizontal strip ``(a1) + (a2) + ...`` with rows southwest to northeast."""
    return direct_sum([straight_shape([a]) for a in Composition(alpha)])


def hook_sum_shape(k: int, n: int) -> SkewShape:
    """The shape ``(1^k) + (n - k)``."""
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n - 1, got k={k}, n={n}")
    return direct_sum([straight_shape([1] * k), straight_shape([n - k])])


def all_skew_shapes(n: int) -> list[SkewShape]:
    """Every skew shape of size n with no empty rows or columns, up to translation."""
    out: list[SkewShape] = []

    def grow(rows_bottom_up: list[tuple[int, int]], remaining: int):
        if remaining == 0:
            rows = rows_bottom_up[::-1]
            out.append(SkewShape(Partition(b for _, b in rows), Partition(a for a, _ in rows)))
            return
        a0, b0 = rows_bottom_up[-1]
        for a in range(a0, b0 + 1):
            for b in range(max(b0, a + 1), a + remaining + 1):
                rows_bottom_up.append((a, b))
                grow(rows_bottom_up, remaining - (b - a))
                rows_bottom_up.pop()

    for length in range(1, n + 1):
        grow([(0, length)], n - length)
    return out


# --------------------------------------------------------------------------
# textual shape grammar


_PARTS_RE = re.compile(r"^\d+(\^\d+)?(,\d+(\^\d+)?)*$")


def _parse_parts(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    if not _PARTS_RE.match(text):
        raise ParseError(f"cannot parse parts {text!r}")
    parts: list[int] = []
    for item in text.split(","):
        if "^" in item:
            value, times = item.split("^")
            parts.extend([int(value)] * int(times))
        else:
            parts.append(int(item))
    try:
        return Partition(parts)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def parse_shape(text: str) -> SkewShape:
    """Parse ``"4,3,2/1,1"``, ``"3,2,1"``, or direct sums like ``"(1^2)+(5)"``."""
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty shape string")
    if "+" in text:
        blocks = text.split("+")
        if not all(b.startswith("(") and b.endswith(")") for b in blocks):
            raise ParseError(f"direct-sum blocks must be parenthesized: {text!r}")
        return direct_sum([parse_shape(b[1:-1]) for b in blocks])
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    outer_text, _, inner_text = text.partition("/")
    outer, inner = _parse_parts(outer_text), _parse_parts(inner_text)
    try:
        return SkewShape(outer, inner)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def format_shape(s: SkewShape) -> str:
    outer = ",".join(map(str, s.outer))
    if not s.inner:
        return outer
    return outer + "/" + ",".join(map(str, s.inner))
