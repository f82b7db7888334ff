"""Standard and semistandard tableaux on skew shapes.

Entries are stored as a flat tuple aligned with ``shape.cells`` (reading
order: top row first, left to right), so lexicographic order on entries is
lexicographic order on the row-reading word.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache, cached_property
from itertools import product
from typing import Callable, Iterator, Optional, Sequence

from .errors import DomainError, ResourceLimitError
from .shapes import (
    SkewShape,
    SubsetLike,
    SubsetOfN,
    as_mask,
    ccomp_of_subset,
    ribbon_shape,
    strip_shape,
)

DEFAULT_SYT_LIMIT = 10**7


def _shape_neighbors(shape: SkewShape) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Index of the cell to the left and above each cell, or -1."""
    idx = shape.cell_index
    left = tuple(idx.get((r, c - 1), -1) for r, c in shape.cells)
    up = tuple(idx.get((r - 1, c), -1) for r, c in shape.cells)
    return left, up


def _rows(shape: SkewShape, entries: Sequence[int]) -> list[list[int]]:
    rows: dict[int, list[int]] = {}
    for (r, _), v in zip(shape.cells, entries):
        rows.setdefault(r, []).append(v)
    return [rows[r] for r in sorted(rows)]


def _row_dicts(shape: SkewShape, entries: Sequence[int]) -> list[dict]:
    out: dict[int, dict] = {}
    for (r, c), v in zip(shape.cells, entries):
        row = out.setdefault(r, {"row": r, "offset": c, "entries": []})
        row["entries"].append(v)
    return [out[r] for r in sorted(out)]


@dataclass(frozen=True)
class StandardTableau:
    shape: SkewShape
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.shape.n:
            raise DomainError("entry count does not match the shape")

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Sequence[Sequence[int]]) -> StandardTableau:
        """Build from row lists given top row first."""
        flat = [v for row in rows for v in row]
        t = cls(shape, tuple(flat))
        if not t.is_valid():
            raise DomainError(f"not a standard tableau of {shape}: {rows}")
        return t

    @property
    def n(self) -> int:
        return self.shape.n

    def rows(self) -> list[list[int]]:
        return _rows(self.shape, self.entries)

    def is_valid(self) -> bool:
        if sorted(self.entries) != list(range(1, self.n + 1)):
            return False
        left, up = _shape_neighbors(self.shape)
        e = self.entries
        return all(
            (left[i] < 0 or e[left[i]] < e[i]) and (up[i] < 0 or e[up[i]] < e[i])
            for i in range(self.n)
        )

    @cached_property
    def row_of_value(self) -> tuple[int, ...]:
        """``row_of_value[v]`` is the row containing v (index 0 unused)."""
        rows = [0] * (self.n + 1)
        for (r, _), v in zip(self.shape.cells, self.entries):
            rows[v] = r
        return tuple(rows)

    @cached_property
    def des_mask(self) -> int:
        return _des_mask(self.row_of_value, self.n)

    def des_set(self) -> SubsetOfN:
        """Descents i: i + 1 sits in a lower row than i."""
        return SubsetOfN(max(self.n - 1, 0), self.des_mask)

    def des(self) -> int:
        return bin(self.des_mask).count("1")

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rows": _row_dicts(self.shape, self.entries),
        }


def _des_mask(row_of_value: Sequence[int], n: int) -> int:
    mask = 0
    for i in range(1, n):
        if row_of_value[i + 1] > row_of_value[i]:
            mask |= 1 << (i - 1)
    return mask


def des_set(T: StandardTableau) -> SubsetOfN:
    return T.des_set()


@cache
def _syt_entries(shape: SkewShape, limit: int) -> tuple[tuple[int, ...], ...]:
    n = shape.n
    left, up = _shape_neighbors(shape)
    entries = [0] * n
    out: list[tuple[int, ...]] = []

    def ready(i: int) -> bool:
        return entries[i] == 0 and (left[i] < 0 or entries[left[i]]) and (
            up[i] < 0 or entries[up[i]]
        )

    def place(v: int):
        if v > n:
            out.append(tuple(entries))
            if len(out) > limit:
                raise ResourceLimitError(f"more than {limit} standard tableaux of {shape}")
            return
        for i in range(n):
            if ready(i):
                entries[i] = v
                place(v + 1)
                entries[i] = 0

    place(1)
    out.sort()
    return tuple(out)


def enumerate_syt(shape: SkewShape, limit: int = DEFAULT_SYT_LIMIT) -> list[StandardTableau]:
    """All standard tableaux, sorted lexicographically by reading word."""
    return [StandardTableau(shape, e) for e in _syt_entries(shape, limit)]


@cache
def syt_des_masks(shape: SkewShape, limit: int = DEFAULT_SYT_LIMIT) -> tuple[int, ...]:
    """Descent masks of ``enumerate_syt(shape)``, in the same order."""
    out = []
    rows = [r for r, _ in shape.cells]
    n = shape.n
    for e in _syt_entries(shape, limit):
        row_of = [0] * (n + 1)
        for r, v in zip(rows, e):
            row_of[v] = r
        out.append(_des_mask(row_of, n))
    return tuple(out)


def count_syt(shape: SkewShape) -> int:
    return count_ssyt(shape, shape.n, (1,) * shape.n)


# --------------------------------------------------------------------------
# horizontal strips


def is_horizontal_strip_sum(shape: SkewShape) -> bool:
    """True iff the shape is a direct sum of at least two single rows."""
    comps = shape.components
    return len(comps) >= 2 and all(len({r for r, _ in comp}) == 1 for comp in comps)


def _require_strip(T: StandardTableau):
    if not is_horizontal_strip_sum(T.shape):
        raise DomainError(f"{T.shape} is not a horizontal strip with at least two rows")


def strip_cdes(T: StandardTableau) -> SubsetOfN:
    """Cyclic descents on a horizontal strip: i + 1 lower than i, with n + 1 read as 1."""
    _require_strip(T)
    n, row_of = T.n, T.row_of_value
    mask = T.des_mask
    if row_of[1] > row_of[n]:
        mask |= 1 << (n - 1)
    return SubsetOfN(n, mask)


def strip_p(T: StandardTableau) -> StandardTableau:
    """Replace every entry j by j + 1 (mod n) and re-sort each row."""
    _require_strip(T)
    n = T.n
    rows = [sorted(v % n + 1 for v in row) for row in T.rows()]
    return StandardTableau(T.shape, tuple(v for row in rows for v in row))


def permutation_to_strip_tableau(w: Sequence[int]) -> StandardTableau:
    """Send w to the tableau of shape (1)+(1)+...+(1) reading w^{-1}(1..n) southwest to northeast."""
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise DomainError(f"{w} is not a permutation")
    shape = strip_shape_ones(n)
    inverse = [0] * (n + 1)
    for i, v in enumerate(w, start=1):
        inverse[v] = i
    # cells run top row first, i.e. northeast to southwest
    return StandardTableau(shape, tuple(inverse[k] for k in range(n, 0, -1)))


@cache
def strip_shape_ones(n: int) -> SkewShape:
    return strip_shape([1] * n)


# --------------------------------------------------------------------------
# promotion


def promotion(T: StandardTableau) -> StandardTableau:
    """Jeu-de-taquin promotion on an a x b rectangle, a, b >= 2.

    Delete n, slide the hole back to the corner (0, 0), add 1 to every
    entry and put 1 in the corner.  Shifts descents up by one.
    """
    shape = T.shape
    if not shape.is_rectangle() or shape.height() < 2 or shape.outer[0] - (
        shape.inner[0] if shape.inner else 0
    ) < 2:
        raise DomainError(f"promotion needs a rectangle with both sides >= 2, got {shape}")
    grid = [list(row) for row in T.rows()]
    a, b = len(grid), len(grid[0])
    r, c = a - 1, b - 1
    while (r, c) != (0, 0):
        up = grid[r - 1][c] if r > 0 else 0
        left = grid[r][c - 1] if c > 0 else 0
        if up > left:
            grid[r][c] = up
            r -= 1
        else:
            grid[r][c] = left
            c -= 1
    grid[0][0] = 0
    return StandardTableau(shape, tuple(v + 1 for row in grid for v in row))


# --------------------------------------------------------------------------
# semistandard tableaux


@dataclass(frozen=True)
class SemistandardTableau:
    shape: SkewShape
    entries: tuple[int, ...]

    def rows(self) -> list[list[int]]:
        return _rows(self.shape, self.entries)

    def content(self, m: Optional[int] = None) -> tuple[int, ...]:
        m = max(self.entries) if m is None else m
        counts = Counter(self.entries)
        return tuple(counts.get(i, 0) for i in range(1, m + 1))

    def is_valid(self) -> bool:
        left, up = _shape_neighbors(self.shape)
        e = self.entries
        return all(
            v >= 1
            and (left[i] < 0 or e[left[i]] <= v)
            and (up[i] < 0 or e[up[i]] < v)
            for i, v in enumerate(e)
        )

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rows": _row_dicts(self.shape, self.entries),
        }


def iter_ssyt(
    shape: SkewShape,
    max_entry: int,
    accept: Optional[Callable[[list[int], int], bool]] = None,
) -> Iterator[tuple[int, ...]]:
    """Entry tuples of every SSYT with entries in [max_entry], in lexicographic order.

    ``accept(entries, i)`` may veto the value just written at cell i.
    """
    n = shape.n
    left, up = _shape_neighbors(shape)
    entries = [0] * n

    def fill(i: int):
        if i == n:
            yield tuple(entries)
            return
        lo = 1
        if left[i] >= 0:
            lo = entries[left[i]]
        if up[i] >= 0:
            lo = max(lo, entries[up[i]] + 1)
        for v in range(lo, max_entry + 1):
            entries[i] = v
            if accept is None or accept(entries, i):
                yield from fill(i + 1)
        entries[i] = 0

    yield from fill(0)


def enumerate_ssyt(shape: SkewShape, max_entry: int) -> list[SemistandardTableau]:
    return [SemistandardTableau(shape, e) for e in iter_ssyt(shape, max_entry)]


@cache
def _ssyt_count(outer: tuple, inner: tuple, content: tuple) -> int:
    """Fillings of outer/inner with content ``content`` (entry i used content[i-1] times)."""
    if not content:
        return int(outer == inner)
    size = content[-1]
    rows = len(outer)
    ranges = []
    for i in range(rows):
        below = outer[i + 1] if i + 1 < rows else 0
        lo = max(below, inner[i])
        ranges.append(range(lo, outer[i] + 1))
    total = 0
    for nu in product(*ranges):
        if sum(outer) - sum(nu) == size:
            total += _ssyt_count(nu, inner, content[:-1])
    return total


@cache
def _ssyt_count_bounded(outer: tuple, inner: tuple, m: int) -> int:
    if outer == inner:
        return 1
    if m == 0:
        return 0
    rows = len(outer)
    ranges = []
    for i in range(rows):
        below = outer[i + 1] if i + 1 < rows else 0
        ranges.append(range(max(below, inner[i]), outer[i] + 1))
    return sum(_ssyt_count_bounded(nu, inner, m - 1) for nu in product(*ranges))


def count_ssyt(shape: SkewShape, max_entry: int, content: Optional[Sequence[int]] = None) -> int:
    """Count SSYT with entries in [max_entry], optionally with a fixed content.

    Peels off the horizontal strip holding the largest entry, recursively.
    """
    if max_entry < 1:
        raise DomainError("max_entry must be >= 1")
    s = shape.normalized()
    outer = tuple(s.outer)
    inner = tuple(s.inner) + (0,) * (len(s.outer) - len(s.inner))
    if content is None:
        return _ssyt_count_bounded(outer, inner, max_entry)
    content = tuple(int(c) for c in content)
    if len(content) > max_entry and any(content[max_entry:]):
        return 0
    if sum(content) != shape.n:
        return 0
    return _ssyt_count(outer, inner, content[:max_entry])


# --------------------------------------------------------------------------
# cylindric ribbon tableaux


def cylindric_ribbon(n: int, J: SubsetLike) -> tuple[SkewShape, int, int]:
    """The finite ribbon R_J with the indices of its extreme cells a (southwest) and b (northeast)."""
    cc = ccomp_of_subset(n, J)
    shape = ribbon_shape(cc.parts)
    cells = shape.cells
    bottom = max(r for r, _ in cells)
    a = min(i for i, (r, _) in enumerate(cells) if r == bottom)
    b = max(i for i, (r, _) in enumerate(cells) if r == 0)
    return shape, a, b


def iter_cylindric_tableaux(n: int, J: SubsetLike, max_entry: int) -> Iterator[tuple[int, ...]]:
    shape, a, b = cylindric_ribbon(n, as_mask(J, n))
    if a == b:
        return iter(())
    last = max(a, b)

    def accept(entries, i):
        return i != last or entries[a] < entries[b]

    return iter_ssyt(shape, max_entry, accept)


def enumerate_cylindric_tableaux(n: int, J: SubsetLike, max_entry: int) -> list[SemistandardTableau]:
    """SSYT of R_J with entries in [max_entry] and T_a < T_b."""
    if not as_mask(J, n):
        raise DomainError("cylindric ribbon of the empty set is not defined")
    shape, _, _ = cylindric_ribbon(n, J)
    return [SemistandardTableau(shape, e) for e in iter_cylindric_tableaux(n, J, max_entry)]


def cylindric_weight_enumerator(n: int, J: SubsetLike, max_entry: int) -> Counter:
    """Count cylindric tableaux by content vector of length max_entry."""
    counts: Counter = Counter()
    for e in iter_cylindric_tableaux(n, J, max_entry):
        c = [0] * max_entry
        for v in e:
            c[v - 1] += 1
        counts[tuple(c)] += 1
    return counts
