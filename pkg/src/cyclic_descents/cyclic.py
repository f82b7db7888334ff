"""Cyclic descent fiber tables, the extension builder and its validator.

A fiber table stores m(J) = #cDes^{-1}(J) for every J subset of [n] as a
dense int64 array indexed by bitmask (bit j - 1 stands for j).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, InternalError, NotExtendable, ResourceLimitError
from .shapes import (
    MAX_N,
    Partition,
    SkewShape,
    SubsetLike,
    SubsetOfN,
    as_mask,
    classify_shape,
    elements_of,
    format_shape,
    full_mask,
    negate_mask,
    rotate_mask,
    rotation_orbit,
)
from .symfunc import affine_ribbon_matrix, affine_ribbon_schur, partition_index, skew_schur
from .tableaux import DEFAULT_SYT_LIMIT, StandardTableau, enumerate_syt, syt_des_masks

NOT_EXTENDABLE_TEXT = (
    "the descent map on standard tableaux of {shape} has no cyclic extension: "
    "a skew shape admits one if and only if it is not a connected ribbon"
)


def _require_size(n: int):
    if not 1 <= n <= MAX_N:
        raise ResourceLimitError(f"size {n} outside 1..{MAX_N}")


# --------------------------------------------------------------------------
# descent fibers


def des_fiber_array(shape: SkewShape, limit: int = DEFAULT_SYT_LIMIT) -> np.ndarray:
    """Counts of Des^{-1}(J), J subset of [n-1], indexed by bitmask."""
    n = shape.n
    _require_size(n)
    masks = np.fromiter(syt_des_masks(shape, limit), dtype=np.int64)
    return np.bincount(masks, minlength=1 << (n - 1)).astype(np.int64)


def des_fibers(shape: SkewShape, limit: int = DEFAULT_SYT_LIMIT) -> dict[tuple[int, ...], int]:
    """Nonzero descent fibers keyed by sorted element tuples."""
    D = des_fiber_array(shape, limit)
    return {tuple(elements_of(J)): int(c) for J, c in enumerate(D) if c}


# --------------------------------------------------------------------------
# fiber tables


@dataclass(frozen=True, eq=False)
class FiberTable:
    n: int
    m: np.ndarray
    des: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        if self.m.shape != (1 << self.n,):
            raise DomainError(f"fiber table for n={self.n} needs {1 << self.n} entries")
        self.m.flags.writeable = False

    def __getitem__(self, J: SubsetLike) -> int:
        return int(self.m[as_mask(J, self.n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiberTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.m, other.m)

    def __hash__(self):
        return hash((self.n, self.m.tobytes()))

    def nonzero(self) -> list[tuple[SubsetOfN, int]]:
        """Nonzero entries ordered by (size, sorted elements)."""
        out = [(SubsetOfN(self.n, J), int(c)) for J, c in enumerate(self.m) if c]
        out.sort(key=lambda e: (len(e[0]), tuple(e[0])))
        return out

    def total(self) -> int:
        return int(self.m.sum())

    def violations(self) -> list[str]:
        """Failures of nonnegativity, m(empty) = m([n]) = 0, rotation invariance and the Des split."""
        n, m = self.n, self.m
        out = []
        neg = np.flatnonzero(m < 0)
        if neg.size:
            out.append(f"negative entry at {elements_of(int(neg[0]))}")
        if m[0] != 0:
            out.append("m(empty) != 0")
        if m[full_mask(n)] != 0:
            out.append("m([n]) != 0")
        rot = _rotation_index(n)
        bad = np.flatnonzero(m != m[rot])
        if bad.size:
            out.append(f"not rotation invariant at {elements_of(int(bad[0]))}")
        if self.des is not None:
            half = 1 << (n - 1)
            split = m[:half] + m[half:]
            bad = np.flatnonzero(split != self.des)
            if bad.size:
                out.append(f"m(J) + m(J+n) != #Des^-1(J) at {elements_of(int(bad[0]))}")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"J": list(J), "m": c} for J, c in self.nonzero()],
        }

    def to_csv(self) -> str:
        lines = ["J,m"]
        lines.extend(f"\"{' '.join(map(str, J))}\",{c}" for J, c in self.nonzero())
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = [f"n = {self.n}"]
        lines.extend(f"{{{','.join(map(str, J))}}}: {c}" for J, c in self.nonzero())
        return "\n".join(lines) + "\n"


def _rotation_index(n: int) -> np.ndarray:
    J = np.arange(1 << n, dtype=np.int64)
    return ((J << 1) | (J >> (n - 1))) & full_mask(n)


def fiber_formula_from_des(n: int, D: np.ndarray) -> np.ndarray:
    """Alternating formula m(J) = sum_i (-1)^{i-1} #Des^{-1}({j_{i+1} - j_i, ..., j_t - j_i}).

    Element j_i sits at bit b; i - 1 is the number of elements below it and
    J >> (b + 1) lists the differences j - j_i for the larger elements.
    """
    J = np.arange(1 << n, dtype=np.int64)
    m = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        has = (J >> b) & 1 == 1
        below = J & ((1 << b) - 1)
        parity = np.zeros_like(J)
        for c in range(b):
            parity ^= (below >> c) & 1
        sign = 1 - 2 * parity
        m += np.where(has, sign * D[J >> (b + 1)], 0)
    return m


def fiber_table_formula(shape: SkewShape, limit: int = DEFAULT_SYT_LIMIT) -> FiberTable:
    """Fiber sizes forced by the Des fibers; meaningful when an extension exists."""
    n = shape.n
    D = des_fiber_array(shape, limit)
    return FiberTable(n, fiber_formula_from_des(n, D), des=D)


def fiber_table_inner(shape: SkewShape) -> FiberTable:
    """m(J) = <s_shape, s~_{cc(J, n)}> for every J."""
    n = shape.n
    _require_size(n)
    f = skew_schur(shape)
    A = affine_ribbon_matrix(n)
    bound = np.abs(A).astype(float) @ np.abs(f.coeffs).astype(float)
    if bound.max(initial=0) >= 2.0**62:
        raise ResourceLimitError("fiber inner products exceed int64")
    m = A @ f.coeffs
    return FiberTable(n, np.ascontiguousarray(m, dtype=np.int64))


def fiber_table(shape: SkewShape, route: str = "formula") -> FiberTable:
    if route == "formula":
        return fiber_table_formula(shape)
    if route == "inner":
        return fiber_table_inner(shape)
    raise DomainError(f"unknown route {route!r}")


def complement_symmetric(table: FiberTable) -> bool:
    n = table.n
    neg = np.array([negate_mask(J, n) for J in range(1 << n)], dtype=np.int64)
    return bool(np.array_equal(table.m, table.m[neg]))


# --------------------------------------------------------------------------
# extensions


@dataclass(frozen=True)
class CyclicExtension:
    shape: SkewShape
    tableaux: tuple[StandardTableau, ...]
    cdes: tuple[SubsetOfN, ...]
    p: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.shape.n

    def fiber_counts(self) -> np.ndarray:
        masks = np.array([c.mask for c in self.cdes], dtype=np.int64)
        return np.bincount(masks, minlength=1 << self.n).astype(np.int64)

    def p_orbits(self) -> list[list[int]]:
        seen = [False] * len(self.p)
        out = []
        for i in range(len(self.p)):
            if seen[i]:
                continue
            orbit, j = [], i
            while not seen[j]:
                seen[j] = True
                orbit.append(j)
                j = self.p[j]
            out.append(orbit)
        return out

    def to_json(self) -> dict:
        """Tableaux are numbered from 1; ``p`` is one-line notation on those numbers."""
        return {
            "shape": format_shape(self.shape),
            "n": self.n,
            "tableaux": [
                {
                    "index": i + 1,
                    "rows": T.rows(),
                    "des": list(T.des_set()),
                    "cdes": list(c),
                }
                for i, (T, c) in enumerate(zip(self.tableaux, self.cdes))
            ],
            "p": [j + 1 for j in self.p],
        }


def _orbit_base(mask: int, n: int) -> int:
    return min(rotation_orbit(mask, n), key=lambda J: elements_of(J))


def stitch_orbits(cdes: Sequence[int], n: int) -> list[int]:
    """A bijection p with cdes[p[i]] = rotate(cdes[i]).

    Orbits of subsets are walked from their lexicographically smallest member;
    the i-th element of one fiber goes to the i-th element of the next.
    """
    fibers: dict[int, list[int]] = {}
    for i, c in enumerate(cdes):
        fibers.setdefault(c, []).append(i)
    p = [-1] * len(cdes)
    done: set[int] = set()
    for c in sorted(fibers, key=elements_of):
        base = _orbit_base(c, n)
        if base in done:
            continue
        done.add(base)
        orbit = rotation_orbit(base, n)
        for k, J in enumerate(orbit):
            src, dst = fibers.get(J, []), fibers.get(orbit[(k + 1) % len(orbit)], [])
            if len(src) != len(dst):
                raise InternalError(f"rotation changes fiber size at {elements_of(J)}")
            for a, b in zip(src, dst):
                p[a] = b
    return p


def build_extension(shape: SkewShape, limit: int = DEFAULT_SYT_LIMIT) -> CyclicExtension:
    """Deterministic cyclic extension for a shape that is not a connected ribbon."""
    if classify_shape(shape).kind == "connected_ribbon":
        raise NotExtendable(NOT_EXTENDABLE_TEXT.format(shape=format_shape(shape)))
    n = shape.n
    table = fiber_table_formula(shape, limit)
    problems = table.violations()
    if problems:
        raise InternalError(f"fiber table of {shape} is inconsistent: {problems[0]}")
    tableaux = enumerate_syt(shape, limit)
    des = syt_des_masks(shape, limit)

    by_des: dict[int, list[int]] = {}
    for i, d in enumerate(des):
        by_des.setdefault(d, []).append(i)
    top = 1 << (n - 1)
    cdes = [0] * len(tableaux)
    for d, idx in by_des.items():
        k = int(table.m[d])
        for pos, i in enumerate(idx):
            c = d if pos < k else d | top
            cdes[i] = c

    p = stitch_orbits(cdes, n)
    return CyclicExtension(
        shape,
        tuple(tableaux),
        tuple(SubsetOfN(n, c) for c in cdes),
        tuple(p),
    )


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: Optional[str] = None
    index: Optional[int] = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"ok": self.ok, "axiom": self.axiom, "index": self.index, "detail": self.detail}


def validate_extension(ext: CyclicExtension) -> ValidationReport:
    """Check the bijection, extension, equivariance and non-Escher axioms pointwise."""
    n, N = ext.n, len(ext.tableaux)
    if len(ext.cdes) != N or len(ext.p) != N:
        return ValidationReport(False, "shape", None, "length mismatch")
    if sorted(ext.p) != list(range(N)):
        return ValidationReport(False, "bijection", None, "p is not a permutation")
    low = full_mask(n - 1)
    full = full_mask(n)
    # one axiom at a time, so an injected defect is reported under its own name
    for i, (T, c) in enumerate(zip(ext.tableaux, ext.cdes)):
        if c.n != n:
            return ValidationReport(False, "extension", i, f"cdes lives on [{c.n}]")
        if c.mask & low != T.des_mask:
            return ValidationReport(
                False, "extension", i, f"cdes {list(c)} restricts to {elements_of(c.mask & low)}, des is {list(T.des_set())}"
            )
    for i, c in enumerate(ext.cdes):
        if c.mask == 0 or c.mask == full:
            return ValidationReport(False, "non-Escher", i, f"cdes = {list(c)}")
    for i, c in enumerate(ext.cdes):
        image = ext.cdes[ext.p[i]].mask
        if image != rotate_mask(c.mask, 1, n):
            return ValidationReport(
                False, "equivariance", i, f"cdes {list(c)} but cdes(p T) = {elements_of(image)}"
            )
    return ValidationReport(True)


# --------------------------------------------------------------------------
# Gromov-Witten invariants


def gw_invariant(n: int, J: SubsetLike, nu: Sequence[int]) -> int:
    """<s~_{cc(J, n)}, s_nu> for a non-hook nu of n and nonempty J."""
    nu = Partition(nu)
    if nu.n != n:
        raise DomainError(f"{tuple(nu)} is not a partition of {n}")
    if nu.is_hook():
        raise DomainError(f"{tuple(nu)} is a hook; the pairing can be negative there")
    mask = as_mask(J, n)
    if mask == 0:
        raise DomainError("J must be nonempty")
    _require_size(n)
    if n <= 12:
        return int(affine_ribbon_matrix(n)[mask, partition_index(n)[tuple(nu)]])
    return affine_ribbon_schur(n, mask)[nu]
