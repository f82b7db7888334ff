"""Degree-n symmetric functions in the Schur basis.

Every symmetric function is a dense integer vector indexed by the partitions
of n (lexicographic order).  Expressions in the h and p bases are converted
on the fly through Young's rule and never stored.
"""

from __future__ import annotations

from functools import cache
from math import comb
from typing import Iterable, Mapping, Optional

import numpy as np

from .errors import DomainError, InternalError, ResourceLimitError
from .shapes import (
    Composition,
    Partition,
    SkewShape,
    SubsetLike,
    _cyclic_parts,
    as_mask,
    classify_shape,
    comp_of_subset,
    elements_of,
    hook_sum_shape,
    popcount,
    straight_shape,
)
from .tableaux import count_ssyt

_BOUND = 2**62


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, sorted lexicographically."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for p in range(min(remaining, largest), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return tuple(Partition(p) for p in sorted(out))


@cache
def partition_index(n: int) -> dict[tuple[int, ...], int]:
    return {tuple(p): i for i, p in enumerate(partitions(n))}


def hook(n: int, k: int) -> Partition:
    """The hook ``(n - k, 1^k)``."""
    if not 0 <= k <= n - 1:
        raise DomainError(f"hook needs 0 <= k <= n - 1, got k={k}, n={n}")
    return Partition((n - k,) + (1,) * k)


def _check(arr: np.ndarray) -> np.ndarray:
    if arr.size and int(np.abs(arr).max()) >= _BOUND:
        raise ResourceLimitError("coefficient exceeds the 64-bit working range")
    return arr


class SchurVector:
    """An integer combination of Schur functions s_nu, nu a partition of n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Optional[np.ndarray] = None):
        self.n = n
        size = len(partitions(n))
        if coeffs is None:
            coeffs = np.zeros(size, dtype=np.int64)
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (size,):
            raise DomainError(f"expected {size} coefficients for degree {n}")
        self.coeffs = _check(coeffs)
        self.coeffs.flags.writeable = False

    @classmethod
    def from_dict(cls, n: int, terms: Mapping[Iterable[int], int]) -> SchurVector:
        idx = partition_index(n)
        arr = np.zeros(len(idx), dtype=np.int64)
        for nu, c in terms.items():
            nu = tuple(Partition(nu))
            if nu not in idx:
                raise DomainError(f"{nu} is not a partition of {n}")
            arr[idx[nu]] += c
        return cls(n, arr)

    @classmethod
    def unit(cls, nu: Iterable[int]) -> SchurVector:
        nu = Partition(nu)
        return cls.from_dict(nu.n, {nu: 1})

    def __getitem__(self, nu: Iterable[int]) -> int:
        key = tuple(Partition(nu))
        i = partition_index(self.n).get(key)
        return 0 if i is None else int(self.coeffs[i])

    def items(self) -> list[tuple[Partition, int]]:
        """Nonzero terms, in lexicographic order of partitions."""
        parts = partitions(self.n)
        return [(parts[i], int(c)) for i, c in enumerate(self.coeffs) if c]

    def to_dict(self) -> dict[tuple[int, ...], int]:
        return {tuple(p): c for p, c in self.items()}

    def _same_degree(self, other: SchurVector):
        if not isinstance(other, SchurVector):
            raise TypeError(f"expected SchurVector, got {type(other).__name__}")
        if other.n != self.n:
            raise DomainError(f"degree mismatch: {self.n} vs {other.n}")

    def __add__(self, other: SchurVector) -> SchurVector:
        self._same_degree(other)
        return SchurVector(self.n, self.coeffs + other.coeffs)

    def __sub__(self, other: SchurVector) -> SchurVector:
        self._same_degree(other)
        return SchurVector(self.n, self.coeffs - other.coeffs)

    def __neg__(self) -> SchurVector:
        return SchurVector(self.n, -self.coeffs)

    def __mul__(self, k: int) -> SchurVector:
        k = int(k)
        if self.coeffs.size and abs(k) * int(np.abs(self.coeffs).max()) >= _BOUND:
            raise ResourceLimitError("coefficient exceeds the 64-bit working range")
        return SchurVector(self.n, self.coeffs * k)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurVector):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.n, self.coeffs.tobytes()))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __repr__(self) -> str:
        if self.is_zero():
            return f"SchurVector({self.n}, 0)"
        terms = " + ".join(f"{c}*s{tuple(p)}" for p, c in self.items())
        return f"SchurVector({self.n}, {terms})"

    def to_json(self) -> list[dict]:
        return [{"partition": list(p), "coefficient": c} for p, c in self.items()]


def zero(n: int) -> SchurVector:
    return SchurVector(n)


# --------------------------------------------------------------------------
# h basis


@cache
def _h_row(parts: tuple[int, ...]) -> np.ndarray:
    n = sum(parts)
    row = np.array(
        [count_ssyt(straight_shape(nu), max(len(parts), 1), parts) for nu in partitions(n)],
        dtype=np.int64,
    )
    row.flags.writeable = False
    return row


def h_to_schur(alpha: Iterable[int]) -> SchurVector:
    """Young's rule: h_alpha = sum_nu K_{nu, alpha} s_nu."""
    alpha = Composition(alpha)
    key = tuple(sorted(alpha, reverse=True))
    return SchurVector(alpha.n, _h_row(key))


def _h_combination(n: int, terms: Mapping[tuple[int, ...], int]) -> SchurVector:
    acc = np.zeros(len(partitions(n)), dtype=object)
    for parts, c in terms.items():
        if c:
            acc += c * _h_row(tuple(sorted(parts, reverse=True))).astype(object)
    return SchurVector(n, _to_int64(acc))


def _to_int64(acc: np.ndarray) -> np.ndarray:
    if acc.size and max(abs(int(x)) for x in acc) >= _BOUND:
        raise ResourceLimitError("coefficient exceeds the 64-bit working range")
    return acc.astype(np.int64)


def jacobi_trudi_h_expansion(shape: SkewShape) -> dict[tuple[int, ...], int]:
    """Expand det(h_{outer_i - inner_j + j - i}) into h-monomials.

    Keys are partitions (sorted h indices); zero coefficients are dropped.
    """
    s = shape.normalized()
    lam = list(s.outer)
    ell = len(lam)
    mu = list(s.inner) + [0] * (ell - len(s.inner))
    entry = [[lam[i] - mu[j] + j - i for j in range(ell)] for i in range(ell)]

    memo: dict[tuple[int, int], dict[tuple[int, ...], int]] = {}

    def det(i: int, avail: int) -> dict[tuple[int, ...], int]:
        if i == ell:
            return {(): 1}
        key = (i, avail)
        if key in memo:
            return memo[key]
        out: dict[tuple[int, ...], int] = {}
        position = 0
        for j in range(ell):
            if not avail >> j & 1:
                continue
            k = entry[i][j]
            sign = -1 if position % 2 else 1
            position += 1
            if k < 0:
                continue
            for mono, c in det(i + 1, avail & ~(1 << j)).items():
                new = tuple(sorted(mono + (k,), reverse=True)) if k > 0 else mono
                out[new] = out.get(new, 0) + sign * c
        out = {m: c for m, c in out.items() if c}
        memo[key] = out
        return out

    return det(0, (1 << ell) - 1)


@cache
def skew_schur(shape: SkewShape) -> SchurVector:
    """Schur expansion of s_{outer/inner} through the Jacobi-Trudi determinant."""
    result = _h_combination(shape.n, jacobi_trudi_h_expansion(shape))
    if (result.coeffs < 0).any():
        raise InternalError(f"negative Schur coefficient in s_{shape}: {result}")
    return result


def ribbon_schur(n: int, J: SubsetLike) -> SchurVector:
    """sum over I subset of J of (-1)^{|J - I|} h_{comp(I, n)}."""
    mask = as_mask(J, n)
    if mask >> (n - 1):
        raise DomainError(f"ribbon_schur needs J inside [{n - 1}]")
    t = popcount(mask)
    terms: dict[tuple[int, ...], int] = {}
    for sub in _submasks(mask):
        key = tuple(sorted(comp_of_subset(n, sub), reverse=True))
        terms[key] = terms.get(key, 0) + (-1) ** (t - popcount(sub))
    return _h_combination(n, terms)


def _submasks(mask: int) -> list[int]:
    out, sub = [], mask
    while True:
        out.append(sub)
        if sub == 0:
            return out
        sub = (sub - 1) & mask


@cache
def _affine_matrix(n: int) -> np.ndarray:
    size = 1 << n
    npart = len(partitions(n))
    rows = np.zeros((size, npart), dtype=np.int64)
    for mask in range(1, size):
        key = tuple(sorted(_cyclic_parts(elements_of(mask), n), reverse=True))
        rows[mask] = _h_row(key)
    # signed subset sum: f(J) = sum_{I <= J} (-1)^{|J - I|} g(I)
    for b in range(n):
        bit = 1 << b
        view = rows.reshape(size // (2 * bit), 2, bit, npart)
        view[:, 1] -= view[:, 0]
    _check(rows)
    rows.flags.writeable = False
    return rows


def affine_ribbon_matrix(n: int) -> np.ndarray:
    """Row J holds the Schur coefficients of the affine ribbon function of J."""
    return _affine_matrix(n)


def affine_ribbon_schur(n: int, J: SubsetLike) -> SchurVector:
    """sum over nonempty I subset of J of (-1)^{|J - I|} h_{cc(I, n)}; zero for J empty."""
    mask = as_mask(J, n)
    if n > 12:
        return _affine_direct(n, mask)
    return SchurVector(n, _affine_matrix(n)[mask])


def _affine_direct(n: int, mask: int) -> SchurVector:
    t = popcount(mask)
    terms: dict[tuple[int, ...], int] = {}
    for sub in _submasks(mask):
        if sub:
            key = tuple(sorted(_cyclic_parts(elements_of(sub), n), reverse=True))
            terms[key] = terms.get(key, 0) + (-1) ** (t - popcount(sub))
    return _h_combination(n, terms)


def power_sum_hooks(n: int) -> SchurVector:
    """p_n as the alternating sum of hooks."""
    if n < 1:
        raise DomainError("power sum needs n >= 1")
    return SchurVector.from_dict(n, {hook(n, k): (-1) ** k for k in range(n)})


def hall_inner(f: SchurVector, g: SchurVector) -> int:
    if f.n != g.n:
        raise DomainError(f"degree mismatch: {f.n} vs {g.n}")
    return sum(int(a) * int(b) for a, b in zip(f.coeffs, g.coeffs) if a and b)


def principal_spec(f: SchurVector, m: int) -> int:
    """f(1^m) = sum_nu coeff(nu) * #SSYT(nu) with entries <= m."""
    if m < 0:
        raise DomainError("number of variables must be >= 0")
    if m == 0:
        return 0 if f.n >= 1 else int(f.coeffs[0])
    return sum(c * count_ssyt(straight_shape(nu), m) for nu, c in f.items())


def schur_principal(nu: Iterable[int], m: int) -> int:
    """s_nu(1^m) by the hook-content formula."""
    nu = Partition(nu)
    if m < 0:
        raise DomainError("number of variables must be >= 0")
    conj = nu.conjugate()
    num, den = 1, 1
    for r, row in enumerate(nu):
        for c in range(row):
            num *= m + c - r
            den *= row - c + conj[c] - r - 1
    return num // den


def hook_mults(shape: SkewShape) -> dict[int, int]:
    """Closed-form hook multiplicities <s_shape, s_(n-k,1^k)>, k = 0..n-1."""
    n = shape.n
    cls = classify_shape(shape)
    out = {k: 0 for k in range(n)}
    if cls.kind == "other":
        return out
    m, h = cls.components, cls.height
    for k in range(n):
        if k + 1 <= h <= k + m:
            out[k] = comb(m - 1, h - k - 1)
    return out


def sum_of_hooks_identity(n: int, k: int) -> bool:
    """Check s_{(1^k)+(n-k)} = s_(n-k+1, 1^(k-1)) + s_(n-k, 1^k)."""
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n - 1, got k={k}, n={n}")
    lhs = skew_schur(hook_sum_shape(k, n))
    rhs = SchurVector.unit(hook(n, k - 1)) + SchurVector.unit(hook(n, k))
    return lhs == rhs
