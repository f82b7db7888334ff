"""Exceptional (Escher) cyclic extensions: words, even symmetric groups, skew shapes."""

from __future__ import annotations

from itertools import permutations
from math import comb
from typing import Optional, Sequence

import numpy as np

from .cyclic import des_fiber_array, fiber_formula_from_des, fiber_table_inner, stitch_orbits
from .errors import DomainError, ResourceLimitError
from .gens import cellini_cdes_mask, cellini_p, sn_cdes_array
from .shapes import (
    MAX_N,
    SkewShape,
    SubsetOfN,
    full_mask,
    hook_sum_shape,
    popcount,
    rotate_mask,
    straight_shape,
    strip_shape,
)
from .symfunc import affine_ribbon_matrix, partitions, schur_principal, skew_schur

WORDS_LIMIT = 10**7


# --------------------------------------------------------------------------
# words


def word_cdes_star(a: Sequence[int], weak: bool = False) -> SubsetOfN:
    """{i : a_i > a_{i+1}} with a_{n+1} = a_1; ``weak`` uses >= instead."""
    n = len(a)
    if any(x < 1 for x in a):
        raise DomainError("letters must be >= 1")
    mask = 0
    for i in range(n):
        x, y = a[i], a[(i + 1) % n]
        if x > y or (weak and x == y):
            mask |= 1 << i
    return SubsetOfN(n, mask)


def words_distribution(m: int, n: int, weak: bool = False) -> np.ndarray:
    """Counts of cDes* over all m^n words, indexed by subset mask."""
    if m < 1 or n < 1:
        raise DomainError("need m, n >= 1")
    if n > MAX_N:
        raise ResourceLimitError(f"word length above {MAX_N}")
    total = m**n
    if total > WORDS_LIMIT:
        raise ResourceLimitError(f"{total} words exceed the limit {WORDS_LIMIT}")
    weights = 1 << np.arange(n, dtype=np.int64)
    powers = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    chunk = 1 << 18
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        letters = (idx[:, None] // powers) % m
        nxt = np.roll(letters, -1, axis=1)
        bits = letters >= nxt if weak else letters > nxt
        out += np.bincount(bits.astype(np.int64) @ weights, minlength=1 << n)
    return out


def words_rhs(m: int, n: int) -> np.ndarray:
    """Constant words, non-hook Schur fibers weighted by s(1^m), and hook-sum fibers."""
    if n < 2:
        raise DomainError("need n >= 2")
    A = affine_ribbon_matrix(n)
    weights = np.zeros(A.shape[1], dtype=np.int64)
    for i, lam in enumerate(partitions(n)):
        if not lam.is_hook():
            weights[i] = schur_principal(lam, m)
    out = A @ weights
    out[0] += m
    p = min(m, n)
    for k in range(1, p):
        coeff = sum(
            comb(t - 2, k - 1) * comb(m, t) * comb(n - 1, t - 1) for t in range(k + 1, p + 1)
        )
        out += coeff * fiber_table_inner(hook_sum_shape(k, n)).m
    return out


def check_words_identity(m: int, n: int) -> bool:
    return bool(np.array_equal(words_distribution(m, n), words_rhs(m, n)))


# --------------------------------------------------------------------------
# layered permutations


def layer_count(w: Sequence[int]) -> Optional[int]:
    """k if w is k-layered (decreasing runs of consecutive values, blocks increasing), else None."""
    n = len(w)
    prev, i, k = 0, 0, 0
    while i < n:
        q = w[i]
        if q <= prev or q > n:
            return None
        if list(w[i : i + q - prev]) != list(range(q, prev, -1)):
            return None
        i += q - prev
        prev = q
        k += 1
    return k


def is_layered(w: Sequence[int], k: int) -> bool:
    return layer_count(w) == k


def is_colayered(w: Sequence[int], k: int) -> bool:
    return layer_count(tuple(reversed(w))) == k


def cdes_star_sn(w: Sequence[int]) -> SubsetOfN:
    """Cellini cDes, minus n on even-layered and plus n on even-colayered permutations."""
    n = len(w)
    if n % 2:
        raise DomainError(f"no exceptional extension on S_{n} for odd n")
    if sorted(w) != list(range(1, n + 1)):
        raise DomainError(f"{w} is not a permutation")
    mask = cellini_cdes_mask(w)
    top = 1 << (n - 1)
    k = layer_count(w)
    if k is not None and k % 2 == 0:
        mask &= ~top
    else:
        k = layer_count(tuple(reversed(w)))
        if k is not None and k % 2 == 0:
            mask |= top
    return SubsetOfN(n, mask)


def sn_cdes_star_array(n: int) -> np.ndarray:
    """cDes* distribution on S_n, n even, indexed by subset mask."""
    masks = [cdes_star_sn(w).mask for w in permutations(range(1, n + 1))]
    return np.bincount(np.array(masks, dtype=np.int64), minlength=1 << n).astype(np.int64)


def sn_exceptional_p(n: int) -> tuple[list[tuple[int, ...]], list[int]]:
    """Permutations in lexicographic order and a p making cDes* equivariant."""
    perms = list(permutations(range(1, n + 1)))
    return perms, stitch_orbits([cdes_star_sn(w).mask for w in perms], n)


def cellini_p_failures(n: int) -> list[tuple[int, ...]]:
    """Permutations w with cDes*(p w) != rotate(cDes*(w)) for Cellini's rotation p."""
    return [
        w
        for w in permutations(range(1, n + 1))
        if cdes_star_sn(cellini_p(w)).mask != rotate_mask(cdes_star_sn(w).mask, 1, n)
    ]


def check_prop_6_4(n: int) -> bool:
    """Fiber shift by (-1)^{#J}, extension and equivariance, unit extreme fibers, inner-product form."""
    if n % 2 or not 2 <= n <= 8:
        raise DomainError("need even n with 2 <= n <= 8")
    low = full_mask(n - 1)
    perms, p = sn_exceptional_p(n)
    cdes = [cdes_star_sn(w).mask for w in perms]
    if sorted(p) != list(range(len(perms))):
        return False
    for i, w in enumerate(perms):
        if cdes[i] & low != cellini_cdes_mask(w) & low:
            return False
        if cdes[p[i]] != rotate_mask(cdes[i], 1, n):
            return False
    star = np.bincount(np.array(cdes, dtype=np.int64), minlength=1 << n)
    signs = np.array([(-1) ** popcount(J) for J in range(1 << n)], dtype=np.int64)
    if not np.array_equal(star - sn_cdes_array(n), signs):
        return False
    if star[0] != 1 or star[full_mask(n)] != 1:
        return False
    f = skew_schur(strip_shape([1] * n)) - skew_schur(straight_shape([n]))
    inner = affine_ribbon_matrix(n) @ f.coeffs
    return bool(np.array_equal(star[1:], inner[1:]))


# --------------------------------------------------------------------------
# skew shapes


def exceptional_tables(shape: SkewShape) -> dict[int, np.ndarray]:
    """Fiber tables of exceptional extensions, keyed by the size e0 of the empty-set fiber.

    m*(J) = m(J) + (-1)^{#J} e0 for nonempty J, where m is the alternating
    formula in the Des fibers, and m*(empty) = e0.  A candidate survives if it
    is nonnegative, rotation invariant, splits every Des fiber and puts some
    tableau on the empty set or on [n].
    """
    n = shape.n
    D = des_fiber_array(shape)
    base = fiber_formula_from_des(n, D)
    signs = np.array([(-1) ** popcount(J) for J in range(1 << n)], dtype=np.int64)
    J = np.arange(1 << n, dtype=np.int64)
    rot = ((J << 1) | (J >> (n - 1))) & full_mask(n)
    half = 1 << (n - 1)
    out = {}
    for e0 in range(int(D[0]) + 1):
        m = base + signs * e0
        m[0] = e0
        if (m < 0).any() or not np.array_equal(m, m[rot]):
            continue
        if not np.array_equal(m[:half] + m[half:], D):
            continue
        if m[0] + m[full_mask(n)] == 0:
            continue
        out[e0] = m
    return out


def exceptional_feasibility(shape: SkewShape) -> list[int]:
    """Sizes e0 of the empty-set fiber for which an exceptional extension can exist."""
    return sorted(exceptional_tables(shape))


def exceptional_family(shape: SkewShape) -> Optional[str]:
    """'row', 'column' or 'singletons' when the shape lies in an exceptional family."""
    cells = shape.cells
    n = shape.n
    if len({r for r, _ in cells}) == 1 and len(shape.components) == 1:
        return "row"
    if len({c for _, c in cells}) == 1 and len(shape.components) == 1:
        return "column"
    if n % 2 == 0 and len(shape.components) == n:
        return "singletons"
    return None
