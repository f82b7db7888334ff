"""Descent generating functions and the polynomial identities they satisfy.

Multivariate descent polynomials have squarefree support, so they are held
as dense int64 arrays indexed by subset bitmask, exactly like fiber tables.
``IntPolynomial`` is the general sparse form used for univariate and
bivariate series and for output.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations
from math import comb, factorial
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .cyclic import NOT_EXTENDABLE_TEXT, fiber_table_formula, des_fiber_array
from .errors import DomainError, NotExtendable, ResourceLimitError
from .shapes import (
    Composition,
    SkewShape,
    classify_shape,
    format_shape,
    full_mask,
    hook_sum_shape,
    popcount,
    straight_shape,
    strip_shape,
)
from .symfunc import partitions, principal_spec, skew_schur
from .tableaux import count_ssyt, count_syt, enumerate_syt, strip_cdes

Monomial = tuple[int, ...]


class IntPolynomial:
    """Sparse polynomial with integer coefficients in named variables."""

    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Optional[Mapping[Monomial, int]] = None):
        self.names = tuple(names)
        k = len(self.names)
        clean: dict[Monomial, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != k or any(x < 0 for x in e):
                raise DomainError(f"bad exponent vector {e} for variables {self.names}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def constant(cls, names: Sequence[str], c: int) -> IntPolynomial:
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def var(cls, names: Sequence[str], name: str) -> IntPolynomial:
        e = [0] * len(names)
        e[list(names).index(name)] = 1
        return cls(names, {tuple(e): 1})

    @classmethod
    def univariate(cls, coeffs: Iterable[int], name: str = "t") -> IntPolynomial:
        return cls((name,), {(i,): c for i, c in enumerate(coeffs)})

    @classmethod
    def from_subsets(cls, n: int, coeffs: np.ndarray, prefix: str = "t") -> IntPolynomial:
        """The squarefree polynomial sum_J coeffs[J] t^J in t_1..t_n."""
        names = tuple(f"{prefix}{i}" for i in range(1, n + 1))
        return cls(
            names,
            {tuple((J >> i) & 1 for i in range(n)): int(c) for J, c in enumerate(coeffs) if c},
        )

    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            if other.names != self.names:
                raise DomainError(f"variable mismatch: {self.names} vs {other.names}")
            return other
        if isinstance(other, (int, np.integer)):
            return IntPolynomial.constant(self.names, int(other))
        return NotImplemented

    def __add__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(self.names, out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntPolynomial(self.names, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = IntPolynomial.constant(self.names, int(other))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def diff(self, name: str) -> IntPolynomial:
        i = self.names.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return IntPolynomial(self.names, out)

    def degree(self, name: str) -> int:
        i = self.names.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def reflect(self, name: str, d: int) -> IntPolynomial:
        """x^d f(1/x) in the variable ``name``; needs deg_x f <= d."""
        i = self.names.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] > d:
                raise DomainError(f"degree in {name} exceeds {d}")
            f = list(e)
            f[i] = d - e[i]
            out[tuple(f)] = c
        return IntPolynomial(self.names, out)

    def embed(self, names: Sequence[str]) -> IntPolynomial:
        """Same polynomial viewed in a larger variable list."""
        names = tuple(names)
        pos = [names.index(v) for v in self.names]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(names)
            for p, x in zip(pos, e):
                f[p] = x
            out[tuple(f)] = c
        return IntPolynomial(names, out)

    def coefficients(self, name: str = "t") -> list[int]:
        """Dense coefficient list of a univariate polynomial."""
        if self.names != (name,):
            raise DomainError(f"not univariate in {name}")
        d = self.degree(name)
        out = [0] * (d + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    def nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), tuple(-x for x in ec[0])))

    def to_json(self) -> list[dict]:
        return [
            {"monomial": {v: x for v, x in zip(self.names, e) if x}, "coefficient": c}
            for e, c in self.sorted_terms()
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.names, e) if x
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"IntPolynomial({self.names}, {str(self)!r})"


# --------------------------------------------------------------------------
# univariate helpers on coefficient lists


def _mul(a: Sequence[int], b: Sequence[int], upto: Optional[int] = None) -> list[int]:
    size = len(a) + len(b) - 1
    if upto is not None:
        size = min(size, upto + 1)
    out = [0] * max(size, 0)
    for i, x in enumerate(a):
        if not x or i >= size:
            continue
        for j, y in enumerate(b[: size - i]):
            out[i + j] += x * y
    return out


def _deriv(a: Sequence[int]) -> list[int]:
    return [k * a[k] for k in range(1, len(a))] or [0]


def _pad(a: Sequence[int], length: int) -> list[int]:
    a = list(a)[:length]
    return a + [0] * (length - len(a))


def _one_minus_t_pow(e: int) -> list[int]:
    return [(-1) ** k * comb(e, k) for k in range(e + 1)]


def _inv_one_minus_t_pow(e: int, upto: int) -> list[int]:
    return [comb(e - 1 + k, k) for k in range(upto + 1)]


def _by_size(n: int, coeffs: np.ndarray) -> list[int]:
    """Collapse a subset polynomial to t^{#J}, coefficients for degrees 0..n."""
    sizes = np.array([popcount(J) for J in range(len(coeffs))], dtype=np.int64)
    return [int(coeffs[sizes == k].sum()) for k in range(n + 1)]


# --------------------------------------------------------------------------
# tableau generating functions


def des_poly(shape: SkewShape) -> IntPolynomial:
    """sum over SYT of t^des."""
    n = shape.n
    D = des_fiber_array(shape)
    return IntPolynomial.univariate(_by_size(n - 1, D), "t")


def _require_extendable(shape: SkewShape):
    if classify_shape(shape).kind == "connected_ribbon":
        raise NotExtendable(NOT_EXTENDABLE_TEXT.format(shape=format_shape(shape)))


def cdes_poly(shape: SkewShape) -> IntPolynomial:
    """sum over SYT of t^cdes; defined when the shape is not a connected ribbon."""
    _require_extendable(shape)
    table = fiber_table_formula(shape)
    return IntPolynomial.univariate(_by_size(shape.n, table.m), "t")


def check_lemma_2_5(shape: SkewShape) -> bool:
    """n T^des = n T^cdes + (1 - t) d/dt T^cdes."""
    n = shape.n
    tdes = des_poly(shape)
    tcdes = cdes_poly(shape)
    t = IntPolynomial.var(("t",), "t")
    return n * tdes == n * tcdes + (1 - t) * tcdes.diff("t")


def check_series_identities(shape: SkewShape, truncation: Optional[int] = None) -> bool:
    """Truncated forms of the des and cdes series identities.

    des:  (1 - t)^{n+1} sum_m s(1^{m+1}) t^m  equals T^des.
    cdes: d/dt [T^cdes / (1 - t)^n]  equals  n sum_m s(1^{m+1}) t^m.
    Both products are exact through degree M, so all those degrees are compared.
    """
    n = shape.n
    M = 2 * n + 4 if truncation is None else truncation
    if M < 2 * n + 2:
        raise DomainError(f"truncation must be >= 2n + 2 = {2 * n + 2}")
    f = skew_schur(shape)
    values = [principal_spec(f, m + 1) for m in range(M + 1)]
    lhs = _mul(_one_minus_t_pow(n + 1), values, upto=M)
    ok = _pad(lhs, M + 1) == _pad(des_poly(shape).coefficients(), M + 1)
    if classify_shape(shape).kind == "connected_ribbon":
        return ok
    series = _mul(cdes_poly(shape).coefficients(), _inv_one_minus_t_pow(n, M + 1), upto=M + 1)
    left = _pad(_deriv(_pad(series, M + 2)), M + 1)
    return ok and left == [n * s for s in values]


def carlitz_des(n: int, truncation: Optional[int] = None) -> bool:
    """(1 - t)^{n+1} sum_m (m + 1)^n t^m equals the Eulerian polynomial."""
    M = 2 * n + 4 if truncation is None else truncation
    lhs = _mul(_one_minus_t_pow(n + 1), [(m + 1) ** n for m in range(M + 1)], upto=M)
    return _pad(lhs, M + 1) == _pad(_by_size(n - 1, sn_des_array(n)), M + 1)


def carlitz_cdes(n: int, truncation: Optional[int] = None) -> bool:
    """n (1 - t)^n sum_{m>=1} m^{n-1} t^m equals the cdes polynomial of S_n and n t S_{n-1}^des."""
    if n < 2:
        raise DomainError("need n >= 2")
    M = 2 * n + 4 if truncation is None else truncation
    lhs = _mul(_one_minus_t_pow(n), [0] + [n * m ** (n - 1) for m in range(1, M + 1)], upto=M)
    cdes = _pad(_by_size(n, sn_cdes_array(n)), M + 1)
    shifted = _pad([0] + [n * c for c in _by_size(n - 2, sn_des_array(n - 1))], M + 1)
    return _pad(lhs, M + 1) == cdes == shifted


# --------------------------------------------------------------------------
# the symmetric group


def cellini_cdes_mask(w: Sequence[int]) -> int:
    """Bitmask of {i in [n] : w_i > w_{i+1}} with w_{n+1} = w_1."""
    n = len(w)
    mask = 0
    for i in range(n):
        if w[i] > w[(i + 1) % n]:
            mask |= 1 << i
    return mask


def cellini_p(w: Sequence[int]) -> tuple[int, ...]:
    """[w_n, w_1, ..., w_{n-1}]."""
    return (w[-1],) + tuple(w[:-1])


SN_MAX = 10


@cache
def _perm_array(n: int) -> np.ndarray:
    if not 1 <= n <= SN_MAX:
        raise ResourceLimitError(f"symmetric group enumeration needs 1 <= n <= {SN_MAX}")
    arr = np.array(list(permutations(range(1, n + 1))), dtype=np.int8).reshape(factorial(n), n)
    arr.flags.writeable = False
    return arr


def _cdes_masks(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[1]
    nxt = np.roll(arr, -1, axis=1)
    bits = (arr > nxt).astype(np.int64)
    return bits @ (1 << np.arange(n, dtype=np.int64))


@cache
def sn_cdes_array(n: int) -> np.ndarray:
    """Cellini cDes distribution on S_n, indexed by subset mask of [n]."""
    out = np.bincount(_cdes_masks(_perm_array(n)), minlength=1 << n).astype(np.int64)
    out.flags.writeable = False
    return out


@cache
def sn_des_array(n: int) -> np.ndarray:
    """Des distribution on S_n, indexed by subset mask of [n - 1]."""
    if n == 1:
        return np.array([1], dtype=np.int64)
    out = fold_top(sn_cdes_array(n), n)
    out.flags.writeable = False
    return out


def sn_multivariate(n: int) -> tuple[IntPolynomial, IntPolynomial]:
    """(S_n^Des in t_1..t_{n-1}, S_n^cDes in t_1..t_n) by direct enumeration."""
    if not 2 <= n <= SN_MAX:
        raise DomainError(f"need 2 <= n <= {SN_MAX}")
    return (
        IntPolynomial.from_subsets(n - 1, sn_des_array(n)),
        IntPolynomial.from_subsets(n, sn_cdes_array(n)),
    )


# subset-polynomial operations


def fold_top(coeffs: np.ndarray, n: int) -> np.ndarray:
    """Set t_n = 1: a polynomial on [n] becomes one on [n - 1]."""
    half = 1 << (n - 1)
    return coeffs[:half] + coeffs[half:]


def drop_top(coeffs: np.ndarray, n: int) -> np.ndarray:
    """Set t_n = 0."""
    return coeffs[: 1 << (n - 1)].copy()


def rotate_poly(coeffs: np.ndarray, n: int, k: int = 1) -> np.ndarray:
    """Apply c^k, t_i -> t_{i+k mod n}."""
    k %= n
    J = np.arange(1 << n, dtype=np.int64)
    img = ((J << k) | (J >> (n - k))) & full_mask(n) if k else J
    out = np.zeros_like(coeffs)
    out[img] = coeffs
    return out


def lift(coeffs: np.ndarray, n: int) -> np.ndarray:
    """View a polynomial on [m], m <= n, as one on [n]."""
    out = np.zeros(1 << n, dtype=np.int64)
    out[: len(coeffs)] = coeffs
    return out


def times_var(coeffs: np.ndarray, n: int, i: int) -> np.ndarray:
    """Multiply by t_i; the support must avoid i."""
    bit = 1 << (i - 1)
    J = np.arange(1 << n, dtype=np.int64)
    if np.any(coeffs[(J & bit) != 0]):
        raise DomainError(f"t_{i} already present")
    out = np.zeros_like(coeffs)
    free = J[(J & bit) == 0]
    out[free | bit] = coeffs[free]
    return out


def complement_poly(coeffs: np.ndarray, n: int) -> np.ndarray:
    """t^{[n]} f(t^{-1}) for squarefree f."""
    return coeffs[::-1].copy()


def check_specialization(n: int) -> bool:
    """[S_n^cDes]_{t_n = 1} = S_n^Des."""
    return bool(np.array_equal(fold_top(sn_cdes_array(n), n), sn_des_array(n)))


def check_prop_5_2(n: int) -> bool:
    """S_n^cDes = sum_i c^i(t_n S_{n-1}^Des) = g + t^{[n]} g(t^{-1}) with g = [S_n^cDes]_{t_n=0}."""
    if not 2 <= n <= 9:
        raise DomainError("need 2 <= n <= 9")
    S = sn_cdes_array(n)
    base = times_var(lift(sn_des_array(n - 1), n), n, n)
    total = sum(rotate_poly(base, n, i) for i in range(1, n + 1))
    g = lift(drop_top(S, n), n)
    via_g = g + complement_poly(g, n)
    # g also equals sum_{i<n} t_i [c^i S_{n-1}^Des]_{t_n=0}
    prev = lift(sn_des_array(n - 1), n)
    g2 = np.zeros(1 << n, dtype=np.int64)
    for i in range(1, n):
        r = rotate_poly(prev, n, i)
        r[(np.arange(1 << n) >> (n - 1)) & 1 == 1] = 0
        g2 += times_var(r, n, i)
    return bool(np.array_equal(S, total) and np.array_equal(S, via_g) and np.array_equal(g, g2))


def check_des_recurrence(n: int) -> bool:
    """S_n^Des = [sum_i t_i c^i S_{n-1}^Des]_{t_n = 1}."""
    if not 2 <= n <= 9:
        raise DomainError("need 2 <= n <= 9")
    prev = lift(sn_des_array(n - 1), n)
    total = sum(times_var(rotate_poly(prev, n, i), n, i) for i in range(1, n + 1))
    return bool(np.array_equal(fold_top(total, n), sn_des_array(n)))


TU = ("t", "u")


def _bivariate(n: int, coeffs: np.ndarray) -> IntPolynomial:
    top = 1 << (n - 1)
    terms: dict[Monomial, int] = {}
    for J, c in enumerate(coeffs):
        if c:
            e = (popcount(J & (top - 1)), 1 if J & top else 0)
            terms[e] = terms.get(e, 0) + int(c)
    return IntPolynomial(TU, terms)


def sn_cdes_bivariate(n: int) -> IntPolynomial:
    """sum over S_n of t^des u^{cdes - des}; u for n = 1."""
    if n == 1:
        return IntPolynomial.var(TU, "u")
    return _bivariate(n, sn_cdes_array(n))


def sn_des_univariate(n: int) -> IntPolynomial:
    if n == 0:
        return IntPolynomial.constant(("t",), 1)
    return IntPolynomial.univariate(_by_size(n - 1, sn_des_array(n)), "t")


def check_prop_5_3(n: int) -> bool:
    """Both closed forms of the bivariate cdes polynomial in terms of S_{n-1}^des."""
    if not 2 <= n <= 9:
        raise DomainError("need 2 <= n <= 9")
    t = IntPolynomial.var(TU, "t")
    u = IntPolynomial.var(TU, "u")
    prev = sn_des_univariate(n - 1).embed(TU)
    f = (t * prev).diff("t")
    first = f.reflect("t", n - 1) + u * f
    second = n * t * prev + (u - t) * (t * prev).diff("t")
    S = sn_cdes_bivariate(n)
    return S == first == second


def egf_cdes_coefficients(max_n: int) -> list[IntPolynomial]:
    """n! [x^n] F^cdes for n = 1..max_n, by enumeration."""
    return [sn_cdes_bivariate(n) for n in range(1, max_n + 1)]


def check_theorem_2(n: int) -> bool:
    """Cellini cDes on S_n against the non-hook and hook-sum fiber tables."""
    if n < 2:
        raise DomainError("need n >= 2")
    return bool(np.array_equal(sn_cdes_array(n), theorem_2_rhs(n)))


def theorem_2_rhs(n: int) -> np.ndarray:
    rhs = np.zeros(1 << n, dtype=np.int64)
    for lam in partitions(n):
        if not lam.is_hook():
            shape = straight_shape(lam)
            rhs += count_syt(shape) * fiber_table_formula(shape).m
    for k in range(1, n):
        rhs += comb(n - 2, k - 1) * fiber_table_formula(hook_sum_shape(k, n)).m
    return rhs


def strip_cdes_array(alpha: Sequence[int]) -> np.ndarray:
    shape = strip_shape(alpha)
    n = shape.n
    masks = np.array([strip_cdes(T).mask for T in enumerate_syt(shape)], dtype=np.int64)
    return np.bincount(masks, minlength=1 << n).astype(np.int64)


def check_theorem_5_3(alpha: Sequence[int]) -> bool:
    """Strip cDes on alpha^+ against Kostka-weighted fiber tables."""
    alpha = Composition(alpha)
    m = len(alpha)
    if m < 2:
        raise DomainError("need a composition with at least two parts")
    n = alpha.n
    rhs = np.zeros(1 << n, dtype=np.int64)
    for lam in partitions(n):
        if not lam.is_hook():
            shape = straight_shape(lam)
            K = count_ssyt(shape, m, content=alpha)
            if K:
                rhs += K * fiber_table_formula(shape).m
    for k in range(1, m):
        rhs += comb(m - 2, k - 1) * fiber_table_formula(hook_sum_shape(k, n)).m
    return bool(np.array_equal(strip_cdes_array(alpha), rhs))
