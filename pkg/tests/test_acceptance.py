"""Acceptance criteria 1-12, run at exact equality.

Each test records one "criterion N: PASS/FAIL" line, shown in the pytest
terminal summary.  Running this file as a script prints the same lines.
"""

import time
from functools import cache
from itertools import product

import numpy as np

from cyclic_descents.cyclic import (
    build_extension,
    complement_symmetric,
    des_fiber_array,
    fiber_table_formula,
    fiber_table_inner,
    validate_extension,
)
from cyclic_descents.errors import NotExtendable
from cyclic_descents.exceptional import (
    check_prop_6_4,
    check_words_identity,
    exceptional_family,
    exceptional_feasibility,
    sn_cdes_star_array,
)
from cyclic_descents.gens import (
    TU,
    IntPolynomial,
    carlitz_cdes,
    carlitz_des,
    check_des_recurrence,
    check_lemma_2_5,
    check_prop_5_2,
    check_prop_5_3,
    check_specialization,
    check_theorem_2,
    check_theorem_5_3,
    sn_cdes_array,
    sn_cdes_bivariate,
)
from cyclic_descents.shapes import (
    MAX_N,
    all_skew_shapes,
    classify_shape,
    full_mask,
    hook_sum_shape,
    mask_of,
    popcount,
    rotate_mask,
    rotation_orbit,
    straight_shape,
)
from cyclic_descents.symfunc import (
    affine_ribbon_matrix,
    hall_inner,
    hook,
    hook_mults,
    partitions,
    power_sum_hooks,
    ribbon_schur,
    skew_schur,
    sum_of_hooks_identity,
)
from cyclic_descents.tableaux import count_ssyt, cylindric_weight_enumerator, enumerate_syt, promotion

from conftest import ACCEPTANCE_LINES
from oracles import lr_skew_schur


def record(number, title, failures, start):
    ok = not failures
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({time.perf_counter() - start:.1f} s)"
    if not ok:
        line += f"  first failure: {failures[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def shapes_upto(n):
    for k in range(1, n + 1):
        yield from all_skew_shapes(k)


def is_ribbon(s):
    return classify_shape(s).kind == "connected_ribbon"


STAIRCASE_ONCE = [
    {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
    {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6},
]


def test_criterion_01_staircase_table():
    start = time.perf_counter()
    expected = {mask_of(J): 1 for J in STAIRCASE_ONCE}
    expected[mask_of({1, 3, 5})] = 2
    expected[mask_of({2, 4, 6})] = 2
    table = fiber_table_formula(straight_shape([3, 2, 1]))
    got = {J: int(c) for J, c in enumerate(table.m) if c}
    failures = [] if got == expected else [f"got {got}"]
    record(1, "fiber table of the 3,2,1 staircase", failures, start)


def test_criterion_02_routes_agree():
    start = time.perf_counter()
    failures, count = [], 0
    for s in shapes_upto(7):
        if is_ribbon(s):
            continue
        count += 1
        if fiber_table_formula(s) != fiber_table_inner(s):
            failures.append(str(s))
    record(2, f"formula and inner-product tables agree on {count} shapes, n <= 7", failures, start)


def test_criterion_03_existence_gate():
    start = time.perf_counter()
    failures, built, refused = [], 0, 0
    for s in shapes_upto(7):
        if is_ribbon(s):
            try:
                build_extension(s)
                failures.append(f"{s} extended")
            except NotExtendable:
                refused += 1
            continue
        ext = build_extension(s)
        rep = validate_extension(ext)
        if not rep.ok or not np.array_equal(ext.fiber_counts(), fiber_table_formula(s).m):
            failures.append(f"{s}: {rep}")
        built += 1
    record(3, f"{built} extensions validated, {refused} ribbons refused, n <= 7", failures, start)


def test_criterion_04_nonnegativity():
    start = time.perf_counter()
    failures, count = [], 0
    for n in range(1, 9):
        A = affine_ribbon_matrix(n)
        for i, nu in enumerate(partitions(n)):
            if nu.is_hook():
                continue
            col = A[1:, i]
            count += col.size
            if (col < 0).any():
                failures.append(f"n={n} nu={nu}")
    record(4, f"affine ribbon pairings with non-hooks nonnegative ({count} pairs)", failures, start)


def test_criterion_05_symmetry_and_hook_pairings():
    start = time.perf_counter()
    failures = []
    shapes = 0
    for s in shapes_upto(8):
        if is_ribbon(s):
            continue
        shapes += 1
        if not complement_symmetric(fiber_table_inner(s)):
            failures.append(f"complement symmetry fails on {s}")
    for n in range(1, 9):
        A = affine_ribbon_matrix(n)
        idx = {lam: i for i, lam in enumerate(partitions(n))}
        direct = [None] + [affine_ribbon_matrix(n) @ skew_schur(hook_sum_shape(k, n)).coeffs for k in range(1, n)]
        for J in range(1, 1 << n):
            t = popcount(J)
            for k in range(n):
                want = (-1) ** (t - 1 - k) if k < t else 0
                if A[J, idx[hook(n, k)]] != want:
                    failures.append(f"hook pairing n={n} J={J} k={k}")
            for k in range(1, n):
                if direct[k][J] != int(k == t):
                    failures.append(f"direct-sum pairing n={n} J={J} k={k}")
            if A[J, idx[hook(n, n - 1)]] != int(t == n):
                failures.append(f"column pairing n={n} J={J}")
    record(5, f"complement symmetry on {shapes} shapes and hook pairings, n <= 8", failures, start)


@cache
def kostka(nu, mu):
    return count_ssyt(straight_shape(nu), len(mu), mu)


def test_criterion_06_cylindric_enumerator():
    start = time.perf_counter()
    failures, checked = [], 0
    for n in range(1, 8):
        A = affine_ribbon_matrix(n)
        parts = partitions(n)
        pn = power_sum_hooks(n).coeffs
        contents = [c for c in product(range(n + 1), repeat=n) if sum(c) == n]
        for J in range(1, 1 << n):
            target = A[J] + (-1) ** popcount(J) * pn
            counts = cylindric_weight_enumerator(n, J, n)
            for c in contents:
                mu = tuple(sorted((x for x in c if x), reverse=True))
                want = sum(int(target[i]) * kostka(nu, mu) for i, nu in enumerate(parts) if target[i])
                if counts.get(c, 0) != want:
                    failures.append(f"n={n} J={J} content={c}: {counts.get(c, 0)} vs {want}")
            checked += 1
            t = popcount(J)
            initial = any(rotate_mask(full_mask(t), k, n) == J for k in range(n))
            empty = not cylindric_weight_enumerator(n, J, t)
            if empty != initial:
                failures.append(f"n={n} J={J}: vanishing at {t} letters is {empty}")
    record(6, f"cylindric weight enumerators in monomials for {checked} subsets, n <= 7", failures, start)


def test_criterion_07_hook_coefficients():
    start = time.perf_counter()
    failures, count = [], 0
    for s in shapes_upto(7):
        if classify_shape(s).kind == "other":
            continue
        count += 1
        f = skew_schur(s)
        mults = hook_mults(s)
        if any(mults[k] != f[hook(s.n, k)] for k in range(s.n)):
            failures.append(str(s))
    for n in range(2, 10):
        for k in range(1, n):
            if not sum_of_hooks_identity(n, k):
                failures.append(f"two-hook identity n={n} k={k}")
    record(7, f"hook coefficients on {count} generalized ribbons and two-hook identity, n <= 9", failures, start)


def compositions(n):
    for cuts in product((0, 1), repeat=n - 1):
        out, run = [], 1
        for c in cuts:
            if c:
                out.append(run)
                run = 1
            else:
                run += 1
        out.append(run)
        yield tuple(out)


def test_criterion_08_permutations_and_strips():
    start = time.perf_counter()
    failures = [f"permutations n={n}" for n in (4, 5, 6) if not check_theorem_2(n)]
    count = 0
    for n in range(2, 8):
        for alpha in compositions(n):
            if len(alpha) >= 2:
                count += 1
                if not check_theorem_5_3(alpha):
                    failures.append(f"strip {alpha}")
    record(8, f"symmetric group identity n = 4, 5, 6 and {count} strip compositions", failures, start)


def bivariate(terms):
    return IntPolynomial(TU, terms)


def test_criterion_09_generating_functions():
    start = time.perf_counter()
    failures = []
    for s in shapes_upto(6):
        if not is_ribbon(s) and not check_lemma_2_5(s):
            failures.append(f"des/cdes relation {s}")
    for n in range(2, 9):
        if not (carlitz_des(n) and carlitz_cdes(n)):
            failures.append(f"Carlitz n={n}")
    for n in range(2, 10):
        if not (check_specialization(n) and check_prop_5_2(n) and check_des_recurrence(n)):
            failures.append(f"multivariate n={n}")
        if not check_prop_5_3(n):
            failures.append(f"bivariate n={n}")
    n4 = bivariate({(1, 0): 3, (2, 0): 8, (3, 0): 1, (0, 1): 1, (1, 1): 8, (2, 1): 3})
    n5 = bivariate(
        {(1, 0): 4, (2, 0): 33, (3, 0): 22, (4, 0): 1, (0, 1): 1, (1, 1): 22, (2, 1): 33, (3, 1): 4}
    )
    low = {
        1: bivariate({(0, 1): 1}),
        2: bivariate({(1, 0): 1, (0, 1): 1}),
        3: bivariate({(1, 0): 2, (2, 0): 1, (0, 1): 1, (1, 1): 2}),
        4: n4,
        5: n5,
    }
    for n, want in low.items():
        if sn_cdes_bivariate(n) != want:
            failures.append(f"EGF coefficient n={n}: {sn_cdes_bivariate(n)}")
    record(9, "generating function identities and displayed EGF coefficients", failures, start)


def test_criterion_10_exceptional():
    start = time.perf_counter()
    failures, pairs = [], 0
    for n in range(2, MAX_N + 1):
        m = 1
        while m**n <= 10**6:
            pairs += 1
            if not check_words_identity(m, n):
                failures.append(f"words m={m} n={n}")
            m += 1
    for n in (2, 4, 6):
        if not check_prop_6_4(n):
            failures.append(f"even symmetric group n={n}")
        diff = sn_cdes_star_array(n) - sn_cdes_array(n)
        if any(diff[J] != (-1) ** popcount(J) for J in range(1 << n)):
            failures.append(f"product difference n={n}")
    shapes = 0
    for s in shapes_upto(7):
        shapes += 1
        want = [0, 1] if s.n == 1 else {"row": [1], "singletons": [1], "column": [0]}.get(exceptional_family(s), [])
        if exceptional_feasibility(s) != want:
            failures.append(f"feasibility {s}")
    record(10, f"words identity on {pairs} pairs, even S_n, classification on {shapes} shapes", failures, start)


def test_criterion_11_oracles():
    start = time.perf_counter()
    failures, lr, gessel = [], 0, 0
    for s in shapes_upto(6):
        lr += 1
        if skew_schur(s) != lr_skew_schur(s):
            failures.append(f"LR {s}")
    for s in shapes_upto(7):
        gessel += 1
        D = des_fiber_array(s)
        f = skew_schur(s)
        if any(D[J] != hall_inner(f, ribbon_schur(s.n, J)) for J in range(1 << (s.n - 1))):
            failures.append(f"descent fibers {s}")
    record(11, f"LR oracle on {lr} shapes, descent fibers on {gessel} shapes", failures, start)


def test_criterion_12_promotion():
    start = time.perf_counter()
    failures = []
    for a, b in [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)]:
        shape = straight_shape([b] * a)
        n = a * b
        tabs = enumerate_syt(shape)
        index = {T: i for i, T in enumerate(tabs)}
        pr = [index[promotion(T)] for T in tabs]
        top = 1 << (n - 1)
        # n is a cyclic descent of T when 1 is a descent of pr(T)
        cdes = [T.des_mask | (top if tabs[pr[i]].des_mask & 1 else 0) for i, T in enumerate(tabs)]
        for i in range(len(tabs)):
            j = i
            for _ in range(n):
                j = pr[j]
            if j != i:
                failures.append(f"{a}x{b}: promotion^n moves tableau {i}")
            if cdes[pr[i]] != rotate_mask(cdes[i], 1, n):
                failures.append(f"{a}x{b}: promotion not equivariant at {i}")
            if cdes[i] in (0, full_mask(n)):
                failures.append(f"{a}x{b}: Escher value at {i}")
        counts = np.bincount(np.array(cdes), minlength=1 << n)
        if not np.array_equal(counts, fiber_table_formula(shape).m):
            failures.append(f"{a}x{b}: fibers differ from the table")
        seen = set()
        for i in range(len(tabs)):
            if i in seen:
                continue
            orbit, j = [], i
            while j not in seen:
                seen.add(j)
                orbit.append(j)
                j = pr[j]
            if len(orbit) % len(rotation_orbit(cdes[i], n)):
                failures.append(f"{a}x{b}: orbit of length {len(orbit)} over cdes rotation class")
    record(12, "rectangle promotion against fiber-table rotation orbits", failures, start)


if __name__ == "__main__":
    import subprocess
    import sys

    # a fresh interpreter, so pytest can rewrite asserts in modules imported above
    sys.exit(subprocess.call([sys.executable, "-m", "pytest", __file__, "-q", "-p", "no:cacheprovider"]))
