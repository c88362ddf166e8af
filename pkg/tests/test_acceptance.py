"""Acceptance criteria, one test each.

A PASS/FAIL line per criterion is printed in the terminal summary (and
inline with ``-s``).
"""

import time
from fractions import Fraction as F

import numpy as np
import pytest

from generators import (
    centrosymmetric,
    worked_example,
    planted_zero_minor,
    random_int_matrix,
    rng,
    zero_offdiagonal,
)
from tridkit import (
    BreakdownEncountered,
    SignedOffdiagonals,
    SingularMatrixError,
    TridiagonalMatrix,
    determinant,
    hadamard_factors,
    hadamard_recombine,
    inverse_entry,
    inverse_entry_kumar,
    invert,
    invert_huang,
    minor_tables,
    zero_structure,
)
from tridkit.bench import count_flops, random_dominant
from tridkit.oracle import dense_determinant, dense_inverse, identity, to_dense

SYM4_INVERSE = [[F(x, 576) for x in row] for row in
               [[36, 36, 36, 36], [36, 100, 100, 100], [36, 100, 244, 244], [36, 100, 244, 820]]]

ZERO_G4_INVERSE = [
    [F(3, 2), F(1, 2), 0, F(-1, 2), F(-1, 2)],
    [F(1, 2), F(1, 2), 0, F(-1, 2), F(-1, 2)],
    [0, 0, 0, -1, -1],
    [F(-1, 2), F(-1, 2), -1, F(-1, 2), F(-1, 2)],
    [F(-1, 2), F(-1, 2), -1, F(-1, 2), F(1, 2)],
]


def report(number, ok, detail=""):
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}{': ' + detail if detail else ''}")
    assert ok, detail


def timed(fn, reps=1):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


@pytest.mark.criterion(1, "singular 4x4 example: det 0, inv SINGULAR, < 1 ms")
def test_criterion1_singular_example():
    A = worked_example("singular4")
    det = determinant(A)
    with pytest.raises(SingularMatrixError):
        invert(A)

    def both():
        determinant(A)
        try:
            invert(A)
        except SingularMatrixError:
            pass

    elapsed = timed(both, reps=20)
    ok = det == 0 and type(det) is F and elapsed < 1e-3
    report(1, ok, f"det={det}, best runtime {elapsed * 1e3:.3f} ms")


@pytest.mark.criterion(2, "symmetric 4x4 example: minors, det 576, exact inverse")
def test_criterion2_minor_tables_and_inverse():
    A = worked_example("sym4")
    t = minor_tables(A)
    inv = invert(A)
    ok = (
        list(t.f) == [1, 25, 244, 820, 576]
        and list(t.g) == [576, 36, 4, 1, 1]
        and t.det == 576
        and inv.delta == 576
        and inv.alpha.tolist() == SYM4_INVERSE
    )
    report(2, ok, f"f={list(map(str, t.f))}, g={list(map(str, t.g))}")


@pytest.mark.criterion(3, "vanishing trailing minor: g table, exact inverse, zero structure")
def test_criterion3_breakdown_example():
    A = worked_example("zero_g4")
    t = minor_tables(A)
    inv = invert(A)
    oracle = dense_inverse(to_dense(A))
    mask = zero_structure(A, t)
    expected_zeros = np.array([[x == 0 for x in row] for row in ZERO_G4_INVERSE])
    ok = (
        list(t.g) == [-2, -3, -1, 0, 1, 1]
        and t.g_switch > 1
        and inv.alpha.tolist() == ZERO_G4_INVERSE
        and oracle.tolist() == ZERO_G4_INVERSE
        and np.array_equal(mask, expected_zeros)
    )
    report(3, ok, f"g={list(map(str, t.g))}, predicted zeros={int(mask.sum())}")


@pytest.mark.criterion(4, "closed-form inverses for n = 2..25")
def test_criterion4_closed_forms():
    bad = []
    for n in range(2, 26):
        alpha = invert(worked_example("max_ij", n=n)).alpha
        if alpha.tolist() != [[max(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]:
            bad.append(("max(i,j)", n))
        alpha = invert(worked_example("second_diff", n=n)).alpha
        want = [[F(min(i, j) * (n + 1 - max(i, j)), n + 1) for j in range(1, n + 1)]
                for i in range(1, n + 1)]
        if alpha.tolist() != want:
            bad.append(("second difference", n))
    report(4, not bad, f"mismatches {bad}" if bad else "48 inverses exact")


def _check_instance(A, stats):
    """Exact cross-checks on one rational matrix; returns a list of failures."""
    fails = []
    n = A.n
    t = minor_tables(A)
    M = to_dense(A)
    if determinant(A) != dense_determinant(M):
        fails.append("det vs fraction-free elimination")
    if t.f[n] != t.gi(1):
        fails.append("f_n != g_1")
    f, gi, d = t.f, t.gi, A.d
    for k in range(1, n + 1):
        if f[k] * gi(k + 1) - d[k - 1] * f[k - 1] * gi(k + 1) + f[k - 1] * gi(k) != f[n]:
            fails.append(f"minor identity at k={k}")
            break
    if t.det == 0:
        stats["singular"] += 1
        try:
            invert(A)
            fails.append("invert accepted a singular matrix")
        except SingularMatrixError:
            pass
        return fails
    alpha = invert(A).alpha
    if alpha.tolist() != dense_inverse(M).tolist():
        fails.append("invert vs Gauss-Jordan")
    off = SignedOffdiagonals.from_matrix(A)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if inverse_entry(t, off, t.det, i, j) != alpha[i - 1, j - 1]:
                fails.append(f"single-entry formula at ({i},{j})")
            if inverse_entry_kumar(t, off, t.det, i, j) != alpha[i - 1, j - 1]:
                fails.append(f"delta-sum formula at ({i},{j})")
    if hadamard_recombine(hadamard_factors(A)).alpha.tolist() != alpha.tolist():
        fails.append("Hadamard factors")
    try:
        pivot_ratio = invert_huang(A).alpha
    except BreakdownEncountered:
        stats["pivot_ratio_skipped"] += 1
    else:
        stats["pivot_ratio_checked"] += 1
        if pivot_ratio.tolist() != alpha.tolist():
            fails.append("pivot-ratio formula")
    return fails


@pytest.mark.criterion(5, "random rational property suite, >= 1000 matrices, < 60 s")
def test_criterion5_property_suite():
    r = rng(2024)
    stats = {"random": 0, "planted": 0, "zero_off": 0, "centro": 0,
             "singular": 0, "pivot_ratio_checked": 0, "pivot_ratio_skipped": 0}
    failures = []
    t0 = time.perf_counter()
    cases = []
    for _ in range(700):
        cases.append(("random", random_int_matrix(r, r.randint(1, 12))))
    for _ in range(150):
        A, k = planted_zero_minor(r, r.randint(2, 12))
        assert minor_tables(A).f[k] == 0
        cases.append(("planted", A))
    for _ in range(150):
        cases.append(("zero_off", zero_offdiagonal(r, r.randint(2, 12))))
    for _ in range(100):
        cases.append(("centro", centrosymmetric(r, r.randint(1, 12))))
    for kind, A in cases:
        stats[kind] += 1
        for msg in _check_instance(A, stats):
            failures.append((kind, A, msg))
        if kind == "centro":
            t = minor_tables(A)
            if any(t.f[i] != t.gi(A.n + 1 - i) for i in range(A.n + 1)):
                failures.append((kind, A, "centrosymmetric minor symmetry"))
    elapsed = time.perf_counter() - t0
    ok = (not failures and len(cases) >= 1000 and stats["planted"] >= 100
          and stats["zero_off"] >= 100 and elapsed < 60)
    first = f", first failure {failures[0][2]}" if failures else ""
    report(5, ok, f"{len(cases)} matrices, {stats}, {elapsed:.1f} s{first}")


@pytest.mark.criterion(6, "zero pivots in both directions: invert succeeds, pivot-ratio form raises")
def test_criterion6_breakdown_free():
    details = []
    ok = True
    for name, which in (("zero_c2", "c"), ("zero_e2", "e")):
        A = worked_example(name)
        alpha = invert(A).alpha
        ok &= alpha.tolist() == dense_inverse(to_dense(A)).tolist()
        try:
            invert_huang(A)
            ok = False
            details.append(f"{name}: no breakdown")
        except BreakdownEncountered as exc:
            ok &= exc.which == which and exc.index == 2
            details.append(f"{name}: breakdown {exc.which}_{exc.index}")
    report(6, ok, ", ".join(details))


@pytest.mark.criterion(7, "double accuracy, 100 dominant matrices at n = 500, < 30 s")
def test_criterion7_float_accuracy():
    gen = np.random.default_rng(7)
    worst = 0.0
    t0 = time.perf_counter()
    eye = np.eye(500)
    for _ in range(100):
        A = random_dominant(500, gen)
        M = to_dense(A)
        worst = max(worst, float(np.max(np.abs(M @ invert(A).alpha - eye))))
    elapsed = time.perf_counter() - t0
    report(7, worst <= 1e-8 and elapsed < 30, f"max|A alpha - I| = {worst:.2e}, {elapsed:.1f} s")


@pytest.mark.criterion(8, "flop ratios: det 2x, invert 4x (n 256..1024), dense 8x (128..256), < 120 s")
def test_criterion8_complexity():
    t0 = time.perf_counter()
    mats = {n: random_dominant(n, np.random.default_rng([0, n]), mode="scaled") for n in (128, 256, 512, 1024)}
    det = {n: count_flops("determinant", mats[n]) for n in (256, 512, 1024)}
    inv = {n: count_flops("invert", mats[n]) for n in (256, 512, 1024)}
    dense = {n: count_flops("dense_inverse", mats[n]) for n in (128, 256)}
    elapsed = time.perf_counter() - t0
    ratios = {
        "det": [det[512] / det[256], det[1024] / det[512]],
        "inv": [inv[512] / inv[256], inv[1024] / inv[512]],
        "dense": [dense[256] / dense[128]],
    }
    ok = (all(abs(x - 2) <= 0.2 for x in ratios["det"])
          and all(abs(x - 4) <= 0.4 for x in ratios["inv"])
          and abs(ratios["dense"][0] - 8) <= 1.2
          and elapsed < 120)
    shown = {k: [round(x, 3) for x in v] for k, v in ratios.items()}
    report(8, ok, f"ratios {shown}, {elapsed:.1f} s")
