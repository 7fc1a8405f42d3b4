"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v``; the summary
lines are written straight to the terminal even when output is captured.
"""

import random
import time

import pytest
import sympy as sp

from clasp.clink import (CComplexData, ClaspGraph, Surface, cycle_vector, h1_rank,
                         is_totally_connected, knot_family, pi1_presentation, random_family,
                         tree_cycle_basis, validate_family)
from clasp.fracfield import RatFunc, in_lambda_s, parse_ratfunc, qmod_equal
from clasp.linalg import mat_vec, transpose
from clasp.pairing import bl_value, build_H, is_torsion, knot_H, knot_equivalence_check, random_lambda_s
from clasp.polyring import LaurentPoly, epsilon_product_identity, parse_poly
from clasp.spectral import SigNullity, TorusPoint, signature_nullity, sweep

TREFOIL = [[-1, 1], [0, -1]]
FIGURE8 = [[1, 1], [0, -1]]


@pytest.fixture
def report(capsys):
    def emit(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}{' - ' + detail if detail else ''}")
        assert ok, f"{label}: {detail}"
    return emit


def nonsingular(rng, mu, n, bound=1):
    while True:
        p = build_H(random_family(mu, n, rng, bound=bound))
        if not p.detH.is_zero():
            return p


def test_c01_epsilon_identity(report):
    start = time.perf_counter()
    ok = all(epsilon_product_identity(mu) for mu in range(1, 7))
    elapsed = time.perf_counter() - start
    report("1 epsilon identity mu=1..6", ok and elapsed < 1, f"{elapsed:.3f}s")


def test_c02_knot_formula(report):
    rng = random.Random(2)
    start = time.perf_counter()
    agree = 0
    for k in range(100):
        n = k % 9  # sizes 0..8
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        agree += knot_H(A).H == build_H(knot_family(A)).H
    elapsed = time.perf_counter() - start
    report("2 knot formula agreement", agree == 100 and elapsed < 10,
           f"{agree}/100 in {elapsed:.2f}s")


def test_c03_knot_equivalence(report):
    rng = random.Random(3)
    start = time.perf_counter()
    results = [knot_equivalence_check(TREFOIL, 20, rng), knot_equivalence_check(FIGURE8, 20, rng)]
    tried = 0
    while len(results) < 22:
        A = [[rng.randint(-2, 2) for _ in range(6)] for _ in range(6)]
        tried += 1
        if knot_H(A).detH.is_zero():
            continue
        results.append(knot_equivalence_check(A, 20, rng))
    elapsed = time.perf_counter() - start
    report("3 knot-case equivalence", all(results) and elapsed < 120,
           f"{sum(results)}/22 matrices in {elapsed:.1f}s")


def test_c04_hermitian_and_sesquilinear(report):
    rng = random.Random(4)
    checks = passed = 0
    combos = [(mu, n) for mu in (1, 2, 3) for n in (1, 2, 3, 4)]
    while checks < 200:
        for mu, n in combos:
            if checks >= 200:
                break
            p = nonsingular(rng, mu, n)
            for _ in range(4):
                if checks >= 200:
                    break
                a = [random_lambda_s(mu, rng) for _ in range(n)]
                b = [random_lambda_s(mu, rng) for _ in range(n)]
                ab = bl_value(p, a, b)
                if checks % 2 == 0:
                    ok = qmod_equal(ab, bl_value(p, b, a).bar())
                else:
                    q, r = random_lambda_s(mu, rng), random_lambda_s(mu, rng)
                    ok = qmod_equal(bl_value(p, [q * x for x in a], [r * x for x in b]),
                                    q * ab * r.bar())
                checks += 1
                passed += ok
    report("4 hermitian and sesquilinear pairing", passed == checks == 200, f"{passed}/{checks}")


def test_c05_well_defined(report):
    rng = random.Random(5)
    passed = 0
    p = knot_H(TREFOIL)
    pairings = [p, nonsingular(rng, 2, 2), nonsingular(rng, 1, 3)]
    for k in range(100):
        p = pairings[k % 3]
        a = [random_lambda_s(p.mu, rng) for _ in range(p.n)]
        b = [random_lambda_s(p.mu, rng) for _ in range(p.n)]
        v = [random_lambda_s(p.mu, rng) for _ in range(p.n)]
        shifted = [x + y for x, y in zip(a, mat_vec(transpose(p.H), v))]
        passed += qmod_equal(bl_value(p, shifted, b), bl_value(p, a, b))
    report("5 well-defined on the quotient", passed == 100, f"{passed}/100")


def test_c06_trefoil_golden(report):
    p = knot_H(TREFOIL)
    e1 = [RatFunc.from_int(1, 1), RatFunc.from_int(1, 0)]
    checks = {
        "detH": p.detH == parse_poly("t^-2*(t - 1)^2*(t^2 - t + 1)", 1),
        "Bl(e1,e1)": qmod_equal(bl_value(p, e1, e1), parse_ratfunc("-t/(t^2 - t + 1)", 1)),
        "signature": signature_nullity(p, TorusPoint.parse("1/2", 1)) == SigNullity(-2, 0, True),
    }
    failed = [k for k, v in checks.items() if not v]
    report("6 trefoil golden values", not failed, ", ".join(failed) or "detH, Bl, signature")


def test_c07_hopf(report):
    p = build_H(validate_family(2, {}))
    cc = CComplexData.build(2, [Surface(), Surface()], [[1, 2]])
    rows = [sn for axis in (1, 2, "diagonal") for _, sn in sweep(p, axis, 9)]
    ok = (p.n == 0 and h1_rank(cc) == 0 and is_totally_connected(cc) and is_torsion(p)
          and bl_value(p, [], []) == 0
          and all(sn == SigNullity(0, 0, True) for sn in rows))
    report("7 Hopf link", ok, f"{len(rows)} sweep rows")


def test_c08_lambda_s(report):
    rng = random.Random(8)
    passed = 0
    for k in range(100):
        mu = 1 + k % 3
        x, y = random_lambda_s(mu, rng), random_lambda_s(mu, rng)
        members = all(in_lambda_s(z) for z in (x + y, x * y, -x, x.bar()))
        c = rng.choice((2, 3, -2, 5))
        bad_den = LaurentPoly.var(mu, rng.randint(1, mu)) + c
        outsider = x + RatFunc(LaurentPoly.one(mu), bad_den)
        passed += members and not in_lambda_s(outsider)
    examples = (in_lambda_s(parse_ratfunc("t1*t2^-3/((1 - t1)^2*(1 - t2))", 2))
                and not in_lambda_s(parse_ratfunc("1/(1 + t1)", 2))
                and in_lambda_s(parse_ratfunc("(2 - t1 - t1^-1)/(1 - t1)", 2)))
    report("8 Lambda_S decisions", passed == 100 and examples,
           f"{passed}/100 closure, examples {'ok' if examples else 'wrong'}")


def random_unimodular(rng, n):
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        k = rng.choice((-2, -1, 1, 2))
        for r in range(n):
            P[r][j] += k * P[r][i]
    if rng.random() < 0.5:
        for r in range(n):
            P[r][0] = -P[r][0]
    return P


def test_c09_congruence(report):
    rng = random.Random(9)
    passed = 0
    for k in range(20):
        mu, n = 1 + k % 2, 2 + k % 3
        while True:
            fam = random_family(mu, n, rng, bound=1)
            p = build_H(fam)
            if not p.detH.is_zero():
                break
        P = random_unimodular(rng, n)
        q = build_H(fam.transformed(P))
        Pt = transpose(P)
        a = [random_lambda_s(mu, rng) for _ in range(n)]
        b = [random_lambda_s(mu, rng) for _ in range(n)]
        classes = qmod_equal(bl_value(q, mat_vec(Pt, a), mat_vec(Pt, b)), bl_value(p, a, b))
        before = [sn for axis in (1, "diagonal") for _, sn in sweep(p, axis, 7)]
        after = [sn for axis in (1, "diagonal") for _, sn in sweep(q, axis, 7)]
        spectra = before == after and all(sn.certified for sn in before + after)
        passed += classes and spectra
    report("9 congruence invariance", passed == 20, f"{passed}/20 unimodular changes of basis")


def test_c10_clink_structure(report):
    rng = random.Random(10)
    good = 0
    for _ in range(50):
        mu = rng.randint(1, 6)
        pairs = [(i, j) for i in range(1, mu + 1) for j in range(i + 1, mu + 1)]
        edges = tuple(rng.choice(pairs) for _ in range(rng.randint(0, 10))) if pairs else ()
        g = ClaspGraph(mu, edges)
        cycles = tree_cycle_basis(g)
        c = len(edges)
        rank = sp.Matrix(g.boundary_matrix()).rank() if c else 0
        ok = len(cycles) == c - mu + g.components() == c - rank
        if cycles:
            V = sp.Matrix([cycle_vector(cy, c) for cy in cycles]).T
            ok = ok and sp.Matrix(g.boundary_matrix()) * V == sp.zeros(mu, len(cycles))
        cc = CComplexData.build(mu, [Surface()] * mu, [list(e) for e in edges])
        pres = pi1_presentation(cc)
        expected = tuple((f"a{i}", f"a{j}") for i, j in sorted(set(edges)))
        ok = ok and pres.generators == tuple(f"a{i}" for i in range(1, mu + 1))
        ok = ok and pres.relations == expected
        good += ok
    report("10 clasp graph and pi1", good == 50, f"{good}/50 random multigraphs")
