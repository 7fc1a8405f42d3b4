import random
from fractions import Fraction

import pytest
import sympy as sp

from clasp.clink import knot_family, random_family, validate_family
from clasp.errors import DomainError
from clasp.linkio import load_builtin
from clasp.pairing import build_H, knot_H
from clasp.spectral import (SigNullity, TorusPoint, csv_header, csv_row, det_at, eval_H,
                            eval_H_exact, exact_inertia, hermitian_defect, signature_nullity, sweep)
from conftest import golden

TREFOIL = [[-1, 1], [0, -1]]


def pt(text, mu=1, precision=128):
    return TorusPoint.parse(text, mu, precision)


def test_trefoil_at_minus_one():
    g = golden("trefoil")
    p = knot_H(TREFOIL)
    assert eval_H(p, pt("1/2")) == g["H_at_minus_one"]
    sn = signature_nullity(p, pt("1/2"))
    assert sn == SigNullity(g["signature_at_minus_one"], 0, True)


def test_trefoil_nullity_at_roots_of_the_alexander_polynomial():
    p = knot_H(TREFOIL)
    for angle in golden("trefoil")["nullity_angles"]:
        sn = signature_nullity(p, pt(angle))
        assert sn.nullity == 1 and sn.certified
    # angle 1/3 is not a root of t^2 - t + 1
    assert signature_nullity(p, pt("1/3")).nullity == 0


def test_empty_presentation():
    p = build_H(validate_family(2, {}))
    assert eval_H(p, pt("1/3,1/4", 2)).rows == 0
    assert signature_nullity(p, pt("1/3,1/4", 2)) == SigNullity(0, 0, True)


def test_domain_errors():
    p = knot_H(TREFOIL)
    with pytest.raises(DomainError):
        signature_nullity(p, pt("0"))
    with pytest.raises(DomainError):
        pt("3/2")


def test_exact_inertia_against_eigenvalues():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 5)
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                M[i][j] = M[j][i] = rng.choice((0, 0, rng.randint(-3, 3)))
        evs = sp.Matrix(M).eigenvals()
        pos = sum(m for e, m in evs.items() if sp.re(sp.N(e, 50)) > 1e-30)
        neg = sum(m for e, m in evs.items() if sp.re(sp.N(e, 50)) < -1e-30)
        assert exact_inertia(M) == (pos, neg, n - pos - neg)


def test_exact_inertia_zero_diagonal():
    assert exact_inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert exact_inertia([[0, 0], [0, 0]]) == (0, 0, 2)
    assert exact_inertia([[0, 2, 0], [2, 0, 0], [0, 0, -1]]) == (1, 2, 0)


def test_hermitian_defect_is_tiny():
    rng = random.Random(6)
    for _ in range(10):
        mu = rng.randint(1, 3)
        p = build_H(random_family(mu, rng.randint(1, 3), rng))
        angles = ",".join(f"{rng.randint(1, 10)}/11" for _ in range(mu))
        assert hermitian_defect(p, pt(angles, mu, 64)) < 1e-10


def random_pairings(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        mu = rng.randint(1, 2)
        yield rng, build_H(random_family(mu, rng.randint(1, 3), rng))


def test_parity_and_bounds():
    for rng, p in random_pairings(7, 10):
        for point, sn in sweep(p, "diagonal", 7):
            assert abs(sn.signature) + sn.nullity <= p.n
            assert (sn.signature - (p.n - sn.nullity)) % 2 == 0


def test_conjugation_symmetry():
    for rng, p in random_pairings(8, 10):
        point = pt(",".join(f"{rng.randint(1, 6)}/7" for _ in range(p.mu)), p.mu)
        assert signature_nullity(p, point) == signature_nullity(p, point.conjugate())


def test_nullity_matches_determinant():
    for rng, p in random_pairings(9, 12):
        if p.detH.is_zero():
            continue
        for m in range(2, 13):
            for k in range(1, m):
                if Fraction(k, m).denominator != m:
                    continue
                point = TorusPoint((Fraction(k, m),) * p.mu)
                sn = signature_nullity(p, point)
                d = abs(det_at(p, TorusPoint(point.angles, 256)))
                assert (sn.nullity > 0) == (d < 1e-30)


def test_trefoil_sweep():
    p = knot_H(TREFOIL)
    rows = sweep(p, "diagonal", 5)
    assert [str(r.angles[0]) for r, _ in rows] == ["1/6", "1/3", "1/2", "2/3", "5/6"]
    assert rows[2][1].signature == -2
    assert rows == sweep(p, "diagonal", 5)


def test_torus24_signatures():
    p = build_H(load_builtin("torus24").family)
    assert eval_H_exact(p) == [[golden("torus24")["H_at_minus_one"]]]
    assert signature_nullity(p, pt("1/2", 2)) == SigNullity(-1, 0, True)
    along = [sn.signature for _, sn in sweep(p, 1, 3)]
    assert along == [-1, -1, -1]


def test_csv_format():
    p = knot_H(TREFOIL)
    point = pt("1/2")
    assert csv_header(2) == "angle_1,angle_2,signature,nullity,certified"
    assert csv_row(point, signature_nullity(p, point)) == "1/2,-2,0,true"


def test_knot_signature_profile():
    # trefoil: signature 0 before the root at 1/6, -1 on it, -2 beyond
    p = build_H(knot_family(TREFOIL))
    rows = sweep(p, "diagonal", 11)
    assert [sn.signature for _, sn in rows] == [0, -1] + [-2] * 7 + [-1, 0]
    assert [sn.nullity for _, sn in rows] == [0, 1] + [0] * 7 + [1, 0]
