"""Built-in consistency checks run by ``clasp selfcheck``."""

from __future__ import annotations

import random

from .clink import random_family
from .fracfield import qmod_equal
from .pairing import bl_value, build_H, knot_equivalence_check, random_lambda_s
from .polyring import epsilon_product_identity

TREFOIL = [[-1, 1], [0, -1]]
FIGURE8 = [[1, 1], [0, -1]]


def _hermitian_suite(seed: int = 2, rounds: int = 6) -> bool:
    rng = random.Random(seed)
    done = 0
    while done < rounds:
        mu = rng.choice((1, 2))
        n = rng.randint(1, 2)
        p = build_H(random_family(mu, n, rng, bound=1))
        if p.detH.is_zero():
            continue
        a = [random_lambda_s(mu, rng, max_den=1) for _ in range(n)]
        b = [random_lambda_s(mu, rng, max_den=1) for _ in range(n)]
        q = random_lambda_s(mu, rng, max_den=1)
        ab = bl_value(p, a, b)
        if not qmod_equal(ab, bl_value(p, b, a).bar()):
            return False
        if not qmod_equal(bl_value(p, [q * x for x in a], b), q * ab):
            return False
        done += 1
    return True


def run() -> list[tuple[str, bool]]:
    results = []
    for mu in range(1, 7):
        results.append((f"epsilon identity mu={mu}", epsilon_product_identity(mu)))
    results.append(("knot equivalence trefoil", knot_equivalence_check(TREFOIL, 10, random.Random(0))))
    results.append(("knot equivalence figure-eight", knot_equivalence_check(FIGURE8, 10, random.Random(1))))
    results.append(("hermitian and sesquilinear pairing", _hermitian_suite()))
    return results
