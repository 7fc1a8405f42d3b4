"""
The hermitian matrix H(t) of a generalized Seifert family and the
Blanchfield pairing it presents.

For a family {A^eps}, H(t) = sum over eps of prod_i (1 - t_i^eps_i) A^eps.
Under the totally-connected hypothesis, H(t)^T presents the Alexander
module over Lambda_S and the pairing is (a, b) -> -a^T H(t)^{-1} bar(b)
with values in Q / Lambda_S.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import linalg
from .clink import SeifertFamily, key_signs, knot_family
from .errors import DimensionError, InternalConsistencyError, SingularPresentationError
from .fracfield import RatFunc, as_ratfunc, in_lambda_s
from .polyring import LaurentPoly

PolyMatrix = tuple[tuple[LaurentPoly, ...], ...]


@dataclass(frozen=True)
class PresentedPairing:
    mu: int
    n: int
    H: PolyMatrix
    detH: LaurentPoly

    @cached_property
    def scaled_inverse(self) -> tuple[list[list[LaurentPoly]], LaurentPoly]:
        """``(Y, d)`` with ``H Y = d I``; computed once per presentation."""
        return linalg.inverse_scaled(self.H)

    def is_hermitian(self) -> bool:
        return all(self.H[i][j] == self.H[j][i].bar()
                   for i in range(self.n) for j in range(self.n))


def _coefficient(mu: int, eps: Sequence[int]) -> LaurentPoly:
    c = LaurentPoly.one(mu)
    for i, e in enumerate(eps, start=1):
        c = c * (1 - LaurentPoly.var(mu, i, e))
    return c


def _from_matrix(mu: int, H: PolyMatrix) -> PresentedPairing:
    n = len(H)
    p = PresentedPairing(mu, n, H, linalg.det(H, mu))
    if not p.is_hermitian():
        raise InternalConsistencyError("H(t) is not hermitian; the input family is invalid")
    return p


def _family_sum(fam: SeifertFamily) -> PolyMatrix:
    mu, n = fam.mu, fam.n
    zero = LaurentPoly.zero(mu)
    H = [[zero] * n for _ in range(n)]
    for key, A in fam.matrices.items():
        coeff = _coefficient(mu, key_signs(key))
        for i in range(n):
            for j in range(n):
                if A[i][j]:
                    H[i][j] = H[i][j] + coeff * A[i][j]
    return tuple(tuple(r) for r in H)


def build_H(fam: SeifertFamily) -> PresentedPairing:
    return _from_matrix(fam.mu, _family_sum(fam))


def seifert_form(A: Sequence[Sequence[int]]) -> PolyMatrix:
    """The matrix A - t A^T of a knot Seifert matrix."""
    t = LaurentPoly.var(1, 1)
    n = len(A)
    return tuple(tuple(A[i][j] - t * A[j][i] for j in range(n)) for i in range(n))


def knot_H(A: Sequence[Sequence[int]]) -> PresentedPairing:
    """H(t) = (1 - t) A^T + (1 - t^-1) A for a knot Seifert matrix ``A``.

    Both the family-sum construction and the factorisation
    -(t^-1 - 1)(A - t A^T) are checked to agree.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionError("Seifert matrix is not square")
    t = LaurentPoly.var(1, 1)
    tinv = LaurentPoly.var(1, 1, -1)
    H = tuple(tuple((1 - t) * A[j][i] + (1 - tinv) * A[i][j] for j in range(n))
              for i in range(n))
    factor = -(tinv - 1)
    S = seifert_form(A)
    if any(H[i][j] != factor * S[i][j] for i in range(n) for j in range(n)):
        raise InternalConsistencyError("H(t) != -(t^-1 - 1)(A - t A^T)")
    p = _from_matrix(1, H)
    if H != _family_sum(knot_family(A)):
        raise InternalConsistencyError("knot H(t) disagrees with the family sum")
    return p


def is_torsion(p: PresentedPairing) -> bool:
    """True when det H(t) != 0.

    Only meaningful when the C-complex is totally connected, which is
    when H(t)^T presents the Alexander module.
    """
    return not p.detH.is_zero()


def _as_vector(v, n: int, mu: int, name: str) -> list[RatFunc]:
    if len(v) != n:
        raise DimensionError(f"vector {name} has length {len(v)}, expected {n}")
    out = [as_ratfunc(x, mu) for x in v]
    for k, x in enumerate(out):
        if x.mu != mu:
            raise DimensionError(f"{name}[{k}] has {x.mu} variables, expected {mu}")
    return out


def _bilinear(inverse, a: Sequence[RatFunc], b: Sequence[RatFunc], mu: int) -> RatFunc:
    """a^T M^{-1} bar(b) from ``inverse = (Y, d)``, over one common denominator."""
    Y, d = inverse
    nb, db = linalg.clear_denominators([x.bar() for x in b], mu)
    na, da = linalg.clear_denominators(a, mu)
    num = LaurentPoly.zero(mu)
    for ai, row in zip(na, Y):
        if not ai:
            continue
        acc = LaurentPoly.zero(mu)
        for yij, bj in zip(row, nb):
            if yij and bj:
                acc = acc + yij * bj
        if acc:
            num = num + ai * acc
    return RatFunc(num, da * d * db)


def bl_value(p: PresentedPairing, a, b, *, check_membership: bool = True) -> RatFunc:
    """Representative of -a^T H^{-1} bar(b) in Q / Lambda_S."""
    if p.detH.is_zero():
        raise SingularPresentationError("det H(t) = 0: the module is not torsion")
    a = _as_vector(a, p.n, p.mu, "a")
    b = _as_vector(b, p.n, p.mu, "b")
    if check_membership:
        for name, vec in (("a", a), ("b", b)):
            for k, x in enumerate(vec):
                if not in_lambda_s(x):
                    raise ValueError(f"{name}[{k}] = {x} is not in Lambda_S")
    if p.n == 0:
        return RatFunc.from_int(p.mu, 0)
    return -_bilinear(p.scaled_inverse, a, b, p.mu)


def classical_knot_value(A: Sequence[Sequence[int]], a, b) -> RatFunc:
    """Knot pairing a^T (t - 1)(A - t A^T)^{-1} bar(b) in Q(t) / Lambda_S."""
    n = len(A)
    a = _as_vector(a, n, 1, "a")
    b = _as_vector(b, n, 1, "b")
    if n == 0:
        return RatFunc.from_int(1, 0)
    S = seifert_form(A)
    if linalg.det(S, 1).is_zero():
        raise SingularPresentationError("det(A - t A^T) = 0")
    t = LaurentPoly.var(1, 1)
    return _bilinear(linalg.inverse_scaled(S), a, b, 1) * (t - 1)


def random_lambda_s(mu: int, rng: random.Random, *, terms: int = 3, spread: int = 2,
                    coeff: int = 3, max_den: int = 2) -> RatFunc:
    """A random element of Lambda_S: Laurent polynomial over prod (1 - t_i)^k."""
    num = LaurentPoly(mu, {
        tuple(rng.randint(-spread, spread) for _ in range(mu)): rng.randint(-coeff, coeff)
        for _ in range(rng.randint(1, terms))})
    den = LaurentPoly.one(mu)
    for i in range(1, mu + 1):
        den = den * (1 - LaurentPoly.var(mu, i)) ** rng.randint(0, max_den)
    return RatFunc(num, den)


def knot_equivalence_check(A: Sequence[Sequence[int]], trials: int = 20,
                           rng: random.Random | None = None) -> bool:
    """Compare the H(t) pairing with the classical knot pairing exactly in Q.

    For random Lambda_S vectors a, b checks
    -a^T H^{-1} bar(b) == ((t-1)^{-1} a)^T (t-1)(A - t A^T)^{-1} bar((t-1)^{-1} b)
    before passing to the quotient.  The two sides come from separate
    solves against H(t) and against A - t A^T.
    """
    rng = rng or random.Random(0)
    p = knot_H(A)
    if p.detH.is_zero():
        raise SingularPresentationError("det(A - t A^T) = 0")
    n = p.n
    t = LaurentPoly.var(1, 1)
    inv_t1 = RatFunc(LaurentPoly.one(1), t - 1)
    for _ in range(trials):
        a = [random_lambda_s(1, rng) for _ in range(n)]
        b = [random_lambda_s(1, rng) for _ in range(n)]
        lhs = bl_value(p, a, b)
        rhs = classical_knot_value(A, [inv_t1 * x for x in a], [inv_t1 * x for x in b])
        if lhs != rhs:
            return False
    return True
