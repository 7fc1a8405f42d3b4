"""
Signature and nullity of H(omega) for omega on the mu-torus.

Points are given by rational angles r_i with omega_i = exp(2 pi i r_i).
At omega = (-1, ..., -1) the matrix is an integer symmetric matrix and its
inertia is computed exactly.  Everywhere else H(omega) is evaluated with
mpmath at a chosen binary precision; each monomial's phase is reduced
exactly before the exponential is taken.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .errors import DimensionError, DomainError
from .pairing import PresentedPairing
from .polyring import LaurentPoly, eval_at_minus_one

DEFAULT_PRECISION = 128
DEFAULT_TOL = 1e-9
HALF = Fraction(1, 2)


def default_precision() -> int:
    return int(os.environ.get("CLASP_PRECISION", DEFAULT_PRECISION))


@dataclass(frozen=True)
class TorusPoint:
    angles: tuple[Fraction, ...]
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        angles = tuple(Fraction(a) for a in self.angles)
        for a in angles:
            if not 0 <= a < 1:
                raise DomainError(f"angle {a} outside [0, 1)")
        object.__setattr__(self, "angles", angles)
        if self.precision < 16:
            raise ValueError("precision must be at least 16 bits")

    @classmethod
    def parse(cls, text: str, mu: int, precision: int = DEFAULT_PRECISION) -> "TorusPoint":
        """Parse ``"1/2,1/3"``; a single angle is repeated for every colour."""
        parts = [Fraction(s.strip()) for s in text.split(",") if s.strip()]
        if len(parts) == 1:
            parts = parts * mu
        if len(parts) != mu:
            raise DimensionError(f"{len(parts)} angles given for mu={mu}")
        return cls(tuple(parts), precision)

    @property
    def mu(self) -> int:
        return len(self.angles)

    @property
    def mode(self) -> str:
        return "exact" if all(a == HALF for a in self.angles) else "floating"

    def conjugate(self) -> "TorusPoint":
        return TorusPoint(tuple((-a) % 1 for a in self.angles), self.precision)

    def values(self, ctx=None):
        """Coordinates as mpmath complex numbers."""
        ctx = ctx or _context(self.precision)
        return tuple(ctx.expjpi(2 * ctx.mpf(a.numerator) / a.denominator) for a in self.angles)

    def label(self) -> tuple[str, ...]:
        return tuple(f"{a.numerator}/{a.denominator}" for a in self.angles)


@dataclass(frozen=True)
class SigNullity:
    signature: int
    nullity: int
    certified: bool

    def check(self, n: int) -> None:
        if abs(self.signature) + self.nullity > n or (self.signature - (n - self.nullity)) % 2:
            raise AssertionError(f"inconsistent inertia {self} for size {n}")


def _context(bits: int):
    ctx = mpmath.MPContext()
    ctx.prec = bits
    return ctx


def _check_point(p: PresentedPairing, omega: TorusPoint) -> None:
    if omega.mu != p.mu:
        raise DimensionError(f"point has {omega.mu} coordinates, expected {p.mu}")
    for a in omega.angles:
        if a == 0:
            raise DomainError("coordinate equal to 1: (1 - t_i) is not invertible there")


def _eval_entry(f: LaurentPoly, angles: Sequence[Fraction], ctx):
    total = ctx.mpc(0)
    for exp, c in f.items():
        phase = sum((e * a for e, a in zip(exp, angles)), Fraction(0)) % 1
        if phase == 0:
            total += c
        elif phase == HALF:
            total -= c
        else:
            total += c * ctx.expjpi(2 * ctx.mpf(phase.numerator) / phase.denominator)
    return total


def eval_H_exact(p: PresentedPairing) -> list[list[int]]:
    """H(-1, ..., -1) as an integer matrix."""
    return [[eval_at_minus_one(x) for x in row] for row in p.H]


def eval_H(p: PresentedPairing, omega: TorusPoint, *, repair: bool = True):
    """H(omega) as an mpmath matrix, or an integer matrix in exact mode."""
    _check_point(p, omega)
    if omega.mode == "exact":
        return eval_H_exact(p)
    ctx = _context(omega.precision)
    M = ctx.matrix(p.n, p.n)
    for i in range(p.n):
        for j in range(p.n):
            M[i, j] = _eval_entry(p.H[i][j], omega.angles, ctx)
    if repair:
        M = (M + M.transpose_conj()) / 2
    return M


def hermitian_defect(p: PresentedPairing, omega: TorusPoint) -> float:
    """Largest entry of |M - M^*| before symmetrization."""
    M = eval_H(p, omega, repair=False)
    if omega.mode == "exact" or p.n == 0:
        return 0.0
    D = M - M.transpose_conj()
    return float(max(abs(D[i, j]) for i in range(p.n) for j in range(p.n)))


def exact_inertia(M: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts for a symmetric rational matrix.

    Symmetric elimination by congruences: a zero diagonal is replaced by a
    symmetric swap or, failing that, by adding a row and column to make the
    diagonal 2*M[k][j].
    """
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    pos = neg = 0
    k = 0
    while k < n:
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    k += 1  # zero row and column
                    continue
                for c in range(n):
                    A[k][c] += A[j][c]
                for r in range(n):
                    A[r][k] += A[r][j]
        d = A[k][k]
        if d == 0:
            k += 1
            continue
        pos += d > 0
        neg += d < 0
        for i in range(k + 1, n):
            f = A[i][k] / d
            if f:
                for c in range(k, n):
                    A[i][c] -= f * A[k][c]
        for i in range(k + 1, n):
            A[k][i] = Fraction(0)
            A[i][k] = Fraction(0)
        k += 1
    return pos, neg, n - pos - neg


def _float_inertia(p: PresentedPairing, omega: TorusPoint, tol: float):
    M = eval_H(p, omega)
    ctx = _context(omega.precision)
    evals = ctx.eighe(M, eigvals_only=True)
    evals = [float(ctx.re(x)) for x in evals]
    pos = sum(1 for x in evals if x > tol)
    neg = sum(1 for x in evals if x < -tol)
    ambiguous = any(tol / 10 < abs(x) < tol * 10 for x in evals)
    return pos, neg, len(evals) - pos - neg, ambiguous


def signature_nullity(p: PresentedPairing, omega: TorusPoint, tol: float = DEFAULT_TOL) -> SigNullity:
    _check_point(p, omega)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.n == 0:
        return SigNullity(0, 0, True)
    if omega.mode == "exact":
        pos, neg, zero = exact_inertia(eval_H_exact(p))
        out = SigNullity(pos - neg, zero, True)
    else:
        pos, neg, zero, ambiguous = _float_inertia(p, omega, tol)
        if ambiguous:
            retry = TorusPoint(omega.angles, omega.precision * 2)
            pos, neg, zero, ambiguous = _float_inertia(p, retry, tol)
        out = SigNullity(pos - neg, zero, not ambiguous)
    out.check(p.n)
    return out


def det_at(p: PresentedPairing, omega: TorusPoint):
    """det H evaluated at ``omega`` (absolute value is meaningful)."""
    ctx = _context(omega.precision)
    return _eval_entry(p.detH, omega.angles, ctx)


def sweep_points(mu: int, axis, samples: int, precision: int = DEFAULT_PRECISION) -> list[TorusPoint]:
    """Angles k/(samples+1), k = 1..samples, along one axis or the diagonal.

    ``axis`` is a 1-based colour index (other angles stay at 1/2) or the
    string ``"diagonal"``.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    pts = []
    for k in range(1, samples + 1):
        r = Fraction(k, samples + 1)
        if axis == "diagonal":
            angles = (r,) * mu
        else:
            axis_i = int(axis)
            if not 1 <= axis_i <= mu:
                raise DimensionError(f"axis {axis} outside 1..{mu}")
            angles = tuple(r if i == axis_i else HALF for i in range(1, mu + 1))
        pts.append(TorusPoint(angles, precision))
    return pts


def sweep(p: PresentedPairing, axis="diagonal", samples: int = 10, tol: float = DEFAULT_TOL,
          precision: int = DEFAULT_PRECISION) -> list[tuple[TorusPoint, SigNullity]]:
    return [(pt, signature_nullity(p, pt, tol)) for pt in sweep_points(p.mu, axis, samples, precision)]


def csv_header(mu: int) -> str:
    return ",".join([f"angle_{i}" for i in range(1, mu + 1)] + ["signature", "nullity", "certified"])


def csv_row(pt: TorusPoint, sn: SigNullity) -> str:
    return ",".join(list(pt.label()) + [str(sn.signature), str(sn.nullity), str(sn.certified).lower()])
