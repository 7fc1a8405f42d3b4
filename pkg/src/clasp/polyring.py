"""
Sparse multivariate Laurent polynomials with integer coefficients.

A :class:`LaurentPoly` is an element of Z[t1^{+-1}, ..., tmu^{+-1}], stored as
a mapping from exponent tuples to nonzero Python integers.  Values are
immutable; every operation returns a new polynomial.
"""

from __future__ import annotations

import heapq
import itertools
import math
import re
from functools import reduce
from operator import add as _add, sub as _sub
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, DomainError, InternalConsistencyError

Exponent = tuple[int, ...]


class LaurentPoly:
    """An integral Laurent polynomial in ``mu`` variables."""

    __slots__ = ("_mu", "_terms", "_hash")

    def __init__(self, mu: int, terms: Mapping[Sequence[int], int] | None = None):
        if mu < 1:
            raise DimensionError("a Laurent polynomial needs at least one variable")
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != mu:
                    raise DimensionError(
                        f"exponent {exp} has length {len(exp)}, expected {mu}")
                if isinstance(c, bool) or int(c) != c:
                    raise TypeError(f"coefficient {c!r} is not an integer")
                c = int(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self._mu = mu
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, mu: int, terms: dict[Exponent, int]) -> "LaurentPoly":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj._mu = mu
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, mu: int) -> "LaurentPoly":
        return cls(mu)

    @classmethod
    def constant(cls, mu: int, c: int) -> "LaurentPoly":
        return cls(mu, {(0,) * mu: c})

    @classmethod
    def one(cls, mu: int) -> "LaurentPoly":
        return cls.constant(mu, 1)

    @classmethod
    def monomial(cls, mu: int, exp: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(mu, {tuple(exp): coeff})

    @classmethod
    def var(cls, mu: int, i: int, power: int = 1) -> "LaurentPoly":
        """The monomial ``t_i**power`` (``i`` is 1-based)."""
        if not 1 <= i <= mu:
            raise DimensionError(f"variable index {i} outside 1..{mu}")
        exp = [0] * mu
        exp[i - 1] = power
        return cls(mu, {tuple(exp): 1})

    # -- basic accessors ----------------------------------------------------

    @property
    def mu(self) -> int:
        return self._mu

    @property
    def terms(self) -> dict[Exponent, int]:
        """Copy of the term mapping, in ascending lexicographic order."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * self._mu, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly +-1 times a monomial."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def leading_term(self) -> tuple[Exponent, int]:
        """Lexicographically largest exponent and its coefficient."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return next(reversed(self._terms.items()))

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0,) * self._mu
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self) -> Exponent:
        if not self._terms:
            return (0,) * self._mu
        return tuple(max(col) for col in zip(*self._terms))

    def variables(self) -> set[int]:
        """0-based indices of variables that occur with a nonzero exponent."""
        out = set()
        for exp in self._terms:
            out.update(i for i, e in enumerate(exp) if e)
        return out

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        return reduce(math.gcd, self._terms.values(), 0)

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self._mu, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._mu == other._mu and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._mu, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._mu != self._mu:
                raise DimensionError(
                    f"variable counts differ: {self._mu} vs {other._mu}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly.constant(self._mu, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPoly._raw(self._mu, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self._mu, {e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "LaurentPoly":
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return LaurentPoly.zero(self._mu)
        return LaurentPoly._raw(self._mu, _mul_terms(self._terms, other._terms, self._mu))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit():
                # leaves the ring; hand over to the fraction field
                from .fracfield import RatFunc
                return RatFunc(self) ** k
            (exp, c), = self._terms.items()
            return LaurentPoly._raw(self._mu, {tuple(-e * -k for e in exp): c ** -k})
        result = LaurentPoly.one(self._mu)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        from .fracfield import RatFunc
        return RatFunc(self) / other

    def __rtruediv__(self, other):
        from .fracfield import RatFunc
        return RatFunc(self._coerce(other)) / self

    def shift(self, exp: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial ``t**exp``."""
        return LaurentPoly._raw(
            self._mu, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """Image under the involution t_i -> t_i^{-1}."""
        return LaurentPoly._raw(
            self._mu, {tuple(-x for x in e): c for e, c in self._terms.items()})

    def divide_exact(self, q: "LaurentPoly") -> "LaurentPoly | None":
        return divide_exact(self, q)

    def normalized(self) -> tuple["LaurentPoly", "LaurentPoly"]:
        """Split off a unit: returns ``(u, p)`` with ``self == u * p``.

        ``p`` has all minimal exponents zero and a positive leading
        coefficient; ``u`` is +-1 times a monomial.  The zero polynomial is
        returned unchanged with ``u = 1``.
        """
        if not self._terms:
            return LaurentPoly.one(self._mu), self
        m = self.min_exponents()
        sign = 1 if self.leading_term()[1] > 0 else -1
        p = self.shift(tuple(-x for x in m))
        if sign < 0:
            p = -p
        return LaurentPoly._raw(self._mu, {m: sign}), p

    def eval_at(self, omega, tol: float = 1e-9):
        return eval_at(self, omega, tol)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._mu}, {str(self)!r})"


def _mul_terms(a: dict[Exponent, int], b: dict[Exponent, int], mu: int) -> dict[Exponent, int]:
    """Sparse product with exponent vectors packed into single integers."""
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        (eb, cb), = b.items()
        return {tuple(map(_add, ea, eb)): ca * cb for ea, ca in a.items()}
    lo_a = [min(col) for col in zip(*a)]
    lo_b = [min(col) for col in zip(*b)]
    spans = [max(ca) - la + max(cb) - lb + 1
             for ca, cb, la, lb in zip(zip(*a), zip(*b), lo_a, lo_b)]
    strides = [1] * mu
    for i in range(1, mu):
        strides[i] = strides[i - 1] * spans[i - 1]
    pa = [(sum((x - l) * s for x, l, s in zip(e, lo_a, strides)), c) for e, c in a.items()]
    pb = [(sum((x - l) * s for x, l, s in zip(e, lo_b, strides)), c) for e, c in b.items()]
    out: dict[int, int] = {}
    get = out.get
    for kb, cb in pb:
        for ka, ca in pa:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    base = [x + y for x, y in zip(lo_a, lo_b)]
    result = {}
    for k, c in out.items():
        if c:
            e = []
            for span, b0 in zip(spans, base):
                k, r = divmod(k, span)
                e.append(r + b0)
            result[tuple(e)] = c
    return result


# ---------------------------------------------------------------------------
# functional interface


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def _check_mu(p: LaurentPoly, q: LaurentPoly) -> None:
    if p.mu != q.mu:
        raise DimensionError(f"variable counts differ: {p.mu} vs {q.mu}")


def _divide_polynomial(p: dict[Exponent, int], q: dict[Exponent, int]) -> dict[Exponent, int] | None:
    """Exact division of ordinary polynomials (nonnegative exponents).

    Lexicographic long division: the single divisor is a Groebner basis of
    the ideal it generates, so a nonzero remainder means "not divisible".
    """
    lq, cq = max(q.items())
    rest = [(e, c) for e, c in q.items() if e != lq]
    rem = dict(p)
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    quot: dict[Exponent, int] = {}
    while rem:
        lr = tuple(-x for x in heapq.heappop(heap))
        cr = rem.get(lr)
        if cr is None:
            continue
        if any(a < b for a, b in zip(lr, lq)):
            return None
        qc, r = divmod(cr, cq)
        if r:
            return None
        shift = tuple(map(_sub, lr, lq))
        quot[shift] = qc
        del rem[lr]
        for e, c in rest:
            k = tuple(map(_add, e, shift))
            old = rem.get(k)
            if old is None:
                rem[k] = -qc * c
                heapq.heappush(heap, tuple(-x for x in k))
            else:
                v = old - qc * c
                if v:
                    rem[k] = v
                else:
                    del rem[k]
    return quot


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    """Return ``r`` with ``q * r == p`` or ``None`` when no such ``r`` exists.

    Raises ZeroDivisionError when ``q`` is zero.
    """
    _check_mu(p, q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.mu)
    if q.is_monomial():
        (eq, cq), = q.items()
        if any(c % cq for c in p._terms.values()):
            return None
        return LaurentPoly._raw(
            p.mu, {tuple(a - b for a, b in zip(e, eq)): c // cq for e, c in p.items()})
    mp, mq = p.min_exponents(), q.min_exponents()
    ps = p.shift(tuple(-x for x in mp))
    qs = q.shift(tuple(-x for x in mq))
    quot = _divide_polynomial(ps._terms, qs._terms)
    if quot is None:
        return None
    return LaurentPoly._raw(p.mu, quot).shift(tuple(a - b for a, b in zip(mp, mq)))


def _exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    r = divide_exact(p, q)
    if r is None:
        raise InternalConsistencyError(f"expected {q} to divide {p}")
    return r


# -- gcd ---------------------------------------------------------------------


def _degree_in(p: LaurentPoly, v: int) -> int:
    return max(e[v] for e in p._terms)


def _coeffs_in(p: LaurentPoly, v: int) -> dict[int, LaurentPoly]:
    """Coefficients of ``p`` viewed as a polynomial in variable ``v``."""
    parts: dict[int, dict[Exponent, int]] = {}
    for e, c in p._terms.items():
        k = e[v]
        parts.setdefault(k, {})[e[:v] + (0,) + e[v + 1:]] = c
    return {k: LaurentPoly._raw(p.mu, t) for k, t in parts.items()}


def _lc_in(p: LaurentPoly, v: int) -> LaurentPoly:
    d = _degree_in(p, v)
    return LaurentPoly._raw(
        p.mu, {e[:v] + (0,) + e[v + 1:]: c for e, c in p._terms.items() if e[v] == d})


def _content_in(p: LaurentPoly, v: int) -> LaurentPoly:
    g = None
    for c in _coeffs_in(p, v).values():
        g = c if g is None else _gcd_poly(g, c)
        if g.is_unit():
            break
    return g


def _prem(a: LaurentPoly, b: LaurentPoly, v: int) -> LaurentPoly:
    """Pseudo-remainder of ``a`` by ``b`` with respect to variable ``v``."""
    db = _degree_in(b, v)
    lcb = _lc_in(b, v)
    r = a
    e = _degree_in(a, v) - db + 1
    unit = [0] * a.mu
    while r and _degree_in(r, v) >= db:
        unit[v] = _degree_in(r, v) - db
        r = lcb * r - (_lc_in(r, v).shift(unit)) * b
        e -= 1
    return lcb ** e * r if e > 0 else r


def _heu_eval(f: dict[Exponent, int], x: int) -> dict[Exponent, int]:
    out: dict[Exponent, int] = {}
    for e, c in f.items():
        k = e[:-1]
        out[k] = out.get(k, 0) + c * x ** e[-1]
    return {k: c for k, c in out.items() if c}


def _heu_interpolate(h: dict[Exponent, int], x: int) -> dict[Exponent, int]:
    out: dict[Exponent, int] = {}
    half = x // 2
    for k, c in h.items():
        i = 0
        while c:
            d = c % x
            if d > half:
                d -= x
            if d:
                out[k + (i,)] = d
            c = (c - d) // x
            i += 1
    return out


def _heu_gcd(f: dict[Exponent, int], g: dict[Exponent, int], nvars: int) -> dict[Exponent, int] | None:
    """Heuristic gcd of polynomials by evaluation at a large integer.

    The result is returned only once it divides both inputs, which together
    with the size of the evaluation point makes it the gcd; ``None`` means the
    heuristic gave up and the caller should fall back.
    """
    if nvars == 0:
        return {(): math.gcd(f[()], g[()])}
    cf, cg = reduce(math.gcd, f.values()), reduce(math.gcd, g.values())
    if cf != 1 or cg != 1:
        h = _heu_gcd({e: c // cf for e, c in f.items()}, {e: c // cg for e, c in g.items()}, nvars)
        if h is None:
            return None
        cont = math.gcd(cf, cg)
        return {e: c * cont for e, c in h.items()}
    norm = min(max(map(abs, f.values())), max(map(abs, g.values())))
    x = 2 * norm + 29
    for _ in range(6):
        ff, gg = _heu_eval(f, x), _heu_eval(g, x)
        if ff and gg:
            hh = _heu_gcd(ff, gg, nvars - 1)
            if hh is not None:
                h = _heu_interpolate(hh, x)
                if h:
                    c = reduce(math.gcd, h.values())
                    if h[max(h)] < 0:
                        c = -c
                    h = {e: v // c for e, v in h.items()}
                    if _divide_polynomial(f, h) is not None and _divide_polynomial(g, h) is not None:
                        return h
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    return None


def _gcd_poly(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Normalized gcd by recursive content / subresultant reduction."""
    if p.is_zero():
        return q.normalized()[1]
    if q.is_zero():
        return p.normalized()[1]
    p = p.normalized()[1]
    q = q.normalized()[1]
    if p.is_constant() or q.is_constant():
        g = math.gcd(p.content(), q.content())
        return LaurentPoly.constant(p.mu, g)
    fast = _heu_gcd(p.terms, q.terms, p.mu)
    if fast is not None:
        return LaurentPoly._raw(p.mu, fast)
    vp, vq = p.variables(), q.variables()
    v = min(vp | vq)
    if v not in vp:
        return _gcd_poly(p, _content_in(q, v))
    if v not in vq:
        return _gcd_poly(_content_in(p, v), q)
    cp, cq = _content_in(p, v), _content_in(q, v)
    a, b = _exact(p, cp), _exact(q, cq)
    c = _gcd_poly(cp, cq)
    if _degree_in(a, v) < _degree_in(b, v):
        a, b = b, a
    g = h = LaurentPoly.one(p.mu)
    while True:
        delta = _degree_in(a, v) - _degree_in(b, v)
        r = _prem(a, b, v)
        if r.is_zero():
            break
        if v not in r.variables():
            b = LaurentPoly.one(p.mu)
            break
        a, b = b, _exact(r, g * h ** delta)
        g = _lc_in(a, v)
        if delta == 1:
            h = g
        elif delta > 1:
            h = _exact(g ** delta, h ** (delta - 1))
    b = _exact(b, _content_in(b, v))
    return (c * b).normalized()[1]


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in the Laurent ring, normalized.

    The result has nonnegative minimal exponents (all zero) and a positive
    lexicographically leading coefficient.  Both inputs are re-divided by
    the result before it is returned.
    """
    _check_mu(p, q)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    g = _gcd_poly(p, q)
    _exact(p, g)
    _exact(q, g)
    return g


def lcm(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return _exact(p * q, gcd(p, q)).normalized()[1]


# -- evaluation ---------------------------------------------------------------


def eval_at(p: LaurentPoly, omega, tol: float = 1e-9):
    """Substitute ``t_i -> omega[i]`` for points on the unit torus.

    ``omega`` may hold ints, floats, Python complex numbers or mpmath
    numbers; arithmetic stays in whatever type the coordinates carry, so
    ``(-1, -1)`` evaluates exactly to an integer.
    """
    omega = tuple(omega)
    if len(omega) != p.mu:
        raise DimensionError(f"point has {len(omega)} coordinates, expected {p.mu}")
    for w in omega:
        if abs(abs(w) - 1) > tol:
            raise DomainError(f"coordinate {w} is not on the unit circle")
    total = 0
    for exp, c in p.items():
        term = c
        for w, e in zip(omega, exp):
            if e > 0:
                term = term * w ** e
            elif e < 0:
                # on the unit circle w^{-1} is the conjugate of w
                term = term * _conj(w) ** (-e)
        total = total + term
    return total


def _conj(w):
    if isinstance(w, (int, float)):
        return w
    return w.conjugate()


def eval_at_minus_one(p: LaurentPoly) -> int:
    """Exact integer value at t = (-1, ..., -1)."""
    return sum(c if sum(e) % 2 == 0 else -c for e, c in p.items())


# -- identities -------------------------------------------------------------


def sign_sequences(mu: int) -> list[tuple[int, ...]]:
    """All 2**mu sequences of +-1, in a fixed order (+ before -)."""
    return list(itertools.product((1, -1), repeat=mu))


def epsilon_product_identity(mu: int) -> bool:
    """Check sum_eps sgn(eps) t^((1+eps)/2) == prod_i (t_i - 1) exactly."""
    if mu < 1:
        raise DimensionError("mu must be positive")
    lhs = LaurentPoly.zero(mu)
    for eps in sign_sequences(mu):
        sgn = math.prod(eps)
        lhs = lhs + LaurentPoly.monomial(mu, [(1 + e) // 2 for e in eps], sgn)
    rhs = LaurentPoly.one(mu)
    for i in range(1, mu + 1):
        rhs = rhs * (LaurentPoly.var(mu, i) - 1)
    return lhs == rhs


# -- text form ---------------------------------------------------------------


def var_name(mu: int, i: int) -> str:
    """Printed name of the 1-based variable ``i``."""
    return "t" if mu == 1 else f"t{i}"


def format_poly(p: LaurentPoly) -> str:
    """Canonical text: terms in descending lexicographic exponent order."""
    if p.is_zero():
        return "0"
    pieces = []
    for exp, c in reversed(list(p.items())):
        factors = []
        for i, e in enumerate(exp, start=1):
            if e == 1:
                factors.append(var_name(p.mu, i))
            elif e:
                factors.append(f"{var_name(p.mu, i)}^{e}")
        a = abs(c)
        if not factors:
            body = str(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(a)] + factors)
        pieces.append((c < 0, body))
    neg0, body0 = pieces[0]
    out = ("-" if neg0 else "") + body0
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|(t\d*)|(\^|\*|\+|-|/|\(|\)))")


class _Parser:
    """Recursive-descent parser for ring expressions in t1..tmu.

    Grammar: expr := ['-'] term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
    factor := atom ['^' ['-'] int] ; atom := int | var | '(' expr ')'.
    Juxtaposition is not accepted; write products with '*'.
    """

    def __init__(self, text: str, mu: int):
        self.mu = mu
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {self.text!r} at offset {pos}")
            num, name, op = m.groups()
            if num is not None:
                self.tokens.append(("int", int(num)))
            elif name is not None:
                self.tokens.append(("var", self._var_index(name)))
            else:
                self.tokens.append(("op", op))
            pos = m.end()
        self.i = 0

    def _var_index(self, name: str) -> int:
        if name == "t":
            if self.mu != 1:
                raise ValueError(f"bare 't' is ambiguous with {self.mu} variables")
            return 1
        k = int(name[1:])
        if not 1 <= k <= self.mu:
            raise DimensionError(f"variable {name} outside t1..t{self.mu}")
        return k

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if op is not None and tok != ("op", op):
            raise ValueError(f"expected {op!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ValueError("empty expression")
        value = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in {self.text!r}")
        return value

    def expr(self):
        negate = False
        if self.peek() == ("op", "-"):
            self.take()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, k = self.take()
            if kind != "int":
                raise ValueError(f"exponent must be an integer in {self.text!r}")
            base = base ** (sign * k)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return LaurentPoly.constant(self.mu, val)
        if kind == "var":
            return LaurentPoly.var(self.mu, val)
        if (kind, val) == ("op", "("):
            value = self.expr()
            self.take(")")
            return value
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


def parse_expression(text: str, mu: int):
    """Parse to a LaurentPoly, or a RatFunc when the text divides."""
    return _Parser(text, mu).parse()


def parse_poly(text: str, mu: int) -> LaurentPoly:
    value = parse_expression(text, mu)
    if not isinstance(value, LaurentPoly):
        from .fracfield import RatFunc
        if isinstance(value, RatFunc) and value.den.is_unit():
            return value.num * value.den ** -1
        raise ValueError(f"{text!r} is not a Laurent polynomial")
    return value


def poly_sum(items: Iterable[LaurentPoly], mu: int) -> LaurentPoly:
    total = LaurentPoly.zero(mu)
    for x in items:
        total = total + x
    return total
