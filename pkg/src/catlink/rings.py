"""Exact coefficient arithmetic for the homology engines.

Everything here is exact: arbitrary-precision integers, rationals, dense
univariate polynomials over Q (the equivariant base Q[t]), Laurent
polynomials in q with integer coefficients (graded ranks, Jones), and
sparse multivariate polynomials over Q (the Soergel base Q[x1..xn]).

Matrix code in :mod:`catlink.linalg` is generic over a small ring
protocol; the ring objects below supply it.  Elements are plain Python
values (int, Fraction, tuple), not wrapped, so the inner loops stay cheap.
"""

from __future__ import annotations

from fractions import Fraction


class IntegerRing:
    """The ring Z.  Elements are Python ints."""

    zero = 0
    one = 1
    is_field = False
    is_pid = True
    name = "Z"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a == 1 or a == -1

    def inv_unit(self, a):
        return a

    def divmod(self, a, b):
        # symmetric remainder keeps entries small during SNF; Python's
        # floor divmod leaves r with the sign of b, so the balancing
        # correction is q+1 for either sign of b
        q, r = divmod(a, b)
        if 2 * abs(r) > abs(b):
            q += 1
            r = a - q * b
        return q, r

    def divides(self, a, b):
        """True if a | b."""
        return b % a == 0

    def exact_div(self, b, a):
        q, r = divmod(b, a)
        if r:
            raise ArithmeticError(f"{a} does not divide {b}")
        return q

    def norm(self, a):
        return abs(a)

    def canonical(self, a):
        """(unit u, canonical form a/u) with the canonical form >= 0."""
        return (-1, -a) if a < 0 else (1, a)

    def to_str(self, a):
        return str(a)


class RationalField:
    """The field Q.  Elements are Fractions (ints accepted on input)."""

    zero = Fraction(0)
    one = Fraction(1)
    is_field = True
    is_pid = True
    name = "Q"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv_unit(self, a):
        return 1 / Fraction(a)

    def divmod(self, a, b):
        return Fraction(a) / Fraction(b), Fraction(0)

    def divides(self, a, b):
        return a != 0 or b == 0

    def exact_div(self, b, a):
        return Fraction(b) / Fraction(a)

    def norm(self, a):
        return 1 if a else 0

    def canonical(self, a):
        if a == 0:
            return Fraction(1), Fraction(0)
        return Fraction(a), Fraction(1)

    def to_str(self, a):
        return str(a)


def _trim(coeffs):
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class PolyRing:
    """Q[t], dense tuples of Fractions with no trailing zeros.

    A Euclidean domain, so Smith normal form applies; units are the
    nonzero constants.  The equivariant Lee theory grades t in q-degree
    4, but that bookkeeping lives with the callers.
    """

    zero = ()
    one = (Fraction(1),)
    is_field = False
    is_pid = True
    name = "Q[t]"

    def poly(self, *coeffs):
        return _trim(Fraction(c) for c in coeffs)

    @property
    def t(self):
        return (Fraction(0), Fraction(1))

    def t_power(self, k, c=1):
        if c == 0:
            return ()
        return _trim([Fraction(0)] * k + [Fraction(c)])

    def add(self, a, b):
        n = max(len(a), len(b))
        return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                     for i in range(n))

    def sub(self, a, b):
        n = max(len(a), len(b))
        return _trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                     for i in range(n))

    def neg(self, a):
        return tuple(-c for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return _trim(out)

    def scale(self, c, a):
        c = Fraction(c)
        return _trim(c * x for x in a)

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return len(a) == 1

    def inv_unit(self, a):
        if len(a) != 1:
            raise ArithmeticError(f"not a unit in Q[t]: {a}")
        return (1 / a[0],)

    def degree(self, a):
        return len(a) - 1 if a else -1

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("poly division by zero")
        r = list(a)
        q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
        db, lb = len(b) - 1, b[-1]
        while len(r) >= len(b) and _trim(r):
            r = list(_trim(r))
            if len(r) < len(b):
                break
            c = r[-1] / lb
            k = len(r) - 1 - db
            q[k] = c
            for i, cb in enumerate(b):
                r[k + i] -= c * cb
        return _trim(q), _trim(r)

    def divides(self, a, b):
        return not self.divmod(b, a)[1]

    def exact_div(self, b, a):
        q, r = self.divmod(b, a)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def norm(self, a):
        return len(a)

    def canonical(self, a):
        if not a:
            return self.one, ()
        u = (a[-1],)
        return u, _trim(c / a[-1] for c in a)

    def to_str(self, a):
        if not a:
            return "0"
        parts = []
        for i, c in enumerate(a):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts)


class FractionFieldQT:
    """Q(t) as reduced (num, den) pairs of PolyRing elements.

    Only used as an independent rank oracle against the Q[t] Smith form.
    """

    def __init__(self):
        self.base = PolyRing()
        self.zero = ((), self.base.one)
        self.one = (self.base.one, self.base.one)

    is_field = True
    is_pid = True
    name = "Q(t)"

    def _reduce(self, num, den):
        base = self.base
        if not num:
            return ((), base.one)
        g = _poly_gcd(num, den)
        num = base.exact_div(num, g)
        den = base.exact_div(den, g)
        u, den_c = base.canonical(den)
        return (base.mul(base.inv_unit(u), num), den_c)

    def from_poly(self, p):
        return (p, self.base.one)

    def add(self, a, b):
        base = self.base
        num = base.add(base.mul(a[0], b[1]), base.mul(b[0], a[1]))
        return self._reduce(num, base.mul(a[1], b[1]))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return (self.base.neg(a[0]), a[1])

    def mul(self, a, b):
        return self._reduce(self.base.mul(a[0], b[0]),
                            self.base.mul(a[1], b[1]))

    def is_zero(self, a):
        return not a[0]

    def is_unit(self, a):
        return bool(a[0])

    def inv_unit(self, a):
        if not a[0]:
            raise ZeroDivisionError
        return self._reduce(a[1], a[0])

    def divmod(self, a, b):
        return self.mul(a, self.inv_unit(b)), self.zero

    def norm(self, a):
        return 1 if a[0] else 0

    def canonical(self, a):
        if not a[0]:
            return self.one, self.zero
        return a, self.one

    def to_str(self, a):
        return f"({self.base.to_str(a[0])})/({self.base.to_str(a[1])})"


def _poly_gcd(a, b):
    base = PolyRing()
    while b:
        a, b = b, base.divmod(a, b)[1]
    if a:
        a = base.canonical(a)[1]
    return a if a else base.one


ZZ = IntegerRing()
QQ = RationalField()
QT = PolyRing()


class Laurent:
    """Laurent polynomial in one variable q with integer (or Fraction)
    coefficients; the value ring of graded ranks and the Jones polynomial."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    self.c[e] = v

    @classmethod
    def q(cls, e=1, coeff=1):
        return cls({e: coeff})

    @classmethod
    def const(cls, n):
        return cls({0: n})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        return isinstance(other, Laurent) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
            if not out[e]:
                del out[e]
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Laurent.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + v1 * v2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Laurent.const(1)
        for _ in range(n):
            out = out * self
        return out

    def coeff(self, e):
        return self.c.get(e, 0)

    def support(self):
        return sorted(self.c)

    def evaluate(self, q_value):
        """Evaluate at a Fraction; used for determinant-style checks."""
        q_value = Fraction(q_value)
        return sum(v * q_value ** e for e, v in self.c.items())

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                parts.append(f"{v}")
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if v == 1:
                    parts.append(mono)
                elif v == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class MultiPoly:
    """Sparse polynomial in x1..xn over Q: {exponent tuple: Fraction}.

    The Soergel-side base ring.  Kept unwrapped-dict-free: instances are
    light objects supporting ring arithmetic, the transposition action
    s_i, and the divided difference used for the rank-two decomposition
    R = R_i*1 + R_i*x_i.
    """

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs=None):
        self.n = n
        self.c = {}
        if coeffs:
            for ex, v in coeffs.items():
                v = Fraction(v)
                if v:
                    self.c[tuple(ex)] = v

    @classmethod
    def const(cls, n, v):
        return cls(n, {(0,) * n: Fraction(v)})

    @classmethod
    def var(cls, n, i, coeff=1):
        """x_{i+1} with 0-based index i."""
        ex = [0] * n
        ex[i] = 1
        return cls(n, {tuple(ex): Fraction(coeff)})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.n == other.n and self.c == other.c

    def __add__(self, other):
        out = dict(self.c)
        for ex, v in other.c.items():
            w = out.get(ex, 0) + v
            if w:
                out[ex] = w
            else:
                del out[ex]
        return MultiPoly(self.n, out)

    def __neg__(self):
        return MultiPoly(self.n, {ex: -v for ex, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.n, {ex: v * other for ex, v in self.c.items()})
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                ex = tuple(a + b for a, b in zip(e1, e2))
                out[ex] = out.get(ex, 0) + v1 * v2
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def swap(self, i):
        """Apply the transposition s_{i+1} exchanging x_{i+1}, x_{i+2}."""
        out = {}
        for ex, v in self.c.items():
            e = list(ex)
            e[i], e[i + 1] = e[i + 1], e[i]
            out[tuple(e)] = v
        return MultiPoly(self.n, out)

    def divided_difference(self, i):
        """(p - s_i p)/(x_i - x_{i+1}); the R_i-coefficient of x_i in p."""
        num = self - self.swap(i)
        out = {}
        # divide by x_i - x_{i+1}: reduce monomials greedily against the
        # leading term x_i (lex with x_i heaviest); exactness is guaranteed
        # because num is s_i-antisymmetric.
        work = dict(num.c)
        while work:
            ex = max(work, key=lambda e: (e[i], e))
            v = work.pop(ex)
            if not v:
                continue
            if ex[i] == 0:
                raise ArithmeticError("inexact divided difference")
            q = list(ex)
            q[i] -= 1
            q = tuple(q)
            out[q] = out.get(q, 0) + v
            # subtract v * x_q * (x_i - x_{i+1}) minus the leading part:
            # remainder term +v * x_q * x_{i+1}
            r = list(q)
            r[i + 1] += 1
            r = tuple(r)
            work[r] = work.get(r, 0) + v
            if not work[r]:
                del work[r]
        return MultiPoly(self.n, out)

    def invariant_part(self, i):
        """a0 with p = a0 + a1*x_i, a0, a1 in the s_i-invariants."""
        return self - self.divided_difference(i) * MultiPoly.var(self.n, i)

    def kill_vars(self, kill):
        """Set the 0-based variables in `kill` to zero."""
        out = {ex: v for ex, v in self.c.items()
               if all(ex[k] == 0 for k in kill)}
        return MultiPoly(self.n, out)

    def total_degree(self):
        """Maximal q-degree (each x_i has q-degree 2)."""
        return max((2 * sum(ex) for ex in self.c), default=None)

    def is_homogeneous(self):
        return len({sum(ex) for ex in self.c}) <= 1

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for ex in sorted(self.c):
            v = self.c[ex]
            mono = "*".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                            for i, e in enumerate(ex) if e)
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts)
