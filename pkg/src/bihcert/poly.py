"""Exact univariate polynomials over Q, Sturm chains, root isolation and
positivity certificates.

Coefficients are :class:`fractions.Fraction` throughout; nothing in this
module touches floating point except the optional ``float()`` conversions
used for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class PolyError(ValueError):
    """Raised for invalid polynomial operations (zero divisor, zero input)."""


class EndpointRootError(PolyError):
    """An interval endpoint is a root of the polynomial being counted."""

    def __init__(self, endpoint, message: str = "endpoint root; perturb or deflate"):
        super().__init__(f"{message}: {endpoint}")
        self.endpoint = endpoint


def _frac(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# Quadratic-irrational points a + b*sqrt(d)


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, d) with n = s*s*d and d square-free (n > 0)."""
    if n <= 0:
        raise ValueError("expected a positive integer")
    s, d = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return s, d * n


@dataclass(frozen=True)
class QuadExtPoint:
    """The real number ``a + b*sqrt(d)`` with rational a, b and square-free d > 1.

    Field operations stay inside Q(sqrt(d)); mixing two different d's is an
    error. Comparisons against rationals and same-field points are exact.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if self.d < 2 or _squarefree_split(self.d)[0] != 1:
            raise ValueError(f"d must be a square-free integer > 1, got {self.d}")

    # -- construction helpers
    @classmethod
    def sqrt(cls, q: Number) -> Union[Fraction, "QuadExtPoint"]:
        """Exact square root of a nonnegative rational.

        Returns a Fraction when q is a perfect square.
        """
        q = _frac(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        if q == 0:
            return Fraction(0)
        # sqrt(n/m) = sqrt(n*m)/m
        s, d = _squarefree_split(q.numerator * q.denominator)
        if d == 1:
            return Fraction(s, q.denominator)
        return cls(Fraction(0), Fraction(s, q.denominator), d)

    def _coerce(self, other) -> Optional["QuadExtPoint"]:
        if isinstance(other, QuadExtPoint):
            if other.d != self.d:
                raise ValueError(f"mixed quadratic fields sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtPoint(_frac(other), Fraction(0), self.d)
        return None

    # -- arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtPoint(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtPoint(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtPoint(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtPoint(self.a * o.a + self.d * self.b * o.b,
                            self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExtPoint":
        return QuadExtPoint(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2."""
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadExtPoint":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in quadratic field")
        c = self.conjugate()
        return QuadExtPoint(c.a / n, c.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExtPoint(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- sign and order
    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d*b^2
        return sa * _sign(self.a * self.a - self.d * self.b * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadExtPoint with {type(other).__name__}")
        return (self - o).sign()

    def __eq__(self, other):
        if isinstance(other, (QuadExtPoint, int, Fraction)):
            try:
                return self._cmp(other) == 0
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def to_mpf(self, dps: int = 50):
        import mpmath
        with mpmath.workdps(dps + 10):
            return mpmath.mpf(self.a.numerator) / self.a.denominator + \
                mpmath.mpf(self.b.numerator) / self.b.denominator * mpmath.sqrt(self.d)

    def minimal_poly(self) -> "Poly":
        """Monic minimal polynomial over Q (degree 1 when b == 0)."""
        if self.b == 0:
            return Poly([-self.a, 1])
        # (x - a)^2 - d b^2
        return Poly([self.a * self.a - self.d * self.b * self.b, -2 * self.a, 1])

    def floor(self) -> int:
        n = math.floor(float(self))
        # correct float error exactly
        while self < n:
            n -= 1
        while self >= n + 1:
            n += 1
        return n

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        mag = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        surd = f"{mag}sqrt({self.d})"
        if self.a == 0:
            return surd if self.b > 0 else "-" + surd
        return f"{self.a} {'+' if self.b > 0 else '-'} {surd}"

    def __repr__(self):
        return f"QuadExtPoint({self.a}, {self.b}, {self.d})"


Endpoint = Union[Fraction, QuadExtPoint, None]


# ---------------------------------------------------------------------------
# Polynomials


class Poly:
    """Univariate polynomial with Fraction coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Sequence[Number]) -> "Poly":
        return reduce(lambda acc, r: acc * cls([-_frac(r), 1]), roots, cls([1]))

    # -- basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise PolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations
    @staticmethod
    def _lift(other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self), len(o))
        return Poly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self) + len(o) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative power of a polynomial")
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: Number) -> "Poly":
        c = _frac(c)
        return Poly([c * a for a in self.coeffs])

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise PolyError("zero divisor")
        rem = list(self.coeffs)
        dq = o.degree
        if self.degree < dq:
            return Poly(), self
        quot = [Fraction(0)] * (self.degree - dq + 1)
        inv = 1 / o.lc
        for k in range(self.degree - dq, -1, -1):
            c = rem[k + dq] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise PolyError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def primitive(self) -> "Poly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        s = 1 if ints[-1] > 0 else -1
        return Poly([s * i // g for i in ints])

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor. Raises when both inputs are zero."""
        a, b = self, other
        if a.is_zero() and b.is_zero():
            raise PolyError("zero divisor")
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "Poly":
        if self.is_zero():
            raise PolyError("zero polynomial")
        if self.degree <= 0:
            return Poly([1])
        return self.exact_div(self.gcd(self.derivative())).monic()

    def compose(self, inner: "Poly") -> "Poly":
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def substitute_square(self) -> "Poly":
        """p(X) -> p(t^2)."""
        out = []
        for c in self.coeffs:
            out.extend([c, Fraction(0)])
        return Poly(out)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def even_in_square(self) -> "Poly":
        """For an even p(t), return q with p(t) = q(t^2)."""
        if not self.is_even():
            raise PolyError(f"{self} is not even")
        return Poly(self.coeffs[0::2])

    def reflect(self) -> "Poly":
        """p(x) -> p(-x)."""
        return Poly([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    # -- evaluation
    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(acc, int):
            return Fraction(acc)
        return acc

    def sign_at(self, x: Endpoint, at_upper: bool = True) -> int:
        """Exact sign of p at a rational, quadratic point or +-infinity.

        ``None`` means +infinity when at_upper else -infinity.
        """
        if self.is_zero():
            return 0
        if x is None:
            s = _sign(self.lc)
            return s if at_upper or self.degree % 2 == 0 else -s
        v = self(x)
        return v.sign() if isinstance(v, QuadExtPoint) else _sign(v)

    # -- display
    def to_str(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                coef = "" if mag == 1 else f"{mag}*"
                body = coef + (var if k == 1 else f"{var}^{k}")
            sgn = "-" if c < 0 else "+"
            terms.append((sgn, body))
        first_sgn, first = terms[0]
        out = ("-" if first_sgn == "-" else "") + first
        for sgn, body in terms[1:]:
            out += f" {sgn} {body}"
        return out

    def int_coeffs(self) -> list[int]:
        """Integer coefficient list of the primitive form (lowest degree first)."""
        return [int(c) for c in self.primitive().coeffs]

    def __repr__(self):
        return f"Poly({self.to_str()})"

    __str__ = to_str


X = Poly.x()


def poly_arith(p: Poly, q: Poly, op: str):
    """Dispatch helper: op in {add, sub, mul, divmod, gcd, derivative}.

    ``derivative`` ignores q.
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "divmod":
        return divmod(p, q)
    if op == "gcd":
        if q.is_zero():
            raise PolyError("zero divisor")
        return p.gcd(q)
    if op == "derivative":
        return p.derivative()
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Rational functions


class RationalFunction:
    """Reduced quotient num/den of polynomials; den is monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly._lift(num) if not isinstance(num, Poly) else num
        den = Poly([1]) if den is None else (Poly._lift(den) if not isinstance(den, Poly) else den)
        if num is None or den is None:
            raise TypeError("RationalFunction needs polynomial or rational inputs")
        if den.is_zero():
            raise PolyError("zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly([1])
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = den.lc
            num, den = num.scale(1 / c), den.scale(1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _lift(other) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Poly, int, Fraction)):
            return RationalFunction(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction(1) / (self ** (-k))
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, x):
        d = self.den(x)
        if (d.is_zero() if isinstance(d, QuadExtPoint) else d == 0):
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return self.num(x) / d

    def substitute_square(self) -> "RationalFunction":
        return RationalFunction(self.num.substitute_square(), self.den.substitute_square())

    def even_in_square(self) -> "RationalFunction":
        """For an even rational function f(t), return g with f(t) = g(t^2)."""
        num, den = self.num, self.den
        if not den.is_even():
            # den odd => num odd as well for f to be even; strip a factor t
            num, den = num.exact_div(X), den.exact_div(X)
        return RationalFunction(num.even_in_square(), den.even_in_square())

    def to_str(self, var: str = "x") -> str:
        if self.den == Poly([1]):
            return self.num.to_str(var)
        return f"({self.num.to_str(var)}) / ({self.den.to_str(var)})"

    def __repr__(self):
        return f"RationalFunction({self.to_str()})"

    __str__ = to_str


# ---------------------------------------------------------------------------
# Intervals


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi); ``None`` endpoints are infinite."""

    lo: Endpoint = None
    hi: Endpoint = None

    def __post_init__(self):
        lo = _frac(self.lo) if isinstance(self.lo, int) else self.lo
        hi = _frac(self.hi) if isinstance(self.hi, int) else self.hi
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo is not None and hi is not None and not _lt(lo, hi):
            raise ValueError(f"empty interval ({lo}, {hi})")

    def contains(self, x) -> bool:
        return (self.lo is None or _lt(self.lo, x)) and (self.hi is None or _lt(x, self.hi))

    def sample(self) -> Fraction:
        """A deterministic rational interior point."""
        lo, hi = self.lo, self.hi
        if lo is None and hi is None:
            return Fraction(0)
        if lo is None:
            return Fraction(_floor(hi) - 1)
        if hi is None:
            return Fraction(_floor(lo) + 1)
        return _rational_between(lo, hi)

    def endpoints_str(self) -> tuple[str, str]:
        return ("-inf" if self.lo is None else str(self.lo),
                "+inf" if self.hi is None else str(self.hi))

    def __str__(self):
        a, b = self.endpoints_str()
        return f"({a}, {b})"


def _lt(a, b) -> bool:
    if isinstance(a, QuadExtPoint):
        return a < b
    if isinstance(b, QuadExtPoint):
        return b > a
    return a < b


def _floor(x) -> int:
    if isinstance(x, QuadExtPoint):
        return x.floor()
    return math.floor(x)


def _rational_between(lo, hi) -> Fraction:
    """Simple rational strictly inside (lo, hi) for exact endpoints."""
    if isinstance(lo, Fraction) and isinstance(hi, Fraction):
        return (lo + hi) / 2
    # at least one quadratic endpoint: bisect rational brackets
    a = Fraction(_floor(lo)) if isinstance(lo, QuadExtPoint) else lo
    b = Fraction(_floor(hi) + 1) if isinstance(hi, QuadExtPoint) else hi
    for _ in range(200):
        m = (a + b) / 2
        if _lt(lo, m) and _lt(m, hi):
            return m
        if not _lt(lo, m):
            a = m
        else:
            b = m
    raise PolyError(f"could not find a rational in ({lo}, {hi})")


def cauchy_bound(p: Poly) -> Fraction:
    """All real roots of p lie in (-B, B)."""
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


# ---------------------------------------------------------------------------
# Sturm machinery


def sturm_sequence(p: Poly) -> list[Poly]:
    """Canonical chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i).

    The last element is a constant multiple of gcd(p, p').
    """
    if p.is_zero():
        raise PolyError("Sturm sequence of the zero polynomial")
    chain = [p]
    d = p.derivative()
    if d.is_zero():
        return chain
    chain.append(d)
    while True:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            return chain
        chain.append(-r)


def _variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sign_variations(chain: Sequence[Poly], x: Endpoint, at_upper: bool = True) -> int:
    return _variations(q.sign_at(x, at_upper) for q in chain)


def _is_root(p: Poly, x: Endpoint) -> bool:
    return x is not None and p.sign_at(x) == 0


def deflate_endpoints(p: Poly, interval: Interval) -> Poly:
    """Divide out the minimal polynomials of any finite endpoints that are roots."""
    for e in (interval.lo, interval.hi):
        if e is None:
            continue
        mp = e.minimal_poly() if isinstance(e, QuadExtPoint) else Poly([-e, 1])
        while p.degree > 0 and _is_root(p, e):
            p = p.exact_div(mp)
    return p


def count_roots(p: Poly, lo: Endpoint = None, hi: Endpoint = None, *,
                deflate: bool = False) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    Endpoints may be rationals, :class:`QuadExtPoint` or ``None`` (infinite).
    An endpoint that is itself a root raises :class:`EndpointRootError`
    unless ``deflate`` is set, in which case it is divided out first.
    """
    if p.is_zero():
        raise PolyError("cannot count roots of the zero polynomial")
    interval = Interval(lo, hi)
    q = p.squarefree_part()
    if deflate:
        q = deflate_endpoints(q, interval)
    for e in (interval.lo, interval.hi):
        if _is_root(q, e):
            raise EndpointRootError(e)
    if q.degree <= 0:
        return 0
    chain = sturm_sequence(q)
    return (sign_variations(chain, interval.lo, at_upper=False)
            - sign_variations(chain, interval.hi, at_upper=True))


# ---------------------------------------------------------------------------
# Isolated roots and decimal refinement


@dataclass
class IsolatedRoot:
    """A real root of ``poly`` located in the open interval (low, high).

    ``exact`` is set when bisection landed on the root itself. ``decimal``
    holds the significant-digit expansion (truncated unless rounding was
    requested) at ``digits`` digits.
    """

    poly: Poly
    low: Fraction
    high: Fraction
    simple: bool = True
    exact: Optional[Fraction] = None
    digits: int = 0
    decimal: str = ""
    rounding: bool = False
    _sign_low: int = field(default=0, repr=False)

    def __post_init__(self):
        if self.exact is None:
            if not self.low < self.high:
                raise PolyError("isolating interval must satisfy low < high")
            self._sign_low = self.poly.sign_at(self.low)

    # comparison of the root against a rational grid point
    def compare(self, x: Fraction) -> int:
        """sign(root - x), tightening the stored interval as a side effect."""
        if self.exact is not None:
            return _sign(self.exact - x)
        if x <= self.low:
            return 1
        if x >= self.high:
            return -1
        v = self.poly(x)
        if v == 0:
            self.exact = x
            self.low = self.high = x
            return 0
        if _sign(v) == self._sign_low:
            self.low = x
            return 1
        self.high = x
        return -1

    def bisect(self, steps: int = 1) -> "IsolatedRoot":
        for _ in range(steps):
            if self.exact is not None:
                break
            self.compare((self.low + self.high) / 2)
        return self

    def contains(self, value) -> bool:
        """Exact test whether ``value`` (rational or quadratic) is this root."""
        if self.exact is not None:
            return value == self.exact
        if not (_lt(self.low, value) and _lt(value, self.high)):
            return False
        v = self.poly(value)
        return (v.is_zero() if isinstance(v, QuadExtPoint) else v == 0)

    def width(self) -> Fraction:
        return Fraction(0) if self.exact is not None else self.high - self.low

    def midpoint(self) -> Fraction:
        return self.exact if self.exact is not None else (self.low + self.high) / 2

    def enclosure(self) -> tuple[Fraction, Fraction]:
        if self.exact is not None:
            return self.exact, self.exact
        return self.low, self.high

    def __float__(self):
        return float(self.midpoint())

    def to_interval_mpf(self, dps: int = 50):
        from mpmath import iv
        lo, hi = self.enclosure()
        saved = iv.dps
        iv.dps = dps
        try:
            return iv.mpf([(iv.mpf(lo.numerator) / lo.denominator).a,
                           (iv.mpf(hi.numerator) / hi.denominator).b])
        finally:
            iv.dps = saved

    def refine_decimal(self, digits: int, rounding: bool = False) -> str:
        self.digits = digits
        self.rounding = rounding
        self.decimal = _decimal_string(self, digits, rounding)
        return self.decimal

    def disjoint_from(self, other: "IsolatedRoot", max_steps: int = 64) -> bool:
        """Refine both enclosures until they separate; False if they never do."""
        for _ in range(max_steps + 1):
            a_lo, a_hi = self.enclosure()
            b_lo, b_hi = other.enclosure()
            if a_hi < b_lo or b_hi < a_lo:
                return True
            if self.exact is not None and other.exact is not None:
                return self.exact != other.exact
            self.bisect()
            other.bisect()
        return False

    def to_dict(self) -> dict:
        lo, hi = self.enclosure()
        return {
            "decimal": self.decimal,
            "digits": self.digits,
            "low": str(lo),
            "high": str(hi),
            "exact": None if self.exact is None else str(self.exact),
            "simple": self.simple,
        }


def _int_floor_search(cmp, lo: int, hi: int) -> int:
    """Largest N in [lo, hi) with cmp(N) >= 0, given cmp(lo) >= 0 > cmp(hi)."""
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if cmp(mid) >= 0:
            lo = mid
        else:
            hi = mid
    return lo


def _decimal_string(root: IsolatedRoot, digits: int, rounding: bool) -> str:
    if digits < 1:
        raise ValueError("precision_digits must be >= 1")
    s = root.compare(Fraction(0))
    if s == 0:
        return "0." + "0" * (digits - 1) if digits > 1 else "0"

    def cmp_abs(x: Fraction) -> int:
        # sign(|root| - x) for x > 0
        return root.compare(x) if s > 0 else -root.compare(-x)

    # decade: 10^e <= |root| < 10^(e+1)
    lo, hi = root.enclosure()
    ref = max(abs(lo), abs(hi))
    e = math.floor(math.log10(ref)) if ref > 0 else 0
    while cmp_abs(Fraction(10) ** e) < 0:
        e -= 1
    while cmp_abs(Fraction(10) ** (e + 1)) >= 0:
        e += 1
    k = digits - 1 - e
    scale = Fraction(10) ** k
    half = Fraction(1, 2) if rounding else Fraction(0)
    # largest N with |root| >= (N - half)/10^k
    n_lo, n_hi = 10 ** (digits - 1), 10 ** digits + 1
    n = _int_floor_search(lambda N: cmp_abs((N - half) / scale), n_lo, n_hi)
    text = str(n)
    if k > 0:
        text = text.rjust(k + 1, "0")
        text = text[:-k] + "." + text[-k:]
    elif k < 0:
        text = text + "0" * (-k)
    return ("-" if s < 0 else "") + text


def isolate_and_refine(p: Poly, interval: Interval = Interval(), precision_digits: int = 6,
                       *, rounding: bool = False) -> list[IsolatedRoot]:
    """Isolate every real root of p in the open interval and refine each one
    to ``precision_digits`` significant digits (truncated by default).

    Raises :class:`EndpointRootError` when a finite endpoint is a root.
    """
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    if p.is_zero():
        raise PolyError("cannot isolate roots of the zero polynomial")
    q = p.squarefree_part()
    for e in (interval.lo, interval.hi):
        if _is_root(q, e):
            raise EndpointRootError(e)
    if q.degree <= 0:
        return []
    chain = sturm_sequence(q)

    def open_count(a: Fraction, b: Fraction) -> int:
        # Sturm counts (a, b]; drop b itself when it is a root
        return sign_variations(chain, a) - sign_variations(chain, b) - (q(b) == 0)

    bound = cauchy_bound(q)
    lo = -bound if interval.lo is None else Fraction(_floor(interval.lo))
    hi = bound if interval.hi is None else Fraction(_floor(interval.hi) + 1)
    if q(lo) == 0:
        lo -= 1
    found: list[IsolatedRoot] = []
    stack = [(lo, hi, open_count(lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and q(a) != 0 and q(b) != 0:
            found.append(IsolatedRoot(q, a, b))
            continue
        m = (a + b) / 2
        if q(m) == 0:
            found.append(IsolatedRoot(q, m, m, exact=m))
        stack.append((m, b, open_count(m, b)))
        stack.append((a, m, open_count(a, m)))

    inside = [r for r in found if _root_in(r, interval)]
    repeated = p.gcd(p.derivative())
    for r in inside:
        if r.exact is not None:
            r.simple = repeated(r.exact) != 0
        else:
            # any root of gcd(p, p') in the enclosure would have to be this root
            r.simple = repeated.degree <= 0 or count_roots(
                repeated, r.low, r.high, deflate=True) == 0
        r.refine_decimal(precision_digits, rounding)
    inside.sort(key=lambda r: r.enclosure()[0])
    return inside


def _root_in(r: IsolatedRoot, interval: Interval) -> bool:
    """Exact membership of an isolated root in an open interval whose endpoints
    are not roots; refines the enclosure off quadratic endpoints as needed."""
    for e, upper in ((interval.lo, False), (interval.hi, True)):
        if e is None:
            continue
        while True:
            lo, hi = r.enclosure()
            if not _lt(lo, e) and lo != e:
                side = 1          # root > e
            elif not _lt(e, hi) and hi != e:
                side = -1         # root < e
            elif r.exact is not None:
                side = 1 if _lt(e, r.exact) else -1
            else:
                r.bisect()
                continue
            break
        if (upper and side > 0) or (not upper and side < 0):
            return False
    return True


# ---------------------------------------------------------------------------
# Positivity certificates


@dataclass(frozen=True)
class PositivityCertificate:
    """p > 0 on the open interval: zero Sturm roots plus one positive sample."""

    polynomial: Poly
    interval: Interval
    sturm_root_count: int
    sample_point: Fraction
    sample_sign: int

    def verify(self) -> bool:
        if self.sturm_root_count != 0 or self.sample_sign != 1:
            return False
        if not self.interval.contains(self.sample_point):
            return False
        n = count_roots(self.polynomial, self.interval.lo, self.interval.hi, deflate=True)
        return n == 0 and self.polynomial(self.sample_point) > 0

    def to_dict(self, var: str = "x") -> dict:
        lo, hi = self.interval.endpoints_str()
        return {
            "polynomial": self.polynomial.to_str(var),
            "coefficients": [str(c) for c in self.polynomial.coeffs],
            "interval": [lo, hi],
            "sturm_root_count": self.sturm_root_count,
            "sample_point": str(self.sample_point),
            "sample_sign": self.sample_sign,
        }


@dataclass(frozen=True)
class NotPositive:
    """Negative verdict from :func:`certify_positive` with a witness."""

    polynomial: Poly
    interval: Interval
    root_count: int
    witness_root: Optional[IsolatedRoot] = None
    witness_point: Optional[Fraction] = None

    def __bool__(self):
        return False


def certify_positive(p: Poly, interval: Interval = Interval()):
    """Return a :class:`PositivityCertificate` when p > 0 on the open interval,
    otherwise a falsy :class:`NotPositive` carrying a witness.

    Finite endpoints that are roots of p are deflated before counting, which
    is sound because the interval is open.
    """
    if p.is_zero():
        raise PolyError("cannot certify the zero polynomial")
    n = count_roots(p, interval.lo, interval.hi, deflate=True)
    if n == 0:
        s = interval.sample()
        sgn = _sign(p(s))
        if sgn > 0:
            return PositivityCertificate(p, interval, 0, s, 1)
        return NotPositive(p, interval, 0, witness_point=s)
    q = deflate_endpoints(p.squarefree_part(), interval)
    roots = isolate_and_refine(q, interval, 6)
    return NotPositive(p, interval, n, witness_root=roots[0])


# ---------------------------------------------------------------------------
# Exact roots of low-degree factors


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of p (distinct, ascending), by the rational root test."""
    if p.is_zero():
        raise PolyError("the zero polynomial has every number as a root")
    q = p.squarefree_part().primitive()
    roots: list[Fraction] = []
    if q[0] == 0:
        roots.append(Fraction(0))
        q = q.exact_div(X)
    if q.degree <= 0:
        return sorted(roots)
    a0, an = int(q.coeffs[0]), int(q.lc)
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and q(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def exact_real_roots(p: Poly) -> list:
    """Exact real roots of p when its irrational part has degree <= 2.

    Rational roots come from :func:`rational_roots`; if the cofactor left
    after removing them is quadratic its roots are returned as
    :class:`QuadExtPoint` values. Roots of higher-degree irreducible parts
    are not included.
    """
    q = p.squarefree_part()
    roots: list = list(rational_roots(q))
    for r in roots:
        q = q.exact_div(Poly([-r, 1]))
    if q.degree == 2:
        c, b, a = q.coeffs
        disc = b * b - 4 * a * c
        if disc > 0:
            s = QuadExtPoint.sqrt(disc)
            roots += [(-b - s) / (2 * a), (-b + s) / (2 * a)]
    return sorted(roots, key=lambda v: (float(v), v))
