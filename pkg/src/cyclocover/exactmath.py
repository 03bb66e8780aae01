"""Exact arithmetic over the rationals: dense univariate polynomials and
rational functions.

Coefficients are `fractions.Fraction` throughout, so every operation is exact.
A polynomial is stored densely as a tuple of coefficients indexed by degree,
with no trailing zeros (the zero polynomial is the empty tuple).  Rational
functions are kept fully reduced with a monic denominator, which gives a
canonical representative for each value.

Rational roots are found without integer factorization: the squarefree part is
isolated with a Sturm chain and each isolating interval is probed with the
smallest-denominator rational it contains, verified by exact evaluation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed; use Fraction")
    return Fraction(value)


class Polynomial:
    """Dense univariate polynomial over Q, immutable and hashable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Sequence) -> "Polynomial":
        """Monic polynomial with the given roots (with multiplicity)."""
        p = cls.one()
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    term = xs
                elif c == -1:
                    term = f"-{xs}"
                else:
                    term = f"{c}*{xs}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            (self[i] + other[i] for i in range(n))
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial((-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial((c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        raise TypeError(f"cannot coerce {other!r} to Polynomial")

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        r = list(self.coeffs)
        dlen = len(other.coeffs)
        lead = other.coeffs[-1]
        while len(r) >= dlen:
            f = r[-1] / lead
            k = len(r) - dlen
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[i + k] -= f * c
            while r and r[-1] == 0:
                r.pop()
        return Polynomial(q), Polynomial(r)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(self._coerce(other))[1]

    # -- calculus and normal forms --------------------------------------

    def derivative(self) -> "Polynomial":
        return Polynomial((i * self.coeffs[i] for i in range(1, len(self.coeffs))))

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient; canonical scalar form."""
        if not self.coeffs:
            return self
        return self * (1 / self.leading)

    def root_multiplicity(self, c) -> int:
        """Multiplicity of c as a root (0 if not a root)."""
        c = Fraction(c)
        m, p = 0, self
        while p and p(c) == 0:
            p, rem = p.divmod(Polynomial((-c, 1)))
            assert rem.is_zero
            m += 1
        return m

    def deflate(self, c) -> tuple[int, "Polynomial"]:
        """Remove every factor (x - c); return (multiplicity, quotient)."""
        c = Fraction(c)
        m, p = 0, self
        while p and p(c) == 0:
            p, rem = p.divmod(Polynomial((-c, 1)))
            assert rem.is_zero
            m += 1
        return m, p


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q[x] (zero polynomial if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


class RationalFunction:
    """Quotient of polynomials over Q, reduced, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=Polynomial.one()):
        num = Polynomial._coerce(num)
        den = Polynomial._coerce(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g and g.degree > 0:
            num = num // g
            den = den // g
        lead = den.leading
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Polynomial, int, Fraction)):
            return self == RationalFunction(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == Polynomial.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(Polynomial._coerce(other))

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def __call__(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d


def derivative(f: RationalFunction) -> RationalFunction:
    """Exact formal derivative, reduced to lowest terms."""
    f = RationalFunction._coerce(f)
    return RationalFunction(
        f.num.derivative() * f.den - f.num * f.den.derivative(), f.den * f.den
    )


def log_derivative(f: RationalFunction) -> RationalFunction:
    """f'/f fully cancelled; for products of linear powers this is the sum of
    simple poles with the exponents as residues."""
    f = RationalFunction._coerce(f)
    if f.is_zero:
        raise ValueError("log derivative of zero")
    return derivative(f) / f


def order_at(f, c) -> int:
    """Order of vanishing at x = c (negative at a pole).

    Returns the integer m with f = (x-c)^m * g where g(c) is finite and
    nonzero.
    """
    f = RationalFunction._coerce(f)
    if f.is_zero:
        raise ValueError("order of the zero function is undefined")
    c = Fraction(c)
    return f.num.root_multiplicity(c) - f.den.root_multiplicity(c)


# -- rational roots ------------------------------------------------------


def _integer_primitive(p: Polynomial) -> list[int]:
    """Scale to integer coefficients with content 1 (sign of leading kept)."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def _sturm_chain(p: Polynomial) -> list[Polynomial]:
    chain = [p, p.derivative()]
    while chain[-1]:
        rem = chain[-2] % chain[-1]
        if rem.is_zero:
            break
        chain.append(-rem)
    return [q for q in chain if q]


def _sign_changes(chain: list[Polynomial], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """The rational with smallest denominator in the open interval (a, b)."""
    fl = math.floor(a)
    if Fraction(fl + 1) < b:
        return Fraction(fl + 1)
    if a == fl:
        inner = 1 / (b - fl)
        return fl + Fraction(1, math.floor(inner) + 1)
    return fl + 1 / _simplest_between(1 / (b - fl), 1 / (a - fl))


def _rational_root_in_interval(
    f: Polynomial, lo: Fraction, hi: Fraction, den_bound: int
) -> Fraction | None:
    """Search the single root of squarefree f in (lo, hi) for a rational value.

    f(lo) and f(hi) have opposite signs.  Any rational root has denominator
    dividing den_bound, so two candidates differ by more than 1/den_bound^2;
    once the interval is narrower than that, the simplest rational inside is
    the only remaining candidate.
    """
    assert f(lo) * f(hi) < 0
    limit = Fraction(1, den_bound * den_bound + 1)
    neg_lo = f(lo) < 0
    while True:
        cand = _simplest_between(lo, hi)
        if f(cand) == 0:
            return cand
        if hi - lo < limit:
            return None
        mid = (lo + hi) / 2
        v = f(mid)
        if v == 0:
            return mid
        if (v < 0) == neg_lo:
            lo = mid
        else:
            hi = mid


def rational_roots(p: Polynomial) -> tuple[list[tuple[Fraction, int]], Polynomial]:
    """All rational roots of p with multiplicities, plus the monic cofactor.

    The cofactor has no rational roots, and
    leading(p) * prod (x - root)^mult * cofactor == p exactly.

    No integer factorization is performed: real roots of the squarefree part
    are isolated with a Sturm chain and each isolating interval is probed with
    its simplest rational, verified by exact evaluation.
    """
    if p.is_zero:
        raise ValueError("rational roots of the zero polynomial are undefined")
    roots: list[tuple[Fraction, int]] = []
    work = p
    m0, work = work.deflate(0)
    if m0:
        roots.append((Fraction(0), m0))
    if work.degree >= 1:
        sf = work // poly_gcd(work, work.derivative())
        ints = _integer_primitive(sf)
        f = Polynomial(ints)
        den_bound = abs(ints[-1])
        chain = _sturm_chain(f)
        bound = Fraction(1) + max(abs(Fraction(c, ints[-1])) for c in ints)
        for c in _isolated_rational_roots(f, chain, -bound, bound, den_bound):
            mult, work = work.deflate(c)
            assert mult > 0
            roots.append((c, mult))
    roots.sort()
    return roots, work.monic()


def _isolated_rational_roots(f, chain, lo, hi, den_bound) -> list[Fraction]:
    """Rational roots of squarefree f inside (lo, hi), endpoints not roots."""
    found: list[Fraction] = []
    stack = [(lo, hi, _sign_changes(chain, lo) - _sign_changes(chain, hi))]
    while stack:
        a, b, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            c = _rational_root_in_interval(f, a, b, den_bound)
            if c is not None:
                found.append(c)
            continue
        mid = (a + b) / 2
        if f(mid) == 0:
            found.append(mid)
            # split off the root; shrink the excluded window until the Sturm
            # counts confirm no other root was swallowed with it
            eps = (b - a) / (4 * count)
            va = _sign_changes(chain, a)
            vb = _sign_changes(chain, b)
            while True:
                left, right = mid - eps, mid + eps
                vl = _sign_changes(chain, left)
                vr = _sign_changes(chain, right)
                if f(left) != 0 and f(right) != 0 and (va - vl) + (vr - vb) == count - 1:
                    break
                eps = eps / 4
            stack.append((a, left, va - vl))
            stack.append((right, b, vr - vb))
        else:
            va = _sign_changes(chain, a)
            vm = _sign_changes(chain, mid)
            vb = _sign_changes(chain, b)
            stack.append((a, mid, va - vm))
            stack.append((mid, b, vm - vb))
    return found


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: p = leading * prod f_i^i with the f_i squarefree,
    pairwise coprime and monic.  Only nonconstant factors are returned."""
    if p.is_zero:
        raise ValueError("squarefree decomposition of zero is undefined")
    p = p.monic()
    out: list[tuple[Polynomial, int]] = []
    if p.degree < 1:
        return out
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return [(p, 1)]
    w = p // g
    z = p.derivative() // g - w.derivative()
    i = 1
    while w.degree > 0:
        h = poly_gcd(w, z)
        if h.degree > 0:
            out.append((h, i))
        w = w // h
        z = z // h - w.derivative()
        i += 1
    return out
