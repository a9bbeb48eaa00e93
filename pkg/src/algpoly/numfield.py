"""Exact arithmetic and ordering in a real embedded algebraic number field.

A field Q[a] is described by a monic defining polynomial and an interval
isolating one real root, the generator a.  Elements are stored as integer
coefficient vectors of length deg over a single positive integer
denominator, kept in canonical reduced form, so equality and hashing are
structural and the zero test is symbolic.

Sign decisions for nonzero elements are numeric: the element polynomial is
evaluated on an enclosing interval of the generator with outward-rounded
dyadic interval arithmetic.  While the value interval straddles zero, the
working precision of the evaluation is doubled first, then the generator
enclosure is replaced by one with twice the number of correct digits.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    DivisionByZero,
    ElementSyntaxError,
    FieldMismatch,
    NoRootInInterval,
    NotSquareFree,
    ZeroPolynomial,
)

_INITIAL_BITS = 64
_INITIAL_DIGITS = 20  # decimal digits carried by the initial generator enclosure


# ----------------------------------------------------------------------------
# dense univariate polynomials over Fraction, lowest degree first

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _deg(p):
    return len(p) - 1


def _padd(p, q):
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _pscale(p, c):
    return _trim([c * x for x in p])


def _pmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return _trim(out)


def _pdivmod(p, q):
    p = list(p)
    dq = _deg(q)
    if dq < 0:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(_deg(p) - dq + 1, 0)
    while _deg(p) >= dq:
        k = _deg(p) - dq
        c = p[-1] / q[-1]
        quot[k] = c
        for i in range(dq + 1):
            p[k + i] -= c * q[i]
        _trim(p)
    return _trim(quot), p


def _pgcd(p, q):
    p, q = list(p), list(q)
    while q:
        p, q = q, _pdivmod(p, q)[1]
    if p:
        p = _pscale(p, 1 / p[-1])
    return p


def _pxgcd_mod(f, mu):
    """Return (g, s) with s*f = g (mod mu) and g = gcd(f, mu), monic."""
    r0, r1 = list(mu), list(f)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(s0, _pscale(_pmul(q, s1), Fraction(-1)))
    if r0:
        c = 1 / r0[-1]
        r0 = _pscale(r0, c)
        s0 = _pscale(s0, c)
    return r0, s0


def _pderiv(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


def _peval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sturm_chain(p):
    chain = [list(p), _pderiv(p)]
    while chain[-1]:
        rem = _pdivmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(_pscale(rem, Fraction(-1)))
    return [c for c in chain if c]


def _variations(values):
    count = 0
    prev = 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _count_roots(chain, lo, hi):
    """Number of distinct real roots in (lo, hi] by Sturm's theorem."""
    at_lo = _variations([_peval(c, lo) for c in chain])
    at_hi = _variations([_peval(c, hi) for c in chain])
    return at_lo - at_hi


# ----------------------------------------------------------------------------
# dyadic interval evaluation: endpoints are integers at scale 2**-bits

def _scale_down(lo, hi, bits):
    return lo >> bits, -((-hi) >> bits)


def _eval_interval(coeffs, glo, ghi, bits):
    """Interval Horner of the integer polynomial at [glo, ghi]*2**-bits."""
    k = len(coeffs) - 1
    rlo = rhi = coeffs[k] << bits
    for i in range(k - 1, -1, -1):
        p1, p2, p3, p4 = rlo * glo, rlo * ghi, rhi * glo, rhi * ghi
        lo, hi = _scale_down(min(p1, p2, p3, p4), max(p1, p2, p3, p4), bits)
        c = coeffs[i] << bits
        rlo, rhi = lo + c, hi + c
    return rlo, rhi


def _frac_floor_scaled(fr, bits):
    return (fr.numerator << bits) // fr.denominator


def _frac_ceil_scaled(fr, bits):
    return -((-fr.numerator << bits) // fr.denominator)


# ----------------------------------------------------------------------------
# decimal rendering helpers (shared with the io module)

def fixed_decimal_str(fr, digits):
    """Fraction -> fixed point decimal string with `digits` fractional digits."""
    scale = 10 ** digits
    n = (fr.numerator * scale * 2 + fr.denominator) // (fr.denominator * 2)
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def sig_decimal_str(fr, sig):
    """Fraction -> decimal string with `sig` significant digits (plain notation)."""
    if fr == 0:
        return "0." + "0" * (sig - 1) if sig > 1 else "0"
    sign = "-" if fr < 0 else ""
    a = abs(fr)
    exp = 0
    while a >= 10:
        a /= 10
        exp += 1
    while a < 1:
        a *= 10
        exp -= 1
    # a in [1, 10); round to sig digits
    scaled = a * 10 ** (sig - 1)
    n = (scaled.numerator * 2 + scaled.denominator) // (scaled.denominator * 2)
    digits = str(n)
    if len(digits) > sig:  # rounded up to the next power of ten
        exp += 1
        digits = digits[:sig]
    if exp >= sig - 1:
        return sign + digits + "0" * (exp - sig + 1)
    if exp >= 0:
        head, tail = digits[: exp + 1], digits[exp + 1 :]
        return sign + head + ("." + tail if tail else "")
    return sign + "0." + "0" * (-exp - 1) + digits


def sci_str(fr, sig=3):
    """Fraction -> scientific notation string with `sig` significant digits."""
    if fr == 0:
        return "0"
    sign = "-" if fr < 0 else ""
    a = abs(fr)
    exp = 0
    while a >= 10:
        a /= 10
        exp += 1
    while a < 1:
        a *= 10
        exp -= 1
    scaled = a * 10 ** (sig - 1)
    n = (scaled.numerator * 2 + scaled.denominator) // (scaled.denominator * 2)
    digits = str(n)
    if len(digits) > sig:
        exp += 1
        digits = digits[:sig]
    mant = digits[0] + ("." + digits[1:] if sig > 1 else "")
    return f"{sign}{mant}e{exp:+03d}" if exp < 0 else f"{sign}{mant}e{exp}"


# ----------------------------------------------------------------------------

class EmbeddingInterval:
    """Closed rational interval meant to isolate the generator."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        if not self.lo < self.hi:
            raise NoRootInInterval(f"empty embedding interval [{lo}, {hi}]")

    @classmethod
    def from_center(cls, center, radius):
        center, radius = Fraction(center), Fraction(radius)
        return cls(center - radius, center + radius)

    def __repr__(self):
        return f"EmbeddingInterval({self.lo}, {self.hi})"


class NumberField:
    """A real embedded algebraic number field Q[a].

    The generator enclosure only ever shrinks; refinement is by exact
    bisection against the defining polynomial, so concurrent readers may use
    a stale (wider) enclosure safely.
    """

    def __init__(self, min_poly, interval, gen_name="a"):
        coeffs = _trim([Fraction(c) for c in min_poly])
        if _deg(coeffs) < 1:
            raise ZeroPolynomial("defining polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            coeffs = _pscale(coeffs, 1 / coeffs[-1])
        if isinstance(interval, (tuple, list)):
            interval = EmbeddingInterval(*interval)
        self.min_poly = tuple(coeffs)
        self.degree = _deg(coeffs)
        self.gen_name = gen_name
        self.embedding = interval

        g = _pgcd(list(coeffs), _pderiv(list(coeffs)))
        if _deg(g) > 0:
            raise NotSquareFree("defining polynomial has a repeated root")

        lo, hi = interval.lo, interval.hi
        if self.degree == 1:
            root = -coeffs[0]
            if not (lo <= root <= hi):
                raise NoRootInInterval(f"rational root {root} outside [{lo}, {hi}]")
            self._lo = self._hi = root
        else:
            if _peval(coeffs, lo) == 0 or _peval(coeffs, hi) == 0:
                raise NoRootInInterval("interval endpoint is a rational root")
            chain = _sturm_chain(coeffs)
            n_roots = _count_roots(chain, lo, hi)
            if n_roots != 1:
                raise NoRootInInterval(
                    f"interval [{lo}, {hi}] contains {n_roots} roots, need exactly 1"
                )
            self._lo, self._hi = lo, hi
        self._digits = 0
        self._pow_rows = self._reduction_rows()
        self.zero = self._make((0,) * self.degree, 1)
        self.one = self._make((1,) + (0,) * (self.degree - 1), 1)
        if self.degree > 1:
            self.refine_generator(_INITIAL_DIGITS)

    # -- construction helpers

    def _reduction_rows(self):
        """Exact representations of a**k for k = deg .. 2*deg-2."""
        n = self.degree
        rows = []
        cur = [-c for c in self.min_poly[:n]]  # a**n, the polynomial being monic
        for _ in range(n - 1):
            rows.append(self._rationalize(cur))
            cur = [Fraction(0)] + cur
            top = cur.pop()
            if top:
                for i in range(n):
                    cur[i] += top * -self.min_poly[i]
        return tuple(rows)

    @staticmethod
    def _rationalize(fracs):
        den = 1
        for f in fracs:
            den = lcm(den, f.denominator)
        return tuple(int(f * den) for f in fracs), den

    def _make(self, coeffs, den):
        if den < 0:
            coeffs = tuple(-c for c in coeffs)
            den = -den
        g = den
        for c in coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            coeffs = tuple(c // g for c in coeffs)
            den //= g
        return NFElem(self, coeffs, den)

    # -- element factories

    def element(self, coeffs, den=1):
        """Element from rational coefficients c0 + c1*a + ... (low to high)."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector longer than the field degree")
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        d = Fraction(den)
        big = 1
        for c in coeffs:
            big = lcm(big, (c / d).denominator)
        return self._make(tuple(int(c / d * big) for c in coeffs), big)

    def from_rational(self, value):
        value = Fraction(value)
        return self._make(
            (value.numerator,) + (0,) * (self.degree - 1), value.denominator
        )

    def gen(self):
        if self.degree == 1:
            return self.from_rational(-self.min_poly[0])
        return self._make((0, 1) + (0,) * (self.degree - 2), 1)

    def parse(self, text):
        return parse_elem(text, self)

    # -- generator enclosure

    def generator_enclosure(self):
        return self._lo, self._hi

    @property
    def generator_digits(self):
        return self._digits

    def refine_generator(self, digits):
        """Shrink the enclosure until its width is at most 10**-digits."""
        if self.degree == 1:
            self._digits = max(self._digits, digits)
            return
        target = Fraction(1, 10 ** digits)
        lo, hi = self._lo, self._hi
        sign_lo = 1 if _peval(self.min_poly, lo) > 0 else -1
        while hi - lo > target:
            mid = (lo + hi) / 2
            v = _peval(self.min_poly, mid)
            if v == 0:  # cannot happen for an irreducible polynomial of degree > 1
                lo = hi = mid
                break
            if (1 if v > 0 else -1) == sign_lo:
                lo = mid
            else:
                hi = mid
        self._lo, self._hi = lo, hi
        self._digits = max(self._digits, digits)

    def _gen_scaled(self, bits):
        return _frac_floor_scaled(self._lo, bits), _frac_ceil_scaled(self._hi, bits)

    def __repr__(self):
        poly = render_poly(self.min_poly, 1, self.gen_name)
        return f"NumberField({poly}, [{self.embedding.lo}, {self.embedding.hi}])"


def field_create(min_poly, interval, gen_name="a"):
    """Create a field from a rational polynomial and an isolating interval."""
    return NumberField(min_poly, interval, gen_name=gen_name)


def rational_field():
    """Degree-1 field isomorphic to Q (generator fixed at 1)."""
    return NumberField([-1, 1], EmbeddingInterval(0, 2))


class NFElem:
    """Field element: integer coefficient vector over a positive denominator."""

    __slots__ = ("field", "coeffs", "den", "_sign")

    def __init__(self, field, coeffs, den):
        self.field = field
        self.coeffs = coeffs
        self.den = den
        self._sign = None

    # -- structure

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        """The rational value if all higher coefficients vanish, else None."""
        if any(self.coeffs[1:]):
            return None
        return Fraction(self.coeffs[0], self.den)

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.field is not self.field:
                raise FieldMismatch("operands belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- ring operations

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        L = lcm(self.den, o.den)
        f1, f2 = L // self.den, L // o.den
        return self.field._make(
            tuple(a * f1 + b * f2 for a, b in zip(self.coeffs, o.coeffs)), L
        )

    __radd__ = __add__

    def __neg__(self):
        e = NFElem(self.field, tuple(-c for c in self.coeffs), self.den)
        if self._sign is not None:
            e._sign = -self._sign
        return e

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        n = f.degree
        if n == 1:
            return f._make((self.coeffs[0] * o.coeffs[0],), self.den * o.den)
        a, b = self.coeffs, o.coeffs
        if not any(b[1:]):  # rational factor
            return f._make(tuple(c * b[0] for c in a), self.den * o.den)
        if not any(a[1:]):
            return f._make(tuple(c * a[0] for c in b), self.den * o.den)
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        den = self.den * o.den
        if not any(conv[n:]):
            return f._make(tuple(conv[:n]), den)
        big = 1
        for k in range(n, 2 * n - 1):
            if conv[k]:
                big = lcm(big, f._pow_rows[k - n][1])
        acc = [c * big for c in conv[:n]]
        for k in range(n, 2 * n - 1):
            if conv[k]:
                row, rden = f._pow_rows[k - n]
                m = conv[k] * (big // rden)
                for i in range(n):
                    acc[i] += m * row[i]
        return f._make(tuple(acc), den * big)

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        r = self.is_rational()
        f = self.field
        if r is not None:
            return f.from_rational(1 / r)
        poly = [Fraction(c, self.den) for c in self.coeffs]
        g, s = _pxgcd_mod(_trim(poly), list(f.min_poly))
        if _deg(g) > 0:
            raise DivisionByZero(
                "element is a zero divisor (defining polynomial is reducible)"
            )
        return f.element(_pscale(s, 1 / g[0]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = o.is_rational()
        if r is not None:
            if r == 0:
                raise DivisionByZero("division by zero")
            return self * self.field.from_rational(1 / r)
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- ordering

    def sign(self):
        """Exact sign in {-1, 0, +1}; zero is decided symbolically."""
        if self._sign is not None:
            return self._sign
        if not any(self.coeffs):
            self._sign = 0
            return 0
        if not any(self.coeffs[1:]):
            self._sign = 1 if self.coeffs[0] > 0 else -1
            return self._sign
        f = self.field
        bits = _INITIAL_BITS
        while True:
            glo, ghi = f._gen_scaled(bits)
            rlo, rhi = _eval_interval(self.coeffs, glo, ghi, bits)
            if rlo > 0:
                self._sign = 1
                return 1
            if rhi < 0:
                self._sign = -1
                return -1
            bits *= 2  # improve the element approximation first
            glo, ghi = f._gen_scaled(bits)
            rlo, rhi = _eval_interval(self.coeffs, glo, ghi, bits)
            if rlo > 0:
                self._sign = 1
                return 1
            if rhi < 0:
                self._sign = -1
                return -1
            f.refine_generator(2 * max(f._digits, 1))  # then double generator digits

    def compare(self, other):
        return (self - other).sign()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def enclosure(self, width=None):
        """Rational interval containing the value, at most `width` wide."""
        r = self.is_rational()
        if r is not None:
            return r, r
        f = self.field
        bits = _INITIAL_BITS
        while True:
            glo, ghi = f._gen_scaled(bits)
            rlo, rhi = _eval_interval(self.coeffs, glo, ghi, bits)
            scale = (1 << bits) * self.den
            lo, hi = Fraction(rlo, scale), Fraction(rhi, scale)
            if width is None or hi - lo <= width:
                return lo, hi
            bits *= 2
            f.refine_generator(2 * max(f._digits, 1))

    def approx(self, digits=15):
        """Rational approximation within 10**-digits of the exact value."""
        lo, hi = self.enclosure(Fraction(1, 10 ** digits))
        return (lo + hi) / 2

    def floor(self):
        """Largest integer <= value, resolved exactly."""
        r = self.is_rational()
        if r is not None:
            return r.numerator // r.denominator
        lo, hi = self.enclosure(Fraction(1, 2))
        fl = lo.numerator // lo.denominator
        fh = hi.numerator // hi.denominator
        if fl == fh:
            return fl
        # exactly one integer boundary in the enclosure: decide by exact sign
        return fh if (self - fh).sign() >= 0 else fh - 1

    def __float__(self):
        return float(self.approx(17))

    # -- identity

    def __eq__(self, other):
        if isinstance(other, NFElem):
            return (
                self.field is other.field
                and self.coeffs == other.coeffs
                and self.den == other.den
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() == Fraction(other)
        return NotImplemented

    def __hash__(self):
        r = self.is_rational()
        if r is not None:
            return hash(r)
        return hash((self.coeffs, self.den))

    def __repr__(self):
        return render_elem(self)


# ----------------------------------------------------------------------------
# element text grammar:  integer | rational p/q | ( polynomial in a )
# inside parentheses, terms joined by +/-, powers as a^k, an optional
# "~ decimal" approximation tail is ignored.

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|\*\*|[-+*/^()~]|\S)")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def parse_poly_body(inner, gen_name):
    """Terms of a polynomial literal (no parentheses), as power -> Fraction."""
    tokens = _tokenize(inner)
    coeffs = {}
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        tok = tokens[i][0]
        if tok in "+-":
            if tok == "-":
                sign = -1
            i += 1
        elif not first:
            raise ElementSyntaxError(f"expected + or - at column {tokens[i][1]}")
        if i >= n:
            raise ElementSyntaxError("dangling sign in element literal")
        first = False
        coef = Fraction(1)
        have_coef = False
        tok = tokens[i][0]
        if tok.isdigit():
            num = int(tok)
            i += 1
            if i < n and tokens[i][0] == "/":
                i += 1
                if i >= n or not tokens[i][0].isdigit():
                    raise ElementSyntaxError("expected denominator after /")
                den = int(tokens[i][0])
                if den == 0:
                    raise ElementSyntaxError("zero denominator")
                coef = Fraction(num, den)
                i += 1
            else:
                coef = Fraction(num)
            have_coef = True
            if i < n and tokens[i][0] in ("*", "**"):
                if tokens[i][0] == "**":
                    raise ElementSyntaxError("use ^ for powers")
                i += 1
                if i >= n:
                    raise ElementSyntaxError("dangling * in element literal")
        power = 0
        if i < n and tokens[i][0][0].isalpha():
            name = tokens[i][0]
            if name != gen_name:
                raise ElementSyntaxError(
                    f"unknown symbol {name!r} (generator is {gen_name!r})"
                )
            i += 1
            power = 1
            if i < n and tokens[i][0] == "^":
                i += 1
                if i >= n or not tokens[i][0].isdigit():
                    raise ElementSyntaxError("expected integer exponent after ^")
                power = int(tokens[i][0])
                i += 1
        elif not have_coef:
            raise ElementSyntaxError(
                f"unexpected token {tokens[i][0]!r} at column {tokens[i][1]}"
            )
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
    return coeffs


def parse_elem(text, field):
    """Parse a field element literal."""
    s = text.strip()
    if not s:
        raise ElementSyntaxError("empty element literal")
    if not s.startswith("("):
        return _parse_plain_rational(s, field)
    if not s.endswith(")"):
        raise ElementSyntaxError(f"unbalanced parentheses in {text!r}")
    inner = s[1:-1]
    if "~" in inner:
        inner = inner.split("~", 1)[0]
    coeffs = parse_poly_body(inner, field.gen_name)
    result = field.element(
        [coeffs.get(k, Fraction(0)) for k in range(field.degree)]
    )
    for power, coef in coeffs.items():
        if power >= field.degree and coef:
            # high powers reduce through the field (rare in practice)
            result = result + field.from_rational(coef) * field.gen() ** power
    return result


def _parse_plain_rational(s, field):
    m = re.fullmatch(r"([+-]?\d+)(?:\s*/\s*(\d+))?", s)
    if not m:
        raise ElementSyntaxError(f"not a rational literal: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ElementSyntaxError("zero denominator")
    return field.from_rational(Fraction(num, den))


def _rat_str(fr):
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def render_poly(coeffs, den, gen_name):
    """Polynomial part of the rendering, highest power first, no spaces."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k], den) if not isinstance(coeffs[k], Fraction) else coeffs[k] / den
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = _rat_str(c)
        else:
            var = gen_name if k == 1 else f"{gen_name}^{k}"
            body = var if c == 1 else f"{_rat_str(c)}*{var}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(sign + body)
    return "".join(parts) if parts else "0"


def render_elem(x, approx_digits=6):
    """Canonical text form; non-rational values carry a decimal approximation."""
    r = x.is_rational()
    if r is not None:
        return _rat_str(r)
    poly = render_poly(x.coeffs, x.den, x.field.gen_name)
    approx = fixed_decimal_str(x.approx(approx_digits + 3), approx_digits)
    return f"({poly} ~ {approx})"
