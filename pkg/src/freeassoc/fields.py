"""Exact scalar arithmetic: the rationals and finite fields GF(p^k).

Representation
--------------
Rational elements wrap :class:`fractions.Fraction` (always reduced, positive
denominator), so canonical form is automatic and integers never overflow.

An element of GF(p^k) is a coefficient tuple ``(c0, ..., c_{k-1})`` of ints in
``0..p-1``, meaning ``c0 + c1*w + ... + c_{k-1}*w^(k-1)`` in GF(p)[w] reduced
by a monic irreducible modulus of degree k.  GF(p) is the k = 1 case with
modulus ``w``.  Two Field objects with equal parameters are interchangeable.

Field automorphisms are Frobenius powers ``a -> a^(p^e)`` with ``0 <= e < k``
(the identity is the only automorphism offered over the rationals).

Text syntax
-----------
Rationals print/parse as ``a`` or ``a/b``; GF(p) elements as integers
``0..p-1``; GF(p^k) elements as polynomials in ``w`` with descending powers,
e.g. ``w^2+w+1`` or ``2*w+1``.  ``parse_w_poly``/``format_w_poly`` handle the
``w``-polynomial syntax also used for moduli in field specs and map files.
"""

from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    FieldLiteralError,
    FieldMismatchError,
    InfiniteFieldError,
    ParseError,
)

__all__ = [
    "Field",
    "FieldElement",
    "FieldAut",
    "rationals",
    "finite_field",
    "parse_w_poly",
    "format_w_poly",
]


# ---------------------------------------------------------------------------
# GF(p)[w] helpers (little-endian coefficient lists of ints mod p)
# ---------------------------------------------------------------------------

def _trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def _poly_divmod(a, b, p):
    """Quotient and remainder of a by b in GF(p)[w]; b must be nonzero."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    deg_b = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    quo = [0] * max(len(a) - deg_b, 0)
    while len(a) - 1 >= deg_b and a:
        shift = len(a) - 1 - deg_b
        factor = (a[-1] * inv_lead) % p
        quo[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * c) % p
        _trim(a)
    return _trim(quo), a


def _poly_inverse(a, modulus, p):
    """Inverse of a modulo the field modulus, by the extended Euclid algorithm."""
    r0, r1 = _trim(list(modulus)), _trim(list(a))
    t0, t1 = [], [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _poly_add(t0, [(-c) % p for c in _poly_mul(q, t1, p)], p)
    # r0 is the gcd, a nonzero constant since the modulus is irreducible
    scale = pow(r0[0], p - 2, p)
    return _trim([(c * scale) % p for c in t0])


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _iter_monic(p, degree):
    """All monic polynomials of the given degree over GF(p), as lists."""
    count = p**degree
    for n in range(count):
        coeffs = []
        m = n
        for _ in range(degree):
            coeffs.append(m % p)
            m //= p
        coeffs.append(1)
        yield coeffs


def _is_irreducible(poly, p):
    """Trial division by all monic polynomials of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in _iter_monic(p, d):
            _, rem = _poly_divmod(poly, cand, p)
            if not rem:
                return False
    return True


def _default_modulus(p, k):
    """First irreducible monic degree-k polynomial in counting order.

    Counting order is little-endian base p, so this reproduces the usual
    small moduli: w^2+w+1 for GF(4), w^2+1 for GF(9).
    """
    for cand in _iter_monic(p, k):
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def format_w_poly(coeffs):
    """Render a little-endian GF(p) coefficient sequence as text like ``w^2+w+1``."""
    parts = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if c == 0:
            continue
        if j == 0:
            parts.append(str(c))
        else:
            head = "w" if j == 1 else f"w^{j}"
            parts.append(head if c == 1 else f"{c}*{head}")
    return "+".join(parts) if parts else "0"


def parse_w_poly(text, p):
    """Parse ``w``-polynomial text like ``w^2+2*w+1`` into a coefficient tuple."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty w-polynomial")
    coeffs = {}
    sign = 1
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    start = i
    while i <= len(s):
        if i == len(s) or s[i] in "+-":
            term = s[start:i]
            if not term:
                raise ParseError("empty term in w-polynomial", pos=start)
            c, j = _parse_w_term(term, start)
            coeffs[j] = (coeffs.get(j, 0) + sign * c) % p
            if i < len(s):
                sign = -1 if s[i] == "-" else 1
                start = i + 1
        i += 1
    if not coeffs:
        return ()
    out = [0] * (max(coeffs) + 1)
    for j, c in coeffs.items():
        out[j] = c % p
    return tuple(_trim(out))


def _parse_w_term(term, pos):
    """One w-polynomial term: ``c``, ``w``, ``c*w``, ``w^j`` or ``c*w^j``."""
    c = 1
    if "*" in term:
        left, _, term = term.partition("*")
        if not left.isdigit():
            raise ParseError(f"bad coefficient {left!r} in w-polynomial", pos=pos)
        c = int(left)
    if term.isdigit():
        if c != 1:
            raise ParseError("two numeric factors in w-polynomial term", pos=pos)
        return int(term), 0
    if term == "w":
        return c, 1
    if term.startswith("w^") and term[2:].isdigit():
        return c, int(term[2:])
    raise ParseError(f"bad w-polynomial term {term!r}", pos=pos)


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class Field:
    """A field descriptor: the rationals, or GF(p^k) with a fixed modulus.

    Construct through :func:`rationals` or :func:`finite_field`.
    """

    __slots__ = ("char", "degree", "modulus", "_reductions")

    def __init__(self, char, degree=1, modulus=None):
        self.char = char            # 0 for the rationals
        self.degree = degree
        self.modulus = modulus      # little-endian tuple, monic, or None for Q
        self._reductions = None
        if char:
            if not _is_prime(char):
                raise ValueError(f"{char} is not prime")
            if degree < 1:
                raise ValueError("extension degree must be >= 1")
            if len(modulus) != degree + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of the extension degree")
            if degree > 1 and not _is_irreducible(list(modulus), char):
                raise ValueError(
                    f"modulus {format_w_poly(modulus)} is reducible over GF({char})"
                )
            # w^j mod modulus for j up to 2(k-1), so products reduce by table
            reductions = []
            for j in range(2 * degree - 1):
                power = [0] * j + [1]
                _, rem = _poly_divmod(power, list(modulus), char)
                rem = rem + [0] * (degree - len(rem))
                reductions.append(tuple(rem))
            self._reductions = tuple(reductions)

    # -- identity ----------------------------------------------------------

    @property
    def is_finite(self):
        return self.char != 0

    def size(self):
        if not self.is_finite:
            raise InfiniteFieldError("the rationals are infinite")
        return self.char**self.degree

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.char == other.char
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.char, self.degree, self.modulus))

    def __repr__(self):
        return f"Field({self.spec()})"

    def spec(self):
        """The field-spec text form: ``Q`` or ``gf q [modulus ...]``."""
        if not self.is_finite:
            return "Q"
        if self.degree == 1:
            return f"gf {self.char}"
        return f"gf {self.size()} modulus {format_w_poly(self.modulus)}"

    # -- element construction ----------------------------------------------

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        if self.is_finite:
            return FieldElement(self, (n % self.char,) + (0,) * (self.degree - 1))
        return FieldElement(self, Fraction(n))

    def from_fraction(self, num, den=1):
        if self.is_finite:
            a = self.from_int(num)
            return a / self.from_int(den)
        return FieldElement(self, Fraction(num, den))

    def from_coeffs(self, coeffs):
        """Element of GF(p^k) from an iterable of w-coefficients (low power first)."""
        if not self.is_finite:
            raise FieldMismatchError("coefficient tuples only describe finite fields")
        value = [c % self.char for c in coeffs]
        if len(value) > self.degree:
            _, value = _poly_divmod(value, list(self.modulus), self.char)
        value = value + [0] * (self.degree - len(value))
        return FieldElement(self, tuple(value[: self.degree]))

    def element(self, value):
        """Coerce an int, Fraction, FieldElement, or coefficient tuple."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field!r} given to {self!r}")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            if self.is_finite:
                return self.from_fraction(value.numerator, value.denominator)
            return FieldElement(self, value)
        if isinstance(value, tuple):
            return self.from_coeffs(value)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def elements(self):
        """All field elements, in base-p counting order.  Finite fields only."""
        if not self.is_finite:
            raise InfiniteFieldError("cannot enumerate the rationals")
        p, k = self.char, self.degree
        for n in range(p**k):
            coeffs = []
            m = n
            for _ in range(k):
                coeffs.append(m % p)
                m //= p
            yield FieldElement(self, tuple(coeffs))

    def frobenius(self, exponent=1):
        return FieldAut(self, exponent)

    def identity_aut(self):
        return FieldAut(self, 0)

    def parse_scalar(self, text):
        """Parse standalone scalar text (``a``, ``a/b``, or a w-polynomial)."""
        s = text.strip()
        if not s:
            raise ParseError("empty scalar")
        neg = s.startswith("-")
        if neg:
            s = s[1:].strip()
        if "/" in s:
            num, _, den = s.partition("/")
            if not (num.strip().isdigit() and den.strip().isdigit()):
                raise ParseError(f"bad rational literal {text!r}")
            if self.is_finite:
                raise FieldLiteralError("rational literals require the rational field")
            val = self.from_fraction(int(num), int(den))
        elif s.isdigit():
            val = self.from_int(int(s))
        elif self.is_finite and self.degree > 1:
            val = self.from_coeffs(parse_w_poly(s, self.char))
        else:
            raise ParseError(f"bad scalar literal {text!r} for {self.spec()}")
        return -val if neg else val


def rationals():
    """The field of rational numbers."""
    return Field(0)


def finite_field(q, modulus=None):
    """GF(q) for a prime power q = p^k.

    ``modulus`` may be w-polynomial text or a little-endian coefficient tuple;
    when omitted, the first irreducible monic degree-k polynomial in counting
    order is used (w^2+w+1 for GF(4), w^2+1 for GF(9)).
    """
    p, k = _factor_prime_power(q)
    if modulus is None:
        mod = (0, 1) if k == 1 else _default_modulus(p, k)
    else:
        if isinstance(modulus, str):
            mod = parse_w_poly(modulus, p)
        else:
            mod = tuple(c % p for c in modulus)
    return Field(p, k, mod)


def _factor_prime_power(q):
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")  # unreachable


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class FieldElement:
    """An immutable field element in canonical form.

    Arithmetic is exact; mixing elements of different fields raises
    :class:`FieldMismatchError`.  Ints coerce on the fly (``a + 1``).
    """

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"mixed fields: {self.field.spec()} and {other.field.spec()}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return None

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        if self.field.is_finite:
            return not any(self.value)
        return self.value == 0

    def is_one(self):
        return self == self.field.one()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.field
        if f.is_finite:
            p = f.char
            if f.degree == 1:
                return FieldElement(f, ((self.value[0] + other.value[0]) % p,))
            return FieldElement(
                f, tuple((a + b) % p for a, b in zip(self.value, other.value))
            )
        return FieldElement(f, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.is_finite:
            p = f.char
            return FieldElement(f, tuple((-a) % p for a in self.value))
        return FieldElement(f, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.field
        if f.is_finite:
            p = f.char
            if f.degree == 1:
                return FieldElement(f, ((self.value[0] * other.value[0]) % p,))
            k = f.degree
            conv = [0] * (2 * k - 1)
            for i, ai in enumerate(self.value):
                if ai:
                    for j, bj in enumerate(other.value):
                        conv[i + j] += ai * bj
            out = list(conv[:k])
            reductions = f._reductions
            for j in range(k, 2 * k - 1):
                cj = conv[j]
                if cj:
                    rj = reductions[j]
                    for i in range(k):
                        out[i] += cj * rj[i]
            return FieldElement(f, tuple(v % p for v in out))
        return FieldElement(f, self.value * other.value)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZeroError("zero has no inverse")
        f = self.field
        if f.is_finite:
            if f.degree == 1:
                return FieldElement(f, (pow(self.value[0], f.char - 2, f.char),))
            inv = _poly_inverse(list(self.value), list(f.modulus), f.char)
            inv = inv + [0] * (f.degree - len(inv))
            return FieldElement(f, tuple(inv))
        return FieldElement(f, 1 / self.value)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- text ----------------------------------------------------------------

    def is_prime_constant(self):
        """True when the element lies in the prime field (prints as an int)."""
        if not self.field.is_finite:
            return self.value.denominator == 1
        return all(c == 0 for c in self.value[1:])

    def __str__(self):
        if self.field.is_finite:
            if self.is_prime_constant():
                return str(self.value[0])
            return format_w_poly(self.value)
        return str(self.value)

    def __repr__(self):
        return f"<{self.field.spec()}: {self}>"


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

class FieldAut:
    """A field automorphism: the Frobenius power a -> a^(p^e) on GF(p^k).

    Over the rationals only the identity (exponent 0) exists.  Exponents are
    normalized modulo k, so composition and inversion stay in range.
    """

    __slots__ = ("field", "exponent")

    def __init__(self, field, exponent=0):
        if not field.is_finite and exponent != 0:
            raise ValueError("the rationals admit only the identity automorphism")
        self.field = field
        self.exponent = exponent % field.degree if field.is_finite else 0

    def __call__(self, a):
        if not isinstance(a, FieldElement) or a.field != self.field:
            raise FieldMismatchError("automorphism applied to a foreign element")
        if not self.field.is_finite or self.exponent == 0:
            return a
        out = a
        for _ in range(self.exponent):
            out = out**self.field.char
        return out

    def is_identity(self):
        return self.exponent == 0

    def compose(self, other):
        if other.field != self.field:
            raise FieldMismatchError("automorphisms of different fields")
        return FieldAut(self.field, self.exponent + other.exponent)

    def inverse(self):
        return FieldAut(self.field, -self.exponent)

    def __eq__(self, other):
        return (
            isinstance(other, FieldAut)
            and self.field == other.field
            and self.exponent == other.exponent
        )

    def __hash__(self):
        return hash((self.field, self.exponent))

    def __repr__(self):
        return f"frob^{self.exponent}"
