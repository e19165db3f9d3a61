"""Sparse noncommutative polynomials over an exact field.

A *word* is a tuple of 1-based variable indices; the empty tuple is the unit
monomial.  A polynomial is a finite map word -> nonzero coefficient, attached
to a :class:`FreeAlgebra` (field + arity).  Multiplication concatenates words
bilinearly and never commutes; all arithmetic is exact.

Canonical text output lists terms in deglex order (total degree first, then
lexicographic on index sequences), which makes printed forms unique and
equality assertions diff-friendly.  Variables print as ``t`` at arity 1,
``x``, ``y``, ``z``, ``t`` up to arity 4, and ``x1..xn`` beyond.

The degree of the zero polynomial is the distinguished :data:`MINUS_INFINITY`
marker, which compares below every integer.
"""

import itertools

from .errors import AlgebraMismatchError, InfiniteFieldError
from .fields import FieldElement

__all__ = [
    "FreeAlgebra",
    "NcPoly",
    "CommPoly",
    "MINUS_INFINITY",
    "deglex_key",
    "iter_words",
]


class _MinusInfinity:
    """Degree of the zero polynomial; less than every int, equal only to itself."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "-oo"


MINUS_INFINITY = _MinusInfinity()


def deglex_key(word):
    """Sort key realizing the deglex order on words."""
    return (len(word), word)


def iter_words(arity, max_degree):
    """All words in deglex order, degree 0 through max_degree inclusive."""
    letters = range(1, arity + 1)
    for d in range(max_degree + 1):
        yield from itertools.product(letters, repeat=d)


def _letter_counts(word, arity):
    counts = [0] * arity
    for i in word:
        counts[i - 1] += 1
    return tuple(counts)


class FreeAlgebra:
    """A free associative algebra: a coefficient field and a finite arity."""

    __slots__ = ("field", "arity")

    def __init__(self, field, arity):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        self.field = field
        self.arity = arity

    def __eq__(self, other):
        return (
            isinstance(other, FreeAlgebra)
            and self.field == other.field
            and self.arity == other.arity
        )

    def __hash__(self):
        return hash((self.field, self.arity))

    def __repr__(self):
        return f"FreeAlgebra({self.field.spec()!r}, arity={self.arity})"

    # -- names ---------------------------------------------------------------

    def var_names(self):
        if self.arity == 1:
            return ["t"]
        if self.arity <= 4:
            return list("xyzt")[: self.arity]
        return [f"x{i}" for i in range(1, self.arity + 1)]

    def var_index(self, name):
        """1-based index for a variable name, or None if unknown here."""
        if name.startswith("x") and name[1:].isdigit():
            i = int(name[1:])
            return i if 1 <= i <= self.arity else None
        if self.arity == 1:
            return 1 if name in ("x", "t") else None
        if self.arity > 4:
            return None
        pos = "xyzt"[: self.arity].find(name)
        return pos + 1 if pos >= 0 else None

    # -- constructors ----------------------------------------------------------

    def zero(self):
        return NcPoly(self, {})

    def one(self):
        return NcPoly(self, {(): self.field.one()})

    def scalar(self, c):
        c = self.field.element(c)
        return NcPoly(self, {(): c} if c else {})

    def gen(self, i):
        if not 1 <= i <= self.arity:
            raise ValueError(f"generator index {i} out of range 1..{self.arity}")
        return NcPoly(self, {(i,): self.field.one()})

    def gens(self):
        return [self.gen(i) for i in range(1, self.arity + 1)]

    def from_word(self, word, coeff=1):
        self._check_word(word)
        c = self.field.element(coeff)
        return NcPoly(self, {tuple(word): c} if c else {})

    def poly(self, terms):
        """Build from a word -> coefficient mapping, dropping zeros."""
        clean = {}
        for word, c in terms.items():
            self._check_word(word)
            c = self.field.element(c)
            if c:
                clean[tuple(word)] = c
        return NcPoly(self, clean)

    def parse(self, text):
        from .parsing import parse_poly

        return parse_poly(text, self)

    def _check_word(self, word):
        for i in word:
            if not 1 <= i <= self.arity:
                raise ValueError(f"letter {i} outside 1..{self.arity}")

    # -- enumeration -------------------------------------------------------------

    def words(self, max_degree):
        return iter_words(self.arity, max_degree)

    def word_count(self, max_degree):
        n = self.arity
        return sum(n**d for d in range(max_degree + 1))

    def all_polys(self, max_degree):
        """Every polynomial of degree <= max_degree, over a finite field.

        Yields q^w polynomials (w = number of words), in the mixed-radix order
        induced by deglex words and field enumeration.  Intended for
        desk-scale exhaustive oracles only.
        """
        if not self.field.is_finite:
            raise InfiniteFieldError("cannot enumerate polynomials over the rationals")
        words = list(self.words(max_degree))
        elems = list(self.field.elements())
        for combo in itertools.product(elems, repeat=len(words)):
            yield NcPoly(self, {w: c for w, c in zip(words, combo) if c})


class NcPoly:
    """An immutable noncommutative polynomial in canonical sparse form.

    The term dict never stores zero coefficients.  Do not mutate; every
    operation returns a fresh polynomial.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self._terms = terms

    # -- inspection ------------------------------------------------------------

    def terms(self):
        """Term items in deglex order."""
        return sorted(self._terms.items(), key=lambda kv: deglex_key(kv[0]))

    def term_dict(self):
        return dict(self._terms)

    def support(self):
        return sorted(self._terms, key=deglex_key)

    def coeff(self, word):
        return self._terms.get(tuple(word), self.algebra.field.zero())

    def constant_term(self):
        return self.coeff(())

    def is_zero(self):
        return not self._terms

    def is_one(self):
        return len(self._terms) == 1 and () in self._terms and self._terms[()].is_one()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self._terms.items())))

    # -- degree tools ------------------------------------------------------------

    def degree(self):
        if not self._terms:
            return MINUS_INFINITY
        return max(len(w) for w in self._terms)

    def homogeneous_component(self, d):
        return NcPoly(self.algebra, {w: c for w, c in self._terms.items() if len(w) == d})

    def multidegree_component(self, counts):
        """Terms whose words have exactly the given per-variable letter counts."""
        counts = tuple(counts)
        n = self.algebra.arity
        return NcPoly(
            self.algebra,
            {w: c for w, c in self._terms.items() if _letter_counts(w, n) == counts},
        )

    def degrees(self):
        """Sorted list of total degrees present."""
        return sorted({len(w) for w in self._terms})

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(
                f"mixed algebras: {self.algebra!r} and {other.algebra!r}"
            )

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.algebra.scalar(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            acc = terms.get(w)
            s = c if acc is None else acc + c
            if s:
                terms[w] = s
            elif acc is not None:
                del terms[w]
        return NcPoly(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.algebra, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.algebra.scalar(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        terms = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                c = c1 * c2
                acc = terms.get(w)
                s = c if acc is None else acc + c
                if s:
                    terms[w] = s
                elif acc is not None:
                    del terms[w]
        return NcPoly(self.algebra, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = self.algebra.field.element(c)
        if not c:
            return self.algebra.zero()
        return NcPoly(self.algebra, {w: c * v for w, v in self._terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def map_coefficients(self, fn):
        """Apply fn to every coefficient; fn must send nonzero to nonzero."""
        return NcPoly(self.algebra, {w: fn(c) for w, c in self._terms.items()})

    # -- structure maps -----------------------------------------------------------

    def mirror(self):
        """Reverse every word, keeping coefficients; an involutive antiautomorphism."""
        return NcPoly(self.algebra, {w[::-1]: c for w, c in self._terms.items()})

    def abelianize(self):
        """Image in the commutative polynomial ring (words -> letter counts)."""
        n = self.algebra.arity
        terms = {}
        for w, c in self._terms.items():
            e = _letter_counts(w, n)
            acc = terms.get(e)
            s = c if acc is None else acc + c
            if s:
                terms[e] = s
            elif acc is not None:
                del terms[e]
        return CommPoly(self.algebra.field, n, terms)

    def substitute(self, images, cod_algebra):
        """Replace generator i by images[i-1]; the unique unital extension."""
        if len(images) != self.algebra.arity:
            raise AlgebraMismatchError("one image per generator required")
        acc = {}
        for w, c in self._terms.items():
            img = cod_algebra.one()
            for i in w:
                img = img * images[i - 1]
            for w2, c2 in img._terms.items():
                v = c * c2
                old = acc.get(w2)
                s = v if old is None else old + v
                if s:
                    acc[w2] = s
                elif old is not None:
                    del acc[w2]
        return NcPoly(cod_algebra, acc)

    # -- text ---------------------------------------------------------------------

    def __str__(self):
        return format_nc_poly(self)

    def __repr__(self):
        return f"<{self.algebra.field.spec()}[{','.join(self.algebra.var_names())}]: {self}>"


class CommPoly:
    """A commutative polynomial: exponent vector -> nonzero coefficient.

    The abelianization target; supports just enough arithmetic to state that
    abelianization is a ring homomorphism.
    """

    __slots__ = ("field", "arity", "_terms")

    def __init__(self, field, arity, terms):
        self.field = field
        self.arity = arity
        self._terms = terms

    def terms(self):
        # deglex via the sorted letter word of each exponent vector, so the
        # commutative order matches the noncommutative one (x^2 before x*y)
        def key(kv):
            exps = kv[0]
            letters = tuple(i + 1 for i, e in enumerate(exps) for _ in range(e))
            return (sum(exps), letters)

        return sorted(self._terms.items(), key=key)

    def coeff(self, exps):
        return self._terms.get(tuple(exps), self.field.zero())

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, CommPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.arity == other.arity
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.field, self.arity, frozenset(self._terms.items())))

    def _check(self, other):
        if self.field != other.field or self.arity != other.arity:
            raise AlgebraMismatchError("mixed commutative polynomial rings")

    def __add__(self, other):
        self._check(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            acc = terms.get(e)
            s = c if acc is None else acc + c
            if s:
                terms[e] = s
            elif acc is not None:
                del terms[e]
        return CommPoly(self.field, self.arity, terms)

    def __neg__(self):
        return CommPoly(self.field, self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = terms.get(e)
                s = c if acc is None else acc + c
                if s:
                    terms[e] = s
                elif acc is not None:
                    del terms[e]
        return CommPoly(self.field, self.arity, terms)

    def __str__(self):
        return format_comm_poly(self)

    def __repr__(self):
        return f"<comm {self.field.spec()}: {self}>"


# ---------------------------------------------------------------------------
# canonical text output
# ---------------------------------------------------------------------------

def _coeff_text(c):
    """Coefficient text plus a sign flag; extension scalars get parentheses."""
    field = c.field
    if field.is_finite:
        if c.is_prime_constant():
            return "+", str(c)
        return "+", f"({c})"
    if c.value < 0:
        return "-", str(-c.value)
    return "+", str(c.value)


def _join_terms(parts):
    if not parts:
        return "0"
    sign, text = parts[0]
    out = text if sign == "+" else "-" + text
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def format_nc_poly(p):
    names = p.algebra.var_names()
    parts = []
    for word, c in p.terms():
        word_text = "*".join(names[i - 1] for i in word)
        if not word:
            sign, ct = _coeff_text(c)
            parts.append((sign, ct))
            continue
        sign, ct = _coeff_text(c)
        if ct == "1":
            parts.append((sign, word_text))
        else:
            parts.append((sign, f"{ct}*{word_text}"))
    return _join_terms(parts)


def format_comm_poly(p):
    if p.arity == 1:
        names = ["t"]
    elif p.arity <= 4:
        names = list("xyzt")[: p.arity]
    else:
        names = [f"x{i}" for i in range(1, p.arity + 1)]
    parts = []
    for exps, c in p.terms():
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            sign, ct = _coeff_text(c)
            parts.append((sign, ct))
            continue
        mono = "*".join(factors)
        sign, ct = _coeff_text(c)
        if ct == "1":
            parts.append((sign, mono))
        else:
            parts.append((sign, f"{ct}*{mono}"))
    return _join_terms(parts)
