"""Text syntax for polynomials and field specs.

Grammar (whitespace insignificant)::

    poly  := ['-'] term { ('+'|'-') term }
    term  := coeff ['*' word] | word
    word  := var { '*' var }          # var may carry a power: x^3
    var   := 'x' int | alias letter valid for the arity
    coeff := int | int '/' int | '(' w-polynomial ')'

Rational ``a/b`` literals require the rational field; parenthesized
``w``-polynomials require a finite field.  ``x^3`` is sugar for ``x*x*x``.
Aliases: arity 1 accepts ``x`` or ``t``; arities 2..4 use ``x,y,z,t``;
canonical names ``x1..xn`` are always accepted.

``format`` lives on the polynomial classes; ``parse_poly(format(p)) == p``
for every canonical form.
"""

import re

from .errors import FieldLiteralError, ParseError, UnknownVariableError
from .fields import finite_field, rationals

__all__ = ["parse_poly", "parse_word", "parse_field_spec"]

_TOKEN = re.compile(r"\s+|(\d+)|([A-Za-z]\w*)|([-+*/^()])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos=pos)
        if m.group(1):
            tokens.append(("int", m.group(1), pos))
        elif m.group(2):
            tokens.append(("name", m.group(2), pos))
        elif m.group(3):
            tokens.append(("sym", m.group(3), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, algebra):
        self.text = text
        self.algebra = algebra
        self.tokens = _tokenize(text)
        self.i = 0

    # -- token plumbing ------------------------------------------------------

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_sym(self, sym):
        kind, val, pos = self.next()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r}", pos=pos)

    def fail(self, message):
        raise ParseError(message, pos=self.peek()[2])

    # -- grammar ---------------------------------------------------------------

    def parse(self):
        poly = self.algebra.zero()
        sign = 1
        kind, val, _ = self.peek()
        if kind == "sym" and val in "+-":
            sign = -1 if val == "-" else 1
            self.next()
        while True:
            term = self.term()
            poly = poly + (term if sign == 1 else -term)
            kind, val, pos = self.peek()
            if kind is None:
                return poly
            if kind == "sym" and val in "+-":
                sign = -1 if val == "-" else 1
                self.next()
            else:
                raise ParseError("expected '+' or '-' between terms", pos=pos)

    def term(self):
        kind, val, pos = self.peek()
        if kind == "int":
            coeff = self.int_coeff()
        elif kind == "sym" and val == "(":
            coeff = self.paren_coeff()
        elif kind == "name":
            return self.algebra.from_word(self.word())
        else:
            raise ParseError("expected a term", pos=pos)
        kind, val, _ = self.peek()
        if kind == "sym" and val == "*":
            self.next()
            return self.algebra.from_word(self.word(), coeff)
        return self.algebra.scalar(coeff)

    def int_coeff(self):
        _, digits, pos = self.next()
        kind, val, _ = self.peek()
        if kind == "sym" and val == "/":
            self.next()
            kind2, den, pos2 = self.next()
            if kind2 != "int":
                raise ParseError("expected denominator digits", pos=pos2)
            if self.algebra.field.is_finite:
                raise FieldLiteralError(
                    "rational literal over a finite field", pos=pos
                )
            return self.algebra.field.from_fraction(int(digits), int(den))
        return self.algebra.field.from_int(int(digits))

    def paren_coeff(self):
        _, _, pos = self.next()  # '('
        field = self.algebra.field
        if not field.is_finite:
            raise FieldLiteralError(
                "parenthesized w-polynomial over the rationals", pos=pos
            )
        coeffs = {}
        sign = 1
        kind, val, _ = self.peek()
        if kind == "sym" and val in "+-":
            sign = -1 if val == "-" else 1
            self.next()
        while True:
            c, power = self.w_term()
            coeffs[power] = coeffs.get(power, 0) + sign * c
            kind, val, pos2 = self.next()
            if kind == "sym" and val == ")":
                break
            if kind == "sym" and val in "+-":
                sign = -1 if val == "-" else 1
            else:
                raise ParseError("expected '+', '-' or ')' in w-polynomial", pos=pos2)
        vec = [0] * (max(coeffs) + 1 if coeffs else 1)
        for j, c in coeffs.items():
            vec[j] = c
        return field.from_coeffs(vec)

    def w_term(self):
        kind, val, pos = self.next()
        c = 1
        if kind == "int":
            c = int(val)
            kind2, val2, _ = self.peek()
            if not (kind2 == "sym" and val2 == "*"):
                return c, 0
            self.next()
            kind, val, pos = self.next()
        if kind != "name" or val != "w":
            raise ParseError("expected 'w' in w-polynomial term", pos=pos)
        kind2, val2, _ = self.peek()
        if kind2 == "sym" and val2 == "^":
            self.next()
            kind3, exp, pos3 = self.next()
            if kind3 != "int":
                raise ParseError("expected integer exponent", pos=pos3)
            return c, int(exp)
        return c, 1

    def word(self):
        letters = list(self.var())
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val == "*":
                self.next()
                letters.extend(self.var())
            else:
                return tuple(letters)

    def var(self):
        kind, name, pos = self.next()
        if kind != "name":
            raise ParseError("expected a variable", pos=pos)
        index = self.algebra.var_index(name)
        if index is None:
            raise UnknownVariableError(
                f"unknown variable {name!r} at arity {self.algebra.arity}", pos=pos
            )
        kind2, val2, _ = self.peek()
        if kind2 == "sym" and val2 == "^":
            self.next()
            kind3, exp, pos3 = self.next()
            if kind3 != "int":
                raise ParseError("expected integer exponent", pos=pos3)
            return (index,) * int(exp)
        return (index,)


def parse_poly(text, algebra):
    """Parse polynomial text into the given algebra's canonical form."""
    parser = _Parser(text, algebra)
    if not parser.tokens:
        raise ParseError("empty polynomial", pos=0)
    return parser.parse()


def parse_word(text, algebra):
    """Parse a bare word (monomial); ``1`` denotes the empty word."""
    stripped = text.strip()
    if stripped == "1":
        return ()
    parser = _Parser(text, algebra)
    if not parser.tokens:
        raise ParseError("empty word", pos=0)
    word = parser.word()
    kind, _, pos = parser.peek()
    if kind is not None:
        raise ParseError("trailing input after word", pos=pos)
    return word


def parse_field_spec(text):
    """Parse a field spec: ``Q`` or ``gf <q> [modulus <w-poly>]``."""
    parts = text.split()
    if not parts:
        raise ParseError("empty field spec")
    if parts[0] == "Q":
        if len(parts) > 1:
            raise ParseError(f"trailing input after 'Q': {text!r}")
        return rationals()
    if parts[0] == "gf":
        if len(parts) == 2 and parts[1].isdigit():
            return finite_field(int(parts[1]))
        if len(parts) == 4 and parts[1].isdigit() and parts[2] == "modulus":
            return finite_field(int(parts[1]), parts[3])
        raise ParseError(f"bad finite field spec {text!r}")
    raise ParseError(f"bad field spec {text!r}")
