"""Exception hierarchy shared by all freeassoc modules.

Errors fall into three groups, mirrored by the CLI exit codes:

* input errors (bad syntax, malformed files, mismatched structures) --
  subclasses of :class:`InputError`;
* negative verdicts (a well-formed candidate rejected by a decision
  procedure) -- subclasses of :class:`VerdictError`;
* everything else is a bug.
"""


class FreeAssocError(Exception):
    """Base class for all library errors."""


# ---------------------------------------------------------------------------
# input errors
# ---------------------------------------------------------------------------

class InputError(FreeAssocError):
    """Malformed or structurally incompatible input."""


class FieldMismatchError(InputError):
    """Operands belong to different fields."""


class AlgebraMismatchError(InputError):
    """Operands belong to different free algebras (field or arity differ)."""


class ArityMismatchError(InputError):
    """Morphism domains/codomains do not line up for the requested operation."""


class InfiniteFieldError(InputError):
    """An enumeration was requested over the rationals."""


class ParseError(InputError):
    """Syntax error in a polynomial, scalar, or file; carries a position."""

    def __init__(self, message, pos=None, line=None):
        loc = ""
        if line is not None:
            loc += f" (line {line})"
        if pos is not None:
            loc += f" (column {pos + 1})"
        super().__init__(message + loc)
        self.pos = pos
        self.line = line


class UnknownVariableError(ParseError):
    """A variable name outside the algebra's generator set."""


class FieldLiteralError(ParseError):
    """A scalar literal that does not fit the coefficient field."""


class FileFormatError(InputError):
    """A morphism / map file is incomplete or malformed."""


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

class DivisionByZeroError(FreeAssocError, ZeroDivisionError):
    """Division by the zero element of a field."""


# ---------------------------------------------------------------------------
# negative verdicts from decision procedures
# ---------------------------------------------------------------------------

class VerdictError(FreeAssocError):
    """A structurally valid candidate was rejected by a check."""


class WitnessError(VerdictError):
    """A claimed inverse pair does not compose to the identity."""


class NotUnitalError(VerdictError):
    """A tabulated map does not send the empty word to 1."""


class DegenerateImagesError(VerdictError):
    """The images of the two generators have linearly dependent products."""


class InconsistentSystemError(VerdictError):
    """No coefficient pair satisfies the product-rule equations."""


class NotFactorableError(VerdictError):
    """A family of tabulated maps admits no semilinear factorization."""


class MixedVerdictsError(VerdictError):
    """Two members of a family classify differently (one Hom, one AntiHom)."""

    def __init__(self, arity_a, verdict_a, arity_b, verdict_b):
        super().__init__(
            f"arity {arity_a} classifies as {verdict_a} "
            f"but arity {arity_b} classifies as {verdict_b}"
        )
        self.arities = (arity_a, arity_b)
        self.verdicts = (verdict_a, verdict_b)


class NotAffineError(VerdictError):
    """A univariate table does not send the generator to a degree-1 polynomial."""


class NotMultiplicativeError(VerdictError):
    """A univariate table is affine on the generator but not on its powers."""

    def __init__(self, power):
        super().__init__(f"table value at degree {power} is not the matching power")
        self.power = power


class NotCentralError(VerdictError):
    """A candidate map fails to commute with a specific endomorphism."""

    def __init__(self, message, endomorphism, defect):
        super().__init__(message)
        self.endomorphism = endomorphism
        self.defect = defect


class NotBijectiveError(VerdictError):
    """A univariate substitution map cannot be a bijection.

    ``reason`` is ``"constant"`` for maps with constant value, or the
    offending degree (an int >= 2) when the degree obstruction applies.
    """

    def __init__(self, reason):
        if reason == "constant":
            msg = "constant maps are not bijective"
        else:
            msg = f"degree {reason} substitution multiplies degrees by {reason}, never reaching degree 1"
        super().__init__(msg)
        self.reason = reason
