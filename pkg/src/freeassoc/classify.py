"""Classification of tabulated additive maps, and factorization of families.

A :class:`TabulatedMap` is an additive, coefficient-semilinear candidate map
given by a full table on words up to a degree cap.  The classifier decides
whether such a map is multiplicative (``HOM``), anti-multiplicative
(``ANTIHOM``), or neither, by the following pipeline:

1. unitality of the table;
2. the products-vs-table defects on the first two generators must fall in
   the commutator ideal;
3. solve ``table[xy] = a * m(x)m(y) + b * m(y)m(x)`` for the unique scalar
   pair (a, b), matching coefficients word by word;
4. the pair must satisfy ``a^2 = a``, ``ab = 0``, ``b^2 = b`` and not be
   (0, 0) -- over a field that leaves exactly (1, 0) and (0, 1);
5. exhaustively verify the two-sided product rule on every word pair within
   the degree cap.

``NEITHER`` verdicts always carry a certificate: the first failing word pair
in deglex order together with the nonzero defect polynomial.

:func:`factor_semilinear` runs the pipeline across a family of maps (one per
arity) and recovers the factored form (coefficient automorphism, mirror
flag, generator images of the inner automorphism), then re-applies the
factored map to every tabulated word to confirm exact agreement.
"""

import random
from dataclasses import dataclass
from enum import Enum

from .errors import (
    AlgebraMismatchError,
    DegenerateImagesError,
    InconsistentSystemError,
    MixedVerdictsError,
    NotAffineError,
    NotFactorableError,
    NotMultiplicativeError,
    NotUnitalError,
)
from .morphisms import Morphism, conjugate_morphism, in_commutator_ideal
from .poly import NcPoly, deglex_key

__all__ = [
    "TabulatedMap",
    "tabulate",
    "Verdict",
    "ProductRule",
    "Certificate",
    "ClassificationResult",
    "check_commutator_defects",
    "DefectReport",
    "solve_mul_coeffs",
    "check_idempotent_system",
    "verify_uuv",
    "classify_map",
    "check_certificate",
    "extract_affine",
    "SemilinearFactorization",
    "factor_semilinear",
    "ConjugationReport",
    "verify_conjugation_family",
]


class TabulatedMap:
    """An additive candidate map tabulated on all words up to a degree cap.

    The table must contain every word of degree <= deg_cap exactly once.  On
    a polynomial of degree <= deg_cap the map acts by

        sum of alpha(coefficient) * table[word]

    which is additive and coefficient-semilinear by construction; whether it
    is multiplicative is exactly what the classifier decides.
    """

    __slots__ = ("algebra", "alpha", "deg_cap", "table")

    def __init__(self, algebra, alpha, deg_cap, table):
        if alpha.field != algebra.field:
            raise AlgebraMismatchError("coefficient automorphism of a different field")
        expected = algebra.word_count(deg_cap)
        if len(table) != expected:
            raise ValueError(
                f"table must cover all {expected} words of degree <= {deg_cap}, "
                f"got {len(table)} entries"
            )
        for word, value in table.items():
            if len(word) > deg_cap:
                raise ValueError(f"table word {word} exceeds the degree cap")
            if value.algebra != algebra:
                raise AlgebraMismatchError("table value outside the algebra")
        self.algebra = algebra
        self.alpha = alpha
        self.deg_cap = deg_cap
        self.table = dict(table)

    def is_unital(self):
        return self.table[()].is_one()

    def require_unital(self):
        if not self.is_unital():
            raise NotUnitalError("table does not send the empty word to 1")

    def apply(self, p):
        """Value on a polynomial of degree <= deg_cap."""
        if p.algebra != self.algebra:
            raise AlgebraMismatchError("polynomial outside the map's algebra")
        out = self.algebra.zero()
        for word, c in p._terms.items():
            out = out + self.table[word].scale(self.alpha(c))
        return out

    def untwisted(self):
        """The same candidate with the coefficient automorphism divided out."""
        if self.alpha.is_identity():
            return self
        inv = self.alpha.inverse()
        table = {w: v.map_coefficients(inv) for w, v in self.table.items()}
        return TabulatedMap(self.algebra, self.algebra.field.identity_aut(), self.deg_cap, table)

    def entries(self):
        """Table items in deglex word order."""
        return sorted(self.table.items(), key=lambda kv: deglex_key(kv[0]))

    def __repr__(self):
        return (
            f"<TabulatedMap arity={self.algebra.arity} deg_cap={self.deg_cap} "
            f"alpha={self.alpha!r}>"
        )


def tabulate(mu, deg_cap):
    """Tabulate a semilinear map on all words up to deg_cap."""
    algebra = mu.algebra
    table = {}
    for word in algebra.words(deg_cap):
        table[word] = mu(algebra.from_word(word))
    return TabulatedMap(algebra, mu.alpha, deg_cap, table)


# ---------------------------------------------------------------------------
# verdicts and reports
# ---------------------------------------------------------------------------

class Verdict(Enum):
    HOM = "HOM"
    ANTIHOM = "ANTIHOM"
    NEITHER = "NEITHER"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ProductRule:
    """Scalar pair (a, b) in ``m(uv) = a * m(u)m(v) + b * m(v)m(u)``."""

    a: object
    b: object

    def is_admissible(self):
        return check_idempotent_system(self)

    def __str__(self):
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Certificate:
    """A failing word pair with its nonzero defect polynomial.

    ``kind`` is ``"commutator"`` when the generator-product defect escapes
    the commutator ideal, and ``"product"`` when a word pair violates the
    solved product rule (``rule`` then records the rule that was tested).
    """

    u: tuple
    v: tuple
    defect: NcPoly
    kind: str
    rule: ProductRule | None = None


@dataclass(frozen=True)
class ClassificationResult:
    verdict: Verdict
    coeffs: ProductRule | None
    certificate: Certificate | None

    def __str__(self):
        if self.verdict is Verdict.NEITHER:
            return f"verdict: {self.verdict}"
        return f"verdict: {self.verdict} coeffs: {self.coeffs}"


@dataclass(frozen=True)
class DefectReport:
    """Generator-product defects and their commutator-ideal membership."""

    hom_defect: NcPoly
    hom_member: bool
    anti_defect: NcPoly
    anti_member: bool

    @property
    def ok(self):
        return self.hom_member and self.anti_member


# ---------------------------------------------------------------------------
# pipeline stages
# ---------------------------------------------------------------------------

def _generator_data(tm):
    t_x = tm.table[(1,)]
    t_y = tm.table[(2,)]
    t_xy = tm.table[(1, 2)]
    return t_x, t_y, t_xy


def check_commutator_defects(tm):
    """Stage 2: table[xy] minus both generator products, reduced mod commutators."""
    if tm.algebra.arity < 2:
        raise ValueError("defect check needs arity >= 2")
    if tm.deg_cap < 2:
        raise ValueError("defect check needs degree cap >= 2")
    tm.require_unital()
    t_x, t_y, t_xy = _generator_data(tm)
    hom_defect = t_xy - t_x * t_y
    anti_defect = t_xy - t_y * t_x
    return DefectReport(
        hom_defect=hom_defect,
        hom_member=in_commutator_ideal(hom_defect),
        anti_defect=anti_defect,
        anti_member=in_commutator_ideal(anti_defect),
    )


def solve_mul_coeffs(tm):
    """Stage 3: the unique (a, b) with table[xy] = a*m(x)m(y) + b*m(y)m(x).

    Raises DegenerateImagesError when the two products are linearly
    dependent (in particular when the generator images commute), and
    InconsistentSystemError when no pair satisfies every coefficient
    equation.
    """
    t_x, t_y, t_xy = _generator_data(tm)
    p1 = t_x * t_y
    p2 = t_y * t_x
    w1 = next((w for w in p1.support()), None)
    if w1 is None:
        raise DegenerateImagesError("generator image product is zero")
    lam = p2.coeff(w1) / p1.coeff(w1)
    reduced = p2 - p1.scale(lam)
    if reduced.is_zero():
        raise DegenerateImagesError(
            "generator image products are linearly dependent"
        )
    w2 = reduced.support()[0]
    c11, c21, t1 = p1.coeff(w1), p2.coeff(w1), t_xy.coeff(w1)
    c12, c22, t2 = p1.coeff(w2), p2.coeff(w2), t_xy.coeff(w2)
    det = c11 * c22 - c21 * c12
    a = (t1 * c22 - t2 * c21) / det
    b = (c11 * t2 - c12 * t1) / det
    if p1.scale(a) + p2.scale(b) != t_xy:
        raise InconsistentSystemError(
            "no scalar pair matches table[xy] against the generator products"
        )
    return ProductRule(a, b)


def check_idempotent_system(rule):
    """Stage 4: a^2 = a, ab = 0, b^2 = b, (a, b) != (0, 0).

    Over a field the admissible set is exactly {(1, 0), (0, 1)}.
    """
    a, b = rule.a, rule.b
    if not (a or b):
        return False
    return a * a == a and (a * b).is_zero() and b * b == b


def verify_uuv(tm, rule):
    """Compare table[xxy] against both expansions under the product rule.

    The direct expansion splits xxy as (xx)(y), the nested one as (x)(xy);
    agreement of both is what forces the idempotent system on actual data.
    """
    if tm.deg_cap < 3:
        raise ValueError("degree-3 words required: raise the cap to >= 3")
    a, b = rule.a, rule.b
    t = tm.table
    direct = (t[(1, 1)] * t[(2,)]).scale(a) + (t[(2,)] * t[(1, 1)]).scale(b)
    nested = (t[(1,)] * t[(1, 2)]).scale(a) + (t[(1, 2)] * t[(1,)]).scale(b)
    target = t[(1, 1, 2)]
    return target == direct and target == nested


def _scan_product_rule(tm, rule):
    """First word pair (deglex on pairs) violating the product rule, or None."""
    words = list(tm.algebra.words(tm.deg_cap))
    a, b = rule.a, rule.b
    products = {}

    def product(u, v):
        got = products.get((u, v))
        if got is None:
            got = tm.table[u] * tm.table[v]
            products[(u, v)] = got
        return got

    for u in words:
        for v in words:
            if len(u) + len(v) > tm.deg_cap:
                continue
            defect = tm.table[u + v] - product(u, v).scale(a) - product(v, u).scale(b)
            if not defect.is_zero():
                return Certificate(u, v, defect, kind="product", rule=rule)
    return None


def classify_map(tm):
    """Full pipeline; see the module docstring for the stages.

    With deg_cap = 2 the exhaustive stage degenerates to the coefficient
    solve; certificates then name the generator pair.  deg_cap >= 3 is
    recommended and is what the factorization pipeline uses.
    """
    if tm.algebra.arity < 2:
        raise ValueError("classification needs arity >= 2")
    defects = check_commutator_defects(tm)
    if not defects.ok:
        defect = defects.hom_defect if not defects.hom_member else defects.anti_defect
        cert = Certificate((1,), (2,), defect, kind="commutator")
        return ClassificationResult(Verdict.NEITHER, None, cert)
    try:
        rule = solve_mul_coeffs(tm)
    except InconsistentSystemError:
        t_x, t_y, t_xy = _generator_data(tm)
        cert = Certificate((1,), (2,), t_xy - t_x * t_y, kind="product")
        return ClassificationResult(Verdict.NEITHER, None, cert)
    cert = _scan_product_rule(tm, rule)
    if cert is not None:
        return ClassificationResult(Verdict.NEITHER, None, cert)
    if not rule.is_admissible():
        # only reachable at deg_cap 2: degree-3 words force the idempotent
        # system, so an inadmissible rule cannot survive the scan above
        t_x, t_y, t_xy = _generator_data(tm)
        cert = Certificate((1,), (2,), t_xy - t_x * t_y, kind="product", rule=rule)
        return ClassificationResult(Verdict.NEITHER, None, cert)
    verdict = Verdict.HOM if rule.a.is_one() else Verdict.ANTIHOM
    return ClassificationResult(verdict, rule, None)


def check_certificate(tm, result):
    """Recompute a NEITHER certificate against the table; True when valid."""
    cert = result.certificate
    if result.verdict is not Verdict.NEITHER or cert is None:
        return False
    if cert.defect.is_zero():
        return False
    if cert.kind == "commutator":
        report = check_commutator_defects(tm)
        if cert.defect == report.hom_defect:
            return not report.hom_member
        if cert.defect == report.anti_defect:
            return not report.anti_member
        return False
    u, v = cert.u, cert.v
    if cert.rule is not None:
        a, b = cert.rule.a, cert.rule.b
        recomputed = (
            tm.table[u + v]
            - (tm.table[u] * tm.table[v]).scale(a)
            - (tm.table[v] * tm.table[u]).scale(b)
        )
    else:
        recomputed = tm.table[u + v] - tm.table[u] * tm.table[v]
    return recomputed == cert.defect


# ---------------------------------------------------------------------------
# univariate tables and family factorization
# ---------------------------------------------------------------------------

def extract_affine(tm):
    """Read (a, b) from a univariate table that tabulates t -> a*t + b.

    Checks that the generator image is affine with a != 0 and that every
    tabulated power matches the corresponding power of the image.
    """
    if tm.algebra.arity != 1:
        raise ValueError("affine extraction expects a univariate table")
    tm.require_unital()
    image = tm.table[(1,)]
    if image.degree() != 1:
        raise NotAffineError(f"generator image has degree {image.degree()}, expected 1")
    a = image.coeff((1,))
    b = image.coeff(())
    power = image
    for k in range(2, tm.deg_cap + 1):
        power = power * image
        if tm.table[(1,) * k] != power:
            raise NotMultiplicativeError(k)
    return a, b


@dataclass(frozen=True)
class SemilinearFactorization:
    """Factored form of a family: coefficient map, mirror flag, inner images.

    ``verified`` is True when recomposing the factors reproduces every table
    entry of every family member exactly.  ``verdicts`` records the
    classification of each member of arity >= 2 (all equal by construction).
    """

    alpha: object
    mirror_flag: bool
    eta_images: dict
    verified: bool
    verdicts: dict

    def eta_morphism(self, algebra):
        return Morphism(algebra, algebra, self.eta_images[algebra.arity])

    def report_lines(self):
        lines = [f"alpha: {self.alpha!r}", f"mirror: {int(self.mirror_flag)}"]
        for arity in sorted(self.eta_images):
            images = self.eta_images[arity]
            body = " ; ".join(f"x{i + 1} -> {img}" for i, img in enumerate(images))
            lines.append(f"eta {arity}: {body}")
        lines.append(f"verified: {'true' if self.verified else 'false'}")
        return lines


def factor_semilinear(family):
    """Factor a family of tabulated maps (one per arity 1..N).

    Divides out the declared coefficient automorphism, validates the
    univariate member as an affine substitution, classifies every member of
    arity >= 2 (all verdicts must agree, else MixedVerdictsError), reads the
    inner automorphism's generator images off the tables, and replays the
    factored map over every tabulated word.
    """
    family = list(family)
    if len(family) < 2:
        raise NotFactorableError("family must cover arities 1..N with N >= 2")
    field = family[0].algebra.field
    alpha = family[0].alpha
    for i, tm in enumerate(family, start=1):
        if tm.algebra.arity != i:
            raise AlgebraMismatchError(
                f"family member {i} has arity {tm.algebra.arity}, expected {i}"
            )
        if tm.algebra.field != field:
            raise AlgebraMismatchError("family members over different fields")
        if tm.alpha != alpha:
            raise AlgebraMismatchError("family members declare different coefficient maps")
        tm.require_unital()

    untwisted = [tm.untwisted() for tm in family]
    extract_affine(untwisted[0])

    verdicts = {}
    for tm in untwisted[1:]:
        result = classify_map(tm)
        if result.verdict is Verdict.NEITHER:
            raise NotFactorableError(
                f"arity {tm.algebra.arity} member is neither multiplicative nor "
                f"anti-multiplicative"
            )
        verdicts[tm.algebra.arity] = result.verdict
    ordered = sorted(verdicts.items())
    first_arity, first = ordered[0]
    for arity, verdict in ordered[1:]:
        if verdict != first:
            raise MixedVerdictsError(first_arity, first, arity, verdict)
    mirror_flag = first is Verdict.ANTIHOM

    eta_images = {}
    verified = True
    for tm in family:
        algebra = tm.algebra
        images = tuple(tm.table[(i,)] for i in range(1, algebra.arity + 1))
        eta_images[algebra.arity] = images
        eta = Morphism(algebra, algebra, images)
        for word, value in tm.table.items():
            probe = word[::-1] if mirror_flag else word
            if eta(algebra.from_word(probe)) != value:
                verified = False
                break
        if not verified:
            break
    return SemilinearFactorization(alpha, mirror_flag, eta_images, verified, verdicts)


# ---------------------------------------------------------------------------
# conjugation families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugationReport:
    checks: int
    violations: tuple

    @property
    def passed(self):
        return not self.violations


def verify_conjugation_family(family, samples=20, max_deg=2, seed=0):
    """Exercise conjugation by a family of semilinear maps (one per arity).

    Draws random morphisms between the family's arities and checks, exactly:
    the identity conjugates to the identity; each conjugate agrees with the
    morphism built from its generator images (on generators, their products,
    and random polynomials); and conjugation respects composition at the
    level of generator-image tables.  Any inconsistency in the family (for
    example mirroring at one arity only) surfaces as a reported violation.
    """
    from .sampling import random_morphism, random_poly

    family = dict(family)
    rng = random.Random(seed)
    arities = sorted(family)
    algebras = {n: family[n].algebra for n in arities}
    checks = 0
    violations = []

    for n in arities:
        ident = Morphism.identity(algebras[n])
        conj = conjugate_morphism(ident, family[n], family[n])
        checks += 1
        if list(conj.images) != algebras[n].gens():
            violations.append(f"identity at arity {n} does not conjugate to itself")

    def pick_arity():
        return arities[rng.randrange(len(arities))]

    for _ in range(samples):
        i, j = pick_arity(), pick_arity()
        s = random_morphism(algebras[i], algebras[j], rng, max_deg=max_deg)
        conj = conjugate_morphism(s, family[i], family[j])
        m = Morphism(algebras[i], algebras[j], conj.images)
        gens = algebras[i].gens()
        probes = [g1 * g2 for g1 in gens for g2 in gens]
        probes += [random_poly(algebras[i], rng, max_deg=2) for _ in range(2)]
        checks += 1
        for q in probes:
            if m(q) != conj(q):
                violations.append(
                    f"conjugate of a morphism W{i}->W{j} is not a morphism "
                    f"(fails at {q})"
                )
                break

    for _ in range(samples):
        i, j, k = pick_arity(), pick_arity(), pick_arity()
        inner = random_morphism(algebras[k], algebras[i], rng, max_deg=max_deg)
        outer = random_morphism(algebras[i], algebras[j], rng, max_deg=max_deg)
        composite = outer.compose(inner)
        conj_composite = conjugate_morphism(composite, family[k], family[j])
        conj_outer = conjugate_morphism(outer, family[i], family[j])
        conj_inner = conjugate_morphism(inner, family[k], family[i])
        recombined = Morphism(algebras[i], algebras[j], conj_outer.images).compose(
            Morphism(algebras[k], algebras[i], conj_inner.images)
        )
        checks += 1
        if conj_composite.images != recombined.images:
            violations.append(
                f"conjugation does not respect composition W{k}->W{i}->W{j}"
            )

    return ConjugationReport(checks=checks, violations=tuple(violations))
