"""Analysis of bijections that commute with every endomorphism.

A candidate is given by its claimed values on the generators.  Commuting
with the endomorphism that keeps one generator and kills the rest forces
each generator value to be a univariate polynomial, and commuting with
substitutions then forces the whole map to be ``u -> r(u)`` for a single
univariate ``r``; :func:`derive_univariate` performs exactly that derivation
and reports the violated commutation as a witness when it fails.

Bijectivity of ``u -> r(u)`` forces ``r`` to be affine with a nonzero
leading coefficient: a degree-k substitution multiplies degrees by k and can
never reach a degree-1 target.  :func:`assert_linear_bijection` applies the
degree argument directly, and :func:`surjectivity_probe` is the brute-force
oracle it is validated against (exhaustively enumerate polynomials ``u`` over
a finite field and look for ``r(u) = x``).  :func:`centrality_scan` runs the
whole story over a small finite field: every univariate candidate commutes
with every sampled endomorphism, and exactly the affine candidates survive
the bijectivity filter.
"""

import random
from dataclasses import dataclass

from .errors import InfiniteFieldError, NotBijectiveError, NotCentralError
from .morphisms import Morphism
from .poly import FreeAlgebra, MINUS_INFINITY

__all__ = [
    "CentralCandidate",
    "derive_univariate",
    "propagate_value",
    "assert_linear_bijection",
    "surjectivity_probe",
    "ScanReport",
    "centrality_scan",
    "check_generator_recovery",
]


@dataclass(frozen=True)
class CentralCandidate:
    """Claimed generator values of a map commuting with all endomorphisms."""

    algebra: object
    images: tuple

    def __post_init__(self):
        if self.algebra.arity < 2:
            raise ValueError("candidate needs arity >= 2")
        if len(self.images) != self.algebra.arity:
            raise ValueError("one image per generator required")
        for img in self.images:
            if img.algebra != self.algebra:
                raise ValueError("image outside the ambient algebra")


def _keep_only(algebra, keep):
    """The endomorphism fixing generator ``keep`` and killing the others."""
    images = [
        algebra.gen(i) if i == keep else algebra.zero()
        for i in range(1, algebra.arity + 1)
    ]
    return Morphism(algebra, algebra, images)


def _swap_in(algebra, target):
    """The endomorphism sending x1 to x_target, fixing the rest."""
    images = [algebra.gen(target)] + [
        algebra.gen(i) for i in range(2, algebra.arity + 1)
    ]
    return Morphism(algebra, algebra, images)


def derive_univariate(candidate):
    """Derive the single univariate polynomial behind a central candidate.

    Each generator value must survive killing the other generators (slot by
    slot), and all slots must agree on one coefficient list.  Returns the
    univariate polynomial; raises :class:`NotCentralError` carrying the
    endomorphism and the nonzero commutation defect otherwise.
    """
    algebra = candidate.algebra
    line = FreeAlgebra(algebra.field, 1)
    reference = None
    for slot in range(1, algebra.arity + 1):
        image = candidate.images[slot - 1]
        keeper = _keep_only(algebra, slot)
        restricted = keeper(image)
        if restricted != image:
            raise NotCentralError(
                f"generator value {slot} involves other generators",
                endomorphism=keeper,
                defect=image - restricted,
            )
        coeffs = {(1,) * len(w): c for w, c in image._terms.items()}
        univariate = line.poly(coeffs)
        if reference is None:
            reference = univariate
        elif univariate != reference:
            swap = _swap_in(algebra, slot)
            expected = propagate_value(reference, algebra.gen(slot))
            raise NotCentralError(
                f"generator value {slot} disagrees with the value at slot 1",
                endomorphism=swap,
                defect=image - expected,
            )
    return reference


def propagate_value(r, u):
    """Evaluate the substitution map at u: the Horner form of r(u)."""
    algebra = u.algebra
    degree = r.degree()
    if degree is MINUS_INFINITY:
        return algebra.zero()
    out = algebra.scalar(r.coeff((1,) * degree))
    for k in range(degree - 1, -1, -1):
        out = out * u + algebra.scalar(r.coeff((1,) * k))
    return out


def assert_linear_bijection(r):
    """Return (a, b) with r = a*t + b, a != 0, or raise NotBijectiveError.

    Degree >= 2 is rejected by the degree obstruction; constants (including
    zero) are rejected as non-surjective.
    """
    degree = r.degree()
    if degree is MINUS_INFINITY or degree == 0:
        raise NotBijectiveError("constant")
    if degree > 1:
        raise NotBijectiveError(degree)
    return r.coeff((1,)), r.coeff(())


def surjectivity_probe(r, algebra, max_deg):
    """Brute-force check whether r(u) = x has a solution of degree <= max_deg.

    Enumerates every polynomial over the (finite) field and evaluates the
    substitution honestly; this is the oracle against which the degree
    argument of :func:`assert_linear_bijection` is cross-validated.
    """
    if not algebra.field.is_finite:
        raise InfiniteFieldError("the probe enumerates a finite field")
    target = algebra.gen(1)
    for u in algebra.all_polys(max_deg):
        if propagate_value(r, u) == target:
            return True
    return False


@dataclass(frozen=True)
class ScanReport:
    """Outcome of an exhaustive scan over univariate substitution maps."""

    candidates: int
    survivors: tuple
    expected: tuple
    commutation_ok: bool

    @property
    def passed(self):
        return self.commutation_ok and set(self.survivors) == set(self.expected)

    def survivor_strings(self):
        return sorted(str(r) for r in self.survivors)


def centrality_scan(field, max_r_degree, seed=0, extra_endos=20, probe_deg=2):
    """Enumerate univariate maps over a finite field; keep the bijections.

    For every univariate r of degree <= max_r_degree over the field, checks
    that the substitution map u -> r(u) commutes with a sample of
    endomorphisms of the two-generator algebra (the generator-killing one
    plus seeded random ones; substitution maps always commute, so this is a
    sanity assertion), then filters by :func:`surjectivity_probe`.  The
    expected survivor set is exactly the affine maps with nonzero leading
    coefficient.
    """
    from .sampling import random_morphism, random_poly

    if not field.is_finite:
        raise InfiniteFieldError("the scan enumerates a finite field")
    line = FreeAlgebra(field, 1)
    plane = FreeAlgebra(field, 2)
    rng = random.Random(seed)
    endos = [_keep_only(plane, 1)]
    endos += [random_morphism(plane, plane, rng, max_deg=2) for _ in range(extra_endos)]
    test_polys = [plane.gen(1), plane.gen(2)] + [
        random_poly(plane, rng, max_deg=2) for _ in range(3)
    ]

    candidates = list(line.all_polys(max_r_degree))
    commutation_ok = True
    survivors = []
    for r in candidates:
        for s in endos:
            for u in test_polys:
                if s(propagate_value(r, u)) != propagate_value(r, s(u)):
                    commutation_ok = False
        if surjectivity_probe(r, plane, probe_deg):
            survivors.append(r)

    expected = []
    for a in field.elements():
        if not a:
            continue
        for b in field.elements():
            expected.append(line.gen(1).scale(a) + line.scalar(b))
    return ScanReport(
        candidates=len(candidates),
        survivors=tuple(survivors),
        expected=tuple(expected),
        commutation_ok=commutation_ok,
    )


def check_generator_recovery(mu):
    """Re-check that a semilinear map's witness recovers every generator.

    True when the inverse witness sends each forward generator image back to
    its generator, i.e. the images generate the whole algebra.
    """
    eta = mu.eta
    algebra = eta.algebra
    return all(
        eta.inv(eta.fwd.images[i]) == algebra.gen(i + 1)
        for i in range(algebra.arity)
    )
