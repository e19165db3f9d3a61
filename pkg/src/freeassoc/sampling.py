"""Seed-deterministic random generators for polynomials, morphisms, and maps.

Everything takes an explicit ``random.Random`` instance; callers own the
seed, so identical seeds give identical objects run after run.  Samplers
avoid ``random.sample``/``shuffle`` to keep sequences stable across Python
versions.
"""

from fractions import Fraction

from .morphisms import AutWitness, Morphism, SemilinearMap, invert_matrix
from .poly import FreeAlgebra

__all__ = [
    "random_element",
    "random_word",
    "random_poly",
    "random_morphism",
    "random_aut",
    "random_semilinear",
]


def random_element(field, rng, nonzero=False, span=9):
    """A random scalar; rationals draw numerators/denominators up to ``span``."""
    if field.is_finite:
        size = field.size()
        lo = 1 if nonzero else 0
        n = rng.randrange(lo, size)
        value = []
        for _ in range(field.degree):
            value.append(n % field.char)
            n //= field.char
        return field.from_coeffs(value)
    while True:
        c = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if c or not nonzero:
            return field.element(c)


def random_word(arity, rng, max_deg, min_deg=0):
    d = rng.randint(min_deg, max_deg)
    return tuple(rng.randint(1, arity) for _ in range(d))


def random_poly(algebra, rng, max_deg, max_terms=4, nonzero=False):
    """A random sparse polynomial of degree <= max_deg (terms may collide)."""
    while True:
        terms = {}
        for _ in range(rng.randint(0 if not nonzero else 1, max_terms)):
            w = random_word(algebra.arity, rng, max_deg)
            c = random_element(algebra.field, rng, nonzero=True)
            acc = terms.get(w)
            s = c if acc is None else acc + c
            if s:
                terms[w] = s
            elif acc is not None:
                del terms[w]
        p = algebra.poly(terms)
        if p or not nonzero:
            return p


def random_morphism(dom, cod, rng, max_deg=2, max_terms=2):
    images = [random_poly(cod, rng, max_deg, max_terms) for _ in range(dom.arity)]
    return Morphism(dom, cod, images)


def _random_invertible_matrix(field, n, rng):
    while True:
        rows = [[random_element(field, rng, span=3) for _ in range(n)] for _ in range(n)]
        if invert_matrix(field, rows) is not None:
            return rows


def random_aut(algebra, rng, layers=2, shift_deg=2, shift_terms=1):
    """A random automorphism with witness: affine and elementary factors.

    Keeping the shift polynomials small (the defaults) keeps images of short
    words small, which matters for tabulation-heavy callers.
    """
    out = AutWitness.identity(algebra)
    for _ in range(layers):
        if algebra.arity >= 2 and rng.random() < 0.6:
            i = rng.randint(1, algebra.arity)
            others = [j for j in range(1, algebra.arity + 1) if j != i]
            terms = {}
            for _ in range(shift_terms):
                w = tuple(
                    others[rng.randrange(len(others))]
                    for _ in range(rng.randint(0, shift_deg))
                )
                terms[w] = random_element(algebra.field, rng, nonzero=True)
            factor = AutWitness.elementary(algebra, i, algebra.poly(terms))
        else:
            matrix = _random_invertible_matrix(algebra.field, algebra.arity, rng)
            consts = [random_element(algebra.field, rng, span=3) for _ in range(algebra.arity)]
            factor = AutWitness.affine(algebra, matrix, consts)
        out = factor.compose(out)
    return out


def random_semilinear(algebra, rng, alphas=None, layers=2):
    """A random semilinear map; ``alphas`` lists the allowed coefficient maps."""
    if alphas is None:
        alphas = [algebra.field.identity_aut()]
    alpha = alphas[rng.randrange(len(alphas))]
    mirror_flag = rng.random() < 0.5
    eta = random_aut(algebra, rng, layers=layers)
    return SemilinearMap(algebra, alpha, mirror_flag, eta)
