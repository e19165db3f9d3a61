"""Algebra morphisms, inverse-witnessed automorphisms, and semilinear maps.

A :class:`Morphism` between free algebras is determined by generator images
and applied by substitution; it is always unital.  Because deciding whether
an arbitrary endomorphism is invertible is out of scope, automorphisms are
carried as :class:`AutWitness` pairs (forward map plus an explicit inverse,
verified at construction).  Builders for affine and elementary (one-generator
shift) automorphisms construct their own witnesses.

A :class:`SemilinearMap` is a bijection factored as

    coefficient automorphism, then optional word reversal, then automorphism

i.e. ``mu(p) = eta(reverse^flag(alpha(p)))``.  All orderings of these three
kinds of factors describe the same set of maps; this one is fixed so that
factorizations are unambiguous.

The module also provides conjugation ``p -> mu_cod(s(mu_dom^-1(p)))`` of a
morphism by semilinear maps, membership in the commutator ideal (the kernel
of abelianization), and randomized/exhaustive probes of the intersection of
kernels of all maps into the univariate algebra.
"""

import itertools
import random
from dataclasses import dataclass

from .errors import (
    AlgebraMismatchError,
    ArityMismatchError,
    FreeAssocError,
    WitnessError,
)
from .poly import FreeAlgebra, NcPoly

__all__ = [
    "Morphism",
    "AutWitness",
    "SemilinearMap",
    "ConjugatedMap",
    "conjugate_morphism",
    "in_commutator_ideal",
    "KernelProbeResult",
    "kernel_probe",
    "kernel_probe_exhaustive",
    "iter_univariate_morphisms",
    "invert_matrix",
]


class Morphism:
    """A unital algebra homomorphism given by generator images.

    Word images are memoized per instance (morphisms are immutable, so the
    cache is write-once per key and safe to share between threads).
    """

    __slots__ = ("dom", "cod", "images", "_cache")

    def __init__(self, dom, cod, images):
        if len(images) != dom.arity:
            raise ArityMismatchError(
                f"{dom.arity} generator images required, got {len(images)}"
            )
        for img in images:
            if img.algebra != cod:
                raise AlgebraMismatchError("image outside the codomain algebra")
        self.dom = dom
        self.cod = cod
        self.images = tuple(images)
        self._cache = {(): cod.one()}

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra, algebra.gens())

    def _image(self, word):
        cache = self._cache
        img = cache.get(word)
        if img is not None:
            return img
        k = len(word) - 1
        while k > 0 and word[:k] not in cache:
            k -= 1
        img = cache[word[:k]]
        for idx in range(k, len(word)):
            img = img * self.images[word[idx] - 1]
            cache[word[: idx + 1]] = img
        return img

    def __call__(self, p):
        if p.algebra != self.dom:
            raise AlgebraMismatchError("polynomial outside the domain algebra")
        acc = {}
        for word, c in p._terms.items():
            for w2, c2 in self._image(word)._terms.items():
                v = c * c2
                old = acc.get(w2)
                s = v if old is None else old + v
                if s:
                    acc[w2] = s
                elif old is not None:
                    del acc[w2]
        return NcPoly(self.cod, acc)

    def compose(self, other):
        """self after other (apply ``other`` first)."""
        if other.cod != self.dom:
            raise ArityMismatchError(
                "codomain of the inner morphism must match the outer domain"
            )
        return Morphism(other.dom, self.cod, [self(img) for img in other.images])

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.images == other.images

    def __hash__(self):
        return hash((self.dom, self.cod, self.images))

    def lines(self):
        """Generator-image lines in file-format form."""
        return [f"x{i + 1} -> {img}" for i, img in enumerate(self.images)]

    def __repr__(self):
        body = "; ".join(self.lines())
        return f"<Morphism W{self.dom.arity}->W{self.cod.arity}: {body}>"


class AutWitness:
    """An automorphism together with an explicit, verified inverse.

    Construction applies both compositions to every generator and rejects
    non-inverse pairs, so holding an AutWitness certifies bijectivity.
    """

    __slots__ = ("fwd", "inv")

    def __init__(self, fwd, inv):
        if fwd.dom != fwd.cod or inv.dom != inv.cod or fwd.dom != inv.dom:
            raise ArityMismatchError("witness maps must be endomorphisms of one algebra")
        algebra = fwd.dom
        for i, g in enumerate(algebra.gens(), start=1):
            if inv(fwd(g)) != g or fwd(inv(g)) != g:
                raise WitnessError(
                    f"claimed inverse fails on generator x{i}"
                )
        self.fwd = fwd
        self.inv = inv

    @property
    def algebra(self):
        return self.fwd.dom

    @classmethod
    def identity(cls, algebra):
        ident = Morphism.identity(algebra)
        return cls(ident, ident)

    @classmethod
    def elementary(cls, algebra, i, shift):
        """x_i -> x_i + shift, other generators fixed.

        ``shift`` must not involve x_i; the inverse is x_i -> x_i - shift.
        """
        if any(i in word for word in shift._terms):
            raise WitnessError(f"shift polynomial may not involve x{i}")
        gens = algebra.gens()
        fwd_images = list(gens)
        inv_images = list(gens)
        fwd_images[i - 1] = gens[i - 1] + shift
        inv_images[i - 1] = gens[i - 1] - shift
        return cls(
            Morphism(algebra, algebra, fwd_images),
            Morphism(algebra, algebra, inv_images),
        )

    @classmethod
    def affine(cls, algebra, matrix, consts=None):
        """x_i -> sum_j matrix[i][j] x_j + consts[i], matrix invertible."""
        field = algebra.field
        n = algebra.arity
        rows = [[field.element(v) for v in row] for row in matrix]
        if consts is None:
            consts = [field.zero()] * n
        consts = [field.element(v) for v in consts]
        inv_rows = invert_matrix(field, rows)
        if inv_rows is None:
            raise WitnessError("affine automorphism needs an invertible matrix")
        gens = algebra.gens()
        fwd_images = [
            sum((gens[j] * rows[i][j] for j in range(n)), algebra.scalar(consts[i]))
            for i in range(n)
        ]
        inv_images = []
        for i in range(n):
            img = algebra.zero()
            for j in range(n):
                img = img + gens[j] * inv_rows[i][j] - algebra.scalar(inv_rows[i][j] * consts[j])
            inv_images.append(img)
        return cls(
            Morphism(algebra, algebra, fwd_images),
            Morphism(algebra, algebra, inv_images),
        )

    def compose(self, other):
        """self after other; inverses compose in the opposite order."""
        return AutWitness(self.fwd.compose(other.fwd), other.inv.compose(self.inv))

    def inverse(self):
        return AutWitness(self.inv, self.fwd)

    def mirror_conjugate(self):
        """The automorphism reverse . self . reverse, with conjugated witness."""
        algebra = self.algebra
        fwd = Morphism(algebra, algebra, [img.mirror() for img in self.fwd.images])
        inv = Morphism(algebra, algebra, [img.mirror() for img in self.inv.images])
        return AutWitness(fwd, inv)

    def __repr__(self):
        return f"<AutWitness {self.fwd!r}>"


class SemilinearMap:
    """A bijection ``p -> eta(reverse^flag(alpha(p)))`` of a free algebra."""

    __slots__ = ("algebra", "alpha", "mirror_flag", "eta")

    def __init__(self, algebra, alpha, mirror_flag, eta):
        if alpha.field != algebra.field:
            raise AlgebraMismatchError("coefficient automorphism of a different field")
        if eta.algebra != algebra:
            raise AlgebraMismatchError("inner automorphism of a different algebra")
        self.algebra = algebra
        self.alpha = alpha
        self.mirror_flag = bool(mirror_flag)
        self.eta = eta

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra.field.identity_aut(), False, AutWitness.identity(algebra))

    @classmethod
    def mirror_map(cls, algebra):
        return cls(algebra, algebra.field.identity_aut(), True, AutWitness.identity(algebra))

    def __call__(self, p):
        if p.algebra != self.algebra:
            raise AlgebraMismatchError("polynomial outside the map's algebra")
        q = p if self.alpha.is_identity() else p.map_coefficients(self.alpha)
        if self.mirror_flag:
            q = q.mirror()
        return self.eta.fwd(q)

    def inverse(self):
        """The inverse, renormalized into the same factored form.

        Working out ``(eta . rev^f . alpha)^-1`` and pushing the factors back
        into canonical order twists the witness by the mirror and by alpha:
        the inverse's automorphism part has generator images
        ``alpha^-1(reverse^flag(eta.inv(x_i)))``.
        """
        alpha_inv = self.alpha.inverse()

        def twist(morphism):
            images = []
            for img in morphism.images:
                if self.mirror_flag:
                    img = img.mirror()
                if not alpha_inv.is_identity():
                    img = img.map_coefficients(alpha_inv)
                images.append(img)
            return Morphism(self.algebra, self.algebra, images)

        eta = AutWitness(twist(self.eta.inv), twist(self.eta.fwd))
        return SemilinearMap(self.algebra, alpha_inv, self.mirror_flag, eta)

    def __repr__(self):
        return (
            f"<SemilinearMap alpha={self.alpha!r} mirror={int(self.mirror_flag)} "
            f"eta={self.eta.fwd!r}>"
        )


class ConjugatedMap:
    """The map ``p -> mu_cod(s(mu_dom^-1(p)))`` for a morphism s.

    When the two semilinear maps share mirror flag and coefficient
    automorphism this is again a morphism (see :meth:`as_morphism`); when the
    mirror flags differ it is a morphism precomposed with word reversal.
    Either way the generator images below are its full description.
    """

    __slots__ = ("source", "mu_dom", "mu_cod", "_mu_dom_inv", "_images")

    def __init__(self, source, mu_dom, mu_cod):
        if source.dom != mu_dom.algebra:
            raise ArityMismatchError("domain semilinear map has the wrong arity")
        if source.cod != mu_cod.algebra:
            raise ArityMismatchError("codomain semilinear map has the wrong arity")
        self.source = source
        self.mu_dom = mu_dom
        self.mu_cod = mu_cod
        self._mu_dom_inv = mu_dom.inverse()
        self._images = None

    def __call__(self, p):
        return self.mu_cod(self.source(self._mu_dom_inv(p)))

    @property
    def images(self):
        if self._images is None:
            self._images = tuple(self(g) for g in self.source.dom.gens())
        return self._images

    def is_plain_morphism(self):
        return (
            self.mu_dom.mirror_flag == self.mu_cod.mirror_flag
            and self.mu_dom.alpha == self.mu_cod.alpha
        )

    def as_morphism(self):
        """Materialize as a morphism table; checked on generator products."""
        m = Morphism(self.source.dom, self.source.cod, self.images)
        if self.is_plain_morphism():
            for a in self.source.dom.gens():
                for b in self.source.dom.gens():
                    if m(a * b) != self(a * b):
                        raise FreeAssocError(
                            "internal invariant violated: conjugate of a morphism "
                            "by matching semilinear maps must be a morphism"
                        )
        return m


def conjugate_morphism(source, mu_dom, mu_cod):
    """Conjugate a morphism by semilinear maps on its domain and codomain."""
    return ConjugatedMap(source, mu_dom, mu_cod)


# ---------------------------------------------------------------------------
# commutator ideal and univariate-kernel probes
# ---------------------------------------------------------------------------

def in_commutator_ideal(p):
    """Membership in the two-sided ideal of all commutators x_i x_j - x_j x_i.

    That ideal is exactly the kernel of abelianization, so the decision is a
    single exact abelianization.
    """
    return p.abelianize().is_zero()


@dataclass(frozen=True)
class KernelProbeResult:
    """Outcome of a univariate-kernel probe."""

    all_killed: bool
    witness: Morphism | None
    witness_image: NcPoly | None
    trials: int

    def __str__(self):
        if self.all_killed:
            return f"all killed ({self.trials} morphisms)"
        return f"witness after {self.trials} morphisms"


def kernel_probe(p, trials, max_deg, seed=0, rng=None):
    """Sample morphisms into W(t) looking for one that does not kill p.

    A statistical probe, not a decision procedure (the decision procedure is
    abelianization).  Requires the rationals or a finite field with at least
    max(max_deg * deg(p) + 1, 8) elements, so that random evaluations do not
    collapse for size reasons alone.  Deterministic for a fixed seed.
    """
    from .sampling import random_poly

    algebra = p.algebra
    if p.is_zero():
        return KernelProbeResult(True, None, None, 0)
    if algebra.field.is_finite:
        needed = max(max_deg * p.degree() + 1, 8)
        if algebra.field.size() < needed:
            raise ValueError(
                f"field too small for a meaningful probe: need >= {needed} elements"
            )
    if rng is None:
        rng = random.Random(seed)
    cod = FreeAlgebra(algebra.field, 1)
    for trial in range(1, trials + 1):
        images = [
            random_poly(cod, rng, max_deg=max_deg, max_terms=max_deg + 1)
            for _ in range(algebra.arity)
        ]
        s = Morphism(algebra, cod, images)
        image = s(p)
        if not image.is_zero():
            return KernelProbeResult(False, s, image, trial)
    return KernelProbeResult(True, None, None, trials)


def iter_univariate_morphisms(algebra, max_deg, _cod=None):
    """Every morphism from ``algebra`` to W(t) with image degree <= max_deg.

    Finite fields only; intended for exhaustive desk-scale checks.
    """
    cod = _cod if _cod is not None else FreeAlgebra(algebra.field, 1)
    pool = list(cod.all_polys(max_deg))
    for images in itertools.product(pool, repeat=algebra.arity):
        yield Morphism(algebra, cod, images)


def kernel_probe_exhaustive(p, max_deg, morphisms=None):
    """Check p against *all* morphisms into W(t) with image degree <= max_deg.

    Pass a pre-built morphism list when probing many polynomials, so word
    image caches are shared across calls.
    """
    if morphisms is None:
        morphisms = list(iter_univariate_morphisms(p.algebra, max_deg))
    for count, s in enumerate(morphisms, start=1):
        image = s(p)
        if not image.is_zero():
            return KernelProbeResult(False, s, image, count)
    return KernelProbeResult(True, None, None, len(morphisms))


# ---------------------------------------------------------------------------
# linear algebra over a field (small, exact)
# ---------------------------------------------------------------------------

def invert_matrix(field, rows):
    """Gauss-Jordan inverse of a square matrix, or None when singular."""
    n = len(rows)
    aug = [list(rows[i]) + [field.one() if i == j else field.zero() for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
