"""freeassoc: exact computation in finitely generated free associative algebras.

The kernel provides noncommutative polynomials over the rationals or GF(p^k)
(:mod:`freeassoc.poly`, :mod:`freeassoc.fields`), algebra morphisms and
witnessed automorphisms (:mod:`freeassoc.morphisms`), and text formats for
all of them.  On top sit the decision procedures: commutator-ideal
membership, the Hom/AntiHom classifier for tabulated additive maps and the
semilinear factorization of families (:mod:`freeassoc.classify`), and the
univariate derivation for maps commuting with every endomorphism
(:mod:`freeassoc.centrality`).
"""

from .centrality import (
    CentralCandidate,
    ScanReport,
    assert_linear_bijection,
    centrality_scan,
    check_generator_recovery,
    derive_univariate,
    propagate_value,
    surjectivity_probe,
)
from .classify import (
    Certificate,
    ClassificationResult,
    ConjugationReport,
    DefectReport,
    ProductRule,
    SemilinearFactorization,
    TabulatedMap,
    Verdict,
    check_certificate,
    check_commutator_defects,
    check_idempotent_system,
    classify_map,
    extract_affine,
    factor_semilinear,
    solve_mul_coeffs,
    tabulate,
    verify_conjugation_family,
    verify_uuv,
)
from .fields import Field, FieldAut, FieldElement, finite_field, rationals
from .fileio import (
    dump_morphism,
    dump_semilinear,
    dump_wordmap,
    load_morphism,
    load_semilinear,
    load_wordmap,
)
from .morphisms import (
    AutWitness,
    ConjugatedMap,
    KernelProbeResult,
    Morphism,
    SemilinearMap,
    conjugate_morphism,
    in_commutator_ideal,
    iter_univariate_morphisms,
    kernel_probe,
    kernel_probe_exhaustive,
)
from .parsing import parse_field_spec, parse_poly, parse_word
from .poly import MINUS_INFINITY, CommPoly, FreeAlgebra, NcPoly, deglex_key, iter_words

__version__ = "0.1.0"

__all__ = [
    "Field",
    "FieldElement",
    "FieldAut",
    "rationals",
    "finite_field",
    "FreeAlgebra",
    "NcPoly",
    "CommPoly",
    "MINUS_INFINITY",
    "deglex_key",
    "iter_words",
    "parse_poly",
    "parse_word",
    "parse_field_spec",
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
    "TabulatedMap",
    "tabulate",
    "Verdict",
    "ProductRule",
    "Certificate",
    "ClassificationResult",
    "DefectReport",
    "check_commutator_defects",
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
    "CentralCandidate",
    "derive_univariate",
    "propagate_value",
    "assert_linear_bijection",
    "surjectivity_probe",
    "ScanReport",
    "centrality_scan",
    "check_generator_recovery",
    "load_morphism",
    "load_semilinear",
    "load_wordmap",
    "dump_morphism",
    "dump_semilinear",
    "dump_wordmap",
]
