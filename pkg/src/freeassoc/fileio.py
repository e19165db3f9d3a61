"""Text file formats for morphisms, semilinear maps, and word tables.

All three share a line-oriented header::

    field Q                      (or: field gf 4 modulus w^2+w+1)
    dom 2
    cod 2

A morphism file then lists one generator image per line, ``x<i> -> <poly>``.
A semilinear-map file adds ``alpha frob^<e>`` and ``mirror 0|1`` headers and
an ``inverse:`` section holding the witness images.  A word-table file adds
``alpha frob^<e>`` (optional, default identity) and ``degcap <D>``, followed
by one ``<word> -> <poly>`` line per word of degree <= D, with ``1`` denoting
the empty word.  Loaders reject incomplete or duplicated entries.  Blank
lines and ``#`` comments are ignored.
"""

import re

from .classify import TabulatedMap
from .errors import FileFormatError
from .morphisms import AutWitness, Morphism, SemilinearMap
from .parsing import parse_field_spec, parse_poly, parse_word
from .poly import FreeAlgebra, deglex_key

__all__ = [
    "load_morphism",
    "load_semilinear",
    "load_wordmap",
    "dump_morphism",
    "dump_semilinear",
    "dump_wordmap",
]

_FROB = re.compile(r"^frob\^(\d+)$")
_HEADER_KEYS = ("field", "dom", "cod", "alpha", "mirror", "degcap")


def _scan(text):
    """Split into (header dict, arrow sections) with line numbers attached."""
    headers = {}
    sections = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "inverse:":
            if len(sections) > 1:
                raise FileFormatError(f"duplicate inverse section (line {lineno})")
            sections.append([])
            continue
        if "->" in line:
            lhs, _, rhs = line.partition("->")
            sections[-1].append((lhs.strip(), rhs.strip(), lineno))
            continue
        key, _, value = line.partition(" ")
        if key not in _HEADER_KEYS:
            raise FileFormatError(f"unknown header {key!r} (line {lineno})")
        if key in headers:
            raise FileFormatError(f"duplicate header {key!r} (line {lineno})")
        if sections != [[]]:
            raise FileFormatError(f"header after mapping lines (line {lineno})")
        headers[key] = (value.strip(), lineno)
    return headers, sections


def _require(headers, key):
    if key not in headers:
        raise FileFormatError(f"missing {key!r} header")
    return headers[key][0]


def _int_header(headers, key):
    value = _require(headers, key)
    if not value.isdigit():
        raise FileFormatError(f"bad {key!r} header {value!r} (line {headers[key][1]})")
    return int(value)


def _parse_common(text, expect):
    headers, sections = _scan(text)
    for key in headers:
        if key not in expect:
            raise FileFormatError(f"unexpected header {key!r} for this file kind")
    field = parse_field_spec(_require(headers, "field"))
    dom = _int_header(headers, "dom")
    cod = _int_header(headers, "cod")
    return headers, sections, field, dom, cod


def _parse_alpha(headers, field, required):
    if "alpha" not in headers:
        if required:
            raise FileFormatError("missing 'alpha' header")
        return field.identity_aut()
    value, lineno = headers["alpha"]
    m = _FROB.match(value)
    if not m:
        raise FileFormatError(f"bad alpha {value!r} (line {lineno})")
    exponent = int(m.group(1))
    if not field.is_finite and exponent != 0:
        raise FileFormatError(f"alpha frob^{exponent} needs a finite field (line {lineno})")
    if field.is_finite:
        exponent_range = field.degree
        if exponent >= exponent_range:
            raise FileFormatError(
                f"alpha exponent {exponent} out of range 0..{exponent_range - 1} "
                f"(line {lineno})"
            )
    return field.frobenius(exponent) if field.is_finite else field.identity_aut()


def _read_images(lines, dom_algebra, cod_algebra, what):
    images = {}
    for lhs, rhs, lineno in lines:
        index = dom_algebra.var_index(lhs)
        if index is None:
            raise FileFormatError(f"unknown generator {lhs!r} (line {lineno})")
        if index in images:
            raise FileFormatError(f"duplicate image for x{index} (line {lineno})")
        images[index] = parse_poly(rhs, cod_algebra)
    missing = [i for i in range(1, dom_algebra.arity + 1) if i not in images]
    if missing:
        names = ", ".join(f"x{i}" for i in missing)
        raise FileFormatError(f"{what} is missing images for {names}")
    return [images[i] for i in range(1, dom_algebra.arity + 1)]


def load_morphism(text):
    headers, sections, field, dom, cod = _parse_common(text, ("field", "dom", "cod"))
    if len(sections) != 1:
        raise FileFormatError("morphism files have no inverse section")
    dom_algebra = FreeAlgebra(field, dom)
    cod_algebra = FreeAlgebra(field, cod)
    images = _read_images(sections[0], dom_algebra, cod_algebra, "morphism")
    return Morphism(dom_algebra, cod_algebra, images)


def load_semilinear(text):
    headers, sections, field, dom, cod = _parse_common(
        text, ("field", "dom", "cod", "alpha", "mirror")
    )
    if dom != cod:
        raise FileFormatError("semilinear maps need dom = cod")
    alpha = _parse_alpha(headers, field, required=True)
    mirror_text = _require(headers, "mirror")
    if mirror_text not in ("0", "1"):
        raise FileFormatError(f"bad mirror flag {mirror_text!r}")
    if len(sections) != 2:
        raise FileFormatError("semilinear map files need an inverse: section")
    algebra = FreeAlgebra(field, dom)
    fwd = Morphism(algebra, algebra, _read_images(sections[0], algebra, algebra, "map"))
    inv = Morphism(algebra, algebra, _read_images(sections[1], algebra, algebra, "inverse"))
    witness = AutWitness(fwd, inv)
    return SemilinearMap(algebra, alpha, mirror_text == "1", witness)


def load_wordmap(text):
    headers, sections, field, dom, cod = _parse_common(
        text, ("field", "dom", "cod", "alpha", "degcap")
    )
    if dom != cod:
        raise FileFormatError("word tables need dom = cod")
    deg_cap = _int_header(headers, "degcap")
    alpha = _parse_alpha(headers, field, required=False)
    if len(sections) != 1:
        raise FileFormatError("word-table files have no inverse section")
    algebra = FreeAlgebra(field, dom)
    table = {}
    for lhs, rhs, lineno in sections[0]:
        word = parse_word(lhs, algebra)
        if word in table:
            raise FileFormatError(f"duplicate table entry for {lhs!r} (line {lineno})")
        table[word] = parse_poly(rhs, algebra)
    try:
        return TabulatedMap(algebra, alpha, deg_cap, table)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


# ---------------------------------------------------------------------------
# dumps (inverse of the loaders on canonical data)
# ---------------------------------------------------------------------------

def _header_lines(field, dom, cod):
    return [f"field {field.spec()}", f"dom {dom}", f"cod {cod}"]


def dump_morphism(morphism):
    lines = _header_lines(morphism.dom.field, morphism.dom.arity, morphism.cod.arity)
    lines += morphism.lines()
    return "\n".join(lines) + "\n"


def dump_semilinear(mu):
    n = mu.algebra.arity
    lines = _header_lines(mu.algebra.field, n, n)
    lines.append(f"alpha frob^{mu.alpha.exponent}")
    lines.append(f"mirror {int(mu.mirror_flag)}")
    lines += mu.eta.fwd.lines()
    lines.append("inverse:")
    lines += mu.eta.inv.lines()
    return "\n".join(lines) + "\n"


def _word_text(word, algebra):
    if not word:
        return "1"
    names = algebra.var_names()
    return "*".join(names[i - 1] for i in word)


def dump_wordmap(tm):
    n = tm.algebra.arity
    lines = _header_lines(tm.algebra.field, n, n)
    lines.append(f"alpha frob^{tm.alpha.exponent}")
    lines.append(f"degcap {tm.deg_cap}")
    for word, value in sorted(tm.table.items(), key=lambda kv: deglex_key(kv[0])):
        lines.append(f"{_word_text(word, tm.algebra)} -> {value}")
    return "\n".join(lines) + "\n"
