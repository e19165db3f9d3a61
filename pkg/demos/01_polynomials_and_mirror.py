"""Tour of the kernel: exact noncommutative polynomials and the mirror map.

Run:  python3 demos/01_polynomials_and_mirror.py
"""

from freeassoc import FreeAlgebra, finite_field, parse_poly, rationals

# Two noncommuting variables over the rationals.  Words multiply by
# concatenation, so x*y and y*x are genuinely different monomials.
QQ = rationals()
A = FreeAlgebra(QQ, 2)

p = parse_poly("x + y", A)
q = parse_poly("x - y", A)
print("p        =", p)
print("q        =", q)
print("p * q    =", p * q)          # four distinct words, none collapse
print("q * p    =", q * p)
print("equal?   ", p * q == q * p)  # False: this is a free algebra

# The mirror map reverses every word and is an involutive antiautomorphism:
# it flips products around.
r = parse_poly("x*y + 2*x*x*y", A)
print()
print("r           =", r)
print("mirror(r)   =", r.mirror())
print("mirror twice=", r.mirror().mirror())
print("anti law ok?", (p * q).mirror() == q.mirror() * p.mirror())

# Abelianization forgets the order of letters.  Its kernel is exactly the
# two-sided ideal generated by the commutators, which gives a one-line
# membership test for that ideal.
comm = parse_poly("x*y - y*x", A)
print()
print("abelianize(x*y - y*x) =", comm.abelianize())
print("abelianize(x*y*x)     =", parse_poly("x*y*x", A).abelianize())

# Everything works the same over finite fields, including GF(4), where
# scalars are polynomials in w modulo w^2+w+1.
F4 = finite_field(4)
B = FreeAlgebra(F4, 2)
s = parse_poly("(w+1)*x*y + (w)*x*y", B)
print()
print("over GF(4): (w+1)*x*y + w*x*y =", s)   # coefficients add to 1
