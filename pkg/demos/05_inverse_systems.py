"""Build finite algebras from dual polynomials via contraction.

The polynomial ring S = k[x,y,z] acts on the dual ring P = k[X,Y,Z] by
contraction (exponent subtraction); the annihilator of dual polynomials
f_1, ..., f_r is a finite-colength ideal, Gorenstein when r = 1.  The
two-generator example below has Hilbert function (1,3,5,2), and the
pair (X, YZ) recovers the smooth colength-5 monomial ideal from the
classification demo.
"""
from hilb3 import apolarity, duality, gfp, poly3

P = gfp.DEFAULT_PRIME
ring = poly3.PolyRing(P)


def show(label, duals):
    fs = [apolarity.parse_dual(s, P) for s in duals]
    ann = apolarity.annihilator(fs, ring)
    qd = poly3.quotient_data(ann)
    gens = ", ".join(poly3.poly_str(g) for g in poly3.groebner(ann))
    print(f"Ann({label}) = ({gens})")
    print(f"  colength {qd.colength}, Gorenstein type {duality.gorenstein_type(ann)}, "
          f"Hilbert function {poly3.quotient_hilbert_function(qd)}")
    print()
    return ann


show("X^2 + YZ", ["X^2 + Y*Z"])
show("X^3 - Y^3, XY^2 + XZ^2", ["X^3 - Y^3", "X*Y^2 + X*Z^2"])
ann = show("X, YZ", ["X", "Y*Z"])
want = poly3.parse_ideal("x^2, x*y, x*z, y^2, z^2", ring)
assert poly3.equal_ideals(ann, want)
print("Ann(X, YZ) recovers the smooth staircase example, as promised.")
