"""The bicanonical degree, and Gorenstein ideals from skew matrices.

Part 1: deg Sym^2_R omega_R equals d for Gorenstein and for planar
algebras (where it is the fiber of a rank-d bundle), stays <= d for
algebras with a broken Gorenstein structure, and can exceed d otherwise
(m^2 is the standard example).  It always matches the dimension of the
symmetric homomorphisms omega_R -> R.

Part 2: submaximal Pfaffians of odd skew matrices generate Gorenstein
ideals; stacking layers A_0, A_1 with multipliers alpha = Pf(A_0)_1
produces an ideal whose flag has Gorenstein subquotients and additive
colengths, with tangent excess <= 0.
"""
from hilb3 import duality, gfp, pfaffian, poly3, tanlin

P = gfp.DEFAULT_PRIME
ring = poly3.PolyRing(P)

print("bicanonical degrees:")
for label, text in [
        ("planar  (x^2, xy^2, y^5, z)", "x^2, x*y^2, y^5, z"),
        ("Gorenstein  Ann(X^2+YZ)", "x^2 - y*z, x*z, x*y, y^2, z^2"),
        ("m^2", "x^2, x*y, x*z, y^2, y*z, z^2")]:
    I = poly3.parse_ideal(text, ring)
    rep = duality.bicanonical_degree(I)
    print(f"  {label}: d = {rep.colength}, deg Sym^2 omega = {rep.sym2_omega_deg}, "
          f"sym homs {rep.homsym_dim}, all homs {rep.hom_full_dim}")
print()

print("layered Pfaffian ideal:")
a0 = pfaffian.SkewMatrix.from_upper_rows(
    3, [poly3.parse_poly(s, ring) for s in ("z", "y", "x")])
rep = pfaffian.broken_ideal([a0, a0])
print(f"  two 3x3 layers with upper triangle (z, y, x)")
print(f"  ideal = {rep.ideal}")
print(f"  layer colengths {rep.layer_colengths} (types {rep.layer_types}), "
      f"total {rep.total_colength}, additive: {rep.colength_additive}")
d, t, excess = tanlin.tangent_excess(rep.ideal)
print(f"  tangent dimension {t} = 3*{d} + ({excess})")
