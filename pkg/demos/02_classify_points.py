"""Classify two colength-5 monomial points: one singular, one smooth.

Both staircases have five boxes; the difference is the socle.  The
first ideal's socle {x, y, z^2} is a singularizing triple (each element
strictly maximal in its own axis direction), so the point is singular.
The second has a two-element socle, hence no triple; the classifier
returns a broken Gorenstein chain without flips as a smoothness
certificate, which we re-validate step by step.
"""
from hilb3 import mono3, smoothcls, tancomb

for text in ["x^2, x*y, x*z, y^2, y*z, z^3", "x^2, x*y, x*z, y^2, z^2"]:
    ideal = mono3.parse_monomial_ideal(text)
    soc = mono3.socle(ideal)
    res = smoothcls.classify(ideal)
    rep = tancomb.tangent_report(ideal)
    print(f"I = ({text})")
    print(f"  staircase size {ideal.colength}, socle "
          f"{{{', '.join(mono3.monomial_str(s) for s in soc)}}}")
    print(f"  tangent dimension {rep.total} = 3*{ideal.colength} + {rep.excess}")
    if res.verdict == "singular":
        print(f"  singular: triple {res.triple.monomials()}, "
              f"excess at least {res.excess_lower_bound}")
    else:
        chain = res.chain
        print(f"  smooth: chain multipliers "
              f"{[mono3.monomial_str(f) for f in chain.multipliers]}, "
              f"Gorenstein blocks of colengths {chain.colengths}")
        chain.validate(ideal)
        print("  certificate re-validated")
    print()
