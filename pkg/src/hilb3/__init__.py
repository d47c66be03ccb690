"""Smoothness and singularity diagnostics for points of Hilb^d(A^3).

Subpackages by theme:

- gfp:       exact dense linear algebra over a prime field
- mono3:     monomial ideals of k[x,y,z] as staircases, plane partitions
- tancomb:   tangent spaces of monomial points via bounded components
- smoothcls: singularizing triples, no-flip chains, smooth census
- poly3:     sparse polynomials, Groebner bases, colon/intersection
- tanlin:    tangent dimension of arbitrary finite algebras via syzygies
- linkage:   links by length-3 regular sequences, chain verification
- apolarity: contraction action and annihilator ideals (inverse systems)
- duality:   dual module, Gorenstein type, bicanonical degree
- pfaffian:  Pfaffians and the layered Gorenstein ideal constructor
- cli:       command-line front end with deterministic JSON/CSV output

All arithmetic is exact over a prime field (default p = 2^31 - 1).
Characteristic-zero statements are certified by agreement over two
large primes.
"""

from .gfp import DEFAULT_PRIME, SECOND_PRIME

__all__ = ["DEFAULT_PRIME", "SECOND_PRIME"]
__version__ = "0.1.0"
