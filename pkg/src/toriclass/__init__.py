"""Lattice polygon classification and the toric surface codes they generate.

Subpackage map:

- lattice: polygons, unimodular canonical forms, census enumeration
- minkowski: Minkowski length, exceptional triangles, distance formulas/bounds
- gf: GF(p^m) arithmetic with deterministic modulus and generator
- laurent: Laurent polynomials on the torus, Newton polygons, zero counting
- families: the named polynomial families behind the n1/n2/n3 counts
- code: toric code construction, weight distributions, minimum distance
- equiv: monomial equivalence decisions with machine-checkable witnesses
- catalog: named polygon representatives and expected-parameter metadata
- cli: batch front door (enumerate/show/analyze/compare/bounds/reproduce)
"""

__version__ = "0.1.0"
