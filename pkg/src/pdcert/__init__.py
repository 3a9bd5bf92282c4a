"""Exact-arithmetic certification of desk-scale claims about 2-dimensional
pseudo-deformation rings: Bernoulli criteria, hypothesis hunting, mod-p Hecke
eigensystems, the h-polynomial family, monomial local rings, cohomology
dimension bookkeeping and a finite pseudo-character laboratory."""

__version__ = "0.1.0"
