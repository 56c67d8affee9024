"""Rank-metric code constructions, Galois-sum/intersection invariants, and
equivalence classification over finite-field towers F_p <= F_q <= F_{q^m}."""

__version__ = "0.1.0"
