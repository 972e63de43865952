"""Matroid resolution toolkit.

Exact, deterministic computations around represented matroids: circuits,
the lattice of T-flats, beta invariants, beta-nbc bases via decreasing
chains, broken circuit complexes with integral homology, and the
multiplicity-space bases attached to decreasing chains.
"""

__version__ = "0.1.0"
