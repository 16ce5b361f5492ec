"""
hvec - exact h-vector toolkit for simplicial complexes.

Computes the combinatorial, algebraic and reduced algebraic h-vectors of
finite simplicial complexes over prime fields and checks the identities
that relate them to Betti numbers of links.
"""

__version__ = "0.1.0"
