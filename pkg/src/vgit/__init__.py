"""Variation of GIT quotients for torus actions and for PGL2 on (P^1)^n.

``vgit.exact`` holds the exact polyhedral kernel, ``vgit.toric`` the
secondary fan and quotient data of a torus action, ``vgit.pgl2`` the
Hilbert-Mumford side and the chamber comparison, and ``vgit.oracle`` slow
independent cross-checks.
"""
__version__ = "0.1.0"
