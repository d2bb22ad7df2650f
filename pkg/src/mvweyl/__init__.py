"""Exact localization, Schur-Weyl and orbital-variety computations for GL_d."""

__version__ = "0.1.0"
