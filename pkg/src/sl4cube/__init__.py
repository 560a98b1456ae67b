"""Exact verification engine for an sl4 module realized three ways: on
polynomials in four variables, on automorphism-fixed triple tensors over the
hypercube, and on the hypercube's subconstituent algebra."""

__version__ = "0.1.0"
