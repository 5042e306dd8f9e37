"""Cells, faces and degeneracies built from a wedge construction, with
homotopy, convexity and homology checks over two finite backends."""

__version__ = "0.1.0"
