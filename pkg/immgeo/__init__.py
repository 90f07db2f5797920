"""
immgeo - exact algebra and geometry of the iterated matrix multiplication
polynomial IMM = trace(X_n ... X_1) on n-tuples of q x q matrices
"""

__version__ = "1.0.0"
