"""Exact-arithmetic Lie theory for symplectic symmetric pairs and their extrinsic realizations."""

__version__ = "0.1.0"
