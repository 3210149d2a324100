"""Exact computations for intertwiners of the Ding-Iohara-Miki algebra and their Fock representations."""

__version__ = "0.1.0"
