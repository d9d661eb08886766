"""Exact computations around fold maps and cusps: characteristic numbers,
Steenrod squares, fold cobordism groups and Morin normal forms."""

__version__ = "0.1.0"
