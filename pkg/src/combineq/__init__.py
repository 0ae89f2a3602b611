"""Exact counting, explicit injections and exhaustive checks of classical
combinatorial inequalities."""

__version__ = "0.1.0"
