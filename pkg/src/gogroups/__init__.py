"""Algorithms for right-angled Artin groups, graphs of groups with cyclic edge groups,
Baumslag-Solitar groups and subdirect products of such groups."""

__version__ = "0.1.0"
