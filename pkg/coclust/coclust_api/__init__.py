"""Balanced co-clustering of user–item graphs for embedding-table sketching."""

__version__ = "0.1.0"
