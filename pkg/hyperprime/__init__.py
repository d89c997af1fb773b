"""Finite Krasner (m,n)-hyperrings and hypermodules."""

__version__ = "0.1.0"
