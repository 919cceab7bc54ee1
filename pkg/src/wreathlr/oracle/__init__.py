"""Brute-force representation theory of small wreath products."""
