"""
inspections
===========

Oracles on families and the slice analysis of point sets of ``[b]^d``.
"""
