"""
constructions
=============

Families of permutations that t-shatter every k-subset.
"""
