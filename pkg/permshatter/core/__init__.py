"""
core
====

Permutations, patterns and families of permutations, explicit and implicit.
"""
