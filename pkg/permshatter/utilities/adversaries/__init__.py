"""
adversaries
===========

Extraction of poorly shattered k-subsets from arbitrary families.
"""
