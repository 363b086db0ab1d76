"""
exact
=====

Exact minimum family sizes at tiny ``n`` and the growth regime table.
"""
