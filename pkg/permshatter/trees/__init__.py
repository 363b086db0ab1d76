"""
trees
=====

Ordered pairs, coloured binary trees and their subdivisions.
"""
