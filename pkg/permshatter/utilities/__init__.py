"""
utilities
=========

permshatter's utility functions.
"""
