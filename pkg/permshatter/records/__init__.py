"""
records
=======

Certificates, reports and results returned by the oracles, constructions,
adversaries and exact solver, with their JSON and CSV formats.
"""
