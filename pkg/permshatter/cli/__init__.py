"""
cli
===

The ``permshatter`` command-line interface: one module per subcommand,
registered on the group in :mod:`permshatter.cli.main`.
"""
