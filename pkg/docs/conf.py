"""
Sphinx configuration file
=========================

isort:skip_file
"""

import os
import re
import sys

sys.path.insert(0, os.path.abspath('..'))
import permshatter  # noqa: E402

# -- Project information -----------------------------------------------------

project = 'permshatter'
copyright = '2026, permshatter developers'
author = 'permshatter developers'

version = re.search(r'(\d+\.\d+).*', permshatter.__version__).group(1)
release = permshatter.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
]

autosummary_generate = True
autosummary_imported_members = True

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'click': ('https://click.palletsprojects.com/en/8.1.x/', None),
}

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'permshatterdoc'

# -- Options for other builders ----------------------------------------------

latex_documents = [
    (master_doc, 'permshatter.tex', 'permshatter Documentation', author,
     'manual'),
]
man_pages = [
    (master_doc, 'permshatter', 'permshatter Documentation', [author], 1),
]
