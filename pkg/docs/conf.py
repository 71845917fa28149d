# Sphinx configuration of the qfiunruh documentation
import os
import sys
sys.path.insert(0, os.path.abspath('..'))

project = 'QFI Unruh'

# set by update_version.py
release = '0.3.0'

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.autosectionlabel', 'sphinx_rtd_theme']
autosectionlabel_prefix_document = True
autodoc_member_order = 'bysource'

exclude_patterns = ['_build']

html_theme = 'sphinx_rtd_theme'
