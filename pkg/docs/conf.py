# Sphinx configuration for the lagrangian_cones documentation.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

project = 'lagrangian_cones'
author = 'st'
version = '0.1'
release = '0.1'

extensions = ['sphinx.ext.autodoc']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'lagrangian_conesdoc'

latex_documents = [
    ('index', 'lagrangian_cones.tex', 'lagrangian_cones Documentation',
     author, 'manual'),
]
man_pages = [
    ('index', 'lagrangian_cones', 'lagrangian_cones Documentation',
     [author], 1),
]
