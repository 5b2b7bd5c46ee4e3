# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'walkpy'
copyright = '2026, walkpy developers'
author = 'walkpy developers'

version = '0.1.0.dev1'
release = '0.1.0.dev1'


# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.imgmath',
    'sphinx.ext.githubpages',
    'numpydoc']

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'
language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

# numpydoc builds its own member tables
numpydoc_show_class_members = False


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}
htmlhelp_basename = 'walkpydoc'


# -- Options for LaTeX, manual page and Texinfo output -----------------------

latex_documents = [
    (master_doc, 'walkpy.tex', 'walkpy Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'walkpy', 'walkpy Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'walkpy', 'walkpy Documentation',
     author, 'walkpy', 'Hitting, commute and cover time distributions of random walks on graphs.',
     'Miscellaneous'),
]

intersphinx_mapping = {'https://docs.python.org/': None}
