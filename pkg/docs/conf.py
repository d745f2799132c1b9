#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Sphinx configuration of the score.pmds documentation.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'score.pmds'
copyright = '2014, strg.at'
version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'score-default'
html_theme_options = {
    'sidebarwidth': '300',
}
html_theme_path = ['.']
htmlhelp_basename = 'scorepmdsdoc'

latex_documents = [
    ('index', 'scorepmds.tex', 'score.pmds Documentation',
     'strg.at', 'manual'),
]

man_pages = [
    ('index', 'scorepmds', 'score.pmds Documentation', ['strg.at'], 1),
]

intersphinx_mapping = {
    'python': ('http://docs.python.org/3/', None),
    'score.init': ('http://www.score-framework.org/doc/python/init/', None),
}
