# -*- coding: utf-8 -*-
#
# xrips documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

from xrips.__version__ import TAG

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'xrips'
copyright = u'2026, the xrips team'
version = TAG
release = TAG

exclude_patterns = ['_build']
pygments_style = 'sphinx'
modindex_common_prefix = ['xrips.']

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'xripsdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
  ('index', 'xrips.tex', u'xrips Documentation', u'The xrips team', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'xrips', u'xrips Documentation', [u'The xrips team'], 1)
]

autodoc_member_order = 'bysource'
