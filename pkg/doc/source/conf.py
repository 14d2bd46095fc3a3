# -*- coding: utf-8 -*-
# Copyright (c) 2026, skewpbw authors.
# All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import sys

sys.path.insert(0, os.path.abspath('../..'))
# -- General configuration ----------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
]

autodoc_member_order = 'bysource'
autodoc_default_options = {'members': True, 'show-inheritance': True}

source_suffix = '.rst'
master_doc = 'index'

project = u'skewpbw'
copyright = u"2026, skewpbw authors."
version = '0.1'
release = '0.1.0'

add_function_parentheses = True
add_module_names = False
pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

htmlhelp_basename = 'skewpbwdoc'

latex_documents = [
    ('index', 'skewpbw.tex', u'skewpbw: skew PBW extension kernel', u'skewpbw authors', 'manual'),
]

# Cross references into the standard library and sympy.
intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'sympy': ('https://docs.sympy.org/latest', None),
}
