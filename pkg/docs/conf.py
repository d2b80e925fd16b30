# -*- coding: utf-8 -*-
#
# hstnbeam documentation build configuration file

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.todo",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "hstnbeam"
copyright = "2024, hstnbeam Developers"
author = "hstnbeam Developers"
version = "0.1"
release = "0.1.0"

exclude_patterns = ["_build"]
pygments_style = "sphinx"
todo_include_todos = True

# numpy-style docstrings
napoleon_numpy_docstring = True
napoleon_google_docstring = False

autodoc_mock_imports = ["mpi4py"]

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinxdoc"
html_show_sourcelink = False
htmlhelp_basename = "hstnbeamdoc"

# -- Options for other outputs --------------------------------------------

latex_documents = [
    (master_doc, "hstnbeam.tex", "hstnbeam Documentation", author, "manual"),
]
man_pages = [(master_doc, "hstnbeam", "hstnbeam Documentation", [author], 1)]
