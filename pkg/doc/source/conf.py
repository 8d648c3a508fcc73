#!/usr/bin/env python3
# Sphinx configuration for the valmat documentation
import os
import sys

from valmat import __version__ as valmat_version

# Options passed to sphinx-apidoc through the environment
os.environ["SPHINX_APIDOC_OPTIONS"] = "members,show-inheritance"
from sphinx.ext import apidoc  # noqa: E402

valmat_path = os.path.abspath(
    os.path.join(os.path.dirname(__file__), "..", "..", "valmat")
)
sys.path.insert(0, os.path.dirname(valmat_path))

project = "valmat"
copyright = "2024, the valmat developers"
author = "the valmat developers"
release = valmat_version
version = ".".join(valmat_version.split(".")[:2])

# API pages are regenerated on every build
apidoc.main([
    "--separate",
    "--force",
    "--module-first",
    "--no-headings",
    "-d", "3",
    "-H", project,
    "-o", os.path.join(os.path.dirname(__file__), "api"),
    valmat_path,
])

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinxcontrib.napoleon",
]
napoleon_google_docstring = True
napoleon_numpy_docstring = False

master_doc = "index"
source_suffix = ".rst"
exclude_patterns = []
pygments_style = "sphinx"
html_theme = "default"
htmlhelp_basename = "valmatdoc"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
}
