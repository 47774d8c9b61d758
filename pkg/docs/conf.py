# pylint: disable=invalid-name

"""
Sphinx documentation builder
"""

# General options:
from pathlib import Path

from importlib_metadata import version as metadata_version

project = "Configuration space prototype"
copyright = "2024"  # pylint: disable=redefined-builtin
author = ""

_rootdir = Path(__file__).parent.parent

# The full version, including alpha/beta/rc tags
release = metadata_version("confspace_prototype")
# The short X.Y version
version = ".".join(release.split(".")[:2])

extensions = [
    "sphinx.ext.napoleon",
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.doctest",
    "sphinx_autodoc_typehints",
    "reno.sphinxext",
]
templates_path = ["_templates"]
numfig = True
numfig_format = {"table": "Table %s"}
language = "en"
pygments_style = "colorful"
add_module_names = False
modindex_common_prefix = ["confspace_prototype."]

# html theme options
html_title = f"{project} {release}"
html_theme = "alabaster"

# autodoc/autosummary options
autosummary_generate = True
autosummary_generate_overwrite = False
autoclass_content = "both"

exclude_patterns = ["_build", "technical_docs/*.md", "*.md"]
