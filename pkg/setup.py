"""Build script: compiles the optional Cython term-arithmetic kernel.

The extension is marked optional; if Cython or a C compiler is missing the
package installs anyway and falls back to the pure-Python kernel at import.
Set ALGEBROID_LAB_PURE=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("ALGEBROID_LAB_PURE") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "algebroid_lab._kernel._poly_cy",
        ["src/algebroid_lab/_kernel/_poly_cy.pyx"],
        optional=True,
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions())
