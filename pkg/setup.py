import os

from setuptools import Extension, setup

# The compiled elimination kernel is optional: without it the package falls
# back to the pure numpy implementation at import time.  Set TNCUTS_PURE_BUILD
# to skip compilation entirely.
ext_modules = []
if not os.environ.get("TNCUTS_PURE_BUILD"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("tncuts._rankcore", ["src/tncuts/_rankcore.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
