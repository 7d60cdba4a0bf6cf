from setuptools import Extension, setup

# The compiled search kernel is optional: the package falls back to the
# pure-Python twin when the extension is unavailable.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("hypchrom._colorsearch", ["src/hypchrom/_colorsearch.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
