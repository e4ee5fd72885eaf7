from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python fallback is selected at import time, so a missing Cython
    # only costs speed, not functionality.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("termsift._porter", ["src/termsift/_porter.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
