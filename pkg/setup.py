"""Build the optional Cython kernels; the package works without them."""
import os

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("DEGPRINC_PURE") == "1":
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "degprinc._ckernels",
        sources=["src/degprinc/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=_extensions())
