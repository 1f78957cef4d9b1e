"""Build script for the optional compiled sweep kernel.

The package is pure Python by default.  When Cython and a C compiler are
available the event-sweep kernel is additionally compiled to a C extension;
``bulletlab.sampler`` picks it up at import time and falls back to the pure
Python kernel otherwise.  The extension is marked optional so installation
never fails because of a missing toolchain.
"""

from setuptools import Extension, setup

extensions = []
try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "bulletlab._sweep",
                ["src/bulletlab/_sweep.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=extensions)
