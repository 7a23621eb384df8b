import os

import numpy as np
from setuptools import Extension, setup

ext_modules = []
if os.environ.get("DIRICHLET_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "dirichlet_approx._core",
                    ["src/dirichlet_approx/_core.pyx"],
                    include_dirs=[np.get_include()],
                    # no -ffast-math: summation order and the complex product
                    # formula must match the numpy fallback
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
