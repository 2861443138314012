from setuptools import Extension, setup

# The compiled kernel backend is optional: when Cython (or a C compiler) is
# unavailable the package falls back to the pure-Python kernels at import.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("turanlab._fastkernels", ["src/turanlab/_fastkernels.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
