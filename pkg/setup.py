from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    # optional=True: a failed compile leaves the pure numpy backend in charge
    # instead of failing the install.
    ext_modules = cythonize(
        [
            Extension(
                "shearadon._kernels",
                ["src/shearadon/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
