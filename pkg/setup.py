from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # the pure-Python kernel is used instead
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("freeccc._nbe", ["src/freeccc/_nbe.pyx"], optional=True)],
        language_level=3,
    )

setup(ext_modules=ext_modules)
