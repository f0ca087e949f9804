from setuptools import Extension, setup
from Cython.Build import cythonize

ext = Extension(
    "nmtri._kernel_cy",
    ["src/nmtri/_kernel_cy.pyx"],
    extra_compile_args=["-O3"],
)

setup(
    ext_modules=cythonize(
        [ext],
        compiler_directives={"boundscheck": False, "wraparound": False,
                             "cdivision": True, "language_level": 3},
    ),
)
