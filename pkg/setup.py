from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python fallback kernels are selected at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "besselnu._kernels_cy",
                ["src/besselnu/_kernels_cy.pyx"],
                # -ffp-contract=off: the kernels rely on uncontracted IEEE adds
                # for compensated summation and on matching the pure-Python twin.
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
